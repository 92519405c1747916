#pragma once

#include "orthoschmidt/bases.hpp"
#include "orthoschmidt/batch.hpp"
#include "orthoschmidt/core.hpp"
#include "orthoschmidt/error.hpp"
#include "orthoschmidt/mixed.hpp"
#include "orthoschmidt/oracle.hpp"
#include "orthoschmidt/pairs.hpp"
#include "orthoschmidt/sample.hpp"
#include "orthoschmidt/schmidt.hpp"
#include "orthoschmidt/set.hpp"
#include "orthoschmidt/triples.hpp"
