#pragma once

// Orthonormal sets of two-qubit states as produced by the constructors.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthoschmidt/core.hpp"
#include "orthoschmidt/schmidt.hpp"

namespace orthoschmidt {

enum class SetType { PP, PE, EP, EE, PPP, PPE, PPPP, PPEE, PM, PMEE, MMEE };

/// Constructor variant. Product-heavy types come in A-side/B-side mirrors;
/// PE, EE and MMEE split on the diagonal condition of their entangled members.
enum class Variant { None, ASide, BSide, Diagonal, NonDiagonal };

enum class Sign { Plus, Minus };

struct ConstructOptions {
  double tol = kClassifyTol;
  /// Reject inputs that need rescaling instead of rescaling them.
  bool strict = false;
};

struct OrthoSet {
  SetType type = SetType::PP;
  /// Declared type pattern, e.g. "PPEE" or "PMEE".
  std::string label;
  Variant variant = Variant::None;
  int case_id = 0;
  std::vector<TwoQubitState> states;
  /// One decomposition per member, index-aligned with `states`.
  std::vector<SchmidtDecomposition> schmidt;

  const TwoQubitState& first() const { return states.at(0); }
  const TwoQubitState& second() const { return states.at(1); }
  const SchmidtDecomposition& schmidt_second() const { return schmidt.at(1); }
  const SchmidtDecomposition& schmidt_third() const { return schmidt.at(2); }
};

using OrthoPair = OrthoSet;
using OrthoTriple = OrthoSet;
using OrthoBasis = OrthoSet;

std::string_view set_type_name(SetType t);  // lower case, e.g. "ppee"
std::optional<SetType> parse_set_type(std::string_view s);
std::string_view variant_name(Variant v);   // "a-side", "diagonal", ... or ""
std::optional<Variant> parse_variant(std::string_view s);
std::size_t set_size(SetType t);

}  // namespace orthoschmidt
