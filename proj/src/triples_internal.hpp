#pragma once

#include <array>

#include "orthoschmidt/triples.hpp"

namespace orthoschmidt::detail {

struct PpeParams {
  Complex a, b, c, d;
};

/// |00> followed by the product members of a PPP triple (and the fourth
/// product state when `complete`).
OrthoSet product_members(Side side, const std::array<QubitVector, 2>& basis, bool complete);

/// Normalizes (a, b) and (c, d) independently and rejects zeros.
PpeParams ppe_params(Complex a, Complex b, Complex c, Complex d, const ConstructOptions& opt);

TwoQubitState ppe_case2_second(const PpeParams& p);
TwoQubitState ppe_case2_third(const PpeParams& p);
TwoQubitState ppe_case3_second(const PpeParams& p);
TwoQubitState ppe_case3_third(const PpeParams& p);

}  // namespace orthoschmidt::detail
