#pragma once

// Orthonormal triples: PPP and the three PPE families. The first member is
// always |00>.

#include <array>

#include "orthoschmidt/pairs.hpp"

namespace orthoschmidt {

/// (|00>, basis0 (x) |1>, basis1 (x) |1>) for Side::A, the mirror
/// (|00>, |1> (x) basis0, |1> (x) basis1) for Side::B.
OrthoTriple construct_ppp(Side side, const std::array<QubitVector, 2>& basis,
                          const ConstructOptions& opt = {});

/// (|00>, |11>, c|01> + d|10>).
OrthoTriple construct_ppe_case1(Complex c, Complex d, const ConstructOptions& opt = {});

/// (|00>, a|01> + b|11>, c(b*|01> - a*|11>) + d|10>).
OrthoTriple construct_ppe_case2(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt = {});

/// (|00>, a|10> + b|11>, c|01> + d(b*|10> - a*|11>)).
OrthoTriple construct_ppe_case3(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt = {});

// Closed forms of the entangled member, parameters already normalized.

ClosedForm ppe_case1_form(Complex c, Complex d);
ClosedForm ppe_case2_form(Complex a, Complex b, Complex c, Complex d);
ClosedForm ppe_case3_form(Complex a, Complex b, Complex c, Complex d);

/// Validates and orthonormalizes a single-qubit basis (NotOrthonormalBasis).
std::array<QubitVector, 2> checked_basis(const std::array<QubitVector, 2>& basis,
                                         const ConstructOptions& opt = {});

}  // namespace orthoschmidt
