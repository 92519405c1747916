#pragma once

// Orthogonal pairs. The first member is |00> for PP/PE and
// sqrt(g)|00> + sqrt(1-g)|11> for EP/EE; any other pair of the same type is
// reached from these by local unitaries.

#include <array>

#include "orthoschmidt/set.hpp"

namespace orthoschmidt {

enum class Side { A, B };

/// (|00>, single (x) |1>) for Side::A, (|00>, |1> (x) single) for Side::B.
OrthoPair construct_pp(Side side, const QubitVector& single, const ConstructOptions& opt = {});

/// (|00>, a|01> + b|10>).
OrthoPair construct_pe_diagonal(Complex a, Complex b, const ConstructOptions& opt = {});

/// (|00>, a|01> + b|10> + c|11>), all three nonzero.
OrthoPair construct_pe_nondiagonal(Complex a, Complex b, Complex c,
                                   const ConstructOptions& opt = {});

/// First = sqrt(gamma)|00> + sqrt(1-gamma)|11>, second a product state
/// orthogonal to it built from a, b and the branch sign.
OrthoPair construct_ep(double gamma, Complex a, Complex b, Sign sign,
                       const ConstructOptions& opt = {});

/// Second = a|00> + b|01> + c|10> - k a|11>, k = sqrt(gamma / (1 - gamma)),
/// satisfying the diagonal condition.
OrthoPair construct_ee_diagonal(double gamma, Complex a, Complex b, Complex c,
                                const ConstructOptions& opt = {});

/// Same family, diagonal condition violated.
OrthoPair construct_ee_nondiagonal(double gamma, Complex a, Complex b, Complex c,
                                   const ConstructOptions& opt = {});

// Closed forms. Parameters are taken as already normalized and validated.

ClosedForm pe_diagonal_form(Complex a, Complex b);
ClosedForm pe_nondiagonal_form(Complex a, Complex b, Complex c);
/// Unnormalized product factors of the EP second state.
std::array<QubitVector, 2> ep_factors(double gamma, Complex a, Complex b, Sign sign);
ClosedForm ee_diagonal_form(double gamma, Complex a, Complex b, Complex c);
ClosedForm ee_nondiagonal_form(double gamma, Complex a, Complex b, Complex c);

/// sqrt((1 +- sqrt(1 - 4 q^2)) / 2) for a state with concurrence 2q.
std::array<double, 2> coefficients_from_half_concurrence(double q);

}  // namespace orthoschmidt
