#pragma once

// Orthonormal bases of two qubits: PPPP, PPEE (three cases), PMEE and MMEE,
// the PM pair they start from, and the completion of a PPP triple.

#include <array>

#include "orthoschmidt/triples.hpp"

namespace orthoschmidt {

/// PPP triple plus |10> (Side::A) or |01> (Side::B).
OrthoBasis construct_pppp(Side side, const std::array<QubitVector, 2>& basis,
                          const ConstructOptions& opt = {});

struct Completion {
  TwoQubitState state;
  double concurrence = 0.0;
};

/// Unit vector orthogonal to three orthonormal product states, phase fixed so
/// its first nonzero amplitude is real positive. Throws NotPPP unless all
/// three members are product and mutually orthogonal within opt.tol.
Completion complete_ppp(const std::array<TwoQubitState, 3>& triple, const ConstructOptions& opt = {});
Completion complete_ppp(const OrthoTriple& triple, const ConstructOptions& opt = {});

/// (|00>, |11>, a|01> + b|10>, b*|01> - a*|10>).
OrthoBasis construct_ppee_case1(Complex a, Complex b, const ConstructOptions& opt = {});
/// PPE case 2 triple plus d*(b*|01> - a*|11>) - c*|10>.
OrthoBasis construct_ppee_case2(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt = {});
/// PPE case 3 triple plus d*|01> - c*(b*|10> - a*|11>).
OrthoBasis construct_ppee_case3(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt = {});

/// (|00>, (e^{i theta}|01> + e^{i theta'}|10>) / sqrt 2).
OrthoPair construct_pm(double theta, double theta_prime, const ConstructOptions& opt = {});

/// PM pair completed by two entangled states; requires 0 < |c| < 1/sqrt 2.
OrthoBasis construct_pmee(double theta, double theta_prime, double theta_dprime, Complex c,
                          const ConstructOptions& opt = {});

/// (Phi+, (e^{i theta}|01> + e^{i theta'}|10>) / sqrt 2, third, fourth) with
/// third = a|00> + b|01> - e^{i phi} b|10> - a|11>, phi = theta' - theta.
/// |a|^2 + |b|^2 = 1/2 is enforced by rescaling unless strict.
OrthoBasis construct_mmee_diagonal(double theta, double theta_prime, Complex a, Complex b,
                                   const ConstructOptions& opt = {});
OrthoBasis construct_mmee_nondiagonal(double theta, double theta_prime, Complex a, Complex b,
                                      const ConstructOptions& opt = {});

// Closed forms, parameters already validated.

ClosedForm ppee_case1_fourth_form(Complex a, Complex b);
/// Coefficients kappa_j, A-side z_j, B-side y*_{j xor 1} of the PPE case 2 third state.
ClosedForm ppee_case2_fourth_form(Complex a, Complex b, Complex c, Complex d);
/// Coefficients nu_j, A-side x_{j xor 1} of the PPE case 3 third state, B-side w*_j.
ClosedForm ppee_case3_fourth_form(Complex a, Complex b, Complex c, Complex d);

ClosedForm pmee_third_form(double theta, double theta_prime, double theta_dprime, Complex c);
ClosedForm pmee_fourth_form(double theta, double theta_prime, double theta_dprime, Complex c);

/// e^{i phi/2} a* b + e^{-i phi/2} a b*, real.
double mmee_d(double phi, Complex a, Complex b);
ClosedForm mmee_diagonal_third_form(double phi, Complex a, Complex b);
ClosedForm mmee_diagonal_fourth_form(double phi, Complex a, Complex b);
/// Throws DegenerateParameters when a C_j vanishes.
ClosedForm mmee_nondiagonal_third_form(double phi, Complex a, Complex b);
ClosedForm mmee_nondiagonal_fourth_form(double phi, Complex a, Complex b);

}  // namespace orthoschmidt
