#include "orthoschmidt/bases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "construct_util.hpp"
#include "triples_internal.hpp"

namespace orthoschmidt {

using detail::expi;
using detail::require_finite;

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2;

SchmidtDecomposition closed(const TwoQubitState& s, const ClosedForm& f, double tol) {
  return assemble(s, f, SchmidtBranch::ClosedForm, tol);
}

TwoQubitState pm_second(double theta, double theta_prime) {
  return {0.0, kInvSqrt2 * expi(theta), kInvSqrt2 * expi(theta_prime), 0.0};
}

ClosedForm pm_second_form(double theta, double theta_prime) {
  return pe_diagonal_form(kInvSqrt2 * expi(theta), kInvSqrt2 * expi(theta_prime));
}

ClosedForm phi_plus_form() {
  ClosedForm f;
  f.coeffs = {kInvSqrt2, kInvSqrt2};
  f.a = {QubitVector::zero(), QubitVector::one()};
  f.b = {QubitVector::zero(), QubitVector::one()};
  return f;
}

Complex sign_of(double x) { return x < 0.0 ? -1.0 : 1.0; }

struct MmeeParams {
  double phi;
  Complex a, b;
};

MmeeParams mmee_params(double theta, double theta_prime, Complex a, Complex b,
                       const ConstructOptions& opt) {
  detail::require_finite_real({theta, theta_prime});
  require_finite({a, b});
  const auto p = detail::scale_group<2>({a, b}, {1.0, 1.0}, 0.5, opt, ErrorCode::ConditionViolated,
                                        "parameters a, b", "normal");
  const double phi = theta_prime - theta;
  if (std::abs(expi(phi) * p[1] * p[1] - p[0] * p[0]) <= opt.tol)
    throw Error(ErrorCode::ConditionViolated, "third and fourth states would not be entangled",
                "entangled");
  return {phi, p[0], p[1]};
}

OrthoBasis mmee_basis(double theta, double theta_prime, const MmeeParams& p, Variant variant,
                      const ClosedForm& third, const ClosedForm& fourth, double tol) {
  const Complex a = p.a, b = p.b, e = expi(p.phi);
  OrthoBasis s;
  s.type = SetType::MMEE;
  s.label = "MMEE";
  s.variant = variant;
  s.states = {states::phi_plus(), pm_second(theta, theta_prime),
              TwoQubitState{a, b, -e * b, -a},
              TwoQubitState{std::conj(b), -std::conj(a), e * std::conj(a), -std::conj(b)}};
  s.schmidt = {closed(s.states[0], phi_plus_form(), tol),
               closed(s.states[1], pm_second_form(theta, theta_prime), tol),
               closed(s.states[2], third, tol), closed(s.states[3], fourth, tol)};
  return s;
}

}  // namespace

OrthoBasis construct_pppp(Side side, const std::array<QubitVector, 2>& basis,
                          const ConstructOptions& opt) {
  OrthoBasis s = detail::product_members(side, checked_basis(basis, opt), true);
  s.type = SetType::PPPP;
  s.label = "PPPP";
  return s;
}

Completion complete_ppp(const std::array<TwoQubitState, 3>& triple, const ConstructOptions& opt) {
  for (const auto& s : triple) {
    for (const auto& z : s.amplitudes())
      if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "state amplitudes must be finite");
    if (std::abs(s.norm() - 1.0) > opt.tol) throw Error(ErrorCode::NotPPP, "members must be unit");
    if (concurrence(s) > opt.tol) throw Error(ErrorCode::NotPPP, "members must be product states");
  }
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (std::abs(inner(triple[i], triple[j])) > opt.tol)
        throw Error(ErrorCode::NotPPP, "members must be mutually orthogonal");

  // Columns of I - sum |s><s|; the longest one spans the complement.
  std::array<Complex, 4> best{};
  double best_norm = -1.0;
  for (std::size_t col = 0; col < 4; ++col) {
    std::array<Complex, 4> v{};
    v[col] = 1.0;
    for (const auto& s : triple)
      for (std::size_t r = 0; r < 4; ++r) v[r] -= s[r] * std::conj(s[col]);
    double n = 0.0;
    for (const auto& z : v) n += std::norm(z);
    if (n > best_norm) {
      best_norm = n;
      best = v;
    }
  }
  const double n = std::sqrt(best_norm);
  for (auto& z : best) z /= n;
  for (const auto& z : best) {
    if (std::abs(z) > opt.tol) {
      const Complex ph = std::conj(z) / std::abs(z);
      for (auto& w : best) w *= ph;
      break;
    }
  }
  Completion c;
  c.state = TwoQubitState(best);
  c.concurrence = concurrence(c.state);
  return c;
}

Completion complete_ppp(const OrthoTriple& triple, const ConstructOptions& opt) {
  if (triple.states.size() != 3) throw Error(ErrorCode::NotPPP, "expected three states");
  return complete_ppp({triple.states[0], triple.states[1], triple.states[2]}, opt);
}

ClosedForm ppee_case1_fourth_form(Complex a, Complex b) {
  return pe_diagonal_form(std::conj(b), -std::conj(a));
}

ClosedForm ppee_case2_fourth_form(Complex a, Complex b, Complex c, Complex d) {
  const ClosedForm third = ppe_case2_form(a, b, c, d);
  ClosedForm f;
  f.coeffs = third.coeffs;
  const double cc = std::norm(c);
  for (std::size_t j = 0; j < 2; ++j) {
    const double k2 = f.coeffs[j] * f.coeffs[j];
    f.a[j] = {std::conj(b) * (k2 - cc), -std::conj(a) * k2};
    f.b[j] = third.b[j ^ 1];
  }
  return f;
}

ClosedForm ppee_case3_fourth_form(Complex a, Complex b, Complex c, Complex d) {
  const ClosedForm third = ppe_case3_form(a, b, c, d);
  ClosedForm f;
  f.coeffs = third.coeffs;
  const double bc = std::norm(b) * std::norm(c);
  for (std::size_t j = 0; j < 2; ++j) {
    const double n2 = f.coeffs[j] * f.coeffs[j];
    f.a[j] = third.a[j ^ 1];
    f.b[j] = {-a * std::conj(b) * std::norm(c), n2 - bc};
  }
  return f;
}

OrthoBasis construct_ppee_case1(Complex a, Complex b, const ConstructOptions& opt) {
  OrthoBasis s = construct_ppe_case1(a, b, opt);
  const Complex pa = s.states[2][1], pb = s.states[2][2];
  s.type = SetType::PPEE;
  s.label = "PPEE";
  s.states.push_back(TwoQubitState{0.0, std::conj(pb), -std::conj(pa), 0.0});
  s.schmidt.push_back(closed(s.states[3], ppee_case1_fourth_form(pa, pb), opt.tol));
  return s;
}

OrthoBasis construct_ppee_case2(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt) {
  const detail::PpeParams p = detail::ppe_params(a, b, c, d, opt);
  OrthoBasis s = construct_ppe_case2(p.a, p.b, p.c, p.d, opt);
  s.type = SetType::PPEE;
  s.label = "PPEE";
  const Complex as = std::conj(p.a), bs = std::conj(p.b), cs = std::conj(p.c), ds = std::conj(p.d);
  s.states.push_back(TwoQubitState{0.0, ds * bs, -cs, -ds * as});
  s.schmidt.push_back(closed(s.states[3], ppee_case2_fourth_form(p.a, p.b, p.c, p.d), opt.tol));
  return s;
}

OrthoBasis construct_ppee_case3(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt) {
  const detail::PpeParams p = detail::ppe_params(a, b, c, d, opt);
  OrthoBasis s = construct_ppe_case3(p.a, p.b, p.c, p.d, opt);
  s.type = SetType::PPEE;
  s.label = "PPEE";
  const Complex as = std::conj(p.a), bs = std::conj(p.b), cs = std::conj(p.c), ds = std::conj(p.d);
  s.states.push_back(TwoQubitState{0.0, ds, -cs * bs, cs * as});
  s.schmidt.push_back(closed(s.states[3], ppee_case3_fourth_form(p.a, p.b, p.c, p.d), opt.tol));
  return s;
}

OrthoPair construct_pm(double theta, double theta_prime, const ConstructOptions& opt) {
  detail::require_finite_real({theta, theta_prime});
  OrthoPair s;
  s.type = SetType::PM;
  s.label = "PM";
  s.states = {states::basis(0, 0), pm_second(theta, theta_prime)};
  s.schmidt = {product_decomposition(QubitVector::zero(), QubitVector::zero()),
               closed(s.states[1], pm_second_form(theta, theta_prime), opt.tol)};
  return s;
}

ClosedForm pmee_third_form(double theta, double theta_prime, double theta_dprime, Complex c) {
  ClosedForm f;
  f.coeffs = coefficients_from_half_concurrence(std::norm(c));
  const Complex eb = expi(-(theta - theta_prime + theta_dprime));
  for (std::size_t j = 0; j < 2; ++j) {
    const double sg = j == 0 ? 1.0 : -1.0;
    f.a[j] = {sg * c, expi(theta_dprime) * f.coeffs[j]};
    f.b[j] = {-eb * c, sg * f.coeffs[j]};
  }
  return f;
}

ClosedForm pmee_fourth_form(double theta, double theta_prime, double theta_dprime, Complex c) {
  const double cc = std::norm(c), ac = std::abs(c);
  ClosedForm f;
  f.coeffs = coefficients_from_discriminant(2.0 * ac * std::sqrt(1.0 - cc), 1.0 - 2.0 * cc);
  const double r = std::sqrt(f.coeffs[0] * f.coeffs[1]);
  const Complex eb = expi(-(theta - theta_prime + theta_dprime));
  for (std::size_t j = 0; j < 2; ++j) {
    const double sg = j == 0 ? 1.0 : -1.0;
    f.a[j] = {sg * expi(-theta_dprime) * r * ac, -std::conj(c) * f.coeffs[j]};
    f.b[j] = {eb * r * c, sg * ac * f.coeffs[j]};
  }
  return f;
}

OrthoBasis construct_pmee(double theta, double theta_prime, double theta_dprime, Complex c,
                          const ConstructOptions& opt) {
  detail::require_finite_real({theta, theta_prime, theta_dprime});
  require_finite({c});
  const double cc = std::norm(c);
  if (2.0 * cc <= opt.tol || 1.0 - 2.0 * cc <= opt.tol)
    throw Error(ErrorCode::COutOfRange,
                "|c| must lie strictly between 0 and 1/sqrt(2); at the boundary the basis is "
                "of PPEE type, use construct_ppee_case1");
  const double phi = theta_prime - theta;
  const double r = std::sqrt(1.0 - 2.0 * cc);
  const double t = std::sqrt(0.5 - cc);
  OrthoBasis s;
  s.type = SetType::PMEE;
  s.label = "PMEE";
  s.states = {states::basis(0, 0), pm_second(theta, theta_prime),
              TwoQubitState{0.0, c, -expi(phi) * c, expi(theta_dprime) * r},
              TwoQubitState{0.0, expi(-theta_dprime) * t, -expi(phi - theta_dprime) * t,
                            -std::numbers::sqrt2 * std::conj(c)}};
  s.schmidt = {product_decomposition(QubitVector::zero(), QubitVector::zero()),
               closed(s.states[1], pm_second_form(theta, theta_prime), opt.tol),
               closed(s.states[2], pmee_third_form(theta, theta_prime, theta_dprime, c), opt.tol),
               closed(s.states[3], pmee_fourth_form(theta, theta_prime, theta_dprime, c), opt.tol)};
  return s;
}

double mmee_d(double phi, Complex a, Complex b) {
  return (expi(phi / 2) * std::conj(a) * b + expi(-phi / 2) * a * std::conj(b)).real();
}

ClosedForm mmee_diagonal_third_form(double phi, Complex a, Complex b) {
  const double r2 = std::numbers::sqrt2;
  ClosedForm f;
  f.coeffs = {kInvSqrt2, kInvSqrt2};
  f.a = {Complex(r2) * QubitVector{a, -expi(phi) * b}, Complex(r2) * QubitVector{b, -a}};
  f.b = {QubitVector::zero(), QubitVector::one()};
  return f;
}

ClosedForm mmee_diagonal_fourth_form(double phi, Complex a, Complex b) {
  const double r2 = std::numbers::sqrt2;
  ClosedForm f;
  f.coeffs = {kInvSqrt2, kInvSqrt2};
  f.a = {Complex(r2) * QubitVector{std::conj(b), expi(phi) * std::conj(a)},
         Complex(r2) * QubitVector{-std::conj(a), -std::conj(b)}};
  f.b = {QubitVector::zero(), QubitVector::one()};
  return f;
}

ClosedForm mmee_nondiagonal_third_form(double phi, Complex a, Complex b) {
  const double d = mmee_d(phi, a, b);
  const Complex sd = sign_of(d);
  ClosedForm f;
  // Under |a|^2 + |b|^2 = 1/2, 1 - 4|a^2 - e^{i phi} b^2|^2 = 4 D^2.
  f.coeffs = coefficients_from_discriminant(std::min(1.0, 2.0 * std::abs(d)),
                                            2.0 * std::abs(a * a - expi(phi) * b * b));
  for (std::size_t j = 0; j < 2; ++j) {
    const double sg = j == 0 ? 1.0 : -1.0;
    const Complex cj = expi(-phi / 2) * sd * a + sg * b;
    if (std::abs(cj) <= kClassifyTol)
      throw Error(ErrorCode::DegenerateParameters, "C_j vanishes; alpha_j has no defined phase");
    f.a[j] = Complex(kInvSqrt2) * (cj / std::abs(cj)) * QubitVector{-expi(-phi / 2) * sd, sg};
    f.b[j] = Complex(kInvSqrt2) * QubitVector{expi(phi / 2) * sd, sg};
  }
  return f;
}

ClosedForm mmee_nondiagonal_fourth_form(double phi, Complex a, Complex b) {
  const ClosedForm third = mmee_nondiagonal_third_form(phi, a, b);
  ClosedForm f;
  f.coeffs = third.coeffs;
  for (std::size_t j = 0; j < 2; ++j) {
    const double sg = j == 0 ? 1.0 : -1.0;
    f.a[j] = Complex(sg) * third.b[j].conj();
    f.b[j] = third.a[j].conj();
  }
  return f;
}

OrthoBasis construct_mmee_diagonal(double theta, double theta_prime, Complex a, Complex b,
                                   const ConstructOptions& opt) {
  const MmeeParams p = mmee_params(theta, theta_prime, a, b, opt);
  if (std::abs(mmee_d(p.phi, p.a, p.b)) > opt.tol)
    throw Error(ErrorCode::ConditionViolated, "parameters violate D = 0", "diagonal");
  return mmee_basis(theta, theta_prime, p, Variant::Diagonal,
                    mmee_diagonal_third_form(p.phi, p.a, p.b),
                    mmee_diagonal_fourth_form(p.phi, p.a, p.b), opt.tol);
}

OrthoBasis construct_mmee_nondiagonal(double theta, double theta_prime, Complex a, Complex b,
                                      const ConstructOptions& opt) {
  const MmeeParams p = mmee_params(theta, theta_prime, a, b, opt);
  if (std::abs(mmee_d(p.phi, p.a, p.b)) <= opt.tol)
    throw Error(ErrorCode::AccidentallyDiagonal,
                "parameters satisfy D = 0; use the diagonal constructor");
  return mmee_basis(theta, theta_prime, p, Variant::NonDiagonal,
                    mmee_nondiagonal_third_form(p.phi, p.a, p.b),
                    mmee_nondiagonal_fourth_form(p.phi, p.a, p.b), opt.tol);
}

}  // namespace orthoschmidt
