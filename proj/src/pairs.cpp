#include "orthoschmidt/pairs.hpp"

#include <cmath>

#include "construct_util.hpp"

namespace orthoschmidt {

using detail::require_finite;

namespace {

OrthoSet make_set(SetType type, std::string label, Variant variant) {
  OrthoSet s;
  s.type = type;
  s.label = std::move(label);
  s.variant = variant;
  return s;
}

TwoQubitState ep_first(double gamma) {
  return {std::sqrt(gamma), 0.0, 0.0, std::sqrt(1.0 - gamma)};
}

SchmidtDecomposition ep_first_schmidt(double gamma) {
  SchmidtDecomposition d;
  d.coeffs = {std::sqrt(gamma), std::sqrt(1.0 - gamma)};
  d.basis_a = {QubitVector::zero(), QubitVector::one()};
  d.basis_b = {QubitVector::zero(), QubitVector::one()};
  d.branch = SchmidtBranch::Diagonal;
  if (d.coeffs[0] < d.coeffs[1]) {
    std::swap(d.coeffs[0], d.coeffs[1]);
    std::swap(d.basis_a[0], d.basis_a[1]);
    std::swap(d.basis_b[0], d.basis_b[1]);
  }
  return d;
}

double ee_k(double gamma) { return std::sqrt(gamma) / std::sqrt(1.0 - gamma); }

struct EeParams {
  Complex a, b, c;
};

EeParams ee_validate(double gamma, Complex a, Complex b, Complex c, const ConstructOptions& opt) {
  detail::require_gamma(gamma);
  require_finite({a, b, c});
  const auto p = detail::scale_group<3>({a, b, c}, {1.0 / (1.0 - gamma), 1.0, 1.0}, 1.0, opt,
                                        ErrorCode::ConditionViolated, "parameters a, b, c",
                                        "normal");
  const double sg = std::sqrt(gamma), sh = std::sqrt(1.0 - gamma);
  if (std::abs(sg * p[0] * p[0] + sh * p[1] * p[2]) <= opt.tol)
    throw Error(ErrorCode::ConditionViolated, "second state would not be entangled", "entangled");
  return {p[0], p[1], p[2]};
}

double ee_diagonal_violation(double gamma, const EeParams& p) {
  return std::abs(std::sqrt(gamma) * p.a * std::conj(p.c) -
                  std::sqrt(1.0 - gamma) * std::conj(p.a) * p.b);
}

TwoQubitState ee_state(double gamma, const EeParams& p) {
  return {p.a, p.b, p.c, -ee_k(gamma) * p.a};
}

OrthoPair ee_pair(double gamma, const EeParams& p, Variant variant, const ClosedForm& form,
                  double tol) {
  OrthoPair s = make_set(SetType::EE, "EE", variant);
  s.states = {ep_first(gamma), ee_state(gamma, p)};
  s.schmidt = {ep_first_schmidt(gamma), assemble(s.states[1], form, SchmidtBranch::ClosedForm, tol)};
  return s;
}

}  // namespace

std::array<double, 2> coefficients_from_half_concurrence(double q) {
  const double t = 2.0 * q;
  const double s = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
  return coefficients_from_discriminant(s, t);
}

ClosedForm pe_diagonal_form(Complex a, Complex b) {
  ClosedForm f;
  f.coeffs = {std::abs(a), std::abs(b)};
  f.a = {QubitVector{a, 0.0}, QubitVector{0.0, b}};
  f.b = {QubitVector::one(), QubitVector::zero()};
  return f;
}

ClosedForm pe_nondiagonal_form(Complex a, Complex b, Complex c) {
  ClosedForm f;
  f.coeffs = coefficients_from_half_concurrence(std::abs(a * b));
  const double bb = std::norm(b);
  for (std::size_t j = 0; j < 2; ++j) {
    const double e2 = f.coeffs[j] * f.coeffs[j];
    f.a[j] = {a * (e2 - bb), c * e2};
    f.b[j] = QubitVector{std::conj(b) * c, e2 - bb}.conj();
  }
  return f;
}

std::array<QubitVector, 2> ep_factors(double gamma, Complex a, Complex b, Sign sign) {
  const double k = ee_k(gamma);
  const Complex sa = std::sqrt(a), sb = std::sqrt(b);
  const Complex i(0.0, sign == Sign::Plus ? 1.0 : -1.0);
  return {QubitVector{sa, -i * std::sqrt(k) * sb}, QubitVector{i * std::sqrt(1.0 / k) * sb, sa}};
}

ClosedForm ee_diagonal_form(double gamma, Complex a, Complex b, Complex c) {
  const double k = ee_k(gamma);
  ClosedForm f;
  f.coeffs = {std::sqrt(std::norm(a) + std::norm(c)), std::sqrt(std::norm(b) + k * k * std::norm(a))};
  f.a = {QubitVector{a, c}, QubitVector{b, -k * a}};
  f.b = {QubitVector::zero(), QubitVector::one()};
  return f;
}

ClosedForm ee_nondiagonal_form(double gamma, Complex a, Complex b, Complex c) {
  const double k = ee_k(gamma);
  const Matrix2 m{{a, b, c, -k * a}};
  const Complex g = std::conj(a) * b - k * a * std::conj(c);
  const double g00 = std::norm(a) + std::norm(c);
  ClosedForm f;
  f.coeffs = coefficients_from_half_concurrence(std::abs(k * a * a + b * c));
  for (std::size_t j = 0; j < 2; ++j) {
    const QubitVector y{g, f.coeffs[j] * f.coeffs[j] - g00};
    f.a[j] = m * y;
    f.b[j] = y.conj();
  }
  return f;
}

OrthoPair construct_pp(Side side, const QubitVector& single, const ConstructOptions& opt) {
  const QubitVector v = detail::unit_vector(single, opt, "single-qubit vector");
  OrthoPair s = make_set(SetType::PP, "PP", side == Side::A ? Variant::ASide : Variant::BSide);
  const QubitVector e0 = QubitVector::zero(), e1 = QubitVector::one();
  s.states.push_back(detail::raw_product(e0, e0));
  s.schmidt.push_back(product_decomposition(e0, e0));
  if (side == Side::A) {
    s.states.push_back(detail::raw_product(v, e1));
    s.schmidt.push_back(product_decomposition(v, e1));
  } else {
    s.states.push_back(detail::raw_product(e1, v));
    s.schmidt.push_back(product_decomposition(e1, v));
  }
  return s;
}

OrthoPair construct_pe_diagonal(Complex a, Complex b, const ConstructOptions& opt) {
  require_finite({a, b});
  const auto p = detail::normalize_group<2>({a, b}, opt, "parameters a, b");
  detail::require_nonzero(p[0], "a", opt);
  detail::require_nonzero(p[1], "b", opt);
  OrthoPair s = make_set(SetType::PE, "PE", Variant::Diagonal);
  s.states = {states::basis(0, 0), TwoQubitState{0.0, p[0], p[1], 0.0}};
  s.schmidt = {product_decomposition(QubitVector::zero(), QubitVector::zero()),
               assemble(s.states[1], pe_diagonal_form(p[0], p[1]), SchmidtBranch::ClosedForm, opt.tol)};
  return s;
}

OrthoPair construct_pe_nondiagonal(Complex a, Complex b, Complex c, const ConstructOptions& opt) {
  require_finite({a, b, c});
  const auto p = detail::normalize_group<3>({a, b, c}, opt, "parameters a, b, c");
  detail::require_nonzero(p[0], "a", opt);
  detail::require_nonzero(p[1], "b", opt);
  detail::require_nonzero(p[2], "c", opt);
  OrthoPair s = make_set(SetType::PE, "PE", Variant::NonDiagonal);
  s.states = {states::basis(0, 0), TwoQubitState{0.0, p[0], p[1], p[2]}};
  s.schmidt = {product_decomposition(QubitVector::zero(), QubitVector::zero()),
               assemble(s.states[1], pe_nondiagonal_form(p[0], p[1], p[2]),
                        SchmidtBranch::ClosedForm, opt.tol)};
  return s;
}

OrthoPair construct_ep(double gamma, Complex a, Complex b, Sign sign, const ConstructOptions& opt) {
  detail::require_gamma(gamma);
  require_finite({a, b});
  auto f = ep_factors(gamma, a, b, sign);
  const double n0 = f[0].norm(), n1 = f[1].norm();
  if (!(n0 > opt.tol) || !(n1 > opt.tol))
    throw Error(ErrorCode::DegenerateParameters, "product factors vanish for a = b = 0");
  f[0] = Complex(1.0 / n0) * f[0];
  f[1] = Complex(1.0 / n1) * f[1];
  OrthoPair s = make_set(SetType::EP, "EP", Variant::None);
  s.states = {ep_first(gamma), detail::raw_product(f[0], f[1])};
  s.schmidt = {ep_first_schmidt(gamma), product_decomposition(f[0], f[1])};
  return s;
}

OrthoPair construct_ee_diagonal(double gamma, Complex a, Complex b, Complex c,
                                const ConstructOptions& opt) {
  const EeParams p = ee_validate(gamma, a, b, c, opt);
  if (ee_diagonal_violation(gamma, p) > opt.tol)
    throw Error(ErrorCode::ConditionViolated, "parameters violate the diagonal condition", "diagonal");
  return ee_pair(gamma, p, Variant::Diagonal, ee_diagonal_form(gamma, p.a, p.b, p.c), opt.tol);
}

OrthoPair construct_ee_nondiagonal(double gamma, Complex a, Complex b, Complex c,
                                   const ConstructOptions& opt) {
  const EeParams p = ee_validate(gamma, a, b, c, opt);
  if (ee_diagonal_violation(gamma, p) <= opt.tol)
    throw Error(ErrorCode::AccidentallyDiagonal,
                "parameters satisfy the diagonal condition; use the diagonal constructor");
  return ee_pair(gamma, p, Variant::NonDiagonal, ee_nondiagonal_form(gamma, p.a, p.b, p.c), opt.tol);
}

}  // namespace orthoschmidt
