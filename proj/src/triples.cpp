#include "orthoschmidt/triples.hpp"

#include <cmath>

#include "construct_util.hpp"
#include "triples_internal.hpp"

namespace orthoschmidt {

using detail::require_finite;
using detail::require_nonzero;

namespace detail {

OrthoSet product_members(Side side, const std::array<QubitVector, 2>& basis, bool complete) {
  OrthoSet s;
  const QubitVector e0 = QubitVector::zero(), e1 = QubitVector::one();
  auto add = [&s](const QubitVector& a, const QubitVector& b) {
    s.states.push_back(raw_product(a, b));
    s.schmidt.push_back(product_decomposition(a, b));
  };
  add(e0, e0);
  for (const auto& v : basis) {
    if (side == Side::A) add(v, e1);
    else add(e1, v);
  }
  if (complete) {
    if (side == Side::A) add(e1, e0);
    else add(e0, e1);
  }
  s.variant = side == Side::A ? Variant::ASide : Variant::BSide;
  return s;
}

PpeParams ppe_params(Complex a, Complex b, Complex c, Complex d, const ConstructOptions& opt) {
  require_finite({a, b, c, d});
  const auto ab = normalize_group<2>({a, b}, opt, "parameters a, b");
  const auto cd = normalize_group<2>({c, d}, opt, "parameters c, d");
  require_nonzero(ab[0], "a", opt);
  require_nonzero(ab[1], "b", opt);
  require_nonzero(cd[0], "c", opt);
  require_nonzero(cd[1], "d", opt);
  return {ab[0], ab[1], cd[0], cd[1]};
}

TwoQubitState ppe_case2_second(const PpeParams& p) { return {0.0, p.a, 0.0, p.b}; }

TwoQubitState ppe_case2_third(const PpeParams& p) {
  return {0.0, p.c * std::conj(p.b), p.d, -p.c * std::conj(p.a)};
}

TwoQubitState ppe_case3_second(const PpeParams& p) { return {0.0, 0.0, p.a, p.b}; }

TwoQubitState ppe_case3_third(const PpeParams& p) {
  return {0.0, p.c, p.d * std::conj(p.b), -p.d * std::conj(p.a)};
}

}  // namespace detail

std::array<QubitVector, 2> checked_basis(const std::array<QubitVector, 2>& basis,
                                         const ConstructOptions& opt) {
  require_finite({basis[0][0], basis[0][1], basis[1][0], basis[1][1]});
  for (const auto& v : basis) {
    const double n = v.norm();
    if (n == 0.0 || (opt.strict && std::abs(n - 1.0) > opt.tol))
      throw Error(ErrorCode::NotOrthonormalBasis, "basis vectors must be unit");
  }
  const QubitVector b0 = basis[0].normalized();
  const QubitVector b1 = basis[1].normalized();
  const double overlap = std::abs(inner(b0, b1));
  if (overlap > (opt.strict ? kVerifyTol : opt.tol))
    throw Error(ErrorCode::NotOrthonormalBasis, "basis vectors are not orthogonal");
  // Remove the residual overlap while keeping b1's phase.
  const QubitVector perp = orthogonal_complement(b0);
  const Complex ph = inner(perp, b1);
  return {b0, Complex(1.0 / std::abs(ph)) * ph * perp};
}

ClosedForm ppe_case1_form(Complex c, Complex d) {
  // c|01> + d|10>: the PE diagonal form with (a, b) -> (c, d).
  return pe_diagonal_form(c, d);
}

ClosedForm ppe_case2_form(Complex a, Complex b, Complex c, Complex d) {
  ClosedForm f;
  f.coeffs = coefficients_from_half_concurrence(std::abs(b * c * d));
  const double dd = std::norm(d);
  for (std::size_t j = 0; j < 2; ++j) {
    const double k2 = f.coeffs[j] * f.coeffs[j];
    f.a[j] = {std::conj(b) * c * (k2 - dd), -std::conj(a) * c * k2};
    f.b[j] = QubitVector{-std::conj(a) * c * std::conj(d), k2 - dd}.conj();
  }
  return f;
}

ClosedForm ppe_case3_form(Complex a, Complex b, Complex c, Complex d) {
  ClosedForm f;
  f.coeffs = coefficients_from_half_concurrence(std::abs(b * c * d));
  const double bd = std::norm(b) * std::norm(d);
  for (std::size_t j = 0; j < 2; ++j) {
    const double n2 = f.coeffs[j] * f.coeffs[j];
    f.a[j] = {c * (n2 - bd), -std::conj(a) * d * n2};
    f.b[j] = QubitVector{-std::conj(a) * b * std::norm(d), n2 - bd}.conj();
  }
  return f;
}

OrthoTriple construct_ppp(Side side, const std::array<QubitVector, 2>& basis,
                          const ConstructOptions& opt) {
  OrthoTriple s = detail::product_members(side, checked_basis(basis, opt), false);
  s.type = SetType::PPP;
  s.label = "PPP";
  return s;
}

OrthoTriple construct_ppe_case1(Complex c, Complex d, const ConstructOptions& opt) {
  require_finite({c, d});
  const auto p = detail::normalize_group<2>({c, d}, opt, "parameters c, d");
  require_nonzero(p[0], "c", opt);
  require_nonzero(p[1], "d", opt);
  OrthoTriple s;
  s.type = SetType::PPE;
  s.label = "PPE";
  s.case_id = 1;
  const QubitVector e0 = QubitVector::zero(), e1 = QubitVector::one();
  s.states = {states::basis(0, 0), states::basis(1, 1), TwoQubitState{0.0, p[0], p[1], 0.0}};
  s.schmidt = {product_decomposition(e0, e0), product_decomposition(e1, e1),
               assemble(s.states[2], ppe_case1_form(p[0], p[1]), SchmidtBranch::ClosedForm, opt.tol)};
  return s;
}

OrthoTriple construct_ppe_case2(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt) {
  const detail::PpeParams p = detail::ppe_params(a, b, c, d, opt);
  OrthoTriple s;
  s.type = SetType::PPE;
  s.label = "PPE";
  s.case_id = 2;
  const QubitVector e0 = QubitVector::zero(), e1 = QubitVector::one();
  s.states = {states::basis(0, 0), detail::ppe_case2_second(p), detail::ppe_case2_third(p)};
  s.schmidt = {product_decomposition(e0, e0), product_decomposition(QubitVector{p.a, p.b}, e1),
               assemble(s.states[2], ppe_case2_form(p.a, p.b, p.c, p.d), SchmidtBranch::ClosedForm,
                        opt.tol)};
  return s;
}

OrthoTriple construct_ppe_case3(Complex a, Complex b, Complex c, Complex d,
                                const ConstructOptions& opt) {
  const detail::PpeParams p = detail::ppe_params(a, b, c, d, opt);
  OrthoTriple s;
  s.type = SetType::PPE;
  s.label = "PPE";
  s.case_id = 3;
  const QubitVector e0 = QubitVector::zero(), e1 = QubitVector::one();
  s.states = {states::basis(0, 0), detail::ppe_case3_second(p), detail::ppe_case3_third(p)};
  s.schmidt = {product_decomposition(e0, e0), product_decomposition(e1, QubitVector{p.a, p.b}),
               assemble(s.states[2], ppe_case3_form(p.a, p.b, p.c, p.d), SchmidtBranch::ClosedForm,
                        opt.tol)};
  return s;
}

}  // namespace orthoschmidt
