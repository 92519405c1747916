#include "orthoschmidt/schmidt.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "orthoschmidt/error.hpp"

namespace orthoschmidt {

namespace {

// Below this a raw formula vector carries no usable direction.
constexpr double kVanishing = 1e-300;
// A projection smaller than this (relative to unit vectors) has no usable phase.
constexpr double kPhaseFloor = 1e-150;

bool finite_vector(const QubitVector& v) { return is_finite(v[0]) && is_finite(v[1]); }

Complex unit_phase(Complex z) {
  const double r = std::abs(z);
  return r > kPhaseFloor ? z / r : Complex(1.0);
}

TwoQubitState outer(const QubitVector& a, const QubitVector& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

double eigen_residual(const Matrix2& h, const QubitVector& v, double eigenvalue) {
  const QubitVector r = h * v - Complex(eigenvalue) * v;
  return r.norm();
}

}  // namespace

std::array<double, 2> coefficients_from_discriminant(double s, double c) {
  s = std::clamp(s, 0.0, 1.0);
  const double large = std::sqrt((1.0 + s) / 2.0);
  const double small = std::abs(c) / std::sqrt(2.0 * (1.0 + s));
  return {large, std::min(small, large)};
}

SchmidtDecomposition assemble(const TwoQubitState& state, const ClosedForm& form,
                              SchmidtBranch branch, double tol) {
  std::array<double, 2> coeffs = form.coeffs;
  std::array<QubitVector, 2> raw_b = form.b;
  for (auto& c : coeffs) {
    if (!std::isfinite(c)) throw Error(ErrorCode::NonFinite, "closed form produced a non-finite coefficient");
    c = std::max(c, 0.0);
  }
  if (coeffs[0] < coeffs[1]) {
    std::swap(coeffs[0], coeffs[1]);
    std::swap(raw_b[0], raw_b[1]);
  }

  // B side: normalize, keep the vector with the smaller Gram eigen-residual
  // and complete the other one orthogonally, retaining its phase.
  const Matrix2 g = gram(state);
  std::array<bool, 2> usable{};
  std::array<QubitVector, 2> b{};
  std::array<double, 2> residual{};
  for (std::size_t j = 0; j < 2; ++j) {
    const double n = raw_b[j].norm();
    usable[j] = finite_vector(raw_b[j]) && n > kVanishing;
    if (usable[j]) {
      b[j] = Complex(1.0 / n) * raw_b[j];
      residual[j] = eigen_residual(g, b[j].conj(), coeffs[j] * coeffs[j]);
    }
  }
  if (!usable[0] && !usable[1]) {
    b = {QubitVector::zero(), QubitVector::one()};
  } else {
    std::size_t anchor = usable[0] ? 0 : 1;
    if (usable[0] && usable[1] && residual[1] < residual[0]) anchor = 1;
    const std::size_t other = 1 - anchor;
    const QubitVector perp = orthogonal_complement(b[anchor]);
    const Complex phase = usable[other] ? unit_phase(inner(perp, b[other])) : Complex(1.0);
    b[other] = phase * perp;
  }

  // A side from the singular-vector relation a_j ~ M conj(b_j).
  const Matrix2 m = coefficient_matrix(state);
  const QubitVector v0 = m * b[0].conj();
  const double n0 = v0.norm();
  if (!(n0 > kVanishing)) throw Error(ErrorCode::ZeroVector, "state has no dominant Schmidt component");
  std::array<QubitVector, 2> a{};
  a[0] = Complex(1.0 / n0) * v0;
  const QubitVector perp_a = orthogonal_complement(a[0]);
  a[1] = unit_phase(inner(perp_a, m * b[1].conj())) * perp_a;

  SchmidtDecomposition d;
  d.coeffs = coeffs;
  d.basis_a = a;
  d.basis_b = b;
  d.branch = branch;
  d.rank_deficient = coeffs[1] <= tol;
  return d;
}

SchmidtDecomposition product_decomposition(const QubitVector& a, const QubitVector& b) {
  SchmidtDecomposition d;
  d.coeffs = {1.0, 0.0};
  d.basis_a[0] = a.normalized();
  d.basis_a[1] = orthogonal_complement(d.basis_a[0]);
  d.basis_b[0] = b.normalized();
  d.basis_b[1] = orthogonal_complement(d.basis_b[0]);
  d.branch = SchmidtBranch::Product;
  d.rank_deficient = true;
  return d;
}

ClosedForm diagonal_form(const TwoQubitState& state) {
  ClosedForm f;
  for (std::size_t j = 0; j < 2; ++j) {
    f.a[j] = {state.at(0, j), state.at(1, j)};
    f.coeffs[j] = f.a[j].norm();
  }
  f.b = {QubitVector::zero(), QubitVector::one()};
  return f;
}

ClosedForm nondiagonal_form(const TwoQubitState& state) {
  const Complex g = diagonal_residual(state);
  const double g00 = std::norm(state[0]) + std::norm(state[2]);
  const double s = std::sqrt(one_minus_concurrence_squared(state));
  const double c = concurrence(state);
  ClosedForm f;
  f.coeffs = coefficients_from_discriminant(s, c);
  const Matrix2 m = coefficient_matrix(state);
  for (std::size_t j = 0; j < 2; ++j) {
    const double r = f.coeffs[j] * f.coeffs[j];
    const QubitVector y{g, r - g00};
    f.a[j] = m * y;
    f.b[j] = y.conj();
  }
  return f;
}

SchmidtDecomposition schmidt_diagonal(const TwoQubitState& state, double tol) {
  if (!is_diagonal(state, tol))
    throw Error(ErrorCode::NotDiagonal, "state does not satisfy the diagonal condition");
  ClosedForm f = diagonal_form(state);
  std::array<std::size_t, 2> order{0, 1};
  if (f.coeffs[0] < f.coeffs[1]) order = {1, 0};

  SchmidtDecomposition d;
  d.branch = SchmidtBranch::Diagonal;
  for (std::size_t l = 0; l < 2; ++l) {
    d.coeffs[l] = f.coeffs[order[l]];
    d.basis_b[l] = f.b[order[l]];
  }
  d.basis_a[0] = Complex(1.0 / d.coeffs[0]) * f.a[order[0]];
  if (d.coeffs[1] > 0.0) {
    d.basis_a[1] = Complex(1.0 / d.coeffs[1]) * f.a[order[1]];
  } else {
    d.basis_a[1] = orthogonal_complement(d.basis_a[0]);
  }
  d.rank_deficient = d.coeffs[1] <= tol;
  return d;
}

SchmidtDecomposition schmidt_nondiagonal(const TwoQubitState& state, double tol) {
  if (is_diagonal(state, tol))
    throw Error(ErrorCode::Diagonal,
                "state satisfies the diagonal condition; the non-diagonal y-vectors vanish");
  return assemble(state, nondiagonal_form(state), SchmidtBranch::NonDiagonal, tol);
}

SchmidtDecomposition schmidt(const TwoQubitState& state, double tol) {
  make_state(state.amplitudes(), false);  // NonFinite, ZeroVector, NotNormalized
  return is_diagonal(state, tol) ? schmidt_diagonal(state, tol) : schmidt_nondiagonal(state, tol);
}

TwoQubitState reconstruct(const SchmidtDecomposition& d) {
  return Complex(d.coeffs[0]) * outer(d.basis_a[0], d.basis_b[0]) +
         Complex(d.coeffs[1]) * outer(d.basis_a[1], d.basis_b[1]);
}

double invariant_violation(const SchmidtDecomposition& d, double tol) {
  double v = 0.0;
  for (std::size_t j = 0; j < 2; ++j) {
    v = std::max(v, std::abs(d.basis_a[j].norm() - 1.0));
    v = std::max(v, std::abs(d.basis_b[j].norm() - 1.0));
    v = std::max(v, std::max(0.0, -d.coeffs[j]));
  }
  v = std::max(v, std::max(0.0, d.coeffs[1] - d.coeffs[0]));
  v = std::max(v, std::abs(d.coeffs[0] * d.coeffs[0] + d.coeffs[1] * d.coeffs[1] - 1.0));
  if (d.coeffs[1] > tol) {
    v = std::max(v, std::abs(inner(d.basis_a[0], d.basis_a[1])));
    v = std::max(v, std::abs(inner(d.basis_b[0], d.basis_b[1])));
  }
  return v;
}

}  // namespace orthoschmidt
