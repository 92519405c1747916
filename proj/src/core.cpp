#include "orthoschmidt/core.hpp"

#include <cmath>
#include <numbers>

#include "orthoschmidt/error.hpp"

namespace orthoschmidt {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotDiagonal: return "NotDiagonal";
    case ErrorCode::Diagonal: return "Diagonal";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::AccidentallyDiagonal: return "AccidentallyDiagonal";
    case ErrorCode::NotOrthonormalBasis: return "NotOrthonormalBasis";
    case ErrorCode::NotPPP: return "NotPPP";
    case ErrorCode::COutOfRange: return "COutOfRange";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::InvalidDensity: return "InvalidDensity";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double QubitVector::norm() const { return std::sqrt(std::norm(amp[0]) + std::norm(amp[1])); }

QubitVector QubitVector::conj() const { return {std::conj(amp[0]), std::conj(amp[1])}; }

QubitVector QubitVector::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero qubit vector");
  return {amp[0] / n, amp[1] / n};
}

QubitVector QubitVector::plus() {
  return {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2};
}

QubitVector QubitVector::minus() {
  return {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2};
}

Complex inner(const QubitVector& x, const QubitVector& y) {
  return std::conj(x[0]) * y[0] + std::conj(x[1]) * y[1];
}

QubitVector orthogonal_complement(const QubitVector& v) {
  return {-std::conj(v[1]), std::conj(v[0])};
}

Matrix2 Matrix2::adjoint() const {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

Matrix2 Matrix2::transpose() const {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = (*this)(j, i);
  return r;
}

Complex Matrix2::det() const { return m[0] * m[3] - m[1] * m[2]; }

Complex Matrix2::trace() const { return m[0] + m[3]; }

Matrix2 Matrix2::identity() { return Matrix2{{1.0, 0.0, 0.0, 1.0}}; }

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  return r;
}

QubitVector operator*(const Matrix2& x, const QubitVector& v) {
  return {x(0, 0) * v[0] + x(0, 1) * v[1], x(1, 0) * v[0] + x(1, 1) * v[1]};
}

Unitary2::Unitary2(const Matrix2& u) : u_(u) {
  for (const auto& z : u.m)
    if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "unitary has non-finite entries");
  const Matrix2 p = u.adjoint() * u;
  const Matrix2 id = Matrix2::identity();
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(p.m[i] - id.m[i]) > kVerifyTol)
      throw Error(ErrorCode::NotUnitary, "matrix is not unitary within 1e-12");
  }
}

Unitary2 Unitary2::identity() { return Unitary2(Matrix2::identity()); }

Unitary2 Unitary2::pauli_x() { return Unitary2(Matrix2{{0.0, 1.0, 1.0, 0.0}}); }

Unitary2 Unitary2::hadamard() {
  const double h = std::numbers::sqrt2 / 2;
  return Unitary2(Matrix2{{h, h, h, -h}});
}

Unitary2 Unitary2::from_columns(const QubitVector& c0, const QubitVector& c1) {
  return Unitary2(Matrix2{{c0[0], c1[0], c0[1], c1[1]}});
}

double TwoQubitState::norm() const {
  double s = 0.0;
  for (const auto& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

TwoQubitState operator*(Complex s, const TwoQubitState& x) {
  return {s * x.amp_[0], s * x.amp_[1], s * x.amp_[2], s * x.amp_[3]};
}

TwoQubitState operator+(const TwoQubitState& x, const TwoQubitState& y) {
  return {x.amp_[0] + y.amp_[0], x.amp_[1] + y.amp_[1], x.amp_[2] + y.amp_[2],
          x.amp_[3] + y.amp_[3]};
}

TwoQubitState operator-(const TwoQubitState& x, const TwoQubitState& y) {
  return {x.amp_[0] - y.amp_[0], x.amp_[1] - y.amp_[1], x.amp_[2] - y.amp_[2],
          x.amp_[3] - y.amp_[3]};
}

TwoQubitState make_state(const std::array<Complex, 4>& amp, bool normalize) {
  for (const auto& z : amp)
    if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "state amplitudes must be finite");
  TwoQubitState s(amp);
  const double n = s.norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, "all four amplitudes are zero");
  if (!normalize) {
    if (std::abs(n - 1.0) > kClassifyTol)
      throw Error(ErrorCode::NotNormalized, "state norm deviates from 1 by more than 1e-10");
    return s;
  }
  return Complex(1.0 / n) * s;
}

TwoQubitState make_state(Complex c00, Complex c01, Complex c10, Complex c11, bool normalize) {
  return make_state(std::array<Complex, 4>{c00, c01, c10, c11}, normalize);
}

namespace states {

TwoQubitState basis(std::size_t j, std::size_t k) {
  std::array<Complex, 4> a{};
  a.at(2 * j + k) = 1.0;
  return TwoQubitState(a);
}

TwoQubitState phi_plus() {
  const double h = std::numbers::sqrt2 / 2;
  return {h, 0.0, 0.0, h};
}

TwoQubitState phi_minus() {
  const double h = std::numbers::sqrt2 / 2;
  return {h, 0.0, 0.0, -h};
}

TwoQubitState psi_plus() {
  const double h = std::numbers::sqrt2 / 2;
  return {0.0, h, h, 0.0};
}

TwoQubitState psi_minus() {
  const double h = std::numbers::sqrt2 / 2;
  return {0.0, h, -h, 0.0};
}

}  // namespace states

Complex inner(const TwoQubitState& a, const TwoQubitState& b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double max_abs_diff(const TwoQubitState& a, const TwoQubitState& b) {
  double e = 0.0;
  for (std::size_t i = 0; i < 4; ++i) e = std::max(e, std::abs(a[i] - b[i]));
  return e;
}

Matrix2 coefficient_matrix(const TwoQubitState& s) {
  return Matrix2{s.amplitudes()};
}

Matrix2 gram(const TwoQubitState& s) {
  const Complex c00 = s[0], c01 = s[1], c10 = s[2], c11 = s[3];
  Matrix2 g;
  g(0, 0) = std::norm(c00) + std::norm(c10);
  g(1, 1) = std::norm(c01) + std::norm(c11);
  g(0, 1) = std::conj(c00) * c01 + std::conj(c10) * c11;
  g(1, 0) = std::conj(g(0, 1));
  return g;
}

Complex diagonal_residual(const TwoQubitState& s) {
  return std::conj(s[0]) * s[1] + std::conj(s[2]) * s[3];
}

double concurrence(const TwoQubitState& s) {
  return 2.0 * std::abs(s[0] * s[3] - s[1] * s[2]);
}

double one_minus_concurrence_squared(const TwoQubitState& s) {
  const double d = std::norm(s[0]) + std::norm(s[2]) - std::norm(s[1]) - std::norm(s[3]);
  return d * d + 4.0 * std::norm(diagonal_residual(s));
}

bool is_diagonal(const TwoQubitState& s, double tol) {
  return std::abs(diagonal_residual(s)) <= tol;
}

TwoQubitState tensor(const QubitVector& a, const QubitVector& b) {
  for (const auto* v : {&a, &b}) {
    if (!is_finite((*v)[0]) || !is_finite((*v)[1]))
      throw Error(ErrorCode::NonFinite, "qubit vector must be finite");
    if (std::abs(v->norm() - 1.0) > kClassifyTol)
      throw Error(ErrorCode::NotNormalized, "tensor factors must be unit within 1e-10");
  }
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

TwoQubitState apply_local(const TwoQubitState& s, const Unitary2& ua, const Unitary2& ub) {
  const Matrix2 m = ua.matrix() * coefficient_matrix(s) * ub.matrix().transpose();
  return TwoQubitState(m.m);
}

}  // namespace orthoschmidt
