#pragma once

// Amplitude-level building blocks for two-qubit pure states: the state and
// single-qubit vector types, the 2x2 coefficient/Gram matrices, concurrence,
// the diagonal condition, tensor products and local unitary action.
//
// Amplitude ordering is fixed as (c00, c01, c10, c11), i.e. index 2*j + k for
// |j>_A (x) |k>_B. The coefficient matrix has rows indexed by A and columns
// by B, so M(j, k) == c_jk.

#include <array>
#include <complex>
#include <cstddef>

namespace orthoschmidt {

using Complex = std::complex<double>;

/// Tolerance used to classify states (diagonal condition, product vs.
/// entangled, maximally entangled) and to check constructor conditions.
inline constexpr double kClassifyTol = 1e-10;
/// Tolerance used when verifying identities that hold exactly in exact
/// arithmetic (orthogonality, reconstruction, coefficient agreement).
inline constexpr double kVerifyTol = 1e-12;
/// Hermiticity tolerance for Gram matrices built from amplitudes.
inline constexpr double kHermitianTol = 1e-14;

bool is_finite(Complex z) noexcept;

/// Two-component complex vector of one qubit.
struct QubitVector {
  std::array<Complex, 2> amp{};

  constexpr QubitVector() = default;
  constexpr QubitVector(Complex v0, Complex v1) : amp{v0, v1} {}

  Complex& operator[](std::size_t i) { return amp[i]; }
  const Complex& operator[](std::size_t i) const { return amp[i]; }

  double norm() const;
  QubitVector conj() const;
  QubitVector normalized() const;

  friend QubitVector operator*(Complex s, const QubitVector& v) {
    return {s * v.amp[0], s * v.amp[1]};
  }
  friend QubitVector operator+(const QubitVector& x, const QubitVector& y) {
    return {x.amp[0] + y.amp[0], x.amp[1] + y.amp[1]};
  }
  friend QubitVector operator-(const QubitVector& x, const QubitVector& y) {
    return {x.amp[0] - y.amp[0], x.amp[1] - y.amp[1]};
  }
  friend bool operator==(const QubitVector&, const QubitVector&) = default;

  static QubitVector zero() { return {1.0, 0.0}; }
  static QubitVector one() { return {0.0, 1.0}; }
  static QubitVector plus();
  static QubitVector minus();
};

/// <x|y>, conjugate-linear in the first argument.
Complex inner(const QubitVector& x, const QubitVector& y);

/// The unit vector orthogonal to `v` given by (-v1*, v0*). `v` must be unit.
QubitVector orthogonal_complement(const QubitVector& v);

/// Plain 2x2 complex matrix, row-major.
struct Matrix2 {
  std::array<Complex, 4> m{};

  Complex& operator()(std::size_t r, std::size_t c) { return m[2 * r + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return m[2 * r + c]; }

  Matrix2 adjoint() const;
  Matrix2 transpose() const;
  Complex det() const;
  Complex trace() const;

  static Matrix2 identity();
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

Matrix2 operator*(const Matrix2& x, const Matrix2& y);
QubitVector operator*(const Matrix2& x, const QubitVector& v);

/// 2x2 unitary. Construction validates U^dagger U = I within 1e-12.
class Unitary2 {
 public:
  explicit Unitary2(const Matrix2& u);

  const Matrix2& matrix() const noexcept { return u_; }

  static Unitary2 identity();
  static Unitary2 pauli_x();
  static Unitary2 hadamard();
  /// Unitary whose columns are the orthonormal pair (c0, c1).
  static Unitary2 from_columns(const QubitVector& c0, const QubitVector& c1);

 private:
  Matrix2 u_;
};

/// Two-qubit pure state (c00, c01, c10, c11).
///
/// The raw constructor stores amplitudes as given; use make_state() to get a
/// validated, unit-norm state.
class TwoQubitState {
 public:
  constexpr TwoQubitState() = default;
  constexpr TwoQubitState(Complex c00, Complex c01, Complex c10, Complex c11)
      : amp_{c00, c01, c10, c11} {}
  explicit constexpr TwoQubitState(const std::array<Complex, 4>& amp) : amp_(amp) {}

  const Complex& operator[](std::size_t i) const { return amp_[i]; }
  Complex& operator[](std::size_t i) { return amp_[i]; }
  /// c_jk for |j>_A (x) |k>_B.
  const Complex& at(std::size_t j, std::size_t k) const { return amp_[2 * j + k]; }

  const std::array<Complex, 4>& amplitudes() const noexcept { return amp_; }

  double norm() const;

  friend TwoQubitState operator*(Complex s, const TwoQubitState& x);
  friend TwoQubitState operator+(const TwoQubitState& x, const TwoQubitState& y);
  friend TwoQubitState operator-(const TwoQubitState& x, const TwoQubitState& y);
  friend bool operator==(const TwoQubitState&, const TwoQubitState&) = default;

 private:
  std::array<Complex, 4> amp_{};
};

/// Builds a unit-norm state. With `normalize` off, inputs whose norm deviates
/// from 1 by more than 1e-10 are rejected (NotNormalized). All-zero input is
/// ZeroVector; NaN/Inf is NonFinite.
TwoQubitState make_state(Complex c00, Complex c01, Complex c10, Complex c11,
                         bool normalize = true);
TwoQubitState make_state(const std::array<Complex, 4>& amp, bool normalize = true);

/// Common states.
namespace states {
TwoQubitState basis(std::size_t j, std::size_t k);
TwoQubitState phi_plus();
TwoQubitState phi_minus();
TwoQubitState psi_plus();
TwoQubitState psi_minus();
}  // namespace states

/// <a|b>, conjugate-linear in the first argument.
Complex inner(const TwoQubitState& a, const TwoQubitState& b);

/// Largest componentwise modulus of a - b.
double max_abs_diff(const TwoQubitState& a, const TwoQubitState& b);

/// M with M(j, k) = c_jk.
Matrix2 coefficient_matrix(const TwoQubitState& s);

/// G = M^dagger M, assembled entrywise from the amplitudes.
Matrix2 gram(const TwoQubitState& s);

/// c00* c01 + c10* c11, the off-diagonal Gram entry G(0, 1).
Complex diagonal_residual(const TwoQubitState& s);

/// 2 |c00 c11 - c01 c10|.
double concurrence(const TwoQubitState& s);

/// 1 - C^2 evaluated as (G00 - G11)^2 + 4|G01|^2, which equals it for unit
/// states and does not lose precision when C is close to 1.
double one_minus_concurrence_squared(const TwoQubitState& s);

/// True iff |c00* c01 + c10* c11| <= tol.
bool is_diagonal(const TwoQubitState& s, double tol = kClassifyTol);

/// c_jk = a_j b_k. Both factors must be unit within 1e-10.
TwoQubitState tensor(const QubitVector& a, const QubitVector& b);

/// M -> uA M uB^T.
TwoQubitState apply_local(const TwoQubitState& s, const Unitary2& ua, const Unitary2& ub);

}  // namespace orthoschmidt
