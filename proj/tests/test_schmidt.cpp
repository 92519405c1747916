#include <doctest.h>

#include "testing.hpp"

using namespace testing;

namespace {

double coeff_dist(const SchmidtDecomposition& d, double l0, double l1) {
  return std::max(std::abs(d.coeffs[0] - l0), std::abs(d.coeffs[1] - l1));
}

}  // namespace

TEST_SUITE("schmidt") {

TEST_CASE("xi1 via the diagonal branch") {
  const auto d = schmidt_diagonal(xi1());
  CHECK(d.branch == SchmidtBranch::Diagonal);
  CHECK(coeff_dist(d, 1 / kS2, 1 / kS2) <= 1e-12);
  const QubitVector a0{std::sqrt(2.0 / 3), std::sqrt(1.0 / 3)};
  const QubitVector a1{std::sqrt(1.0 / 3), -std::sqrt(2.0 / 3)};
  CHECK(phase_dist(d.basis_a[0], a0) <= 1e-12);
  CHECK(phase_dist(d.basis_a[1], a1) <= 1e-12);
  CHECK(phase_dist(d.basis_b[0], QubitVector::zero()) <= 1e-12);
  CHECK(phase_dist(d.basis_b[1], QubitVector::one()) <= 1e-12);
  CHECK(max_abs_diff(reconstruct(d), xi1()) <= 1e-12);
  CHECK(schmidt(xi1()).branch == SchmidtBranch::Diagonal);
}

TEST_CASE("xi2 via the non-diagonal branch") {
  const auto d = schmidt_nondiagonal(xi2());
  CHECK(d.branch == SchmidtBranch::NonDiagonal);
  CHECK(coeff_dist(d, std::sqrt(2.0 / 3), std::sqrt(1.0 / 3)) <= 1e-12);
  CHECK(phase_dist(d.basis_a[0], QubitVector::zero()) <= 1e-12);
  CHECK(phase_dist(d.basis_a[1], QubitVector::one()) <= 1e-12);
  CHECK(phase_dist(d.basis_b[0], QubitVector::plus()) <= 1e-12);
  CHECK(phase_dist(d.basis_b[1], QubitVector::minus()) <= 1e-12);
  CHECK(max_abs_diff(reconstruct(d), xi2()) <= 1e-12);
  CHECK(schmidt(xi2()).branch == SchmidtBranch::NonDiagonal);
}

TEST_CASE("xi3 generating amplitudes") {
  const TwoQubitState s = make_state(0, 1 / kS2, 0.5, 0.5);
  const auto d = schmidt_nondiagonal(s);
  const double l0 = std::sqrt(0.5 + 1 / (2 * kS2)), l1 = std::sqrt(0.5 - 1 / (2 * kS2));
  CHECK(coeff_dist(d, l0, l1) <= 1e-12);
  CHECK(phase_dist(d.basis_a[0], QubitVector::plus()) <= 1e-12);
  CHECK(phase_dist(d.basis_a[1], -1.0 * QubitVector::minus()) <= 1e-12);
  CHECK(max_abs_diff(reconstruct(d), s) <= 1e-12);
}

TEST_CASE("misapplied branches") {
  // Diagonal formula on a non-diagonal state: A-side vectors not orthogonal.
  const ClosedForm f = diagonal_form(xi2());
  const double ov = std::abs(inner(f.a[0].normalized(), f.a[1].normalized()));
  CHECK(ov > 0.1);
  CHECK_THROWS_AS(schmidt_diagonal(xi2()), Error);

  // Non-diagonal formula on a diagonal state: the y vectors vanish.
  const ClosedForm g = nondiagonal_form(xi1());
  CHECK(std::min(g.b[0].norm(), g.b[1].norm()) <= 1e-15);
  try {
    schmidt_nondiagonal(xi1());
    FAIL("expected Diagonal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Diagonal);
  }
}

TEST_CASE("product and Bell states") {
  const auto d = schmidt(states::basis(0, 0));
  CHECK(coeff_dist(d, 1.0, 0.0) == 0.0);
  CHECK(d.rank_deficient);
  CHECK(phase_dist(d.basis_a[0], QubitVector::zero()) == 0.0);
  CHECK(phase_dist(d.basis_b[0], QubitVector::zero()) == 0.0);
  CHECK(max_abs_diff(reconstruct(d), states::basis(0, 0)) == 0.0);

  const auto b = schmidt(states::phi_plus());
  CHECK(coeff_dist(b, 1 / kS2, 1 / kS2) <= 1e-15);
  CHECK(set_phase_dist(b.basis_a, {QubitVector::zero(), QubitVector::one()}) <= 1e-15);
  CHECK(set_phase_dist(b.basis_b, {QubitVector::zero(), QubitVector::one()}) <= 1e-15);

  SchmidtDecomposition manual;
  CHECK(reconstruct(manual) == states::basis(0, 0));
}

TEST_CASE("diagonal states with a phase pattern") {
  // |a| e^{i t} |01> + |b| e^{i u} |10>.
  const Complex a = std::polar(0.6, 0.3), b = std::polar(0.8, -1.1);
  const auto d = schmidt(make_state(0, a, b, 0));
  CHECK(d.branch == SchmidtBranch::Diagonal);
  CHECK(coeff_dist(d, 0.8, 0.6) <= 1e-15);
}

TEST_CASE("closed-form vectors agree with the assembled decomposition") {
  SplitMix64 g(17);
  for (int n = 0; n < 2000; ++n) {
    const TwoQubitState s = random_state(g);
    const ClosedForm f = nondiagonal_form(s);
    const auto d = schmidt_nondiagonal(s);
    // Formula order is (larger, smaller) for non-diagonal states.
    for (std::size_t l = 0; l < 2; ++l) {
      CHECK(parallel_gap(f.a[l], d.basis_a[l]) <= 1e-12);
      CHECK(parallel_gap(f.b[l], d.basis_b[l]) <= 1e-12);
    }
    CHECK(max_abs_diff(reconstruct(d), s) <= 1e-12);
    CHECK(invariant_violation(d) <= 1e-12);
  }
}

TEST_CASE("round trip on random diagonal states") {
  SplitMix64 g(19);
  for (int n = 0; n < 1000; ++n) {
    // Rotating the A side of a Schmidt-form state keeps the Gram matrix diagonal.
    const auto w = random_simplex<2>(g);
    const TwoQubitState base = make_state(w[0], 0, 0, w[1]);
    const TwoQubitState s = apply_local(base, random_unitary(g), Unitary2::identity());
    REQUIRE(is_diagonal(s));
    const auto d = schmidt(s);
    CHECK(max_abs_diff(reconstruct(d), s) <= 1e-12);
    CHECK(invariant_violation(d) <= 1e-12);
  }
}

TEST_CASE("coefficients from the discriminant are stable") {
  const auto c = coefficients_from_discriminant(1.0, 0.0);
  CHECK(c[0] == 1.0);
  CHECK(c[1] == 0.0);
  const double tiny = 1e-9;
  const auto t = coefficients_from_discriminant(std::sqrt(1 - tiny * tiny), tiny);
  CHECK(std::abs(2 * t[0] * t[1] - tiny) <= 1e-22);
}

}
