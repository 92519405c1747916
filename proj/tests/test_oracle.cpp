#include <doctest.h>

#include <Eigen/SVD>

#include "testing.hpp"

using namespace testing;

TEST_SUITE("oracle") {

TEST_CASE("hermitian eigen-decomposition") {
  Matrix2 h;
  h(0, 0) = 2.0;
  h(1, 1) = 1.0;
  h(0, 1) = Complex(0, 1);
  h(1, 0) = Complex(0, -1);
  const Eigen2 e = hermitian_eigen(h);
  CHECK(std::abs(e.values[0] - (1.5 + std::sqrt(1.25))) <= 1e-15);
  CHECK(std::abs(e.values[1] - (1.5 - std::sqrt(1.25))) <= 1e-15);
  for (std::size_t l = 0; l < 2; ++l) {
    const QubitVector hv = h * e.vectors[l];
    CHECK(dist(hv, Complex(e.values[l]) * e.vectors[l]) <= 1e-15);
  }
  CHECK(std::abs(inner(e.vectors[0], e.vectors[1])) <= 1e-16);

  const Eigen2 id = hermitian_eigen(Matrix2::identity());
  CHECK(id.values[0] == 1.0);
  CHECK(id.values[1] == 1.0);
}

TEST_CASE("oracle agrees with an SVD") {
  SplitMix64 g(31);
  for (int n = 0; n < 2000; ++n) {
    const TwoQubitState s = random_state(g);
    Eigen::Matrix2cd m;
    m << s[0], s[1], s[2], s[3];
    const Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
    const auto o = oracle_schmidt(s);
    CHECK(o.branch == SchmidtBranch::Oracle);
    CHECK(std::abs(o.coeffs[0] - svd.singularValues()(0)) <= 1e-12);
    CHECK(std::abs(o.coeffs[1] - svd.singularValues()(1)) <= 1e-12);
    CHECK(max_abs_diff(reconstruct(o), s) <= 1e-12);
    CHECK(invariant_violation(o) <= 1e-12);
  }
}

TEST_CASE("oracle on fixtures") {
  const auto o = oracle_schmidt(xi2());
  CHECK(std::abs(o.coeffs[0] - std::sqrt(2.0 / 3)) <= 1e-12);
  CHECK(phase_dist(o.basis_b[0], QubitVector::plus()) <= 1e-12);
  const auto p = oracle_schmidt(states::basis(1, 0));
  CHECK(p.coeffs[1] == 0.0);
  CHECK(max_abs_diff(reconstruct(p), states::basis(1, 0)) <= 1e-16);
}

TEST_CASE("classification") {
  CHECK(classify_state(states::basis(0, 0)) == 'P');
  CHECK(classify_state(states::phi_plus()) == 'E');
  CHECK(classify_state(states::phi_plus(), true) == 'M');
  CHECK(classify_state(xi2(), true) == 'E');
  const std::vector<TwoQubitState> v{states::basis(0, 0), states::psi_plus()};
  CHECK(classify(v) == "PE");
  CHECK(classify(v, true) == "PM");
  CHECK(labels_match("PE", v));
  CHECK(labels_match("PM", v));
  CHECK_FALSE(labels_match("PP", v));
  CHECK_FALSE(labels_match("PME", v));
  const std::vector<TwoQubitState> w{states::basis(0, 0), xi2()};
  CHECK_FALSE(labels_match("PM", w));
  CHECK_THROWS_AS(classify({TwoQubitState(2, 0, 0, 0)}), Error);
}

TEST_CASE("verify_set") {
  const std::vector<TwoQubitState> bell{states::phi_plus(), states::phi_minus(), states::psi_plus(),
                                        states::psi_minus()};
  const auto r = verify_set(bell);
  CHECK(r.passed);
  CHECK(r.complete);
  CHECK(r.pattern == "MMMM");

  const auto bad = verify_set({states::basis(0, 0), make_state(1, 1, 0, 0)});
  CHECK_FALSE(bad.passed);
  CHECK(bad.max_pairwise_overlap > 0.7);

  CHECK_THROWS_AS(verify_set({}), Error);
  CHECK_THROWS_AS(verify_set(std::vector<TwoQubitState>(5, states::basis(0, 0))), Error);
}

TEST_CASE("verify checks declared labels") {
  OrthoSet s = construct_pe_nondiagonal(1 / kS2, 0.5, 0.5);
  CHECK(verify(s).passed);
  s.label = "PP";
  const auto r = verify(s);
  CHECK_FALSE(r.labels_ok);
  CHECK_FALSE(r.passed);
}

}
