#include <doctest.h>

#include "testing.hpp"

using namespace testing;

namespace {

double entry_dist(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

ErrorCode code_of(auto f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("mixed") {

TEST_CASE("rank-two mixture of |00> and xi3") {
  const auto pair = construct_pe_nondiagonal(1 / kS2, 0.5, 0.5);
  const DensityMatrix4 rho = spectral_mix(pair.states, {0.3, 0.7});
  const Eigen::Vector4d ev = density_eigenvalues(rho);
  CHECK(std::abs(ev(0)) <= 1e-12);
  CHECK(std::abs(ev(1)) <= 1e-12);
  CHECK(std::abs(ev(2) - 0.3) <= 1e-12);
  CHECK(std::abs(ev(3) - 0.7) <= 1e-12);

  DensityMatrix2 expected;
  expected << 0.3 + 0.7 * 0.5, 0.7 / (2 * kS2), 0.7 / (2 * kS2), 0.7 * 0.5;
  CHECK(entry_dist(reduce_a(rho), expected) <= 1e-12);
}

TEST_CASE("Bell mixture is maximally mixed") {
  const std::vector<TwoQubitState> bell{states::phi_plus(), states::phi_minus(), states::psi_plus(),
                                        states::psi_minus()};
  const DensityMatrix4 rho = spectral_mix(bell, {0.25, 0.25, 0.25, 0.25});
  CHECK(entry_dist(rho, Eigen::Matrix4cd::Identity() / 4.0) <= 1e-15);
  CHECK(entry_dist(reduce_a(rho), Eigen::Matrix2cd::Identity() / 2.0) <= 1e-15);
  CHECK(entry_dist(reduce_b(rho), Eigen::Matrix2cd::Identity() / 2.0) <= 1e-15);
}

TEST_CASE("pure projectors") {
  const DensityMatrix4 rho = spectral_mix({states::basis(0, 0)}, {1.0});
  CHECK(entry_dist(rho, projector(states::basis(0, 0))) == 0.0);
  DensityMatrix2 zero = DensityMatrix2::Zero();
  zero(0, 0) = 1.0;
  CHECK(entry_dist(reduce_a(rho), zero) == 0.0);
  CHECK(entry_dist(reduce_b(projector(states::basis(0, 1))), DensityMatrix2{{0, 0}, {0, 1}}) == 0.0);
}

TEST_CASE("reduced spectra match Schmidt coefficients") {
  SplitMix64 g(41);
  for (int n = 0; n < 500; ++n) {
    const TwoQubitState s = random_state(g);
    const auto d = schmidt(s);
    const Eigen::Vector2d ea = density_eigenvalues(reduce_a(projector(s)));
    const Eigen::Vector2d eb = density_eigenvalues(reduce_b(projector(s)));
    for (int l = 0; l < 2; ++l) {
      // Eigenvalues ascend, coefficients descend.
      CHECK(std::abs(ea(l) - d.coeffs[1 - l] * d.coeffs[1 - l]) <= 1e-12);
      CHECK(std::abs(eb(l) - d.coeffs[1 - l] * d.coeffs[1 - l]) <= 1e-12);
    }
    CHECK(std::abs(reduce_a(projector(s)).trace() - 1.0) <= 1e-12);
  }
}

TEST_CASE("mixture eigenvalues equal sorted weights") {
  SampleSpec spec{SetType::MMEE, std::nullopt, std::nullopt, 43, 200};
  SplitMix64 g(44);
  for (const auto& b : sample(spec)) {
    const auto w = random_simplex<4>(g);
    std::vector<double> weights;
    for (auto z : w) weights.push_back(std::norm(z));
    const double sum = weights[0] + weights[1] + weights[2] + weights[3];
    for (auto& x : weights) x /= sum;
    const Eigen::Vector4d ev = density_eigenvalues(spectral_mix(b.states, weights));
    std::sort(weights.begin(), weights.end());
    for (int i = 0; i < 4; ++i) CHECK(std::abs(ev(i) - weights[i]) <= 1e-12);
  }
}

TEST_CASE("input validation") {
  CHECK(code_of([] { spectral_mix({states::basis(0, 0), make_state(1, 1, 0, 0)}, {0.5, 0.5}); }) ==
        ErrorCode::NotOrthogonal);
  CHECK(code_of([] { spectral_mix({states::basis(0, 0), states::basis(1, 1)}, {0.5, 0.6}); }) ==
        ErrorCode::BadWeights);
  CHECK(code_of([] { spectral_mix({states::basis(0, 0), states::basis(1, 1)}, {1.0, 0.0}); }) ==
        ErrorCode::BadWeights);
  CHECK(code_of([] { spectral_mix({states::basis(0, 0)}, {0.5, 0.5}); }) == ErrorCode::BadWeights);
  DensityMatrix4 bad = DensityMatrix4::Identity();
  CHECK(code_of([&] { reduce_a(bad); }) == ErrorCode::InvalidDensity);
  bad = DensityMatrix4::Zero();
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  CHECK(code_of([&] { reduce_b(bad); }) == ErrorCode::InvalidDensity);
}

}
