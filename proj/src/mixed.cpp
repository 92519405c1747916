#include "orthoschmidt/mixed.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "orthoschmidt/error.hpp"

namespace orthoschmidt {

namespace {

constexpr double kDensityTol = 1e-12;

Eigen::Vector4cd column(const TwoQubitState& s) {
  Eigen::Vector4cd v;
  for (int i = 0; i < 4; ++i) v(i) = s[static_cast<std::size_t>(i)];
  return v;
}

}  // namespace

DensityMatrix4 projector(const TwoQubitState& s) {
  const Eigen::Vector4cd v = column(s);
  return v * v.adjoint();
}

DensityMatrix4 spectral_mix(const std::vector<TwoQubitState>& states,
                            const std::vector<double>& weights) {
  if (states.empty() || states.size() > 4)
    throw Error(ErrorCode::InvalidArgument, "between one and four states are required");
  if (weights.size() != states.size())
    throw Error(ErrorCode::BadWeights, "one weight per state is required");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w <= 0.0) throw Error(ErrorCode::BadWeights, "weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > kDensityTol)
    throw Error(ErrorCode::BadWeights, "weights must sum to 1 within 1e-12");
  for (const auto& s : states) {
    for (const auto& z : s.amplitudes())
      if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "state amplitudes must be finite");
    if (std::abs(s.norm() - 1.0) > kClassifyTol)
      throw Error(ErrorCode::NotNormalized, "mixed states need unit members");
  }
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t j = i + 1; j < states.size(); ++j)
      if (std::abs(inner(states[i], states[j])) > kClassifyTol)
        throw Error(ErrorCode::NotOrthogonal, "states must be pairwise orthogonal within 1e-10");

  DensityMatrix4 rho = DensityMatrix4::Zero();
  for (std::size_t i = 0; i < states.size(); ++i) rho += weights[i] * projector(states[i]);
  return rho;
}

Eigen::Vector4d density_eigenvalues(const DensityMatrix4& rho) {
  return Eigen::SelfAdjointEigenSolver<DensityMatrix4>(rho, Eigen::EigenvaluesOnly).eigenvalues();
}

Eigen::Vector2d density_eigenvalues(const DensityMatrix2& rho) {
  return Eigen::SelfAdjointEigenSolver<DensityMatrix2>(rho, Eigen::EigenvaluesOnly).eigenvalues();
}

void check_density(const DensityMatrix4& rho) {
  if (!rho.allFinite()) throw Error(ErrorCode::InvalidDensity, "density matrix has non-finite entries");
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTol)
    throw Error(ErrorCode::InvalidDensity, "density matrix is not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0)) > kDensityTol)
    throw Error(ErrorCode::InvalidDensity, "density matrix trace differs from 1");
  if (density_eigenvalues(rho).minCoeff() < -kDensityTol)
    throw Error(ErrorCode::InvalidDensity, "density matrix has a negative eigenvalue");
}

// Index 2*j + k for |j>_A |k>_B.
DensityMatrix2 reduce_a(const DensityMatrix4& rho) {
  check_density(rho);
  DensityMatrix2 r = DensityMatrix2::Zero();
  for (int j = 0; j < 2; ++j)
    for (int jp = 0; jp < 2; ++jp)
      for (int k = 0; k < 2; ++k) r(j, jp) += rho(2 * j + k, 2 * jp + k);
  return r;
}

DensityMatrix2 reduce_b(const DensityMatrix4& rho) {
  check_density(rho);
  DensityMatrix2 r = DensityMatrix2::Zero();
  for (int k = 0; k < 2; ++k)
    for (int kp = 0; kp < 2; ++kp)
      for (int j = 0; j < 2; ++j) r(k, kp) += rho(2 * j + k, 2 * j + kp);
  return r;
}

}  // namespace orthoschmidt
