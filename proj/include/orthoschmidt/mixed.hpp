#pragma once

// Mixed states built spectrally from orthonormal pure states, and partial
// traces.

#include <vector>

#include <Eigen/Core>

#include "orthoschmidt/core.hpp"

namespace orthoschmidt {

using DensityMatrix4 = Eigen::Matrix4cd;
using DensityMatrix2 = Eigen::Matrix2cd;

/// rho = sum_i w_i |s_i><s_i|. States must be pairwise orthogonal within
/// 1e-10 (NotOrthogonal); weights positive and summing to 1 within 1e-12
/// (BadWeights).
DensityMatrix4 spectral_mix(const std::vector<TwoQubitState>& states,
                            const std::vector<double>& weights);

/// Partial trace over B (reduce_a) or A (reduce_b). Input must be Hermitian
/// with unit trace and eigenvalues >= -1e-12 (InvalidDensity).
DensityMatrix2 reduce_a(const DensityMatrix4& rho);
DensityMatrix2 reduce_b(const DensityMatrix4& rho);

DensityMatrix4 projector(const TwoQubitState& s);

/// Eigenvalues in ascending order.
Eigen::Vector4d density_eigenvalues(const DensityMatrix4& rho);
Eigen::Vector2d density_eigenvalues(const DensityMatrix2& rho);

/// Throws InvalidDensity unless rho is a valid density matrix.
void check_density(const DensityMatrix4& rho);

}  // namespace orthoschmidt
