#pragma once

// Batch kernels over many states or sets. Each has a serial reference and an
// OpenMP-parallel path; both produce identical results element by element.

#include <vector>

#include "orthoschmidt/oracle.hpp"
#include "orthoschmidt/sample.hpp"

namespace orthoschmidt {

enum class Execution { Serial, Parallel };

std::vector<SchmidtDecomposition> decompose_all(const std::vector<TwoQubitState>& states,
                                                Execution exec = Execution::Parallel,
                                                double tol = kClassifyTol);

std::vector<SchmidtDecomposition> oracle_all(const std::vector<TwoQubitState>& states,
                                             Execution exec = Execution::Parallel);

std::vector<OrthoSet> sample_all(const SampleSpec& spec, Execution exec = Execution::Parallel);

std::vector<VerificationReport> verify_all(const std::vector<OrthoSet>& sets,
                                           Execution exec = Execution::Parallel,
                                           double tol = kClassifyTol,
                                           double verify_tol = kVerifyTol);

struct AgreementStats {
  std::size_t count = 0;
  double max_coefficient_gap = 0.0;
  double max_reconstruction_error = 0.0;
  double max_oracle_reconstruction_error = 0.0;
};

/// Closed-form vs. oracle over a batch of states.
AgreementStats oracle_agreement(const std::vector<TwoQubitState>& states,
                                Execution exec = Execution::Parallel, double tol = kClassifyTol);

/// `count` random states from stream `seed`, one independent stream per index.
std::vector<TwoQubitState> random_states(std::uint64_t seed, std::size_t count,
                                         Execution exec = Execution::Parallel);

}  // namespace orthoschmidt
