#include "orthoschmidt/batch.hpp"

#include <algorithm>
#include <exception>

namespace orthoschmidt {

namespace {

// Runs body(i) for i in [0, n). Exceptions are collected per index and the
// one with the lowest index is rethrown, so both paths fail the same way.
template <typename Body>
void for_each_index(std::size_t n, Execution exec, Body body) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        body(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<SchmidtDecomposition> decompose_all(const std::vector<TwoQubitState>& states,
                                                Execution exec, double tol) {
  std::vector<SchmidtDecomposition> out(states.size());
  for_each_index(states.size(), exec, [&](std::size_t i) { out[i] = schmidt(states[i], tol); });
  return out;
}

std::vector<SchmidtDecomposition> oracle_all(const std::vector<TwoQubitState>& states,
                                             Execution exec) {
  std::vector<SchmidtDecomposition> out(states.size());
  for_each_index(states.size(), exec, [&](std::size_t i) { out[i] = oracle_schmidt(states[i]); });
  return out;
}

std::vector<OrthoSet> sample_all(const SampleSpec& spec, Execution exec) {
  validate_spec(spec);
  std::vector<OrthoSet> out(spec.count);
  for_each_index(spec.count, exec, [&](std::size_t i) { out[i] = sample_one(spec, i); });
  return out;
}

std::vector<VerificationReport> verify_all(const std::vector<OrthoSet>& sets, Execution exec,
                                           double tol, double verify_tol) {
  std::vector<VerificationReport> out(sets.size());
  for_each_index(sets.size(), exec,
                 [&](std::size_t i) { out[i] = verify(sets[i], tol, verify_tol); });
  return out;
}

AgreementStats oracle_agreement(const std::vector<TwoQubitState>& states, Execution exec,
                                double tol) {
  const auto closed = decompose_all(states, exec, tol);
  const auto oracle = oracle_all(states, exec);
  AgreementStats s;
  s.count = states.size();
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = 0; j < 2; ++j)
      s.max_coefficient_gap =
          std::max(s.max_coefficient_gap, std::abs(closed[i].coeffs[j] - oracle[i].coeffs[j]));
    s.max_reconstruction_error =
        std::max(s.max_reconstruction_error, max_abs_diff(reconstruct(closed[i]), states[i]));
    s.max_oracle_reconstruction_error =
        std::max(s.max_oracle_reconstruction_error, max_abs_diff(reconstruct(oracle[i]), states[i]));
  }
  return s;
}

std::vector<TwoQubitState> random_states(std::uint64_t seed, std::size_t count, Execution exec) {
  std::vector<TwoQubitState> out(count);
  for_each_index(count, exec, [&](std::size_t i) {
    SplitMix64 g(SplitMix64::stream_seed(seed, i));
    out[i] = random_state(g);
  });
  return out;
}

}  // namespace orthoschmidt
