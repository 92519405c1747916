#pragma once

// Seeded random parameters and sets. Generation is a pure function of
// (seed, index): sample i of a spec does not depend on how many samples are
// drawn or in which order, which keeps parallel and serial runs identical.

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "orthoschmidt/set.hpp"

namespace orthoschmidt {

/// SplitMix64 (Steele, Lea, Flood 2014). Specified exactly so that other
/// implementations can reproduce the streams bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Top 53 bits scaled to [0, 1).
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Seed of independent stream `index`: the index-th output of SplitMix64(seed).
  static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 g(seed + index * 0x9e3779b97f4a7c15ULL);
    return g.next();
  }

 private:
  std::uint64_t state_;
};

struct SampleSpec {
  SetType type = SetType::PP;
  std::optional<Variant> variant;  // drawn per sample when unset
  std::optional<int> case_id;      // drawn per sample when unset (PPE, PPEE)
  std::uint64_t seed = 0;
  std::size_t count = 1;
};

/// Set type by CLI name. "pppe" and every other unknown name raise UnknownType.
SetType sample_type_from_name(std::string_view name);

/// Checks the variant/case combination for the type (InvalidArgument).
void validate_spec(const SampleSpec& spec);

/// Sample `index` of `spec`.
OrthoSet sample_one(const SampleSpec& spec, std::uint64_t index);

/// spec.count samples, serially.
std::vector<OrthoSet> sample(const SampleSpec& spec);

// Building blocks, exposed for property tests.

double random_phase(SplitMix64& g);
/// Complex vector with squared magnitudes uniform on the simplex, uniform phases.
template <std::size_t N>
std::array<Complex, N> random_simplex(SplitMix64& g);
QubitVector random_qubit(SplitMix64& g);
TwoQubitState random_state(SplitMix64& g);
Unitary2 random_unitary(SplitMix64& g);
/// Three orthonormal product states, rotated by random local unitaries.
std::array<TwoQubitState, 3> random_ppp_triple(SplitMix64& g);

extern template std::array<Complex, 2> random_simplex<2>(SplitMix64&);
extern template std::array<Complex, 3> random_simplex<3>(SplitMix64&);
extern template std::array<Complex, 4> random_simplex<4>(SplitMix64&);

}  // namespace orthoschmidt
