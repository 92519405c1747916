#include "orthoschmidt/sample.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "orthoschmidt/bases.hpp"
#include "orthoschmidt/error.hpp"

namespace orthoschmidt {

namespace {

constexpr double kGammaMargin = 1e-3;
constexpr int kMaxAttempts = 1000;

double exponential(SplitMix64& g) { return -std::log1p(-g.uniform()); }

double random_gamma(SplitMix64& g) { return kGammaMargin + (1.0 - 2.0 * kGammaMargin) * g.uniform(); }

Side random_side(SplitMix64& g) { return (g.next() & 1U) ? Side::B : Side::A; }

std::array<QubitVector, 2> random_basis(SplitMix64& g) {
  const QubitVector v0 = random_qubit(g);
  return {v0, std::polar(1.0, random_phase(g)) * orthogonal_complement(v0)};
}

Side side_of(Variant v, SplitMix64& g) {
  if (v == Variant::ASide) return Side::A;
  if (v == Variant::BSide) return Side::B;
  return random_side(g);
}

bool is_retryable(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroParameter:
    case ErrorCode::ConditionViolated:
    case ErrorCode::AccidentallyDiagonal:
    case ErrorCode::DegenerateParameters:
    case ErrorCode::COutOfRange:
    case ErrorCode::NotOrthonormalBasis:
      return true;
    default:
      return false;
  }
}

OrthoSet draw(SetType type, Variant variant, int case_id, SplitMix64& g) {
  switch (type) {
    case SetType::PP:
      return construct_pp(side_of(variant, g), random_qubit(g));
    case SetType::PE: {
      if (variant == Variant::Diagonal) {
        const auto p = random_simplex<2>(g);
        return construct_pe_diagonal(p[0], p[1]);
      }
      const auto p = random_simplex<3>(g);
      return construct_pe_nondiagonal(p[0], p[1], p[2]);
    }
    case SetType::EP: {
      const double gamma = random_gamma(g);
      const auto p = random_simplex<2>(g);
      const Sign sign = (g.next() & 1U) ? Sign::Minus : Sign::Plus;
      return construct_ep(gamma, p[0], p[1], sign);
    }
    case SetType::EE: {
      const double gamma = random_gamma(g);
      if (variant == Variant::Diagonal) {
        // b = k c* e^{2i arg a} makes the diagonal condition hold exactly.
        const auto p = random_simplex<2>(g);
        const Complex a = p[0], c = p[1];
        const double k = std::sqrt(gamma) / std::sqrt(1.0 - gamma);
        const Complex b = k * std::conj(c) * std::polar(1.0, 2.0 * std::arg(a));
        return construct_ee_diagonal(gamma, a, b, c);
      }
      const auto p = random_simplex<3>(g);
      return construct_ee_nondiagonal(gamma, p[0], p[1], p[2]);
    }
    case SetType::PPP:
      return construct_ppp(side_of(variant, g), random_basis(g));
    case SetType::PPPP:
      return construct_pppp(side_of(variant, g), random_basis(g));
    case SetType::PPE:
    case SetType::PPEE: {
      const bool four = type == SetType::PPEE;
      if (case_id == 1) {
        const auto p = random_simplex<2>(g);
        return four ? construct_ppee_case1(p[0], p[1]) : construct_ppe_case1(p[0], p[1]);
      }
      const auto ab = random_simplex<2>(g);
      const auto cd = random_simplex<2>(g);
      if (case_id == 2)
        return four ? construct_ppee_case2(ab[0], ab[1], cd[0], cd[1])
                    : construct_ppe_case2(ab[0], ab[1], cd[0], cd[1]);
      return four ? construct_ppee_case3(ab[0], ab[1], cd[0], cd[1])
                  : construct_ppe_case3(ab[0], ab[1], cd[0], cd[1]);
    }
    case SetType::PM:
      return construct_pm(random_phase(g), random_phase(g));
    case SetType::PMEE: {
      const double t = random_phase(g), tp = random_phase(g), tpp = random_phase(g);
      const Complex c = std::polar(std::sqrt(0.5 * g.uniform()), random_phase(g));
      return construct_pmee(t, tp, tpp, c);
    }
    case SetType::MMEE: {
      const double t = random_phase(g), tp = random_phase(g);
      if (variant == Variant::Diagonal) {
        const auto p = random_simplex<2>(g);
        const double phi = tp - t;
        const double turn = (g.next() & 1U) ? std::numbers::pi / 2 : -std::numbers::pi / 2;
        const Complex a = p[0];
        const Complex b = std::polar(std::abs(p[1]), std::arg(a) - phi / 2 + turn);
        return construct_mmee_diagonal(t, tp, a, b);
      }
      const auto p = random_simplex<2>(g);
      return construct_mmee_nondiagonal(t, tp, p[0], p[1]);
    }
  }
  throw Error(ErrorCode::UnknownType, "unknown set type");
}

bool has_diag_split(SetType t) {
  return t == SetType::PE || t == SetType::EE || t == SetType::MMEE;
}

bool has_sides(SetType t) {
  return t == SetType::PP || t == SetType::PPP || t == SetType::PPPP;
}

bool has_cases(SetType t) { return t == SetType::PPE || t == SetType::PPEE; }

}  // namespace

template <std::size_t N>
std::array<Complex, N> random_simplex(SplitMix64& g) {
  std::array<double, N> w{};
  double s = 0.0;
  for (auto& x : w) s += (x = exponential(g));
  std::array<Complex, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = std::polar(std::sqrt(w[i] / s), random_phase(g));
  return out;
}

template std::array<Complex, 2> random_simplex<2>(SplitMix64&);
template std::array<Complex, 3> random_simplex<3>(SplitMix64&);
template std::array<Complex, 4> random_simplex<4>(SplitMix64&);

double random_phase(SplitMix64& g) { return 2.0 * std::numbers::pi * g.uniform(); }

QubitVector random_qubit(SplitMix64& g) {
  const auto p = random_simplex<2>(g);
  return {p[0], p[1]};
}

TwoQubitState random_state(SplitMix64& g) { return TwoQubitState(random_simplex<4>(g)); }

Unitary2 random_unitary(SplitMix64& g) {
  const auto b = random_basis(g);
  return Unitary2::from_columns(b[0], b[1]);
}

std::array<TwoQubitState, 3> random_ppp_triple(SplitMix64& g) {
  const OrthoSet t = construct_ppp(random_side(g), random_basis(g));
  const Unitary2 ua = random_unitary(g), ub = random_unitary(g);
  return {apply_local(t.states[0], ua, ub), apply_local(t.states[1], ua, ub),
          apply_local(t.states[2], ua, ub)};
}

SetType sample_type_from_name(std::string_view name) {
  if (name == "pppe")
    throw Error(ErrorCode::UnknownType,
                "type cannot exist: three orthonormal product states force the fourth to be product");
  if (auto t = parse_set_type(name)) return *t;
  throw Error(ErrorCode::UnknownType, "unknown set type '" + std::string(name) + "'");
}

void validate_spec(const SampleSpec& spec) {
  if (spec.count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  if (spec.variant && *spec.variant != Variant::None) {
    const bool diag = *spec.variant == Variant::Diagonal || *spec.variant == Variant::NonDiagonal;
    if ((diag && !has_diag_split(spec.type)) || (!diag && !has_sides(spec.type)))
      throw Error(ErrorCode::InvalidArgument, "variant does not apply to this set type");
  }
  if (spec.case_id) {
    if (!has_cases(spec.type))
      throw Error(ErrorCode::InvalidArgument, "case applies only to ppe and ppee");
    if (*spec.case_id < 1 || *spec.case_id > 3)
      throw Error(ErrorCode::InvalidArgument, "case must be 1, 2 or 3");
  }
}

OrthoSet sample_one(const SampleSpec& spec, std::uint64_t index) {
  validate_spec(spec);
  SplitMix64 g(SplitMix64::stream_seed(spec.seed, index));
  Variant variant = spec.variant.value_or(Variant::None);
  if (!spec.variant && has_diag_split(spec.type))
    variant = (g.next() & 1U) ? Variant::NonDiagonal : Variant::Diagonal;
  int case_id = 0;
  if (has_cases(spec.type)) case_id = spec.case_id ? *spec.case_id : static_cast<int>(g.next() % 3) + 1;

  for (int attempt = 0;; ++attempt) {
    try {
      return draw(spec.type, variant, case_id, g);
    } catch (const Error& e) {
      if (!is_retryable(e.code()) || attempt + 1 >= kMaxAttempts) throw;
    }
  }
}

std::vector<OrthoSet> sample(const SampleSpec& spec) {
  validate_spec(spec);
  std::vector<OrthoSet> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) out.push_back(sample_one(spec, i));
  return out;
}

}  // namespace orthoschmidt
