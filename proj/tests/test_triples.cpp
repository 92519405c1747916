#include <doctest.h>

#include "testing.hpp"

using namespace testing;

namespace {

void check_triple(const OrthoTriple& t, const char* label) {
  CHECK(t.states.size() == 3);
  CHECK(t.label == label);
  CHECK(t.first() == states::basis(0, 0));
  CHECK(verify(t).passed);
}

}  // namespace

TEST_SUITE("triples") {

TEST_CASE("PPP") {
  auto t = construct_ppp(Side::A, {QubitVector::zero(), QubitVector::one()});
  CHECK(max_abs_diff(t.states[1], states::basis(0, 1)) == 0.0);
  CHECK(max_abs_diff(t.states[2], states::basis(1, 1)) == 0.0);
  check_triple(t, "PPP");

  t = construct_ppp(Side::A, {QubitVector::plus(), QubitVector::minus()});
  CHECK(max_abs_diff(t.states[1], tensor(QubitVector::plus(), QubitVector::one())) <= 1e-16);
  CHECK(max_abs_diff(t.states[2], tensor(QubitVector::minus(), QubitVector::one())) <= 1e-16);
  check_triple(t, "PPP");

  t = construct_ppp(Side::B, {QubitVector::zero(), QubitVector::one()});
  CHECK(max_abs_diff(t.states[1], states::basis(1, 0)) == 0.0);
  CHECK(max_abs_diff(t.states[2], states::basis(1, 1)) == 0.0);
  check_triple(t, "PPP");

  CHECK_THROWS_AS(construct_ppp(Side::A, {QubitVector::zero(), QubitVector::plus()}), Error);
}

TEST_CASE("PPE case 1") {
  auto t = construct_ppe_case1(1 / kS2, 1 / kS2);
  CHECK(max_abs_diff(t.states[2], states::psi_plus()) <= 1e-15);
  CHECK(max_abs_diff(t.states[1], states::basis(1, 1)) == 0.0);
  check_triple(t, "PPE");

  t = construct_ppe_case1(Complex(0, 1 / kS3), std::sqrt(2.0 / 3));
  CHECK(std::abs(t.schmidt_third().coeffs[0] - std::sqrt(2.0 / 3)) <= 1e-12);
  CHECK(std::abs(t.schmidt_third().coeffs[1] - 1 / kS3) <= 1e-12);
  CHECK(std::abs(inner(t.states[0], t.states[2])) == 0.0);
  CHECK(std::abs(inner(t.states[1], t.states[2])) == 0.0);
  check_triple(t, "PPE");
}

TEST_CASE("PPE case 2") {
  const double h = 1 / kS2;
  auto t = construct_ppe_case2(h, h, h, h);
  // Concurrence of the third state is 2|bcd|.
  const double q = std::abs(h * h * h);
  const auto k = coefficients_from_half_concurrence(q);
  CHECK(std::abs(t.schmidt_third().coeffs[0] - k[0]) <= 1e-12);
  CHECK(std::abs(t.schmidt_third().coeffs[1] - k[1]) <= 1e-12);
  CHECK(form_gap(ppe_case2_form(h, h, h, h), t.schmidt_third()) <= 1e-12);
  check_triple(t, "PPE");

  SampleSpec spec{SetType::PPE, std::nullopt, 2, 29, 2000};
  for (const auto& s : sample(spec)) {
    const auto& c = s.schmidt_third().coeffs;
    CHECK(std::abs(c[0] * c[0] + c[1] * c[1] - 1.0) <= 1e-12);
    CHECK(max_overlap(s.states) <= 1e-12);
  }
}

TEST_CASE("PPE case 3") {
  const double h = 1 / kS2;
  auto t = construct_ppe_case3(h, h, h, h);
  const auto k = coefficients_from_half_concurrence(std::abs(h * h * h));
  CHECK(std::abs(t.schmidt_third().coeffs[0] - k[0]) <= 1e-12);
  CHECK(concurrence(t.states[1]) <= 1e-15);
  CHECK(max_abs_diff(reconstruct(t.schmidt_third()), t.states[2]) <= 1e-12);
  CHECK(form_gap(ppe_case3_form(h, h, h, h), t.schmidt_third()) <= 1e-12);
  check_triple(t, "PPE");

  const Complex a(0.3, 0.4), b(0.5, -0.1), c(-0.2, 0.6), d(0.7, 0.1);
  t = construct_ppe_case3(a, b, c, d);
  CHECK(verify(t).passed);
  CHECK_THROWS_AS(construct_ppe_case3(0, b, c, d), Error);
}

TEST_CASE("checked_basis") {
  const auto b = checked_basis({QubitVector{2, 0}, QubitVector{0, 3}});
  CHECK(b[0] == QubitVector::zero());
  CHECK(b[1] == QubitVector::one());
  CHECK_THROWS_AS(checked_basis({QubitVector::zero(), QubitVector::zero()}), Error);
}

}
