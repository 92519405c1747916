#pragma once

#include <array>
#include <cmath>
#include <initializer_list>
#include <string>

#include "orthoschmidt/error.hpp"
#include "orthoschmidt/set.hpp"

namespace orthoschmidt::detail {

inline void require_finite(std::initializer_list<Complex> values) {
  for (const auto& z : values)
    if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "parameters must be finite");
}

inline void require_finite_real(std::initializer_list<double> values) {
  for (double x : values)
    if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "parameters must be finite");
}

/// Scales p so that sum w_i |p_i|^2 == target. In strict mode a deviation
/// beyond opt.tol is reported with `code` instead.
template <std::size_t N>
std::array<Complex, N> scale_group(std::array<Complex, N> p, const std::array<double, N>& w,
                                   double target, const ConstructOptions& opt, ErrorCode code,
                                   const std::string& what, const std::string& detail = {}) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += w[i] * std::norm(p[i]);
  if (s == 0.0) throw Error(ErrorCode::ZeroParameter, what + " are all zero");
  if (opt.strict) {
    if (std::abs(s - target) > opt.tol)
      throw Error(code, what + " violate their normalization condition", detail);
    return p;
  }
  const double f = std::sqrt(target / s);
  for (auto& z : p) z *= f;
  return p;
}

template <std::size_t N>
std::array<Complex, N> normalize_group(const std::array<Complex, N>& p, const ConstructOptions& opt,
                                       const std::string& what) {
  std::array<double, N> w;
  w.fill(1.0);
  return scale_group(p, w, 1.0, opt, ErrorCode::NotNormalized, what);
}

inline void require_nonzero(Complex z, const char* name, const ConstructOptions& opt) {
  if (std::abs(z) <= opt.tol)
    throw Error(ErrorCode::ZeroParameter, std::string("parameter ") + name + " must be nonzero");
}

inline void require_gamma(double gamma) {
  if (!std::isfinite(gamma)) throw Error(ErrorCode::NonFinite, "gamma must be finite");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw Error(ErrorCode::GammaOutOfRange, "gamma must lie strictly between 0 and 1");
}

/// Unit single-qubit vector; rescaled unless strict.
inline QubitVector unit_vector(const QubitVector& v, const ConstructOptions& opt, const char* what) {
  require_finite({v[0], v[1]});
  const double n = v.norm();
  if (n == 0.0) throw Error(ErrorCode::ZeroVector, std::string(what) + " is the zero vector");
  if (opt.strict && std::abs(n - 1.0) > opt.tol)
    throw Error(ErrorCode::NotNormalized, std::string(what) + " must be a unit vector");
  return Complex(1.0 / n) * v;
}

inline TwoQubitState raw_product(const QubitVector& a, const QubitVector& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

inline Complex expi(double theta) { return std::polar(1.0, theta); }

}  // namespace orthoschmidt::detail
