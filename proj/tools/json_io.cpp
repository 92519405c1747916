#include "json_io.hpp"

#include <cctype>
#include <cmath>

namespace orthoschmidt::io {

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const QubitVector& v) { return json::array({to_json(v[0]), to_json(v[1])}); }

json to_json(const TwoQubitState& s) {
  json out = json::array();
  for (const auto& z : s.amplitudes()) out.push_back(to_json(z));
  return out;
}

std::string branch_name(SchmidtBranch b) {
  switch (b) {
    case SchmidtBranch::Diagonal: return "diagonal";
    case SchmidtBranch::NonDiagonal: return "nondiagonal";
    case SchmidtBranch::Product: return "product";
    case SchmidtBranch::ClosedForm: return "closed-form";
    case SchmidtBranch::Oracle: return "oracle";
  }
  return "";
}

json to_json(const SchmidtDecomposition& d) {
  return json{{"coeffs", json::array({d.coeffs[0], d.coeffs[1]})},
              {"basis_a", json::array({to_json(d.basis_a[0]), to_json(d.basis_a[1])})},
              {"basis_b", json::array({to_json(d.basis_b[0]), to_json(d.basis_b[1])})}};
}

json to_json(const OrthoSet& set) {
  std::string upper(set_type_name(set.type));
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  json out{{"type", upper}, {"label", set.label}};
  if (set.variant != Variant::None) out["variant"] = std::string(variant_name(set.variant));
  if (set.case_id != 0) out["case"] = set.case_id;
  json states = json::array(), schmidt = json::array();
  for (const auto& s : set.states) states.push_back(to_json(s));
  for (const auto& d : set.schmidt) schmidt.push_back(to_json(d));
  out["states"] = states;
  out["schmidt"] = schmidt;
  if (set.states.size() == 2) {
    out["first"] = states[0];
    out["second"] = states[1];
    out["schmidt_second"] = schmidt[1];
  } else if (set.states.size() == 3) {
    out["schmidt_third"] = schmidt[2];
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json per = json::array();
  for (const auto& s : r.per_state) {
    per.push_back(json{{"label", std::string(1, s.label)},
                       {"concurrence", s.concurrence},
                       {"norm_error", s.norm_error},
                       {"reconstruction_error", s.reconstruction_error},
                       {"oracle_reconstruction_error", s.oracle_reconstruction_error},
                       {"coefficient_mismatch_vs_oracle", s.coefficient_mismatch_vs_oracle},
                       {"invariant_violation", s.invariant_violation}});
  }
  return json{{"max_pairwise_overlap", r.max_pairwise_overlap},
              {"pattern", r.pattern},
              {"per_state", per},
              {"complete", r.complete},
              {"passed", r.passed}};
}

json to_json(const Eigen::MatrixXcd& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

double real_from_json(const json& j, const std::string& what) {
  if (!j.is_number()) throw FormatError(what + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw FormatError(what + " must be finite");
  return x;
}

Complex complex_from_json(const json& j, const std::string& what) {
  if (j.is_number()) return {real_from_json(j, what), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw FormatError(what + " must be [re, im] or a real number");
  return {real_from_json(j[0], what), real_from_json(j[1], what)};
}

QubitVector qubit_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw FormatError(what + " must hold two complex entries");
  return {complex_from_json(j[0], what), complex_from_json(j[1], what)};
}

TwoQubitState state_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 4) throw FormatError(what + " must hold four complex amplitudes");
  TwoQubitState s;
  for (std::size_t i = 0; i < 4; ++i) s[i] = complex_from_json(j[i], what);
  return s;
}

std::vector<TwoQubitState> set_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("states")) throw FormatError("set object needs a \"states\" array");
    arr = &j.at("states");
  }
  if (!arr->is_array()) throw FormatError("set must be an array of states");
  std::vector<TwoQubitState> out;
  for (std::size_t i = 0; i < arr->size(); ++i)
    out.push_back(state_from_json((*arr)[i], "state " + std::to_string(i)));
  return out;
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace orthoschmidt::io
