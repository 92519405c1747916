#pragma once

// JSON conventions: a complex number is [re, im], a qubit vector [z0, z1], a
// state [c00, c01, c10, c11], a decomposition
// {"coeffs": [l0, l1], "basis_a": [v0, v1], "basis_b": [v0, v1]}.

#include <string>
#include <vector>

#include <json.hpp>

#include "orthoschmidt/orthoschmidt.hpp"

namespace orthoschmidt::io {

using nlohmann::json;

/// Raised for malformed JSON input; the CLI maps it to a usage error.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json to_json(Complex z);
json to_json(const QubitVector& v);
json to_json(const TwoQubitState& s);
json to_json(const SchmidtDecomposition& d);
json to_json(const OrthoSet& set);
json to_json(const VerificationReport& r);
json to_json(const Eigen::MatrixXcd& m);

std::string branch_name(SchmidtBranch b);

/// Accepts [re, im] or a bare real number.
Complex complex_from_json(const json& j, const std::string& what);
QubitVector qubit_from_json(const json& j, const std::string& what);
/// Raw amplitudes; no normalization.
TwoQubitState state_from_json(const json& j, const std::string& what = "state");
/// An array of states, or an object carrying one under "states".
std::vector<TwoQubitState> set_from_json(const json& j);
double real_from_json(const json& j, const std::string& what);

/// Compact single-line dump; doubles print in shortest round-trip form.
std::string dump(const json& j);

}  // namespace orthoschmidt::io
