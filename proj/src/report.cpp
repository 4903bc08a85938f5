#include "spinform/report.hpp"

#include "spinform/version.hpp"

namespace spinform {

using nlohmann::json;

json form_to_json(const QuadraticForm& q) {
  json j;
  j["rank"] = q.rank();
  j["basis_values"] = q.basis_values.to_string();
  j["basis_labels"] = q.form.basis_labels;
  return j;
}

json class_to_json(const HomologyClass& c) {
  json coords = json::array();
  for (int i = 0; i < c.coords.size(); ++i) coords.push_back(c.coords[i]);
  return coords;
}

json fact_to_json(const ExtendibilityFact& f) {
  json j;
  j["curve"] = f.curve;
  j["class"] = class_to_json(f.cls);
  j["status"] = status_name(f.status);
  j["rationale"] = rationale_name(f.rationale);
  return j;
}

json report_skeleton(const std::string& command, const std::string& input_digest) {
  json j;
  j["command"] = command;
  j["toolkit_version"] = kVersion;
  if (!input_digest.empty()) j["input_digest"] = input_digest;
  return j;
}

}  // namespace spinform
