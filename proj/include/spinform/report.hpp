#pragma once

#include <json.hpp>

#include "spinform/extendibility.hpp"
#include "spinform/quadform.hpp"

namespace spinform {

// Machine-readable report fragments. Objects keep nlohmann's sorted key
// order and contain no timestamps, so identical inputs render
// byte-identical reports.
nlohmann::json form_to_json(const QuadraticForm& q);
nlohmann::json class_to_json(const HomologyClass& c);
nlohmann::json fact_to_json(const ExtendibilityFact& f);

nlohmann::json report_skeleton(const std::string& command, const std::string& input_digest);

}  // namespace spinform
