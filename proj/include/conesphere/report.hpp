#pragma once

#include "conesphere/classifier.hpp"

#include "json.hpp"

namespace conesphere {

// Structured-report encoding. verdict_from_json(verdict_to_json(v)) == v.
nlohmann::json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const nlohmann::json& doc);

nlohmann::json surface_to_json_obj(const JenkinsStrebelSurface& s);

nlohmann::json distribution_to_json(const AngleDistribution& dist);

}  // namespace conesphere
