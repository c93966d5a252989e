#include "conesphere/report.hpp"

#include "conesphere/surface.hpp"

namespace conesphere {

namespace {

const char* plain_gb_str(PlainGaussBonnet v) {
  switch (v) {
    case PlainGaussBonnet::Holds: return "holds";
    case PlainGaussBonnet::Fails: return "fails";
    case PlainGaussBonnet::Undecidable: return "undecidable";
  }
  return "?";
}

PlainGaussBonnet plain_gb_from(const std::string& s) {
  if (s == "holds") return PlainGaussBonnet::Holds;
  if (s == "fails") return PlainGaussBonnet::Fails;
  return PlainGaussBonnet::Undecidable;
}

DecisionPath path_from(const std::string& s) {
  if (s == "literal") return DecisionPath::Literal;
  if (s == "strata-reduction") return DecisionPath::StrataReduction;
  return DecisionPath::Merged;
}

}  // namespace

nlohmann::json surface_to_json_obj(const JenkinsStrebelSurface& s) {
  return nlohmann::json::parse(surface_to_json(s));
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json doc;
  doc["realizable"] = v.realizable;
  doc["path"] = decision_path_str(v.path);
  doc["plain_gauss_bonnet"] = plain_gb_str(v.plain_gb);
  doc["certificates"] = nlohmann::json::array();
  for (const Certificate& c : v.certificates)
    doc["certificates"].push_back({{"id", c.id}, {"detail", c.detail}});
  doc["notes"] = v.notes;
  if (v.witness) doc["witness"] = surface_to_json_obj(*v.witness);
  return doc;
}

Verdict verdict_from_json(const nlohmann::json& doc) {
  Verdict v;
  v.realizable = doc.at("realizable").get<bool>();
  v.path = path_from(doc.at("path").get<std::string>());
  v.plain_gb = plain_gb_from(doc.at("plain_gauss_bonnet").get<std::string>());
  for (const auto& c : doc.at("certificates"))
    v.certificates.push_back({c.at("id").get<std::string>(), c.at("detail").get<std::string>()});
  for (const auto& n : doc.at("notes")) v.notes.push_back(n.get<std::string>());
  if (doc.contains("witness")) v.witness = surface_from_json(doc["witness"].dump());
  return v;
}

nlohmann::json distribution_to_json(const AngleDistribution& dist) {
  nlohmann::json doc;
  doc["genus"] = dist.genus;
  doc["turns"] = nlohmann::json::array();
  for (const Angle& a : dist.angles) doc["turns"].push_back(a.str());
  return doc;
}

}  // namespace conesphere
