#include "nclab/report.hpp"

#include "json.hpp"

namespace nclab {

using nlohmann::json;

bool all_passed(const std::vector<Assertion>& assertions) {
  for (const auto& a : assertions)
    if (!a.passed) return false;
  return true;
}

std::string make_report_json(const std::string& config_echo, const std::string& results,
                             const std::vector<Assertion>& assertions) {
  json rep;
  rep["schema_version"] = kReportSchemaVersion;
  rep["config_echo"] = json::parse(config_echo);
  rep["results"] = json::parse(results);
  rep["assertions"] = json::array();
  for (const auto& a : assertions)
    rep["assertions"].push_back({{"name", a.name},
                                 {"passed", a.passed},
                                 {"value", a.value},
                                 {"expected", a.expected},
                                 {"tolerance", a.tolerance}});
  return rep.dump(2) + "\n";
}

std::string lip_report_json(const std::string& model, const std::string& element, int horizon,
                            const std::vector<double>& norms, double sup,
                            const std::vector<double>& envelope, bool bounded) {
  json rep;
  rep["model"] = model;
  rep["element"] = element;
  rep["horizon"] = horizon;
  rep["norms"] = norms;
  rep["sup"] = sup;
  rep["envelope"] = envelope;
  rep["bounded"] = bounded;
  return rep.dump(2) + "\n";
}

}  // namespace nclab
