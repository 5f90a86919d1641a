#pragma once

#include <string>
#include <vector>

namespace nclab {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

struct Assertion {
  std::string name;
  bool passed = false;
  double value = 0;
  double expected = 0;
  double tolerance = 0;
};

bool all_passed(const std::vector<Assertion>& assertions);

// {schema_version, config_echo, results, assertions: [...]}; config_echo and
// results are pre-serialized JSON values.
std::string make_report_json(const std::string& config_echo, const std::string& results,
                             const std::vector<Assertion>& assertions);

std::string lip_report_json(const std::string& model, const std::string& element, int horizon,
                            const std::vector<double>& norms, double sup,
                            const std::vector<double>& envelope, bool bounded);

}  // namespace nclab
