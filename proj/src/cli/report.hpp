#ifndef ORBITCAT_CLI_REPORT_HPP
#define ORBITCAT_CLI_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitcat/endo.hpp"
#include "orbitcat/orbit.hpp"
#include "orbitcat/tilting.hpp"

namespace orbitcat::cli
{

using Json = nlohmann::ordered_json;

Json ar_quiver_json(DerivedModel const &model);
std::string ar_quiver_dot(DerivedModel const &model);
std::string ar_quiver_text(DerivedModel const &model);

Json graded_json(GradedHom const &g);
Json object_set_json(OrbitCategory const &c, ObjectSet const &s);
std::string object_set_text(OrbitCategory const &c, ObjectSet const &s);

Json gabriel_json(GabrielQuiver const &g);
std::string gabriel_dot(GabrielQuiver const &g, std::string const &name);

enum class Status { Pass, Fail, Skipped };

struct CheckResult
{
  std::string name;
  Status status = Status::Skipped;
  std::string summary;
  std::vector<std::string> witnesses;
  Json details = Json::object();
  double wall_ms = 0;
};

struct VerifyReport
{
  std::vector<CheckResult> checks;
  bool timing = false;

  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

char const *to_string(Status s);

} // namespace orbitcat::cli

#endif // ORBITCAT_CLI_REPORT_HPP
