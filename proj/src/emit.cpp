#include "grover/emit.hpp"

#include <cstdio>
#include <ctime>

#include "grover/angles.hpp"
#include "grover/version.hpp"

namespace grover {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

nlohmann::json RunManifest::to_json(bool with_timestamp) const {
  nlohmann::json j;
  j["tool"] = k_tool_name;
  j["version"] = k_version;
  j["schema_version"] = k_schema_version;
  j["subcommand"] = subcommand;
  j["params"] = params;
  j["settings"] = settings;
  if (!assumptions.empty()) j["assumptions"] = assumptions;
  if (with_timestamp) j["timestamp_utc"] = utc_timestamp();
  return j;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void put_angle(nlohmann::json& obj, const std::string& key, double radians) {
  obj[key + "_rad"] = radians;
  obj[key + "_pi"] = radians / k_pi;
}

}  // namespace grover
