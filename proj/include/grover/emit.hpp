#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace grover {

/// Shortest round-trip decimal for a double (%.17g trimmed by strtod check is
/// overkill here; plain %.17g always round-trips and keeps output stable).
std::string fmt17(double x);

/// One CSV row; fields are emitted verbatim (numbers should go through fmt17).
std::string csv_row(const std::vector<std::string>& fields);

/// Everything needed to reproduce a run: subcommand, parameters, grid and
/// tolerance settings, tool version. The wall-clock timestamp is only added to
/// sidecar files, never to primary outputs, so those stay byte-deterministic.
struct RunManifest {
  std::string subcommand;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json settings = nlohmann::json::object();
  std::vector<std::string> assumptions;

  nlohmann::json to_json(bool with_timestamp) const;
};

/// "YYYY-MM-DDTHH:MM:SSZ" (UTC).
std::string utc_timestamp();

/// Store an angle as both radians and multiples of pi under "<key>_rad" /
/// "<key>_pi".
void put_angle(nlohmann::json& obj, const std::string& key, double radians);

}  // namespace grover
