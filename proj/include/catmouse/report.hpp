#pragma once

#include <string>

#include "json.hpp"

namespace catmouse {

using Json = nlohmann::ordered_json;

struct InputSummary {
  std::string source;
  std::size_t vertices = 0;
  std::size_t edges = 0;

  friend bool operator==(const InputSummary&, const InputSummary&) = default;
};

/// One CLI invocation: what ran, on what, what came out, and how long it took.
struct RunReport {
  std::string command;
  InputSummary input;
  Json result = Json::object();
  double elapsed_ms = 0.0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json to_json(const RunReport& report);
/// Throws nlohmann::json::exception on malformed input.
RunReport report_from_json(const Json& j);

/// Text rendering of the same payload, one "key: value" line per result field.
std::string render_human(const RunReport& report);

}  // namespace catmouse
