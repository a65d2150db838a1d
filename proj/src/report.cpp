#include "catmouse/report.hpp"

#include <algorithm>
#include <sstream>

namespace catmouse {

Json to_json(const RunReport& report) {
  Json j;
  j["command"] = report.command;
  j["input"] = {{"source", report.input.source}, {"vertices", report.input.vertices}, {"edges", report.input.edges}};
  j["result"] = report.result;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

RunReport report_from_json(const Json& j) {
  RunReport report;
  report.command = j.at("command").get<std::string>();
  const auto& input = j.at("input");
  report.input.source = input.at("source").get<std::string>();
  report.input.vertices = input.at("vertices").get<std::size_t>();
  report.input.edges = input.at("edges").get<std::size_t>();
  report.result = j.at("result");
  report.elapsed_ms = j.at("elapsed_ms").get<double>();
  return report;
}

namespace {

std::string scalar_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string value_text(const Json& value) {
  if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_primitive(); })) {
    std::string out;
    for (const auto& e : value) {
      if (!out.empty()) out += ' ';
      out += scalar_text(e);
    }
    return out;
  }
  if (value.is_primitive()) return scalar_text(value);
  return value.dump();
}

}  // namespace

std::string render_human(const RunReport& report) {
  std::ostringstream out;
  if (report.result.is_object()) {
    for (const auto& [key, value] : report.result.items()) {
      if (key == "summary") {
        out << value_text(value) << '\n';
        continue;
      }
      if (value.is_string() && value.get<std::string>().find('\n') != std::string::npos) {
        out << key << ":\n" << value.get<std::string>();
        continue;
      }
      out << key << ": " << value_text(value) << '\n';
    }
  } else {
    out << value_text(report.result) << '\n';
  }
  out << "(" << report.command << " on " << report.input.source << ", " << report.input.vertices << " vertices, "
      << report.input.edges << " edges, " << report.elapsed_ms << " ms)\n";
  return out.str();
}

}  // namespace catmouse
