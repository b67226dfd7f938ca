#include "wsgap/output.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wsgap::output {
namespace {

bool is_tuple(const Json& j) {
  return j.is_array() && !j.empty() &&
         std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_number_integer(); });
}

bool is_tuple_list(const Json& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), is_tuple);
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string text_tuple(const Json& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? "," : "") + tuple[i].dump();
  return s + ")";
}

// Walks the document in key order and emits (section, tuple, value) rows.
template <class Emit>
void flatten(const std::string& section, const Json& j, Emit& emit) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(section.empty() ? key : section + "." + key, value, emit);
    }
  } else if (is_tuple_list(j)) {
    for (const auto& t : j) emit(section, &t, nullptr);
  } else if (is_tuple(j)) {
    emit(section, &j, nullptr);
  } else if (j.is_array()) {
    if (j.empty()) emit(section, nullptr, nullptr);
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (j[i].is_structured()) {
        flatten(section + "[" + std::to_string(i) + "]", j[i], emit);
      } else {
        emit(section, nullptr, &j[i]);
      }
    }
  } else {
    emit(section, nullptr, &j);
  }
}

// Pretty printer that keeps arrays of scalars (tuples) on one line.
void write_json(std::ostream& os, const Json& j, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_object() && !j.empty()) {
    os << "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      os << pad << Json(key).dump() << ": ";
      write_json(os, value, depth + 1);
      os << (++i < j.size() ? ",\n" : "\n");
    }
    os << close_pad << '}';
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); })) {
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      os << pad;
      write_json(os, j[i], depth + 1);
      os << (i + 1 < j.size() ? ",\n" : "\n");
    }
    os << close_pad << ']';
  } else if (j.is_array()) {
    os << '[';
    for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << j[i].dump();
    os << ']';
  } else {
    os << j.dump();
  }
}

Json check_to_json(const CheckResult& c) {
  return Json{{"name", c.name},
              {"passed", c.passed},
              {"detail", c.detail},
              {"missing", to_json(c.missing)},
              {"unexpected", to_json(c.unexpected)},
              {"wall_ms", c.wall_ms}};
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) noexcept {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  return std::nullopt;
}

const char* tool_version() noexcept { return WSGAP_VERSION; }

Json to_json(const IntTuple& t) {
  Json out = Json::array();
  for (auto v : t) out.push_back(v);
  return out;
}

Json to_json(const std::vector<IntTuple>& ts) {
  std::vector<IntTuple> sorted = ts;
  std::sort(sorted.begin(), sorted.end());
  Json out = Json::array();
  for (const auto& t : sorted) out.push_back(to_json(t));
  return out;
}

Json to_json(const CurveParams& params) {
  Json out{{"a", params.a()},
           {"b", params.b()},
           {"m", params.m()},
           {"genus", params.genus()},
           {"field_size", nullptr}};
  if (params.field_size()) out["field_size"] = *params.field_size();
  if (!params.warnings().empty()) out["warnings"] = params.warnings();
  return out;
}

Json to_json(const Box& box) { return Json{{"lo", to_json(box.lo)}, {"hi", to_json(box.hi)}}; }

Json to_json(const ConformanceReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(check_to_json(c));
  return Json{{"checks", checks},
              {"notes", report.notes},
              {"passed", report.all_passed()},
              {"failures", report.failures()},
              {"wall_ms", report.wall_ms}};
}

Json to_json(const Envelope& env, bool include_timing) {
  Json out{{"schema", kSchema},
           {"tool_version", tool_version()},
           {"command", env.command},
           {"params", env.params ? to_json(*env.params) : Json(nullptr)},
           {"payload", env.payload}};
  // Rounded so the printed value does not depend on float formatting quirks.
  out["timing_ms"] = include_timing ? std::round(env.timing_ms * 1000.0) / 1000.0 : 0.0;
  return out;
}

std::string render(const Envelope& env, Format format, bool include_timing) {
  const Json doc = to_json(env, include_timing);
  std::ostringstream os;
  switch (format) {
    case Format::json:
      write_json(os, doc, 0);
      os << '\n';
      break;
    case Format::csv: {
      os << "section,tuple,value\n";
      auto emit = [&](const std::string& section, const Json* tuple, const Json* value) {
        os << csv_field(section) << ',' << (tuple ? csv_tuple(*tuple) : "") << ','
           << (value ? csv_field(scalar_text(*value)) : "") << '\n';
      };
      flatten("", doc, emit);
      break;
    }
    case Format::text: {
      auto emit = [&](const std::string& section, const Json* tuple, const Json* value) {
        os << section << ": ";
        if (tuple) os << text_tuple(*tuple);
        if (value) os << scalar_text(*value);
        os << '\n';
      };
      flatten("", doc, emit);
      break;
    }
  }
  return os.str();
}

std::optional<std::string> validate_envelope(const Json& doc) {
  if (!doc.is_object()) return "envelope is not an object";
  for (const char* key : {"schema", "tool_version", "command", "params", "payload", "timing_ms"}) {
    if (!doc.contains(key)) return std::string("missing key ") + key;
  }
  if (doc["schema"] != kSchema) return "unknown schema " + doc["schema"].dump();
  if (!doc["tool_version"].is_string() || !doc["command"].is_string()) {
    return "tool_version and command must be strings";
  }
  if (!doc["timing_ms"].is_number()) return "timing_ms must be a number";
  if (!doc["payload"].is_object()) return "payload must be an object";
  const Json& p = doc["params"];
  if (!p.is_null()) {
    for (const char* key : {"a", "b", "m", "genus"}) {
      if (!p.contains(key) || !p[key].is_number_integer()) return std::string("params.") + key + " must be an integer";
    }
    if (!p.contains("field_size") || !(p["field_size"].is_null() || p["field_size"].is_number_integer())) {
      return "params.field_size must be an integer or null";
    }
  }
  // Every tuple list in the payload must be sorted and duplicate-free.
  std::optional<std::string> problem;
  auto walk = [&](auto& self, const Json& j, const std::string& where) -> void {
    if (problem) return;
    if (is_tuple_list(j)) {
      for (std::size_t i = 1; i < j.size(); ++i) {
        if (!(j[i - 1].get<std::vector<std::int64_t>>() < j[i].get<std::vector<std::int64_t>>())) {
          problem = where + " is not strictly sorted";
          return;
        }
      }
    } else if (j.is_structured()) {
      for (const auto& [key, value] : j.items()) self(self, value, where + "." + key);
    }
  };
  walk(walk, doc["payload"], "payload");
  return problem;
}

std::string csv_tuple(const Json& tuple) {
  std::string s;
  for (std::size_t i = 0; i < tuple.size(); ++i) s += (i ? ";" : "") + tuple[i].dump();
  return s;
}

}  // namespace wsgap::output
