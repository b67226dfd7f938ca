#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "wsgap/gaps.hpp"
#include "wsgap/lattice.hpp"
#include "wsgap/verify.hpp"

// Stable serialization of command results. Every result is wrapped in the
// same envelope:
//
//   {"schema": "wsgap/1", "tool_version": ..., "command": ...,
//    "params": {a, b, m, genus, field_size} | null, "payload": {...},
//    "timing_ms": ...}
//
// CSV and text renderings are derived from the JSON form, so all three carry
// the same information.
namespace wsgap::output {

inline constexpr std::string_view kSchema = "wsgap/1";

enum class Format { json, csv, text };

std::optional<Format> parse_format(std::string_view name) noexcept;
const char* tool_version() noexcept;

using Json = nlohmann::json;

Json to_json(const IntTuple& t);
Json to_json(const std::vector<IntTuple>& ts);  // sorted copy
Json to_json(const CurveParams& params);
Json to_json(const Box& box);
Json to_json(const ConformanceReport& report);

struct Envelope {
  std::string command;
  std::optional<CurveParams> params;
  Json payload = Json::object();
  double timing_ms = 0.0;
};

Json to_json(const Envelope& env, bool include_timing = true);

// Newline-terminated rendering. With include_timing = false the output is a
// pure function of the inputs.
std::string render(const Envelope& env, Format format, bool include_timing = true);

// Structural check of a parsed envelope; returns the first problem found.
std::optional<std::string> validate_envelope(const Json& doc);

// "1;2;3", the CSV form of a tuple.
std::string csv_tuple(const Json& tuple);

}  // namespace wsgap::output
