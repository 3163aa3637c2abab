// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#include "rankdiv/record.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <string>

#include <nlohmann/json.hpp>

#include "rankdiv/unicode.hpp"

namespace rankdiv {

namespace {

ParseError err(ParseError::Kind kind, std::string msg) {
  return ParseError{kind, std::move(msg), 0};
}

}  // namespace

ParseResult parse_record(std::string_view line, const StudyWindow& window) {
  const auto j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object())
    return err(ParseError::Kind::Syntax, "not a JSON object");

  for (const char* field : {"id", "ts", "lat", "lon", "text"})
    if (!j.contains(field))
      return err(ParseError::Kind::MissingField, std::string("missing field `") + field + "`");

  if (!j["id"].is_string() || !j["text"].is_string() ||
      !j["ts"].is_number_integer() || !j["lat"].is_number() || !j["lon"].is_number())
    return err(ParseError::Kind::Syntax, "field with wrong type");

  CorpusRecord rec;
  rec.id = j["id"].get<std::string>();
  rec.timestamp = j["ts"].get<std::int64_t>();
  rec.latitude = j["lat"].get<double>();
  rec.longitude = j["lon"].get<double>();

  if (!std::isfinite(rec.latitude) || rec.latitude < -90.0 || rec.latitude > 90.0)
    return err(ParseError::Kind::CoordinateRange,
               "latitude out of range: " + std::to_string(rec.latitude));
  if (!std::isfinite(rec.longitude) || rec.longitude < -180.0 || rec.longitude > 180.0)
    return err(ParseError::Kind::CoordinateRange,
               "longitude out of range: " + std::to_string(rec.longitude));
  if (rec.latitude == 0.0 && rec.longitude == 0.0)
    return err(ParseError::Kind::CoordinateRange, "missing/zero coordinates");
  if (!window.contains(rec.timestamp))
    return err(ParseError::Kind::WindowRange,
               "timestamp " + std::to_string(rec.timestamp) + " outside study window");

  rec.text = uni::normalize_nfc(j["text"].get<std::string>());
  bool has_content = false;
  for (const auto cp : uni::decode_utf8(rec.text))
    if (!uni::is_whitespace(cp)) {
      has_content = true;
      break;
    }
  if (!has_content) return err(ParseError::Kind::EmptyText, "empty text");
  return rec;
}

std::string serialize_record(const CorpusRecord& rec) {
  nlohmann::ordered_json j;
  j["id"] = rec.id;
  j["ts"] = rec.timestamp;
  j["lat"] = rec.latitude;
  j["lon"] = rec.longitude;
  j["text"] = rec.text;
  return j.dump();
}

std::optional<std::int64_t> parse_iso8601(std::string_view s) {
  std::tm tm{};
  int y, mo, d, h = 0, mi = 0, sec = 0;
  const std::string str(s);
  int n = std::sscanf(str.c_str(), "%d-%d-%dT%d:%d:%d", &y, &mo, &d, &h, &mi, &sec);
  if (n != 6) {
    h = mi = sec = 0;
    n = std::sscanf(str.c_str(), "%d-%d-%d", &y, &mo, &d);
    if (n != 3) return std::nullopt;
  }
  if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || sec > 60)
    return std::nullopt;
  tm.tm_year = y - 1900;
  tm.tm_mon = mo - 1;
  tm.tm_mday = d;
  tm.tm_hour = h;
  tm.tm_min = mi;
  tm.tm_sec = sec;
  return static_cast<std::int64_t>(timegm(&tm));
}

std::string format_iso8601(std::int64_t ts) {
  std::time_t t = static_cast<std::time_t>(ts);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
  return buf;
}

JsonlReader::JsonlReader(std::istream& in, StudyWindow window,
                         std::function<void(const ParseError&)> on_error)
    : in_(in), window_(window), on_error_(std::move(on_error)) {}

std::optional<CorpusRecord> JsonlReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++lines_read_;
    if (line.empty()) continue;
    auto result = parse_record(line, window_);
    if (auto* rec = std::get_if<CorpusRecord>(&result)) return std::move(*rec);
    ++lines_skipped_;
    if (on_error_) {
      auto& e = std::get<ParseError>(result);
      e.line_number = lines_read_;
      on_error_(e);
    }
  }
  return std::nullopt;
}

}  // namespace rankdiv
