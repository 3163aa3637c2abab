// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace rankdiv {

struct CorpusRecord {
  std::string id;
  std::int64_t timestamp = 0;  // UTC seconds since epoch
  double latitude = 0.0;
  double longitude = 0.0;
  std::string text;  // NFC-normalized

  bool operator==(const CorpusRecord&) const = default;
};

struct StudyWindow {
  std::int64_t origin = 0;        // inclusive
  std::int64_t span_seconds = 0;  // window is [origin, origin + span)

  bool contains(std::int64_t ts) const {
    return ts >= origin && ts < origin + span_seconds;
  }
  double span_hours() const { return static_cast<double>(span_seconds) / 3600.0; }
};

struct ParseError {
  enum class Kind { Syntax, MissingField, CoordinateRange, WindowRange, EmptyText };
  Kind kind;
  std::string message;
  std::size_t line_number = 0;
};

using ParseResult = std::variant<CorpusRecord, ParseError>;

// One line of the line-delimited JSON input format
// {"id":...,"ts":...,"lat":...,"lon":...,"text":...}.
ParseResult parse_record(std::string_view line, const StudyWindow& window);

// Inverse of parse_record on valid records (field-exact round trip).
std::string serialize_record(const CorpusRecord& rec);

// "YYYY-MM-DDTHH:MM:SS[Z]" or "YYYY-MM-DD"; UTC.
std::optional<std::int64_t> parse_iso8601(std::string_view s);
std::string format_iso8601(std::int64_t ts);

// Streaming line reader: holds one line at a time, counts and skips bad
// lines. `on_error` may be null.
class JsonlReader {
 public:
  JsonlReader(std::istream& in, StudyWindow window,
              std::function<void(const ParseError&)> on_error = nullptr);

  std::optional<CorpusRecord> next();

  std::size_t lines_read() const { return lines_read_; }
  std::size_t lines_skipped() const { return lines_skipped_; }

 private:
  std::istream& in_;
  StudyWindow window_;
  std::function<void(const ParseError&)> on_error_;
  std::size_t lines_read_ = 0;
  std::size_t lines_skipped_ = 0;
};

}  // namespace rankdiv
