// Copyright 2026 The largesieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsieve/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace lsieve {
namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(x) ? format_double(x) : "null";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return json_string(x);
        } else {
          return std::to_string(x);
        }
      },
      v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string csv_value(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          if (std::isnan(x)) return "nan";
          if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
          return format_double(x);
        } else if constexpr (std::is_same_v<T, std::string>) {
          return csv_field(x);
        } else {
          return std::to_string(x);
        }
      },
      v);
}

class JsonWriter final : public ReportWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}
  void config(const Record& r) override { out_ << to_json_line(r, "config") << '\n'; }
  void record(const Record& r) override { out_ << to_json_line(r, "record") << '\n'; }
  void summary(const Record& r) override { out_ << to_json_line(r, "summary") << '\n'; }

 private:
  std::ostream& out_;
};

class CsvWriter final : public ReportWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void config(const Record& r) override { out_ << "# config " << to_json_line(r, "config") << '\n'; }
  void record(const Record& r) override {
    if (!header_written_) {
      bool first = true;
      for (const auto& [key, value] : r.fields()) {
        out_ << (first ? "" : ",") << csv_field(key);
        first = false;
      }
      out_ << '\n';
      header_written_ = true;
    }
    bool first = true;
    for (const auto& [key, value] : r.fields()) {
      out_ << (first ? "" : ",") << csv_value(value);
      first = false;
    }
    out_ << '\n';
  }
  void summary(const Record& r) override { out_ << "# summary " << to_json_line(r, "summary") << '\n'; }

 private:
  std::ostream& out_;
  bool header_written_ = false;
};

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json_line(const Record& r, const std::string& type) {
  std::string line = "{\"type\":" + json_string(type);
  for (const auto& [key, value] : r.fields()) {
    line += ',';
    line += json_string(key);
    line += ':';
    line += json_value(value);
  }
  return line + "}";
}

std::unique_ptr<ReportWriter> make_writer(Format format, std::ostream& out) {
  if (format == Format::kCsv) return std::make_unique<CsvWriter>(out);
  return std::make_unique<JsonWriter>(out);
}

}  // namespace lsieve
