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

#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace lsieve {

using Value = std::variant<bool, std::int64_t, std::uint64_t, double, std::string>;

// An ordered list of named scalar fields. Field order is part of the output
// format.
class Record {
 public:
  template <typename T>
  Record& add(std::string key, const T& value) {
    fields_.emplace_back(std::move(key), to_value(value));
    return *this;
  }

  const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

 private:
  template <typename T>
  static Value to_value(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v;
    } else if constexpr (std::is_integral_v<T> && std::is_signed_v<T>) {
      return static_cast<std::int64_t>(v);
    } else if constexpr (std::is_integral_v<T>) {
      return static_cast<std::uint64_t>(v);
    } else if constexpr (std::is_floating_point_v<T>) {
      return static_cast<double>(v);
    } else {
      return std::string(v);
    }
  }

  std::vector<std::pair<std::string, Value>> fields_;
};

enum class Format { kJson, kCsv };

// Report stream: one config record, then data records, then an optional
// summary.
//
// json: one object per line; each carries "type" = "config" | "record" |
//       "summary" as its first field.
// csv:  "# config {json}" line, a header row taken from the first data
//       record's keys, one row per record, and "# summary {json}" last.
//
// Doubles are printed with 17 significant digits; non-finite values become
// null (json) or nan / inf / -inf (csv). Lines end in '\n'.
class ReportWriter {
 public:
  virtual ~ReportWriter() = default;
  virtual void config(const Record& r) = 0;
  virtual void record(const Record& r) = 0;
  virtual void summary(const Record& r) = 0;
};

std::unique_ptr<ReportWriter> make_writer(Format format, std::ostream& out);

std::string format_double(double x);
std::string to_json_line(const Record& r, const std::string& type);

}  // namespace lsieve
