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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "largesieve/bounds.hpp"
#include "largesieve/coeffs.hpp"
#include "lsieve/report.hpp"

namespace lsieve {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArguments = 2;  // unknown flag, malformed value
inline constexpr int kExitNumeric = 3;       // parameter rejected by a precondition, numeric failure
inline constexpr int kExitIo = 4;            // output path cannot be opened or written

// Relative --out paths are resolved against this directory when it is set.
inline constexpr const char* kOutputDirEnv = "LSIEVE_OUTPUT_DIR";

enum class Command { kMoments, kFarey, kLemma, kTheorem, kSweep, kSpectrum, kUpper };

std::string_view to_string(Command c);

// Fully resolved configuration: every field holds the value the run uses,
// defaults included. Fields a command does not read are ignored.
struct RunConfig {
  Command command = Command::kLemma;
  Format format = Format::kJson;
  std::string out_path;  // empty = standard output
  std::uint64_t seed = 1;
  std::size_t threads = 0;

  std::size_t n = 64;
  std::int64_t q_max = 256;
  double a_param = 4.0;          // lemma
  std::string a_rational;        // farey: exact A for m(Q, A); empty = skip
  std::optional<double> u;       // farey: point for R(u)
  double epsilon = 0.01;
  std::size_t trials = 1;
  std::size_t grid_size = 0;     // 0 = default_grid_size(n)
  std::optional<double> x;       // M(x) level, where the command supports it
  largesieve::EnsembleKind ensemble = largesieve::EnsembleKind::kRademacher;
  std::vector<largesieve::Complex> coeffs;  // fixed coefficients, if given
  std::vector<std::size_t> n_list = {64, 256, 1024};
  largesieve::QRule rule;
};

// Parses "1,-1,0.5,3+4i,-2i" into coefficients. Throws InvalidParameter.
std::vector<largesieve::Complex> parse_coefficients(const std::string& text);

// The resolved configuration as the report's first record.
Record config_record(const RunConfig& cfg);

// Executes the command and writes the full report. Library precondition
// failures propagate as largesieve::DomainError.
void run(const RunConfig& cfg, std::ostream& out);

// Argument parsing, output-file handling, and exit-status mapping. `out`
// receives the report when no --out is given; diagnostics go to `err` as a
// single line.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lsieve
