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

#include "lsieve/run.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "largesieve/error.hpp"
#include "largesieve/expsum.hpp"
#include "largesieve/farey.hpp"

namespace lsieve {

namespace ls = largesieve;

namespace {

constexpr const char* kVersion = "0.1.0";

std::size_t resolved_grid(const RunConfig& cfg) {
  return cfg.grid_size == 0 ? ls::default_grid_size(cfg.n) : cfg.grid_size;
}

bool fixed(const RunConfig& cfg) { return cfg.ensemble == ls::EnsembleKind::kFixed; }

// Trial t uses trial_seed(seed, t), the same stream the library's Monte
// Carlo drivers use.
ls::CoefficientVector vector_for(const RunConfig& cfg, std::size_t trial) {
  if (fixed(cfg)) {
    if (cfg.coeffs.empty()) {
      throw ls::InvalidParameter("ensemble 'fixed' needs --coeffs");
    }
    return ls::make_ensemble({ls::EnsembleKind::kFixed, cfg.n, 0, cfg.coeffs});
  }
  return ls::make_ensemble({cfg.ensemble, cfg.n, ls::trial_seed(cfg.seed, trial), {}});
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

std::string coeff_text(const std::vector<ls::Complex>& coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ',';
    s += format_double(coeffs[i].real());
    if (coeffs[i].imag() != 0.0) {
      s += (coeffs[i].imag() < 0 ? "" : "+") + format_double(coeffs[i].imag()) + "i";
    }
  }
  return s;
}

void run_moments(const RunConfig& cfg, ReportWriter& w) {
  if (fixed(cfg)) {
    const auto v = vector_for(cfg, 0);
    Record r;
    r.add("trial", std::size_t{0}).add("norm_sq", v.norm_sq()).add("fourth_moment", ls::fourth_moment_exact(v));
    if (cfg.x) {
      const auto m = ls::m_functional_bounds(ls::spectrum(v, resolved_grid(cfg)), *cfg.x);
      r.add("m_lower", m.lower).add("m_upper", m.upper);
    }
    w.record(r);
    return;
  }

  const auto fm = ls::fourth_moment_ensemble({cfg.n, cfg.trials, cfg.seed, cfg.ensemble, cfg.threads});
  std::optional<ls::ExpectationReport> em;
  if (cfg.x) {
    em = ls::expected_M_check(
        {cfg.n, *cfg.x, cfg.trials, cfg.seed, resolved_grid(cfg), cfg.ensemble, cfg.threads});
  }
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Record r;
    r.add("trial", t).add("fourth_moment", fm.values[t]);
    if (em) r.add("m_lower", em->trials[t].lower).add("m_upper", em->trials[t].upper);
    w.record(r);
  }
  Record s;
  s.add("trials", cfg.trials)
      .add("mean_fourth_moment", fm.mean)
      .add("stderr_fourth_moment", fm.stderr_mean)
      .add("expected_fourth_moment", fm.expected)
      .add("z_score", fm.stderr_mean > 0 ? (fm.mean - fm.expected) / fm.stderr_mean : 0.0);
  if (em) {
    s.add("x", *cfg.x)
        .add("mean_m_lower", em->mean_lower)
        .add("stderr_m_lower", em->stderr_lower)
        .add("expectation_bound", em->expectation_bound)
        .add("mean_within_bound", em->mean_lower <= em->expectation_bound)
        .add("tail_fraction", em->tail_fraction)
        .add("tail_bound", em->tail_bound)
        .add("tail_within_bound", em->tail_fraction <= em->tail_bound);
  }
  w.summary(s);
}

void run_farey(const RunConfig& cfg, ReportWriter& w) {
  const auto fractions = ls::farey_fractions(cfg.q_max);
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    Record r;
    r.add("index", i)
        .add("a", fractions[i].a)
        .add("q", fractions[i].q)
        .add("fraction", std::to_string(fractions[i].a) + "/" + std::to_string(fractions[i].q))
        .add("value", fractions[i].value());
    w.record(r);
  }
  Record s;
  s.add("count", fractions.size());
  if (!cfg.a_rational.empty()) {
    const ls::Rational a = ls::parse_rational(cfg.a_rational);
    const auto m = ls::uncovered_set(cfg.q_max, a);
    const ls::Rational mu = ls::measure(m);
    s.add("uncovered_intervals", m.size())
        .add("uncovered_measure", ls::to_string(mu))
        .add("uncovered_measure_value", ls::to_double(mu))
        .add("inverse_a", ls::to_string(1 / a))
        .add("measure_within_bound", mu <= 1 / a);
    if (cfg.u) {
      const std::int64_t count = ls::count_R(ls::to_rational(*cfg.u), cfg.q_max, a);
      s.add("u", *cfg.u)
          .add("count_r", count)
          .add("count_r_bound", ls::to_double(2 * a + 1));
    }
  }
  if (cfg.u) {
    const auto best = ls::best_approximation(*cfg.u, cfg.q_max);
    s.add("best_approximation", std::to_string(best.a) + "/" + std::to_string(best.q));
  }
  w.summary(s);
}

void run_lemma(const RunConfig& cfg, ReportWriter& w) {
  const std::size_t grid = resolved_grid(cfg);
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto v = vector_for(cfg, t);
    const auto rep = ls::lemma_check(v, {cfg.n, cfg.q_max, cfg.a_param, grid});
    const std::size_t cs_grid =
        std::max(grid, ls::Dft::next_power_of_two(ls::kSSprimeOversampling * cfg.n));
    const double ssprime = ls::integral_SSprime(v, cs_grid);
    const double cs_bound = ls::cauchy_schwarz_bound(v);
    Record r;
    r.add("trial", t)
        .add("n", cfg.n)
        .add("q", cfg.q_max)
        .add("a", cfg.a_param)
        .add("delta", rep.delta)
        .add("delta_below_half", rep.delta_below_half)
        .add("grid", rep.grid_size)
        .add("norm_sq", v.norm_sq())
        .add("lhs", rep.lhs)
        .add("m_lower", rep.m_lower)
        .add("m_upper", rep.m_upper)
        .add("rhs_conservative", rep.rhs_conservative)
        .add("slack", rep.slack)
        .add("holds", rep.holds)
        .add("ssprime_integral", ssprime)
        .add("ssprime_bound", cs_bound)
        .add("cauchy_schwarz_holds", ssprime <= cs_bound * (1.0 + 1e-6))
        .add("upper_sieve_bound", ls::upper_sieve_bound(v, cfg.q_max));
    w.record(r);
  }
}

void run_theorem(const RunConfig& cfg, ReportWriter& w) {
  const auto rep = ls::theorem_monte_carlo(
      {cfg.n, cfg.q_max, cfg.epsilon, cfg.trials, cfg.seed, cfg.ensemble, cfg.threads});
  for (std::size_t t = 0; t < rep.trials.size(); ++t) {
    const auto& tr = rep.trials[t];
    Record r;
    r.add("trial", t)
        .add("lhs", tr.lhs)
        .add("norm_sq", tr.norm_sq)
        .add("threshold", tr.threshold)
        .add("success", tr.success);
    w.record(r);
  }
  const double q = static_cast<double>(cfg.q_max);
  Record s;
  s.add("trials", cfg.trials)
      .add("successes", rep.successes)
      .add("success_fraction", rep.success_fraction)
      .add("q_sq_over_n", q * q / static_cast<double>(cfg.n));
  w.summary(s);
}

void run_sweep(const RunConfig& cfg, ReportWriter& w) {
  ls::SweepConfig sc;
  sc.n_list = cfg.n_list;
  sc.rule = cfg.rule;
  sc.trials = cfg.trials;
  sc.seed = cfg.seed;
  sc.kind = cfg.ensemble;
  sc.threads = cfg.threads;
  const auto rep = ls::er_sweep(sc);
  bool increasing = true;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    if (i > 0 && !(row.mean_ratio > rep.rows[i - 1].mean_ratio)) increasing = false;
    const double q = static_cast<double>(row.q_max);
    const double n = static_cast<double>(row.n);
    Record r;
    r.add("n", row.n)
        .add("q", row.q_max)
        .add("trials", row.trials)
        .add("mean_ratio", row.mean_ratio)
        .add("stderr_ratio", row.stderr_ratio)
        .add("min_ratio", row.min_ratio)
        .add("max_ratio", row.max_ratio)
        .add("upper_sieve_ratio", (n + q * q) / n);
    w.record(r);
  }
  Record s;
  s.add("rows", rep.rows.size()).add("mean_ratio_increasing", increasing);
  w.summary(s);
}

void run_spectrum(const RunConfig& cfg, ReportWriter& w) {
  const auto v = vector_for(cfg, 0);
  const auto sg = ls::spectrum(v, resolved_grid(cfg));
  const double grid = static_cast<double>(sg.grid_size());
  for (std::size_t j = 0; j < sg.grid_size(); ++j) {
    Record r;
    r.add("j", j).add("u", static_cast<double>(j) / grid).add("value", sg.values()[j]);
    w.record(r);
  }
  Record s;
  s.add("grid", sg.grid_size())
      .add("mean", sg.mean())
      .add("norm_sq", v.norm_sq())
      .add("fourth_moment", ls::fourth_moment_exact(v));
  if (cfg.x) {
    const auto m = ls::m_functional_bounds(sg, *cfg.x);
    s.add("x", *cfg.x).add("m_lower", m.lower).add("m_upper", m.upper);
  }
  w.summary(s);
}

void run_upper(const RunConfig& cfg, ReportWriter& w) {
  const ls::FareyEvaluator evaluator(cfg.q_max);
  bool all = true;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    const auto v = vector_for(cfg, t);
    const double lhs = evaluator.sieve_sum(v);
    const double bound = ls::upper_sieve_bound(v, cfg.q_max);
    const bool holds = lhs <= bound * (1.0 + 1e-9);
    all = all && holds;
    Record r;
    r.add("trial", t).add("lhs", lhs).add("bound", bound).add("ratio", lhs / bound).add("holds", holds);
    w.record(r);
  }
  Record s;
  s.add("trials", cfg.trials).add("all_hold", all);
  w.summary(s);
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::kMoments:
      return "moments";
    case Command::kFarey:
      return "farey";
    case Command::kLemma:
      return "lemma";
    case Command::kTheorem:
      return "theorem";
    case Command::kSweep:
      return "sweep";
    case Command::kSpectrum:
      return "spectrum";
    case Command::kUpper:
      return "upper";
  }
  return "unknown";
}

std::vector<ls::Complex> parse_coefficients(const std::string& text) {
  auto parse_real = [&](std::string_view s) {
    double x = 0.0;
    const auto* first = s.data();
    const auto* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, x);
    if (first == last || ec != std::errc() || ptr != last) {
      throw ls::InvalidParameter("malformed coefficient '" + text + "'");
    }
    return x;
  };

  std::vector<ls::Complex> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw ls::InvalidParameter("empty coefficient in '" + text + "'");
    if (token.back() != 'i') {
      out.emplace_back(parse_real(token));
      continue;
    }
    const std::string_view body(token.data(), token.size() - 1);
    // Split "re+imi" at the last sign that does not follow an exponent marker.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) {
      const bool bare = body.empty() || body == "+" || body == "-";
      out.emplace_back(0.0, bare ? (body == "-" ? -1.0 : 1.0) : parse_real(body));
      continue;
    }
    const std::string_view im = body.substr(split);
    const double imag = (im == "+" || im == "-") ? (im == "-" ? -1.0 : 1.0) : parse_real(im);
    out.emplace_back(parse_real(body.substr(0, split)), imag);
  }
  if (out.empty()) throw ls::InvalidParameter("no coefficients given");
  return out;
}

Record config_record(const RunConfig& cfg) {
  Record r;
  r.add("command", std::string(to_string(cfg.command)))
      .add("version", kVersion)
      .add("format", cfg.format == Format::kCsv ? "csv" : "json")
      .add("seed", cfg.seed)
      .add("threads", cfg.threads);
  auto add_vector = [&] {
    r.add("ensemble", std::string(ls::to_string(cfg.ensemble))).add("n", cfg.n);
    if (fixed(cfg)) r.add("coeffs", coeff_text(cfg.coeffs));
  };
  switch (cfg.command) {
    case Command::kMoments:
      add_vector();
      r.add("trials", cfg.trials);
      if (cfg.x) r.add("x", *cfg.x).add("grid", resolved_grid(cfg));
      break;
    case Command::kFarey:
      r.add("q", cfg.q_max);
      if (!cfg.a_rational.empty()) r.add("a", ls::to_string(ls::parse_rational(cfg.a_rational)));
      if (cfg.u) r.add("u", *cfg.u);
      break;
    case Command::kLemma:
      add_vector();
      r.add("q", cfg.q_max).add("a", cfg.a_param).add("grid", resolved_grid(cfg)).add("trials", cfg.trials);
      break;
    case Command::kTheorem:
      add_vector();
      r.add("q", cfg.q_max).add("eps", cfg.epsilon).add("trials", cfg.trials);
      break;
    case Command::kSweep:
      r.add("ensemble", std::string(ls::to_string(cfg.ensemble)))
          .add("n_list", join(cfg.n_list))
          .add("rule", std::string(ls::to_string(cfg.rule.kind)))
          .add("c", cfg.rule.scale)
          .add("fixed_q", cfg.rule.fixed_q)
          .add("trials", cfg.trials);
      break;
    case Command::kSpectrum:
      add_vector();
      r.add("grid", resolved_grid(cfg));
      if (cfg.x) r.add("x", *cfg.x);
      break;
    case Command::kUpper:
      add_vector();
      r.add("q", cfg.q_max).add("trials", cfg.trials);
      break;
  }
  return r;
}

void run(const RunConfig& cfg, std::ostream& out) {
  auto writer = make_writer(cfg.format, out);
  writer->config(config_record(cfg));
  switch (cfg.command) {
    case Command::kMoments:
      run_moments(cfg, *writer);
      break;
    case Command::kFarey:
      run_farey(cfg, *writer);
      break;
    case Command::kLemma:
      run_lemma(cfg, *writer);
      break;
    case Command::kTheorem:
      run_theorem(cfg, *writer);
      break;
    case Command::kSweep:
      run_sweep(cfg, *writer);
      break;
    case Command::kSpectrum:
      run_spectrum(cfg, *writer);
      break;
    case Command::kUpper:
      run_upper(cfg, *writer);
      break;
  }
}

namespace {

// Options and per-command defaults for one subcommand.
struct SubcommandSpec {
  Command command;
  RunConfig cfg;
  CLI::App* app = nullptr;
  std::string format = "json";
  std::string ensemble = "rademacher";
  std::string coeffs;
  std::string rule = "sqrtlog";
  double x = 0.0;
  double u = 0.0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* x_opt = nullptr;
  CLI::Option* u_opt = nullptr;
};

void add_common(SubcommandSpec& s) {
  CLI::App& app = *s.app;
  app.add_option("--format", s.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", s.cfg.out_path,
                 std::string("Output file (default: standard output); relative paths resolve "
                             "against $") + kOutputDirEnv + " when set");
  app.add_option("--seed", s.cfg.seed, "Base seed; trial t uses splitmix(seed, t)")->capture_default_str();
  app.add_option("--threads", s.cfg.threads, "Worker threads, 0 = auto; output does not depend on it")
      ->capture_default_str();
}

void add_vector_options(SubcommandSpec& s, bool with_coeffs) {
  CLI::App& app = *s.app;
  s.n_opt = app.add_option("--n", s.cfg.n, "Number of coefficients N")->capture_default_str();
  app.add_option("--ensemble", s.ensemble, "Coefficient law")
      ->check(CLI::IsMember({"rademacher", "steinhaus", "fixed"}))
      ->capture_default_str();
  if (with_coeffs) {
    app.add_option("--coeffs", s.coeffs,
                   "Fixed coefficients a_1,..,a_N, e.g. 1,-1,3+4i (implies --ensemble fixed)");
  }
}

void add_grid(SubcommandSpec& s) {
  s.app->add_option("--grid", s.cfg.grid_size,
                    "Spectrum grid size L, a power of two >= 4N (0 = max(4096, 8N rounded up))")
      ->capture_default_str();
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments around lower bounds for the large sieve", "lsieve"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kVersion);

  std::vector<SubcommandSpec> specs;
  specs.reserve(7);
  auto make = [&](Command c, const char* help) -> SubcommandSpec& {
    SubcommandSpec& s = specs.emplace_back();
    s.command = c;
    s.cfg.command = c;
    s.app = app.add_subcommand(std::string(to_string(c)), help);
    add_common(s);
    return s;
  };

  {
    auto& s = make(Command::kMoments, "Fourth moments int|S|^4 and optional M(x) statistics over an ensemble");
    s.cfg.trials = 1000;
    add_vector_options(s, true);
    s.app->add_option("--trials", s.cfg.trials, "Number of draws")->capture_default_str();
    s.x_opt = s.app->add_option("--x", s.x, "Also estimate M(x) at this measure, 0 < x <= 1");
    add_grid(s);
  }
  {
    auto& s = make(Command::kFarey, "Farey fractions of order Q, with optional m(Q,A) and R(u)");
    s.app->add_option("--q", s.cfg.q_max, "Order Q")->required();
    s.app->add_option("--a", s.cfg.a_rational, "Exact A (e.g. 4, 1/4, 2.5) for the uncovered set m(Q,A)");
    s.u_opt = s.app->add_option("--u", s.u, "Point u for R(u) and the Dirichlet approximation");
  }
  {
    auto& s = make(Command::kLemma, "Check the sieve lower bound with a rigorous M(1/A) estimate");
    s.cfg.n = 64;
    s.cfg.q_max = 256;
    add_vector_options(s, true);
    s.app->add_option("--q", s.cfg.q_max, "Order Q")->capture_default_str();
    s.app->add_option("--a", s.cfg.a_param, "Parameter A > 1")->capture_default_str();
    s.app->add_option("--trials", s.cfg.trials, "Number of vectors")->capture_default_str();
    add_grid(s);
  }
  {
    auto& s = make(Command::kTheorem, "Monte Carlo success rate of sieve sum >= eps Q^2 sum|a_n|^2");
    s.cfg.n = 256;
    s.cfg.q_max = 128;
    s.cfg.trials = 200;
    add_vector_options(s, false);
    s.app->add_option("--q", s.cfg.q_max, "Order Q")->capture_default_str();
    s.app->add_option("--eps", s.cfg.epsilon, "epsilon > 0")->capture_default_str();
    s.app->add_option("--trials", s.cfg.trials, "Number of draws")->capture_default_str();
  }
  {
    auto& s = make(Command::kSweep, "Trial-averaged sieve_sum / (N sum|a_n|^2) across N");
    s.cfg.trials = 50;
    s.app->add_option("--n-list", s.cfg.n_list, "Comma-separated N values")
        ->delimiter(',')
        ->capture_default_str();
    s.app->add_option("--rule", s.rule, "Q = ceil(c sqrt N log N) | ceil(c sqrt N) | fixed")
        ->check(CLI::IsMember({"sqrtlog", "sqrt", "fixed"}))
        ->capture_default_str();
    s.app->add_option("--c", s.cfg.rule.scale, "Scale c of the Q rule")->capture_default_str();
    s.app->add_option("--q", s.cfg.rule.fixed_q, "Q for --rule fixed")->capture_default_str();
    s.app->add_option("--trials", s.cfg.trials, "Draws per N")->capture_default_str();
    s.app->add_option("--ensemble", s.ensemble, "Coefficient law")
        ->check(CLI::IsMember({"rademacher", "steinhaus"}))
        ->capture_default_str();
  }
  {
    auto& s = make(Command::kSpectrum, "Samples of |S(j/L)|^2 for plotting, with optional M(x) bracket");
    add_vector_options(s, true);
    add_grid(s);
    s.x_opt = s.app->add_option("--x", s.x, "Also bracket M(x), 0 < x <= 1");
  }
  {
    auto& s = make(Command::kUpper, "Check the classical bound sieve_sum <= (N + Q^2) sum|a_n|^2");
    s.cfg.n = 128;
    s.cfg.q_max = 32;
    s.cfg.trials = 100;
    add_vector_options(s, true);
    s.app->add_option("--q", s.cfg.q_max, "Order Q")->capture_default_str();
    s.app->add_option("--trials", s.cfg.trials, "Number of vectors")->capture_default_str();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);  // --help, --version
    err << "lsieve: error: " << e.what() << '\n';
    return kExitBadArguments;
  }

  SubcommandSpec* chosen = nullptr;
  for (auto& s : specs) {
    if (s.app->parsed()) chosen = &s;
  }
  RunConfig cfg = chosen->cfg;
  cfg.format = chosen->format == "csv" ? Format::kCsv : Format::kJson;
  cfg.ensemble = ls::parse_ensemble_kind(chosen->ensemble);
  cfg.rule.kind = ls::parse_q_rule(chosen->rule);
  if (chosen->x_opt && chosen->x_opt->count() > 0) cfg.x = chosen->x;
  if (chosen->u_opt && chosen->u_opt->count() > 0) cfg.u = chosen->u;
  if (!chosen->coeffs.empty()) {
    try {
      cfg.coeffs = parse_coefficients(chosen->coeffs);
    } catch (const ls::DomainError& e) {
      err << "lsieve: error: " << e.what() << '\n';
      return kExitBadArguments;
    }
    cfg.ensemble = ls::EnsembleKind::kFixed;
    if (chosen->n_opt->count() == 0) cfg.n = cfg.coeffs.size();
    cfg.trials = 1;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    std::filesystem::path path(cfg.out_path);
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir && path.is_relative()) {
      path = std::filesystem::path(dir) / path;
    }
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "lsieve: error: cannot open output file '" << path.string() << "'\n";
      return kExitIo;
    }
    sink = &file;
  }

  std::ostringstream buffer;
  try {
    run(cfg, buffer);
  } catch (const ls::DomainError& e) {
    err << "lsieve: error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "lsieve: error: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }

  *sink << buffer.str();
  sink->flush();
  if (!*sink) {
    err << "lsieve: error: failed writing report\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace lsieve
