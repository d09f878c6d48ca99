// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "collector/distribution.hpp"
#include "collector/format.hpp"
#include "collector/genfun.hpp"
#include "collector/montecarlo.hpp"
#include "collector/stirling.hpp"
#include "collector/verify.hpp"

namespace collector::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };

struct GlobalOptions {
  std::string format = "csv";
  std::string output;

  Format fmt() const { return format == "json" ? Format::kJson : Format::kCsv; }
};

struct PmfOptions {
  std::uint32_t m = 0;
  std::uint32_t n_max = 0;
  bool exact = false;
  bool floating = false;
};

struct StirlingOptions {
  std::uint32_t n_max = 0;
};

struct EgfOptions {
  std::uint32_t m = 0;
  std::uint32_t order = 0;
  std::string at;
};

struct SimulateOptions {
  SimConfig config;
  bool compare_exact = false;
  std::optional<unsigned> workers;
};

struct VerifyCliOptions {
  VerifyOptions verify;
  std::optional<unsigned> workers;
};

unsigned resolve_workers(const std::optional<unsigned>& flag) {
  if (flag) {
    return *flag;
  }
  if (const char* env = std::getenv("COLLECTOR_LAB_WORKERS")) {
    try {
      const auto value = std::stoul(env);
      return static_cast<unsigned>(value);
    } catch (const std::exception&) {
      throw UsageError("COLLECTOR_LAB_WORKERS must be a nonnegative integer");
    }
  }
  return 1;
}

void run_pmf(const PmfOptions& opt, Format fmt, std::ostream& out) {
  const bool exact = !opt.floating;
  bool first = true;
  auto emit = [&](std::uint32_t n, std::uint32_t k, const Rational* p, double p_float) {
    if (fmt == Format::kCsv) {
      out << opt.m << ',' << n << ',' << k << ',';
      if (p != nullptr) {
        out << to_string(p->numerator()) << ',' << to_string(p->denominator());
      } else {
        out << ',';
      }
      out << ',' << format_double(p_float) << '\n';
      return;
    }
    json row;
    row["m"] = opt.m;
    row["n"] = n;
    row["k"] = k;
    row["p_num"] = p != nullptr ? json(to_string(p->numerator())) : json(nullptr);
    row["p_den"] = p != nullptr ? json(to_string(p->denominator())) : json(nullptr);
    row["p_float"] = p_float;
    out << (first ? "[\n  " : ",\n  ") << row.dump();
    first = false;
  };

  if (fmt == Format::kCsv) {
    out << "m,n,k,p_num,p_den,p_float\n";
  }
  if (exact) {
    ExactDpStepper stepper(opt.m);
    for (std::uint32_t n = 0; n <= opt.n_max; ++n) {
      if (n > 0) {
        stepper.step();
      }
      for (std::uint32_t k = 0; k <= opt.m; ++k) {
        const Rational p = stepper.prob(k);
        emit(n, k, &p, p.to_double());
      }
    }
  } else {
    const auto table = float_pmf(opt.m, opt.n_max);
    for (std::uint32_t n = 0; n <= opt.n_max; ++n) {
      for (std::uint32_t k = 0; k <= opt.m; ++k) {
        emit(n, k, nullptr, table.at(n, k));
      }
    }
  }
  if (fmt == Format::kJson) {
    out << (first ? "[]\n" : "\n]\n");
  }
}

void run_stirling(const StirlingOptions& opt, Format fmt, std::ostream& out) {
  const auto table = stirling_table(opt.n_max);
  if (fmt == Format::kCsv) {
    out << "n,k,a\n";
    for (std::uint32_t n = 1; n <= opt.n_max; ++n) {
      for (std::uint32_t k = 1; k <= n; ++k) {
        out << n << ',' << k << ',' << to_string(table.at(n, k)) << '\n';
      }
    }
    return;
  }
  json rows = json::array();
  for (std::uint32_t n = 1; n <= opt.n_max; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      rows.push_back({{"n", n}, {"k", k}, {"a", to_string(table.at(n, k))}});
    }
  }
  out << rows.dump(2) << '\n';
}

std::pair<double, double> parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("--at expects X,Y");
  }
  try {
    std::size_t used_x = 0;
    std::size_t used_y = 0;
    const std::string xs = text.substr(0, comma);
    const std::string ys = text.substr(comma + 1);
    const double x = std::stod(xs, &used_x);
    const double y = std::stod(ys, &used_y);
    if (used_x != xs.size() || used_y != ys.size() || !std::isfinite(x) || !std::isfinite(y)) {
      throw std::invalid_argument("trailing characters");
    }
    return {x, y};
  } catch (const std::exception&) {
    throw UsageError("--at expects two finite numbers X,Y, got '" + text + "'");
  }
}

void run_egf(const EgfOptions& opt, Format fmt, std::ostream& out) {
  if (!opt.at.empty()) {
    const auto [x, y] = parse_point(opt.at);
    const double value = egf_closed_eval(opt.m, x, y);
    if (fmt == Format::kCsv) {
      out << "m,x,y,value\n"
          << opt.m << ',' << format_double(x) << ',' << format_double(y) << ',' << format_double(value) << '\n';
    } else {
      out << json{{"m", opt.m}, {"x", x}, {"y", y}, {"value", value}}.dump(2) << '\n';
    }
    return;
  }
  const auto series = egf_expand(opt.m, opt.order);
  json rows = json::array();
  if (fmt == Format::kCsv) {
    out << "n,k,coeff_num,coeff_den\n";
  }
  for (std::uint32_t n = 0; n <= opt.order; ++n) {
    for (std::uint32_t k = 0; k <= opt.m; ++k) {
      const auto c = series.term(n).coeff(k);
      const auto num = to_string(c.numerator());
      const auto den = to_string(c.denominator());
      if (fmt == Format::kCsv) {
        out << n << ',' << k << ',' << num << ',' << den << '\n';
      } else {
        rows.push_back({{"n", n}, {"k", k}, {"coeff_num", num}, {"coeff_den", den}});
      }
    }
  }
  if (fmt == Format::kJson) {
    out << rows.dump(2) << '\n';
  }
}

void run_simulate(const SimulateOptions& opt, Format fmt, std::ostream& out) {
  const auto emp = simulate(opt.config, resolve_workers(opt.workers));
  std::optional<FitReport> fit;
  if (opt.compare_exact) {
    fit = compare(emp, reference_row(dp_pmf(opt.config.m, opt.config.n), opt.config.n));
  }
  if (fmt == Format::kCsv) {
    out << "k,count,freq\n";
    for (std::size_t k = 0; k < emp.counts.size(); ++k) {
      out << k << ',' << emp.counts[k] << ',' << format_double(emp.freqs[k]) << '\n';
    }
    if (fit) {
      out << "\nmetric,value\n"
          << "max_abs_deviation," << format_double(fit->max_abs_deviation) << '\n'
          << "total_variation," << format_double(fit->total_variation) << '\n'
          << "chi_square," << format_double(fit->chi_square) << '\n'
          << "bins," << fit->bins << '\n'
          << "dof," << fit->dof << '\n'
          << "chi_square_critical_999," << format_double(fit->chi_square_critical) << '\n';
    }
    return;
  }
  json doc;
  doc["m"] = opt.config.m;
  doc["n"] = opt.config.n;
  doc["trials"] = opt.config.trials;
  doc["seed"] = opt.config.seed;
  doc["shard_size"] = opt.config.shard_size;
  auto& rows = doc["rows"] = json::array();
  for (std::size_t k = 0; k < emp.counts.size(); ++k) {
    rows.push_back({{"k", k}, {"count", emp.counts[k]}, {"freq", emp.freqs[k]}});
  }
  if (fit) {
    doc["comparison"] = {{"max_abs_deviation", fit->max_abs_deviation},
                         {"total_variation", fit->total_variation},
                         {"chi_square", fit->chi_square},
                         {"bins", fit->bins},
                         {"dof", fit->dof},
                         {"chi_square_critical_999", fit->chi_square_critical}};
  }
  out << doc.dump(2) << '\n';
}

int run_verify_command(VerifyCliOptions opt, Format fmt, std::ostream& out) {
  opt.verify.workers = resolve_workers(opt.workers);
  const auto report = run_verify(opt.verify);
  if (fmt == Format::kJson) {
    write_json(out, report);
  } else {
    write_table(out, report);
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and simulated distributions for the coupon collector's problem", "collector"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", global.output, "Write to PATH instead of standard output");

  PmfOptions pmf;
  auto* pmf_cmd = app.add_subcommand("pmf", "Distribution table p[n][k] for n = 0..n-max");
  pmf_cmd->add_option("--m", pmf.m, "Number of coupon types")->required()->check(CLI::Range(1U, 1U << 20));
  pmf_cmd->add_option("--n-max", pmf.n_max, "Last draw count")->required()->check(CLI::Range(0U, 1U << 24));
  auto* exact_flag = pmf_cmd->add_flag("--exact", pmf.exact, "Exact rationals (default)");
  auto* float_flag = pmf_cmd->add_flag("--float", pmf.floating, "Binary64 master equation");
  exact_flag->excludes(float_flag);

  StirlingOptions stirling;
  auto* stirling_cmd = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  stirling_cmd->add_option("--n-max", stirling.n_max, "Last row")->required()->check(CLI::Range(1U, 1U << 16));

  EgfOptions egf;
  auto* egf_cmd = app.add_subcommand("egf", "Bivariate generating function");
  egf_cmd->add_option("--m", egf.m, "Number of coupon types")->required()->check(CLI::Range(1U, 1U << 16));
  egf_cmd->add_option("--order", egf.order, "Truncation order in x")->check(CLI::Range(0U, 1U << 12));
  egf_cmd->add_option("--at", egf.at, "Evaluate the closed form at X,Y instead");

  SimulateOptions sim;
  std::uint32_t sim_workers = 0;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of p[n][k]");
  sim_cmd->add_option("--m", sim.config.m, "Number of coupon types")->required()->check(CLI::Range(1U, 1U << 24));
  sim_cmd->add_option("--n", sim.config.n, "Draws per trial")->required();
  sim_cmd->add_option("--trials", sim.config.trials, "Number of trials")
      ->required()
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  sim_cmd->add_option("--seed", sim.config.seed, "64-bit seed")->required();
  sim_cmd->add_option("--shard-size", sim.config.shard_size, "Trials per RNG shard")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 40));
  sim_cmd->add_flag("--compare-exact", sim.compare_exact, "Append a fit report against the exact row");
  auto* sim_workers_opt = sim_cmd->add_option("--workers", sim_workers, "Worker threads (0 = all cores)");

  VerifyCliOptions ver;
  std::uint32_t ver_workers = 0;
  auto* ver_cmd = app.add_subcommand("verify", "Cross-check every route and print a report");
  ver_cmd->add_option("--m-max", ver.verify.m_max, "Largest m")->check(CLI::Range(1U, 64U));
  ver_cmd->add_option("--n-max", ver.verify.n_max, "Largest n")->check(CLI::Range(0U, 512U));
  ver_cmd->add_option("--stirling-n-max", ver.verify.stirling_n_max, "Largest Stirling row")
      ->check(CLI::Range(1U, 1000U));
  ver_cmd->add_option("--trials", ver.verify.trials, "Monte Carlo trials per case (0 skips)");
  ver_cmd->add_option("--seed", ver.verify.seed, "Monte Carlo seed");
  auto* ver_workers_opt = ver_cmd->add_option("--workers", ver_workers, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
    if (*sim_workers_opt) {
      sim.workers = sim_workers;
    }
    if (*ver_workers_opt) {
      ver.workers = ver_workers;
    }
    if (egf_cmd->parsed() && egf.at.empty() && egf_cmd->count("--order") == 0) {
      throw UsageError("egf needs --order N or --at X,Y");
    }

    std::ofstream file;
    if (!global.output.empty()) {
      file.open(global.output, std::ios::binary);
      if (!file) {
        throw UsageError("cannot open output file '" + global.output + "'");
      }
    }
    std::ostream& sink = global.output.empty() ? out : file;
    const Format fmt = global.fmt();

    int code = kExitOk;
    if (pmf_cmd->parsed()) {
      run_pmf(pmf, fmt, sink);
    } else if (stirling_cmd->parsed()) {
      run_stirling(stirling, fmt, sink);
    } else if (egf_cmd->parsed()) {
      run_egf(egf, fmt, sink);
    } else if (sim_cmd->parsed()) {
      run_simulate(sim, fmt, sink);
    } else if (ver_cmd->parsed()) {
      code = run_verify_command(ver, fmt, sink);
    }
    sink.flush();
    return code;
  } catch (const CLI::ParseError& e) {
    // Help requests carry exit code 0 and print to out.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "collector: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "collector: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "collector: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "collector: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace collector::cli
