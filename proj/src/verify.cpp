// Copyright 2026 The collector-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License is
// distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and limitations under the License.

#include "collector/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "collector/distribution.hpp"
#include "collector/genfun.hpp"
#include "collector/montecarlo.hpp"
#include "collector/oracle.hpp"
#include "collector/stirling.hpp"

namespace collector {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

double mc_tolerance(std::uint64_t trials) { return 10.0 * 0.5 / std::sqrt(static_cast<double>(trials)); }

namespace {

std::string short_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", value);
  return buf;
}

std::string envelope(std::uint32_t m_max, std::uint32_t n_max) {
  return "m<=" + std::to_string(m_max) + " n<=" + std::to_string(n_max);
}

// Records the first failing case in detail.
struct ExactCheck {
  VerifyCheck check;

  ExactCheck(std::string name, std::string scope) {
    check.name = std::move(name);
    check.scope = std::move(scope);
    check.passed = true;
  }

  void expect(bool ok, const std::string& where) {
    if (!ok && check.passed) {
      check.passed = false;
      check.detail = "first mismatch at " + where;
    }
  }
};

std::string at(std::uint32_t m, std::uint32_t n, std::uint32_t k) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);
}

VerifyCheck check_stirling(std::uint32_t n_max) {
  ExactCheck c("stirling.recurrence_vs_explicit", "1<=k<=n<=" + std::to_string(n_max));
  const auto table = stirling_table(n_max);
  for (std::uint32_t n = 1; n <= n_max; ++n) {
    for (std::uint32_t k = 1; k <= n; ++k) {
      c.expect(table.at(n, k) == stirling_explicit(n, k), "n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  }
  return c.check;
}

VerifyCheck check_stirling_k2(std::uint32_t n_max) {
  ExactCheck c("stirling.second_column", "2<=n<=" + std::to_string(n_max));
  const auto table = stirling_table(n_max);
  for (std::uint32_t n = 2; n <= n_max; ++n) {
    c.expect(table.at(n, 2) == pow_int(2, n - 1) - 1, "n=" + std::to_string(n));
  }
  return c.check;
}

VerifyCheck check_routes(std::uint32_t m_max, std::uint32_t n_max) {
  ExactCheck c("distribution.dp_vs_closed_forms", envelope(m_max, n_max));
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const auto dp = dp_pmf(m, n_max);
    const auto simple = closed_form_table(m, n_max, ClosedForm::kSimplified);
    const auto rude = closed_form_table(m, n_max, ClosedForm::kRude);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      for (std::uint32_t k = 0; k <= m; ++k) {
        c.expect(dp.at(n, k) == simple.at(n, k) && simple.at(n, k) == rude.at(n, k), at(m, n, k));
      }
    }
  }
  return c.check;
}

VerifyCheck check_enumeration(std::uint32_t m_max, std::uint32_t n_max) {
  ExactCheck c("distribution.enumeration_oracle", envelope(m_max, n_max));
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const auto dp = dp_pmf(m, n_max);
    const auto simple = closed_form_table(m, n_max, ClosedForm::kSimplified);
    const auto rude = closed_form_table(m, n_max, ClosedForm::kRude);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      const auto truth = oracle::enumerate_pmf(m, n);
      for (std::uint32_t k = 0; k <= m; ++k) {
        c.expect(dp.at(n, k) == truth[k] && simple.at(n, k) == truth[k] && rude.at(n, k) == truth[k], at(m, n, k));
      }
    }
  }
  return c.check;
}

VerifyCheck check_conservation(std::uint32_t m_max, std::uint32_t n_max) {
  ExactCheck c("distribution.conservation_support", envelope(m_max, n_max));
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    for (const auto& table : {dp_pmf(m, n_max), closed_form_table(m, n_max, ClosedForm::kSimplified),
                              closed_form_table(m, n_max, ClosedForm::kRude)}) {
      for (std::uint32_t n = 0; n <= n_max; ++n) {
        Rational sum;
        for (std::uint32_t k = 0; k <= m; ++k) {
          sum += table.at(n, k);
          const bool in_support = n == 0 ? k == 0 : (k >= 1 && k <= std::min(n, m));
          c.expect(table.at(n, k).is_zero() != in_support, at(m, n, k));
        }
        c.expect(sum == Rational(1), "row sum " + at(m, n, 0));
      }
    }
  }
  return c.check;
}

VerifyCheck check_mean(std::uint32_t m_max, std::uint32_t n_max) {
  ExactCheck c("distribution.mean_identity", envelope(m_max, n_max));
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      const auto truth = oracle::expected_distinct(m, n);
      c.expect(mean_coupons(m, n) == truth, at(m, n, 0));
      c.expect(gn_direct(m, n).derivative().eval(Rational(1)) == truth, "g'(1) " + at(m, n, 0));
    }
  }
  return c.check;
}

VerifyCheck check_genfun(std::uint32_t m_max, std::uint32_t n_max) {
  ExactCheck c("genfun.operator_direct_series", envelope(m_max, n_max));
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const auto series = egf_expand(m, n_max);
    const auto dp = dp_pmf(m, n_max);
    PolyY iterated = PolyY::constant(1);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      if (n > 0) {
        iterated = apply_recurrence(iterated, m);
      }
      const auto direct = gn_direct(m, n);
      c.expect(iterated == direct && direct == series.term(n), at(m, n, 0));
      c.expect(direct.eval(Rational(1)) == Rational(1), "g(1) " + at(m, n, 0));
      for (std::uint32_t k = 0; k <= m; ++k) {
        c.expect(direct.coeff(k) == dp.at(n, k), "coefficient " + at(m, n, k));
      }
    }
  }
  return c.check;
}

VerifyCheck check_completion(std::uint32_t m_max) {
  constexpr double kTol = 1e-6;
  VerifyCheck c{"distribution.completion_mean", "1<=m<=" + std::to_string(m_max), true, 0.0, {}};
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const double err = std::abs(completion_stats(m, 1e-9).mean - oracle::expected_completion(m).to_double());
    c.deviation = std::max(*c.deviation, err);
  }
  c.passed = *c.deviation <= kTol;
  c.detail = "tol=" + short_double(kTol);
  return c;
}

VerifyCheck check_float_dp(std::uint32_t m_max, std::uint32_t n_max) {
  constexpr double kTol = 1e-10;
  VerifyCheck c{"distribution.float_dp_accuracy", envelope(m_max, n_max), true, 0.0, {}};
  for (std::uint32_t m = 1; m <= m_max; ++m) {
    const auto fl = float_pmf(m, n_max);
    ExactDpStepper exact(m);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      if (n > 0) {
        exact.step();
      }
      for (std::uint32_t k = 0; k <= m; ++k) {
        c.deviation = std::max(*c.deviation, std::abs(fl.at(n, k) - exact.prob_double(k)));
      }
    }
  }
  c.passed = *c.deviation <= kTol;
  c.detail = "tol=" + short_double(kTol);
  return c;
}

VerifyCheck check_monte_carlo(std::uint32_t m, std::uint32_t n, const VerifyOptions& options) {
  SimConfig config;
  config.m = m;
  config.n = n;
  config.trials = options.trials;
  config.seed = options.seed ^ (std::uint64_t{m} << 32 | n);
  const auto emp = simulate(config, options.workers);
  const auto fit = compare(emp, reference_row(dp_pmf(m, n), n));
  const double tol = mc_tolerance(options.trials);
  VerifyCheck c;
  c.name = "montecarlo.fit";
  c.scope = "m=" + std::to_string(m) + " n=" + std::to_string(n) + " trials=" + std::to_string(options.trials);
  c.deviation = fit.max_abs_deviation;
  c.passed = fit.max_abs_deviation < tol && fit.chi_square_ok();
  std::ostringstream detail;
  detail.precision(6);
  detail << "tol=" << tol << " chi2=" << fit.chi_square << " crit=" << fit.chi_square_critical << " dof=" << fit.dof;
  c.detail = detail.str();
  return c;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  const auto m_max = options.m_max;
  const auto n_max = options.n_max;
  const auto enum_m = std::min(m_max, options.enum_m_max);
  const auto enum_n = std::min(n_max, options.enum_n_max);
  report.checks.push_back(check_stirling(options.stirling_n_max));
  report.checks.push_back(check_stirling_k2(options.stirling_n_max));
  report.checks.push_back(check_routes(m_max, n_max));
  report.checks.push_back(check_enumeration(enum_m, enum_n));
  report.checks.push_back(check_conservation(m_max, n_max));
  report.checks.push_back(check_mean(m_max, n_max));
  report.checks.push_back(check_genfun(m_max, n_max));
  report.checks.push_back(check_completion(m_max));
  report.checks.push_back(check_float_dp(m_max, n_max));
  if (options.trials > 0) {
    for (std::uint32_t m = 1; m <= m_max; ++m) {
      report.checks.push_back(check_monte_carlo(m, n_max, options));
    }
  }
  return report;
}

namespace {

std::string deviation_text(const VerifyCheck& c) {
  if (!c.deviation) {
    return "exact";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", *c.deviation);
  return buf;
}

}  // namespace

void write_table(std::ostream& os, const VerifyReport& report) {
  std::size_t name_w = 5;
  std::size_t scope_w = 5;
  for (const auto& c : report.checks) {
    name_w = std::max(name_w, c.name.size());
    scope_w = std::max(scope_w, c.scope.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - std::min(w, s.size()), ' '); };
  os << pad("check", name_w) << "  " << pad("scope", scope_w) << "  " << pad("status", 6) << "  "
     << pad("deviation", 10) << "  detail\n";
  for (const auto& c : report.checks) {
    os << pad(c.name, name_w) << "  " << pad(c.scope, scope_w) << "  " << pad(c.passed ? "pass" : "FAIL", 6) << "  "
       << pad(deviation_text(c), 10) << "  " << c.detail << "\n";
  }
  os << "overall: " << (report.passed() ? "pass" : "FAIL") << "\n";
}

void write_json(std::ostream& os, const VerifyReport& report) {
  nlohmann::ordered_json doc;
  doc["overall"] = report.passed() ? "pass" : "fail";
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["scope"] = c.scope;
    item["status"] = c.passed ? "pass" : "fail";
    if (c.deviation) {
      item["deviation"] = *c.deviation;
    } else {
      item["deviation"] = "exact";
    }
    item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  os << doc.dump(2) << "\n";
}

}  // namespace collector
