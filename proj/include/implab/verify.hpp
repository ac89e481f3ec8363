#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "implab/bal.hpp"
#include "implab/balance.hpp"
#include "implab/enumeration.hpp"
#include "implab/parallel.hpp"

namespace implab {

/// Every balanced critical graph has the BAL shape, and its recovered spec predicts imp.
inline CheckResult check_bal_reverse(const Graph& g, const BalanceReport& r) {
  if (!(r.balanced && r.critical)) return detail::precondition_unmet("bal-reverse", r);
  CheckResult c{CheckResult::Status::Pass, "bal-reverse", "", {}};
  auto rec = is_bal_form(g);
  if (const auto* rej = std::get_if<BalRejection>(&rec)) {
    c.status = CheckResult::Status::Fail;
    c.detail = "not BAL form: clause " + rej->clause + ", " + rej->reason;
    return c;
  }
  const auto& spec = std::get<BalSpec>(rec);
  if (predicted_imp(spec) != r.imp) {
    c.status = CheckResult::Status::Fail;
    c.detail = "predicted " + std::to_string(predicted_imp(spec)) + ", imp " + std::to_string(r.imp);
  } else {
    c.detail = "k = " + std::to_string(spec.k) + ", " + std::to_string(spec.parts.size()) + " parts";
  }
  return c;
}

/// Names in reporting order.
inline const std::vector<std::string>& theorem_checks() {
  static const std::vector<std::string> names{
      "exterior-bound",   "weight-lower-bound", "basepoint-components", "positive-weight-paths",
      "exterior-pair",    "unique-basepoint",   "side-cliques",         "bal-reverse"};
  return names;
}

/// Every checker on one connected interval graph, in theorem_checks() order.
inline std::vector<CheckResult> run_theorem_checks(const Graph& g) {
  const auto r = balance_report(g);
  return {check_exterior_bound(g),          check_weight_bound(r),          check_basepoint_components(g, r),
          check_positive_weight_paths(g),   check_exterior_pair(g, r),      check_unique_basepoint(g, r),
          check_side_cliques(g, r),         check_bal_reverse(g, r)};
}

struct TheoremTally {
  int pass = 0;
  int fail = 0;
  int vacuous = 0;
  std::vector<std::pair<Graph, CheckResult>> failures;
};

struct VerificationSummary {
  int n_max = 0;
  int graphs = 0;
  std::map<std::string, TheoremTally> tallies;

  int failures() const {
    int f = 0;
    for (const auto& [name, t] : tallies) f += t.fail;
    return f;
  }
};

/// Runs every checker over all connected interval graphs with at most n_max vertices.
inline VerificationSummary verify_theorems(int n_max, int jobs = 1, int guard = kEnumerationGuard) {
  VerificationSummary s;
  s.n_max = n_max;
  for (const auto& name : theorem_checks()) s.tallies[name];
  const auto catalog = interval_catalog(n_max, guard);
  s.graphs = static_cast<int>(catalog.size());
  auto results = parallel_map(catalog.size(), jobs, [&](std::size_t i) { return run_theorem_checks(catalog[i]); });
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (const auto& c : results[i]) {
      auto& t = s.tallies[c.check];
      switch (c.status) {
        case CheckResult::Status::Pass: ++t.pass; break;
        case CheckResult::Status::Vacuous: ++t.vacuous; break;
        case CheckResult::Status::Fail:
          ++t.fail;
          t.failures.emplace_back(catalog[i], c);
          break;
      }
    }
  }
  return s;
}

}  // namespace implab
