#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/cuts.hpp"
#include "degseq/flow.hpp"
#include "degseq/oracle.hpp"
#include "degseq/swap.hpp"
#include "degseq/tree.hpp"

// Cross-checks of the closed forms, inequalities, flows and swap walks
// against the exhaustive oracle.
namespace degseq::verify {

inline std::string format(const DegreeSequence& d) {
  std::ostringstream os;
  os << '(';
  for (int i = 1; i <= d.size(); ++i) os << (i > 1 ? "," : "") << d.degree(i);
  os << ')';
  return os.str();
}

inline std::string format(const BipartiteDegreeSequence& dd) {
  return "(" + format(dd.a) + "," + format(dd.b) + ")";
}

inline std::string format(const std::set<int>& values) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : values) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

inline bool is_contiguous(const std::set<int>& values) {
  return values.empty() || *values.rbegin() - *values.begin() + 1 ==
                               static_cast<int>(values.size());
}

// Returns a description of the first disagreement, if any.
inline std::optional<std::string> check_tree_sequence(const DegreeSequence& d,
                                                      double cap = oracle::kDefaultCap) {
  const auto achieved = oracle::achievable_nu_set_tree(d, cap);
  const std::string where = "tree " + format(d) + ": ";
  if (is_tree_degree_sequence(d) != !achieved.empty()) {
    return where + "is_tree_degree_sequence disagrees with enumeration";
  }
  if (achieved.empty() || d.size() < 3) return std::nullopt;
  const auto interval = matching_interval_tree(d);
  std::set<int> predicted;
  for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) predicted.insert(nu);
  if (predicted != achieved) {
    return where + "interval " + format(predicted) + " but oracle found " + format(achieved);
  }
  for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) {
    const auto t = realize_tree_with_nu(d, nu);
    if (!std::ranges::equal(t.degrees(), d.values()) || tree_matching_number(t) != nu) {
      return where + "realization for nu = " + std::to_string(nu) + " is wrong";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_bipartite_sequence(const BipartiteDegreeSequence& dd,
                                                           double cap = oracle::kDefaultCap) {
  const auto achieved = oracle::achievable_nu_set_bipartite(dd, cap);
  const std::string where = "bipartite " + format(dd) + ": ";
  if (gale_ryser_check(dd) != !achieved.empty()) {
    return where + "Gale-Ryser disagrees with enumeration";
  }
  if (!is_contiguous(achieved)) {
    return where + "achievable set " + format(achieved) + " is not an interval";
  }
  for (int nu = 0; nu <= std::min(dd.n(), dd.m()); ++nu) {
    const bool expected = achieved.contains(nu);
    const std::string at = where + "nu = " + std::to_string(nu) + ": ";
    if (check_inequalities(dd, nu) != expected) {
      return at + "inequality system disagrees with oracle";
    }
    const auto outcome = realize_bipartite_with_nu(dd, nu);
    if (std::holds_alternative<FlowRealization>(outcome) != expected) {
      return at + "flow feasibility disagrees with oracle";
    }
    if (const auto* found = std::get_if<FlowRealization>(&outcome)) {
      if (!found->graph.realizes(dd) || matching_number(found->graph) != nu ||
          !verify_canonical_structure(found->graph, nu, found->k)) {
        return at + "extracted realization fails degree/nu/structure checks";
      }
    }
    if (dd.sums_equal() && !detail::negative_capacity(dd, nu)) {
      for (int k = 0; k <= nu; ++k) {
        const auto flow = max_flow(build_network(dd, nu, k).network);
        if (flow.value != min_clean_cut_capacity(dd, nu, k)) {
          return at + "k = " + std::to_string(k) + ": clean-cut minimum differs from max flow";
        }
      }
    }
  }
  const auto interval = matching_interval_bipartite(dd);
  if (interval.empty != achieved.empty() ||
      (!achieved.empty() &&
       (interval.nu_min != *achieved.begin() || interval.nu_max != *achieved.rbegin()))) {
    return where + "matching interval disagrees with oracle " + format(achieved);
  }
  if (!interval.empty) {
    const auto walk = matching_number_walk(dd);
    for (std::size_t t = 1; t < walk.nu.size(); ++t) {
      if (std::abs(walk.nu[t] - walk.nu[t - 1]) > 1) {
        return where + "swap changed nu by more than one";
      }
    }
    if (walk.nu.front() != interval.nu_min || walk.nu.back() != interval.nu_max) {
      return where + "swap walk does not connect the extreme realizations";
    }
  }
  return std::nullopt;
}

struct SweepBounds {
  int max_n = 4;
  int max_m = 4;
  int max_deg = 3;
  int tree_max_n = 8;
  double cap = oracle::kDefaultCap;
};

struct SweepReport {
  std::int64_t tree_sequences = 0;
  std::int64_t bipartite_sequences = 0;
  std::optional<std::string> counterexample;
};

// Tree sequences with 2 <= n <= tree_max_n, then bipartite sequences with
// 1 <= n <= max_n, 1 <= m <= max_m, entries in [0, max_deg]. Stops at the
// first counterexample.
inline SweepReport sweep(const SweepBounds& bounds) {
  SweepReport report;
  for (int n = 2; n <= bounds.tree_max_n && !report.counterexample; ++n) {
    oracle::for_each_tree_sized_sequence(n, [&](const DegreeSequence& d) {
      if (report.counterexample) return;
      ++report.tree_sequences;
      report.counterexample = check_tree_sequence(d, bounds.cap);
    });
  }
  for (int n = 1; n <= bounds.max_n && !report.counterexample; ++n) {
    for (int m = 1; m <= bounds.max_m && !report.counterexample; ++m) {
      oracle::for_each_nonincreasing_sequence(n, 0, bounds.max_deg, [&](const DegreeSequence& a) {
        oracle::for_each_nonincreasing_sequence(m, 0, bounds.max_deg, [&](const DegreeSequence& b) {
          if (report.counterexample) return;
          ++report.bipartite_sequences;
          report.counterexample = check_bipartite_sequence({a, b}, bounds.cap);
        });
      });
    }
  }
  return report;
}

}  // namespace degseq::verify
