#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/error.hpp"
#include "degseq/flow.hpp"

namespace degseq {

struct GaleRyserResult {
  bool graphical = false;
  bool sums_equal = false;
  std::optional<int> violated_k;  // first k whose prefix inequality fails
};

// Sum a_i = sum b_j and a_1 + ... + a_k <= sum_j min(b_j, k) for k in [n].
inline GaleRyserResult gale_ryser(const BipartiteDegreeSequence& dd) {
  GaleRyserResult result;
  result.sums_equal = dd.sums_equal();
  std::int64_t prefix = 0;
  for (int k = 1; k <= dd.n(); ++k) {
    prefix += dd.a.degree(k);
    std::int64_t bound = 0;
    for (int b : dd.b.values()) bound += std::min(b, k);
    if (prefix > bound) {
      result.violated_k = k;
      break;
    }
  }
  result.graphical = result.sums_equal && !result.violated_k;
  return result;
}

inline bool gale_ryser_check(const BipartiteDegreeSequence& dd) {
  return gale_ryser(dd).graphical;
}

// A clean cut of N(d_A, d_B, nu, k) is determined by k and the sizes
// p = |S_1|, S_1 ⊆ {v_1..v_k}, and q = |S_2|, S_2 ⊆ {v_{k+1}..v_n}.
struct CleanCutSpec {
  int k = 0;
  int p = 0;
  int q = 0;
  friend bool operator==(const CleanCutSpec&, const CleanCutSpec&) = default;
};

// (k + 1)(n + 1 - k) specs for a fixed k.
inline std::int64_t clean_cut_count(int n, int k) {
  return static_cast<std::int64_t>(k + 1) * (n + 1 - k);
}

template <typename Fn>
void for_each_clean_cut_spec(int n, int k, Fn&& fn) {
  for (int p = 0; p <= k; ++p) {
    for (int q = 0; q <= n - k; ++q) {
      if (!fn(CleanCutSpec{k, p, q})) return;
    }
  }
}

// Evaluates clean-cut capacities for fixed (d_A, d_B, nu, k) in O(m) each.
//
// Within {v_1..v_k} and {v_{k+1}..v_n} the members of S_1 and S_2 are the
// first p (resp. q) vertices in rank order: larger degree first, and
// among equal degrees larger index first. T_1 and T_2 are never built:
// each w_j independently contributes the smaller of its sink capacity and
// the number of arcs entering it from S_1 ∪ S_2.
class CleanCutEvaluator {
 public:
  CleanCutEvaluator(const BipartiteDegreeSequence& dd, int nu, int k)
      : dd_(dd), nu_(nu), k_(k) {
    detail::require_network_params(dd, nu, k);
    if (auto msg = detail::negative_capacity(dd, nu)) {
      throw Error(ErrorCode::kNegativeCapacity, *msg);
    }
    const int n = dd.n();
    rank_.assign(static_cast<std::size_t>(n) + 1, 0);
    prefix_first_ = rank_block(1, k);
    prefix_second_ = rank_block(k + 1, n);
    total_source_ = 0;
    for (int i = 1; i <= n; ++i) total_source_ += source_capacity(dd, nu, i);
  }

  [[nodiscard]] std::int64_t capacity(int p, int q) const {
    if (p < 0 || p > k_ || q < 0 || q > dd_.n() - k_) {
      throw Error(ErrorCode::kBadParams,
                  "clean cut needs 0 <= p <= k and 0 <= q <= n - k");
    }
    std::int64_t total = total_source_ - prefix_first_[p] - prefix_second_[q];
    for (int j = 1; j <= dd_.m(); ++j) {
      const int r = nu_ + 1 - j;  // v_r w_j is the excluded matching diagonal
      int arcs_in = 0;
      if (j <= nu_ - k_) {
        arcs_in = p + q - (in_second(r, q) ? 1 : 0);
      } else {
        arcs_in = p - (r >= 1 && r <= k_ && rank_[r] < p ? 1 : 0);
      }
      total += std::min<std::int64_t>(sink_capacity(dd_, nu_, j), arcs_in);
    }
    return total;
  }

  // Members of S_1 and S_2 in increasing index order.
  [[nodiscard]] std::vector<int> source_set(int p, int q) const {
    std::vector<int> out;
    for (int i = 1; i <= dd_.n(); ++i) {
      if ((i <= k_ && rank_[i] < p) || (i > k_ && rank_[i] < q)) out.push_back(i);
    }
    return out;
  }

 private:
  // Ranks the block {lo..hi}; returns prefix sums of source capacity in rank order.
  std::vector<std::int64_t> rank_block(int lo, int hi) {
    std::vector<int> order;
    for (int i = lo; i <= hi; ++i) order.push_back(i);
    std::ranges::sort(order, [&](int x, int y) {
      if (dd_.a.degree(x) != dd_.a.degree(y)) return dd_.a.degree(x) > dd_.a.degree(y);
      return x > y;
    });
    std::vector<std::int64_t> prefix{0};
    for (std::size_t r = 0; r < order.size(); ++r) {
      rank_[order[r]] = static_cast<int>(r);
      prefix.push_back(prefix.back() + source_capacity(dd_, nu_, order[r]));
    }
    return prefix;
  }

  [[nodiscard]] bool in_second(int i, int q) const {
    return i > k_ && i <= dd_.n() && rank_[i] < q;
  }

  BipartiteDegreeSequence dd_;
  int nu_;
  int k_;
  std::vector<int> rank_;
  std::vector<std::int64_t> prefix_first_;
  std::vector<std::int64_t> prefix_second_;
  std::int64_t total_source_ = 0;
};

// Capacity of the cheapest s-t cut of N(d_A, d_B, nu, k) whose A-side is the
// clean S_1 ∪ S_2 of `spec`:
//   sum over v_i outside S_1 ∪ S_2 of c(s, v_i)
//   + sum over j of min{c(w_j, t), |N^-(w_j) ∩ (S_1 ∪ S_2)|}.
inline std::int64_t clean_cut_capacity(const BipartiteDegreeSequence& dd, int nu,
                                       const CleanCutSpec& spec) {
  return CleanCutEvaluator(dd, nu, spec.k).capacity(spec.p, spec.q);
}

// Minimum over all clean cuts for one k; equals the max-flow value.
inline std::int64_t min_clean_cut_capacity(const BipartiteDegreeSequence& dd, int nu, int k) {
  const CleanCutEvaluator eval(dd, nu, k);
  std::optional<std::int64_t> best;
  for_each_clean_cut_spec(dd.n(), k, [&](const CleanCutSpec& s) {
    const auto c = eval.capacity(s.p, s.q);
    if (!best || c < *best) best = c;
    return true;
  });
  return *best;
}

// True iff (d_A, d_B) has a realization with matching number nu: the
// sums agree and, for some k, every clean cut has capacity >= sum a_i - nu.
inline bool check_inequalities(const BipartiteDegreeSequence& dd, int nu) {
  if (nu < 0 || nu > std::min(dd.n(), dd.m())) return false;
  if (!dd.sums_equal()) return false;
  if (detail::negative_capacity(dd, nu)) return false;
  const auto required = required_flow_value(dd, nu);
  for (int k = 0; k <= nu; ++k) {
    const CleanCutEvaluator eval(dd, nu, k);
    bool all_hold = true;
    for_each_clean_cut_spec(dd.n(), k, [&](const CleanCutSpec& s) {
      all_hold = eval.capacity(s.p, s.q) >= required;
      return all_hold;
    });
    if (all_hold) return true;
  }
  return false;
}

// Every nu in [0, min(n, m)] passing check_inequalities, ascending.
inline std::vector<int> feasible_nu_values(const BipartiteDegreeSequence& dd) {
  std::vector<int> out;
  for (int nu = 0; nu <= std::min(dd.n(), dd.m()); ++nu) {
    if (check_inequalities(dd, nu)) out.push_back(nu);
  }
  return out;
}

struct BipartiteIntervalResult {
  bool empty = true;
  int nu_min = 0;
  int nu_max = 0;
  friend bool operator==(const BipartiteIntervalResult&,
                         const BipartiteIntervalResult&) = default;
};

enum class IntervalSearch { kBinary, kLinear };

// The achievable matching numbers form an interval. Binary search starts
// from the matching number of the greedy realization, which is achievable.
inline BipartiteIntervalResult matching_interval_bipartite(
    const BipartiteDegreeSequence& dd, IntervalSearch search = IntervalSearch::kBinary) {
  if (!gale_ryser_check(dd)) return {};
  if (search == IntervalSearch::kLinear) {
    const auto values = feasible_nu_values(dd);
    if (values.empty()) return {};
    return {false, values.front(), values.back()};
  }
  const auto witness = canonical_realization(dd);
  if (!witness) return {};
  const int probe = matching_number(*witness);

  int lo = 0;
  int hi = probe;  // smallest feasible nu lies in [lo, hi]
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (check_inequalities(dd, mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const int nu_min = lo;

  lo = probe;
  hi = std::min(dd.n(), dd.m());  // largest feasible nu lies in [lo, hi]
  while (lo < hi) {
    const int mid = lo + (hi - lo + 1) / 2;
    if (check_inequalities(dd, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return {false, nu_min, lo};
}

}  // namespace degseq
