#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/error.hpp"

// Exhaustive ground truth for small instances. Nothing here uses the
// formulas it is meant to check.
namespace degseq::oracle {

inline constexpr double kDefaultCap = 1e7;

namespace detail {

// ln((n - 2)! / prod (d_i - 1)!), the log of the labeled tree count.
inline double log_tree_count(std::span<const int> degrees) {
  const auto n = static_cast<double>(degrees.size());
  double value = std::lgamma(n - 1.0);
  for (int d : degrees) value -= std::lgamma(static_cast<double>(d));
  return value;
}

// ln of min(prod_i C(m, a_i), prod_j C(n, b_j)), an upper bound on the
// number of 0/1 matrices with the given margins.
inline double log_matrix_bound(const BipartiteDegreeSequence& dd) {
  auto log_choose = [](int total, int r) {
    return std::lgamma(total + 1.0) - std::lgamma(r + 1.0) - std::lgamma(total - r + 1.0);
  };
  double rows = 0.0;
  for (int a : dd.a.values()) rows += log_choose(dd.m(), std::min(a, dd.m()));
  double cols = 0.0;
  for (int b : dd.b.values()) cols += log_choose(dd.n(), std::min(b, dd.n()));
  return std::min(rows, cols);
}

inline void check_cap(double log_count, double cap, const char* what) {
  if (log_count > std::log(cap) + 1e-9) {
    throw Error(ErrorCode::kOracleCapExceeded,
                std::string(what) + ": predicted count ~" +
                    std::to_string(std::exp(log_count)) + " exceeds cap " +
                    std::to_string(cap));
  }
}

inline std::vector<TreeEdge> decode_pruefer(int n, std::span<const int> code) {
  std::vector<int> remaining(static_cast<std::size_t>(n) + 1, 1);
  for (int x : code) ++remaining[x];
  std::vector<TreeEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int x : code) {
    int leaf = 1;
    while (remaining[leaf] != 1) ++leaf;
    edges.push_back(make_tree_edge(leaf, x));
    --remaining[leaf];
    --remaining[x];
  }
  int u = 0;
  for (int v = 1; v <= n; ++v) {
    if (remaining[v] == 1) {
      if (u == 0) {
        u = v;
      } else {
        edges.push_back(make_tree_edge(u, v));
        break;
      }
    }
  }
  std::ranges::sort(edges);
  return edges;
}

}  // namespace detail

// Calls fn(tree) for every labeled tree with d_T(v_i) = degrees[i - 1],
// each exactly once, in lexicographic order of Prüfer strings. Yields
// nothing unless n >= 2, every degree is >= 1 and the degrees sum to 2(n - 1).
template <typename Fn>
void for_each_tree(std::span<const int> degrees, Fn&& fn, double cap = kDefaultCap) {
  const int n = static_cast<int>(degrees.size());
  if (n < 2) return;
  std::int64_t total = 0;
  for (int d : degrees) {
    if (d < 1) return;
    total += d;
  }
  if (total != 2 * (n - 1)) return;
  detail::check_cap(detail::log_tree_count(degrees), cap, "tree enumeration");

  std::vector<int> code;
  for (int v = 1; v <= n; ++v) code.insert(code.end(), degrees[v - 1] - 1, v);
  do {
    fn(LabeledTree(n, detail::decode_pruefer(n, code)));
  } while (std::ranges::next_permutation(code).found);
}

inline std::vector<LabeledTree> enumerate_trees(const DegreeSequence& d,
                                                double cap = kDefaultCap) {
  std::vector<LabeledTree> out;
  for_each_tree(d.values(), [&](LabeledTree t) { out.push_back(std::move(t)); }, cap);
  return out;
}

// Calls fn(graph) for every 0/1 matrix with row sums a and column sums b,
// in lexicographic order of the row-major bit string.
template <typename Fn>
void for_each_bipartite(const BipartiteDegreeSequence& dd, Fn&& fn,
                        double cap = kDefaultCap) {
  if (!dd.sums_equal()) return;
  const int n = dd.n();
  const int m = dd.m();
  for (int a : dd.a.values()) {
    if (a > m) return;
  }
  for (int b : dd.b.values()) {
    if (b > n) return;
  }
  detail::check_cap(detail::log_matrix_bound(dd), cap, "bipartite enumeration");

  std::vector<int> row_need(dd.a.values().begin(), dd.a.values().end());
  std::vector<int> col_need(dd.b.values().begin(), dd.b.values().end());
  std::vector<BipartiteEdge> edges;

  // Cell (i, j), 0-based; returns nothing, reports through fn.
  std::function<void(int, int)> place = [&](int i, int j) {
    if (j == m) {
      if (row_need[i] != 0) return;
      ++i;
      j = 0;
    }
    if (i == n) {
      fn(LabeledBipartiteGraph(n, m, edges));
      return;
    }
    // 0 first: the row still fits in the cells to its right and the column
    // still fits in the rows below.
    if (row_need[i] <= m - j - 1 && col_need[j] <= n - i - 1) place(i, j + 1);
    if (row_need[i] > 0 && col_need[j] > 0) {
      --row_need[i];
      --col_need[j];
      edges.push_back({i + 1, j + 1});
      place(i, j + 1);
      edges.pop_back();
      ++row_need[i];
      ++col_need[j];
    }
  };
  place(0, 0);
}

inline std::vector<LabeledBipartiteGraph> enumerate_bipartite(const BipartiteDegreeSequence& dd,
                                                              double cap = kDefaultCap) {
  std::vector<LabeledBipartiteGraph> out;
  for_each_bipartite(dd, [&](LabeledBipartiteGraph g) { out.push_back(std::move(g)); }, cap);
  return out;
}

inline std::set<int> achievable_nu_set_tree(const DegreeSequence& d, double cap = kDefaultCap) {
  std::set<int> out;
  for_each_tree(d.values(), [&](const LabeledTree& t) { out.insert(tree_matching_number(t)); },
                cap);
  return out;
}

inline std::set<int> achievable_nu_set_bipartite(const BipartiteDegreeSequence& dd,
                                                 double cap = kDefaultCap) {
  std::set<int> out;
  for_each_bipartite(dd, [&](const LabeledBipartiteGraph& g) { out.insert(matching_number(g)); },
                     cap);
  return out;
}

// Every nonincreasing sequence of the given length with entries in
// [min_value, max_value], in lexicographically decreasing order.
template <typename Fn>
void for_each_nonincreasing_sequence(int length, int min_value, int max_value, Fn&& fn) {
  std::vector<int> values(static_cast<std::size_t>(length));
  std::function<void(int, int)> fill = [&](int pos, int ceiling) {
    if (pos == length) {
      fn(DegreeSequence(values));
      return;
    }
    for (int x = ceiling; x >= min_value; --x) {
      values[pos] = x;
      fill(pos + 1, x);
    }
  };
  fill(0, max_value);
}

// Every nonincreasing positive sequence of length n summing to 2(n - 1).
template <typename Fn>
void for_each_tree_sized_sequence(int n, Fn&& fn) {
  for_each_nonincreasing_sequence(n, 1, std::max(1, n - 1), [&](const DegreeSequence& d) {
    if (d.sum() == 2 * static_cast<std::int64_t>(n - 1)) fn(d);
  });
}

}  // namespace degseq::oracle
