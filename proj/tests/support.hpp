#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "degseq/degseq.hpp"

// Brute-force references used by the tests. None of them calls the code
// under test beyond the plain data types.
namespace testing_support {

using degseq::BipartiteDegreeSequence;
using degseq::BipartiteEdge;
using degseq::DegreeSequence;

inline BipartiteDegreeSequence bds(std::vector<int> a, std::vector<int> b) {
  return {DegreeSequence(std::move(a)), DegreeSequence(std::move(b))};
}

// Largest set of pairwise disjoint edges, by subset enumeration.
inline int brute_matching_number(const std::vector<std::pair<int, int>>& edges) {
  const auto count = edges.size();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << count); ++mask) {
    std::set<int> left;
    std::set<int> right;
    bool ok = true;
    int size = 0;
    for (std::size_t e = 0; e < count && ok; ++e) {
      if ((mask >> e & 1u) == 0) continue;
      ok = left.insert(edges[e].first).second && right.insert(edges[e].second).second;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Every way of giving each A-vertex in turn an unused neighbour or nothing.
inline int brute_matching_number(const degseq::LabeledBipartiteGraph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.m()) + 1, 0);
  std::function<int(int)> go = [&](int i) {
    if (i > g.n()) return 0;
    int best = go(i + 1);
    for (int j = 1; j <= g.m(); ++j) {
      if (!g.has_edge(i, j) || used[j]) continue;
      used[j] = 1;
      best = std::max(best, 1 + go(i + 1));
      used[j] = 0;
    }
    return best;
  };
  return go(1);
}

inline int brute_matching_number(const degseq::LabeledTree& t) {
  // Tree edges share a vertex set, so encode both ends on one side.
  const auto& edges = t.edges();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::set<int> used;
    bool ok = true;
    int size = 0;
    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
      if ((mask >> e & 1u) == 0) continue;
      ok = used.insert(edges[e].u).second && used.insert(edges[e].v).second;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Smallest vertex cover of a bipartite graph, by subset enumeration.
inline int brute_cover_size(const degseq::LabeledBipartiteGraph& g) {
  const int total = g.n() + g.m();
  int best = total;
  for (std::uint32_t mask = 0; mask < (1u << total); ++mask) {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if ((mask >> (e.a - 1) & 1u) == 0 && (mask >> (g.n() + e.b - 1) & 1u) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min(best, std::popcount(mask));
  }
  return best;
}

// Minimum s-t cut by enumerating every source side.
inline std::int64_t brute_min_cut(const degseq::FlowNetwork& net) {
  std::vector<int> inner;
  for (int x = 0; x < net.node_count(); ++x) {
    if (x != net.source() && x != net.sink()) inner.push_back(x);
  }
  std::int64_t best = -1;
  std::vector<char> side(static_cast<std::size_t>(net.node_count()), 0);
  for (std::uint32_t mask = 0; mask < (1u << inner.size()); ++mask) {
    std::ranges::fill(side, 0);
    side[net.source()] = 1;
    for (std::size_t r = 0; r < inner.size(); ++r) side[inner[r]] = (mask >> r & 1u) ? 1 : 0;
    std::int64_t cut = 0;
    for (const auto& arc : net.arcs()) {
      if (side[arc.tail] && !side[arc.head]) cut += arc.capacity;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

// Arc list of N(d_A, d_B, nu, k) written out from the definition, keyed by
// (tail, head) with node ids s = 0, v_i = i, w_j = n + j, t = n + m + 1.
inline std::map<std::pair<int, int>, std::int64_t> reference_arcs(
    const BipartiteDegreeSequence& dd, int nu, int k) {
  const int n = dd.n();
  const int m = dd.m();
  std::map<std::pair<int, int>, std::int64_t> arcs;
  for (int i = 1; i <= n; ++i) arcs[{0, i}] = dd.a.degree(i) - (i <= nu ? 1 : 0);
  for (int j = 1; j <= m; ++j) arcs[{n + j, n + m + 1}] = dd.b.degree(j) - (j <= nu ? 1 : 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      const bool diagonal = i + j == nu + 1;
      const bool block = i > k && j > nu - k;
      if (!diagonal && !block) arcs[{i, n + j}] = 1;
    }
  }
  return arcs;
}

// Number of 0/1 matrices with the given margins, filling one column at a
// time and memoizing on the sorted multiset of remaining row sums.
inline std::int64_t count_matrices(const BipartiteDegreeSequence& dd) {
  if (!dd.sums_equal()) return 0;
  std::map<std::pair<int, std::vector<int>>, std::int64_t> memo;
  const std::vector<int> cols(dd.b.values().begin(), dd.b.values().end());
  std::function<std::int64_t(int, std::vector<int>)> go = [&](int col, std::vector<int> rows) {
    if (col == static_cast<int>(cols.size())) {
      return std::ranges::all_of(rows, [](int r) { return r == 0; }) ? std::int64_t{1}
                                                                      : std::int64_t{0};
    }
    std::ranges::sort(rows);
    const auto key = std::make_pair(col, rows);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    // Multiset choices: pick how many rows of each distinct residual value
    // receive a 1 in this column, weighted by binomials.
    std::map<int, int> groups;
    for (int r : rows) ++groups[r];
    std::vector<std::pair<int, int>> g(groups.begin(), groups.end());
    std::int64_t total = 0;
    std::function<void(std::size_t, int, std::int64_t, std::vector<int>&)> pick =
        [&](std::size_t idx, int left, std::int64_t ways, std::vector<int>& next) {
          if (idx == g.size()) {
            if (left == 0) total += ways * go(col + 1, next);
            return;
          }
          const auto [value, mult] = g[idx];
          for (int take = 0; take <= mult && take <= left; ++take) {
            if (take > 0 && value == 0) break;
            std::int64_t binom = 1;
            for (int t = 0; t < take; ++t) binom = binom * (mult - t) / (t + 1);
            for (int t = 0; t < mult; ++t) next.push_back(t < take ? value - 1 : value);
            pick(idx + 1, left - take, ways * binom, next);
            next.resize(next.size() - mult);
          }
        };
    std::vector<int> next;
    pick(0, cols[col], 1, next);
    memo[key] = total;
    return total;
  };
  return go(0, std::vector<int>(dd.a.values().begin(), dd.a.values().end()));
}

// A random graphical pair: degrees of a random bipartite graph, sorted.
inline BipartiteDegreeSequence random_graphical(std::mt19937& rng, int max_n, int max_m,
                                                int max_deg) {
  std::uniform_int_distribution<int> size_n(1, max_n);
  std::uniform_int_distribution<int> size_m(1, max_m);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = size_n(rng);
  const int m = size_m(rng);
  const double p = coin(rng);
  std::vector<int> a(n, 0);
  std::vector<int> b(m, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      if (a[i] < max_deg && b[j] < max_deg && coin(rng) < p) {
        ++a[i];
        ++b[j];
      }
    }
  }
  std::ranges::sort(a, std::greater<>{});
  std::ranges::sort(b, std::greater<>{});
  return bds(std::move(a), std::move(b));
}

// A random pair with independent sorted entries; usually not graphical.
inline BipartiteDegreeSequence random_pair(std::mt19937& rng, int max_n, int max_m, int max_deg) {
  std::uniform_int_distribution<int> size_n(1, max_n);
  std::uniform_int_distribution<int> size_m(1, max_m);
  std::uniform_int_distribution<int> entry(0, max_deg);
  std::vector<int> a(size_n(rng));
  std::vector<int> b(size_m(rng));
  for (auto& x : a) x = entry(rng);
  for (auto& x : b) x = entry(rng);
  std::ranges::sort(a, std::greater<>{});
  std::ranges::sort(b, std::greater<>{});
  return bds(std::move(a), std::move(b));
}

}  // namespace testing_support
