#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/cuts.hpp"
#include "degseq/error.hpp"
#include "degseq/flow.hpp"

namespace degseq {

// Bipartite swap: v_i w_j and v_{i2} w_{j2} are edges, v_i w_{j2} and
// v_{i2} w_j are not; the two edges are replaced by the two non-edges.
struct SwapStep {
  int i = 0;
  int i2 = 0;
  int j = 0;
  int j2 = 0;
  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

inline SwapStep inverse(const SwapStep& s) noexcept { return {s.i, s.i2, s.j2, s.j}; }

inline bool is_valid_swap(const LabeledBipartiteGraph& g, const SwapStep& s) {
  return g.has_edge(s.i, s.j) && g.has_edge(s.i2, s.j2) && !g.has_edge(s.i, s.j2) &&
         !g.has_edge(s.i2, s.j);
}

inline LabeledBipartiteGraph apply_swap(const LabeledBipartiteGraph& g, const SwapStep& s) {
  if (!is_valid_swap(g, s)) {
    throw Error(ErrorCode::kInvalidSwap,
                "swap (" + std::to_string(s.i) + ", " + std::to_string(s.i2) + ", " +
                    std::to_string(s.j) + ", " + std::to_string(s.j2) +
                    ") does not match the edge/non-edge pattern");
  }
  auto edges = g.edges();
  for (auto& e : edges) {
    if (e == BipartiteEdge{s.i, s.j}) {
      e = {s.i, s.j2};
    } else if (e == BipartiteEdge{s.i2, s.j2}) {
      e = {s.i2, s.j};
    }
  }
  std::ranges::sort(edges);
  return LabeledBipartiteGraph(g.n(), g.m(), edges);
}

inline LabeledBipartiteGraph replay_swaps(LabeledBipartiteGraph g,
                                          const std::vector<SwapStep>& steps) {
  for (const auto& s : steps) g = apply_swap(g, s);
  return g;
}

namespace detail {

class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(const LabeledBipartiteGraph& g)
      : n_(g.n()), m_(g.m()),
        cells_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(m_), 0) {
    for (const auto& e : g.edges()) at(e.a, e.b) = 1;
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int m() const noexcept { return m_; }
  [[nodiscard]] bool get(int i, int j) const { return cells_[index(i, j)] != 0; }
  std::uint8_t& at(int i, int j) { return cells_[index(i, j)]; }

  void swap(const SwapStep& s) {
    at(s.i, s.j) = 0;
    at(s.i2, s.j2) = 0;
    at(s.i, s.j2) = 1;
    at(s.i2, s.j) = 1;
  }

 private:
  [[nodiscard]] std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_;
  int m_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace detail

// Swaps that turn g into the canonical realization of its degrees (the one
// built by canonical_realization). Rows are fixed in index order; row i is
// steered toward the deg(v_i) columns of largest residual degree over rows
// >= i. If w_j is wanted but missing and w_{j2} is present but unwanted,
// then w_j has at least as many neighbors below row i as w_{j2} has plus
// one, so some later row holds w_j without w_{j2} and the swap exists.
inline std::vector<SwapStep> canonicalizing_swaps(const LabeledBipartiteGraph& g) {
  detail::AdjacencyMatrix mat(g);
  const int n = mat.n();
  const int m = mat.m();
  std::vector<SwapStep> steps;
  std::vector<int> residual(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> columns(static_cast<std::size_t>(m));
  std::vector<char> wanted(static_cast<std::size_t>(m) + 1, 0);

  for (int i = 1; i <= n; ++i) {
    std::ranges::fill(residual, 0);
    for (int r = i; r <= n; ++r) {
      for (int j = 1; j <= m; ++j) residual[j] += mat.get(r, j) ? 1 : 0;
    }
    std::iota(columns.begin(), columns.end(), 1);
    std::ranges::stable_sort(columns, [&](int x, int y) { return residual[x] > residual[y]; });
    std::ranges::fill(wanted, 0);
    for (int r = 0; r < g.degree_a(i); ++r) wanted[columns[r]] = 1;

    while (true) {
      int add = 0;
      int drop = 0;
      for (int j = 1; j <= m && (add == 0 || drop == 0); ++j) {
        if (add == 0 && wanted[j] != 0 && !mat.get(i, j)) add = j;
        if (drop == 0 && wanted[j] == 0 && mat.get(i, j)) drop = j;
      }
      if (add == 0) break;
      int partner = 0;
      for (int r = i + 1; r <= n; ++r) {
        if (mat.get(r, add) && !mat.get(r, drop)) {
          partner = r;
          break;
        }
      }
      if (partner == 0) {
        throw Error(ErrorCode::kInvalidSwap, "canonicalization found no swap partner");
      }
      const SwapStep step{i, partner, drop, add};
      mat.swap(step);
      steps.push_back(step);
    }
  }
  return steps;
}

// Swap sequence turning g1 into g2: canonicalize g1, then undo the
// canonicalization of g2.
inline std::vector<SwapStep> swap_path(const LabeledBipartiteGraph& g1,
                                       const LabeledBipartiteGraph& g2) {
  if (g1.n() != g2.n() || g1.m() != g2.m() || g1.degrees_a() != g2.degrees_a() ||
      g1.degrees_b() != g2.degrees_b()) {
    throw Error(ErrorCode::kMismatchedSequences,
                "graphs do not realize the same labeled bipartite degree sequence");
  }
  auto path = canonicalizing_swaps(g1);
  const auto back = canonicalizing_swaps(g2);
  for (auto it = back.rbegin(); it != back.rend(); ++it) path.push_back(inverse(*it));
  return path;
}

// A swap walk with the matching number of every graph along it:
// nu[0] is nu(start), nu[t] is nu after steps[t - 1].
struct SwapWalk {
  LabeledBipartiteGraph start;
  std::vector<SwapStep> steps;
  std::vector<int> nu;
};

inline SwapWalk track_matching_numbers(const LabeledBipartiteGraph& start,
                                       std::vector<SwapStep> steps) {
  SwapWalk walk{start, std::move(steps), {}};
  walk.nu.reserve(walk.steps.size() + 1);
  LabeledBipartiteGraph g = start;
  walk.nu.push_back(matching_number(g));
  for (const auto& s : walk.steps) {
    g = apply_swap(g, s);
    walk.nu.push_back(matching_number(g));
  }
  return walk;
}

namespace detail {

inline LabeledBipartiteGraph flow_witness(const BipartiteDegreeSequence& dd, int nu) {
  auto outcome = realize_bipartite_with_nu(dd, nu);
  if (auto* found = std::get_if<FlowRealization>(&outcome)) return std::move(found->graph);
  throw Error(ErrorCode::kOutOfRange,
              "no realization with nu = " + std::to_string(nu) + ": " +
                  std::get<Infeasible>(outcome).reason);
}

}  // namespace detail

// Walk from a realization with minimum matching number to one with
// maximum matching number.
inline SwapWalk matching_number_walk(const BipartiteDegreeSequence& dd) {
  const auto interval = matching_interval_bipartite(dd);
  if (interval.empty) {
    throw Error(ErrorCode::kOutOfRange, "sequence has no bipartite realization");
  }
  const auto low = detail::flow_witness(dd, interval.nu_min);
  const auto high = detail::flow_witness(dd, interval.nu_max);
  return track_matching_numbers(low, swap_path(low, high));
}

// Realization with matching number nu, found on the swap walk between the
// extreme realizations. Consecutive graphs on the walk differ in matching
// number by at most one, so every value in between is visited.
inline LabeledBipartiteGraph interpolate_nu(const BipartiteDegreeSequence& dd, int nu) {
  const auto interval = matching_interval_bipartite(dd);
  if (interval.empty || nu < interval.nu_min || nu > interval.nu_max) {
    throw Error(ErrorCode::kOutOfRange,
                interval.empty ? std::string("sequence has no bipartite realization")
                               : "nu = " + std::to_string(nu) + " outside [" +
                                     std::to_string(interval.nu_min) + ", " +
                                     std::to_string(interval.nu_max) + "]");
  }
  const auto walk = matching_number_walk(dd);
  LabeledBipartiteGraph g = walk.start;
  for (std::size_t t = 0;; ++t) {
    if (walk.nu[t] == nu) return g;
    if (t == walk.steps.size()) break;
    g = apply_swap(g, walk.steps[t]);
  }
  throw Error(ErrorCode::kOutOfRange, "swap walk skipped nu = " + std::to_string(nu));
}

}  // namespace degseq
