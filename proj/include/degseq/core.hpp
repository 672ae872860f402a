#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

// Nonincreasing list of nonnegative degrees. Vertex positions are 1-based in
// every query that names a vertex (degree(i) is the degree of v_i).
class DegreeSequence {
 public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] < 0) {
        throw Error(ErrorCode::kInvalidSequence,
                    "negative entry at position " + std::to_string(i + 1));
      }
      if (i > 0 && values_[i] > values_[i - 1]) {
        throw Error(ErrorCode::kInvalidSequence,
                    "sequence is not nonincreasing at position " +
                        std::to_string(i + 1));
      }
    }
  }

  DegreeSequence(std::initializer_list<int> values)
      : DegreeSequence(std::vector<int>(values)) {}

  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(values_.size());
  }
  [[nodiscard]] bool empty() const noexcept { return values_.empty(); }
  [[nodiscard]] int degree(int i) const { return values_.at(i - 1); }
  [[nodiscard]] std::span<const int> values() const noexcept { return values_; }

  [[nodiscard]] std::int64_t sum() const noexcept {
    return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
  }

  // n_value(d): number of entries equal to value.
  [[nodiscard]] int count(int value) const noexcept {
    return static_cast<int>(std::count(values_.begin(), values_.end(), value));
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

struct BipartiteDegreeSequence {
  DegreeSequence a;
  DegreeSequence b;

  [[nodiscard]] int n() const noexcept { return a.size(); }
  [[nodiscard]] int m() const noexcept { return b.size(); }
  [[nodiscard]] bool sums_equal() const noexcept { return a.sum() == b.sum(); }

  friend bool operator==(const BipartiteDegreeSequence&,
                         const BipartiteDegreeSequence&) = default;
};

// Edge v_a w_b of a bipartite graph.
struct BipartiteEdge {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const BipartiteEdge&, const BipartiteEdge&) = default;
};

// Edge u v of a tree, normalized so that u < v.
struct TreeEdge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

inline TreeEdge make_tree_edge(int x, int y) noexcept {
  return x < y ? TreeEdge{x, y} : TreeEdge{y, x};
}

// Simple bipartite graph on labeled partite sets A = {v_1..v_n} and
// B = {w_1..w_m}, stored as a dense adjacency matrix.
class LabeledBipartiteGraph {
 public:
  LabeledBipartiteGraph() = default;

  LabeledBipartiteGraph(int n, int m, std::span<const BipartiteEdge> edges)
      : n_(n), m_(m) {
    if (n < 0 || m < 0) {
      throw Error(ErrorCode::kBadParams, "negative partite set size");
    }
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(m), 0);
    deg_a_.assign(static_cast<std::size_t>(n), 0);
    deg_b_.assign(static_cast<std::size_t>(m), 0);
    for (const auto& e : edges) {
      if (e.a < 1 || e.a > n || e.b < 1 || e.b > m) {
        throw Error(ErrorCode::kBadParams,
                    "edge v" + std::to_string(e.a) + " w" + std::to_string(e.b) +
                        " is out of range");
      }
      auto& cell = adj_[index(e.a, e.b)];
      if (cell != 0) {
        throw Error(ErrorCode::kBadParams,
                    "duplicate edge v" + std::to_string(e.a) + " w" +
                        std::to_string(e.b));
      }
      cell = 1;
      ++deg_a_[e.a - 1];
      ++deg_b_[e.b - 1];
    }
  }

  LabeledBipartiteGraph(int n, int m, std::initializer_list<BipartiteEdge> edges)
      : LabeledBipartiteGraph(n, m, std::span<const BipartiteEdge>(edges.begin(), edges.size())) {}

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] int m() const noexcept { return m_; }

  [[nodiscard]] bool has_edge(int i, int j) const noexcept {
    return i >= 1 && i <= n_ && j >= 1 && j <= m_ && adj_[index(i, j)] != 0;
  }

  [[nodiscard]] int degree_a(int i) const { return deg_a_.at(i - 1); }
  [[nodiscard]] int degree_b(int j) const { return deg_b_.at(j - 1); }
  [[nodiscard]] const std::vector<int>& degrees_a() const noexcept { return deg_a_; }
  [[nodiscard]] const std::vector<int>& degrees_b() const noexcept { return deg_b_; }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    return static_cast<std::size_t>(
        std::accumulate(deg_a_.begin(), deg_a_.end(), 0));
  }

  // Sorted by (a, b).
  [[nodiscard]] std::vector<BipartiteEdge> edges() const {
    std::vector<BipartiteEdge> out;
    out.reserve(edge_count());
    for (int i = 1; i <= n_; ++i) {
      for (int j = 1; j <= m_; ++j) {
        if (adj_[index(i, j)] != 0) out.push_back({i, j});
      }
    }
    return out;
  }

  [[nodiscard]] std::vector<int> neighbors_a(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= m_; ++j) {
      if (adj_[index(i, j)] != 0) out.push_back(j);
    }
    return out;
  }

  // True iff the per-vertex degrees equal (a, b) position by position.
  [[nodiscard]] bool realizes(const BipartiteDegreeSequence& dd) const {
    return std::ranges::equal(deg_a_, dd.a.values()) &&
           std::ranges::equal(deg_b_, dd.b.values());
  }

  friend bool operator==(const LabeledBipartiteGraph&,
                         const LabeledBipartiteGraph&) = default;

 private:
  [[nodiscard]] std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(j - 1);
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<int> deg_a_;
  std::vector<int> deg_b_;
};

// Labeled tree on v_1..v_n.
class LabeledTree {
 public:
  LabeledTree(int n, std::vector<TreeEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw Error(ErrorCode::kBadParams, "tree needs at least one vertex");
    if (static_cast<int>(edges_.size()) != n - 1) {
      throw Error(ErrorCode::kBadParams,
                  "tree on " + std::to_string(n) + " vertices needs " +
                      std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges_.size()));
    }
    adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto& e : edges_) {
      if (e.u < 1 || e.u > n || e.v < 1 || e.v > n || e.u == e.v) {
        throw Error(ErrorCode::kBadParams, "invalid tree edge");
      }
      e = make_tree_edge(e.u, e.v);
      adjacency_[e.u - 1].push_back(e.v);
      adjacency_[e.v - 1].push_back(e.u);
    }
    std::ranges::sort(edges_);
    if (std::ranges::adjacent_find(edges_) != edges_.end()) {
      throw Error(ErrorCode::kBadParams, "duplicate tree edge");
    }
    for (auto& nb : adjacency_) std::ranges::sort(nb);

    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{1};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adjacency_[x - 1]) {
        if (seen[y - 1] == 0) {
          seen[y - 1] = 1;
          ++reached;
          stack.push_back(y);
        }
      }
    }
    if (reached != n) throw Error(ErrorCode::kBadParams, "graph is not connected");
  }

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<int>& neighbors(int v) const {
    return adjacency_.at(v - 1);
  }
  [[nodiscard]] int degree(int v) const {
    return static_cast<int>(adjacency_.at(v - 1).size());
  }

  [[nodiscard]] std::vector<int> degrees() const {
    std::vector<int> out;
    out.reserve(adjacency_.size());
    for (const auto& nb : adjacency_) out.push_back(static_cast<int>(nb.size()));
    return out;
  }

  friend bool operator==(const LabeledTree& x, const LabeledTree& y) {
    return x.n_ == y.n_ && x.edges_ == y.edges_;
  }

 private:
  int n_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

template <typename Edge>
struct BasicMatching {
  std::vector<Edge> edges;
  [[nodiscard]] int size() const noexcept { return static_cast<int>(edges.size()); }
};

using Matching = BasicMatching<BipartiteEdge>;
using TreeMatching = BasicMatching<TreeEdge>;

struct VertexCover {
  std::vector<int> a;  // indices i of v_i in the cover
  std::vector<int> b;  // indices j of w_j in the cover

  [[nodiscard]] int size() const noexcept {
    return static_cast<int>(a.size() + b.size());
  }

  [[nodiscard]] bool covers(const LabeledBipartiteGraph& g) const {
    std::vector<char> in_a(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<char> in_b(static_cast<std::size_t>(g.m()) + 1, 0);
    for (int i : a) in_a.at(static_cast<std::size_t>(i)) = 1;
    for (int j : b) in_b.at(static_cast<std::size_t>(j)) = 1;
    return std::ranges::all_of(g.edges(), [&](const BipartiteEdge& e) {
      return in_a[e.a] != 0 || in_b[e.b] != 0;
    });
  }
};

// True iff `matching` is a set of vertex-disjoint edges of g.
inline bool is_matching_of(const LabeledBipartiteGraph& g, const Matching& matching) {
  std::vector<char> used_a(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<char> used_b(static_cast<std::size_t>(g.m()) + 1, 0);
  for (const auto& e : matching.edges) {
    if (!g.has_edge(e.a, e.b) || used_a[e.a] != 0 || used_b[e.b] != 0) return false;
    used_a[e.a] = 1;
    used_b[e.b] = 1;
  }
  return true;
}

namespace detail {

inline bool try_augment(const LabeledBipartiteGraph& g, int i,
                        std::vector<int>& mate_of_b, std::vector<char>& visited_b) {
  for (int j = 1; j <= g.m(); ++j) {
    if (!g.has_edge(i, j) || visited_b[j] != 0) continue;
    visited_b[j] = 1;
    if (mate_of_b[j] == 0 || try_augment(g, mate_of_b[j], mate_of_b, visited_b)) {
      mate_of_b[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Augmenting-path maximum matching. Free A-vertices are scanned in
// increasing index and neighbors in increasing index, so the result is a
// pure function of the graph.
inline Matching maximum_matching(const LabeledBipartiteGraph& g) {
  std::vector<int> mate_of_b(static_cast<std::size_t>(g.m()) + 1, 0);
  std::vector<char> visited_b(static_cast<std::size_t>(g.m()) + 1, 0);
  for (int i = 1; i <= g.n(); ++i) {
    std::ranges::fill(visited_b, 0);
    detail::try_augment(g, i, mate_of_b, visited_b);
  }
  Matching out;
  for (int j = 1; j <= g.m(); ++j) {
    if (mate_of_b[j] != 0) out.edges.push_back({mate_of_b[j], j});
  }
  std::ranges::sort(out.edges);
  return out;
}

inline int matching_number(const LabeledBipartiteGraph& g) {
  return maximum_matching(g).size();
}

// König extraction: with Z the set of vertices reachable from exposed
// A-vertices by alternating paths, (A \ Z) ∪ (B ∩ Z) is a minimum cover.
inline VertexCover minimum_vertex_cover(const LabeledBipartiteGraph& g,
                                        const Matching& max_matching) {
  if (!is_matching_of(g, max_matching)) {
    throw Error(ErrorCode::kBadParams, "edge set is not a matching of the graph");
  }
  std::vector<int> mate_of_a(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<int> mate_of_b(static_cast<std::size_t>(g.m()) + 1, 0);
  for (const auto& e : max_matching.edges) {
    mate_of_a[e.a] = e.b;
    mate_of_b[e.b] = e.a;
  }

  std::vector<char> reach_a(static_cast<std::size_t>(g.n()) + 1, 0);
  std::vector<char> reach_b(static_cast<std::size_t>(g.m()) + 1, 0);
  std::queue<int> frontier;
  for (int i = 1; i <= g.n(); ++i) {
    if (mate_of_a[i] == 0) {
      reach_a[i] = 1;
      frontier.push(i);
    }
  }
  while (!frontier.empty()) {
    const int i = frontier.front();
    frontier.pop();
    for (int j = 1; j <= g.m(); ++j) {
      if (!g.has_edge(i, j) || mate_of_a[i] == j || reach_b[j] != 0) continue;
      reach_b[j] = 1;
      const int next = mate_of_b[j];
      if (next != 0 && reach_a[next] == 0) {
        reach_a[next] = 1;
        frontier.push(next);
      }
    }
  }

  VertexCover cover;
  for (int i = 1; i <= g.n(); ++i) {
    if (reach_a[i] == 0) cover.a.push_back(i);
  }
  for (int j = 1; j <= g.m(); ++j) {
    if (reach_b[j] != 0) cover.b.push_back(j);
  }
  if (cover.size() != max_matching.size()) {
    throw Error(ErrorCode::kNonMaximumMatching,
                "cover of size " + std::to_string(cover.size()) +
                    " extracted for matching of size " +
                    std::to_string(max_matching.size()));
  }
  return cover;
}

// Greedy leaf matching: walking a BFS order backwards, match every vertex
// with its parent when both are still free.
inline TreeMatching tree_maximum_matching(const LabeledTree& t) {
  const int n = t.n();
  std::vector<int> order;
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(1);
  parent[1] = -1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (int y : t.neighbors(x)) {
      if (parent[y] == 0) {
        parent[y] = x;
        order.push_back(y);
      }
    }
  }
  std::vector<char> matched(static_cast<std::size_t>(n) + 1, 0);
  TreeMatching out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int x = *it;
    const int p = parent[x];
    if (p > 0 && matched[x] == 0 && matched[p] == 0) {
      matched[x] = matched[p] = 1;
      out.edges.push_back(make_tree_edge(x, p));
    }
  }
  std::ranges::sort(out.edges);
  return out;
}

inline int tree_matching_number(const LabeledTree& t) {
  return tree_maximum_matching(t).size();
}

// A tree as a bipartite graph under its proper 2-coloring rooted at v_1.
// side[v] is 0 for A and 1 for B; position[v] is the 1-based index of v
// within its side.
struct TreeBipartition {
  LabeledBipartiteGraph graph;
  std::vector<int> side;
  std::vector<int> position;
};

inline TreeBipartition bipartition(const LabeledTree& t) {
  const int n = t.n();
  std::vector<int> side(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> stack{1};
  side[1] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : t.neighbors(x)) {
      if (side[y] < 0) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      }
    }
  }
  std::vector<int> position(static_cast<std::size_t>(n) + 1, 0);
  int count[2] = {0, 0};
  for (int v = 1; v <= n; ++v) position[v] = ++count[side[v]];
  std::vector<BipartiteEdge> edges;
  for (const auto& e : t.edges()) {
    const int x = side[e.u] == 0 ? e.u : e.v;
    const int y = side[e.u] == 0 ? e.v : e.u;
    edges.push_back({position[x], position[y]});
  }
  return {LabeledBipartiteGraph(count[0], count[1], edges), std::move(side),
          std::move(position)};
}

// Ryser-style greedy realization: v_i (in index order) is joined to the a_i
// B-vertices of largest residual degree, ties broken toward smaller index.
// Succeeds iff (a, b) is a bipartite degree sequence. This is also the
// canonical realization that swap canonicalization converges to.
inline std::optional<LabeledBipartiteGraph> canonical_realization(
    const BipartiteDegreeSequence& dd) {
  if (!dd.sums_equal()) return std::nullopt;
  std::vector<int> residual(dd.b.values().begin(), dd.b.values().end());
  std::vector<int> columns(static_cast<std::size_t>(dd.m()));
  std::vector<BipartiteEdge> edges;
  for (int i = 1; i <= dd.n(); ++i) {
    const int need = dd.a.degree(i);
    if (need > dd.m()) return std::nullopt;
    std::iota(columns.begin(), columns.end(), 1);
    std::ranges::stable_sort(columns, [&](int x, int y) {
      return residual[x - 1] > residual[y - 1];
    });
    for (int r = 0; r < need; ++r) {
      const int j = columns[r];
      if (residual[j - 1] == 0) return std::nullopt;
      --residual[j - 1];
      edges.push_back({i, j});
    }
  }
  std::ranges::sort(edges);
  return LabeledBipartiteGraph(dd.n(), dd.m(), edges);
}

}  // namespace degseq
