#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/error.hpp"

namespace degseq {

struct TreeIntervalResult {
  int nu_min = 0;
  int nu_max = 0;
  friend bool operator==(const TreeIntervalResult&, const TreeIntervalResult&) = default;
};

// n(d) >= 2, every entry positive, and n_1(d) = 2 + sum over d_i >= 2 of (d_i - 2).
inline bool is_tree_degree_sequence(const DegreeSequence& d) {
  if (d.size() < 2) return false;
  std::int64_t excess = 0;
  int leaves = 0;
  for (int x : d.values()) {
    if (x < 1) return false;
    if (x == 1) {
      ++leaves;
    } else {
      excess += x - 2;
    }
  }
  return leaves == 2 + excess;
}

namespace detail {

inline void require_tree_sequence(const DegreeSequence& d) {
  if (!is_tree_degree_sequence(d)) {
    throw Error(ErrorCode::kInvalidSequence, "not a tree degree sequence");
  }
  if (d.size() < 3) {
    throw Error(ErrorCode::kInvalidSequence,
                "matching-number interval needs at least 3 vertices");
  }
}

struct LabeledDegree {
  int label = 0;
  int degree = 0;
};

// Builds a tree on the given labels with exactly the given degrees and the
// largest possible matching number. Degree-2 entries are set aside; the
// rest becomes a caterpillar whose spine is the vertices of degree >= 3 in
// label order, with leaves hung so every spine vertex reaches its degree.
// Each degree-2 vertex is then inserted by subdividing an edge at a vertex
// left exposed by a maximum matching (or the smallest edge when the
// matching is perfect), which raises the matching number whenever it can
// still grow.
inline std::vector<TreeEdge> max_matching_tree_edges(std::span<const LabeledDegree> vertices) {
  std::vector<int> label_of{0};  // local id -> label, 1-based
  std::vector<int> spine;
  std::vector<int> leaves;
  std::vector<int> twos;
  for (const auto& v : vertices) {
    if (v.degree >= 3) {
      spine.push_back(v.label);
    } else if (v.degree == 2) {
      twos.push_back(v.label);
    } else {
      leaves.push_back(v.label);
    }
  }
  auto degree_for = [&](int label) {
    for (const auto& v : vertices) {
      if (v.label == label) return v.degree;
    }
    return 0;
  };

  std::vector<TreeEdge> local;  // edges in local ids
  auto local_id = [&](int label) {
    label_of.push_back(label);
    return static_cast<int>(label_of.size()) - 1;
  };

  if (spine.empty()) {
    if (leaves.size() != 2) {
      throw Error(ErrorCode::kInvalidSequence, "not a tree degree sequence");
    }
    const int x = local_id(leaves[0]);
    const int y = local_id(leaves[1]);
    local.push_back(make_tree_edge(x, y));
  } else {
    std::vector<int> spine_ids;
    for (int label : spine) spine_ids.push_back(local_id(label));
    std::size_t next_leaf = 0;
    for (std::size_t k = 0; k < spine_ids.size(); ++k) {
      if (k + 1 < spine_ids.size()) {
        local.push_back(make_tree_edge(spine_ids[k], spine_ids[k + 1]));
      }
      const int path_neighbors = static_cast<int>(k > 0) +
                                 static_cast<int>(k + 1 < spine_ids.size());
      const int hang = degree_for(spine[k]) - path_neighbors;
      for (int r = 0; r < hang; ++r) {
        if (next_leaf >= leaves.size()) {
          throw Error(ErrorCode::kInvalidSequence, "not a tree degree sequence");
        }
        const int leaf = local_id(leaves[next_leaf++]);
        local.push_back(make_tree_edge(spine_ids[k], leaf));
      }
    }
    if (next_leaf != leaves.size()) {
      throw Error(ErrorCode::kInvalidSequence, "not a tree degree sequence");
    }
  }

  for (int label : twos) {
    const int order = static_cast<int>(label_of.size()) - 1;
    const LabeledTree current(order, local);
    const TreeMatching matching = tree_maximum_matching(current);
    std::vector<char> matched(static_cast<std::size_t>(order) + 1, 0);
    for (const auto& e : matching.edges) matched[e.u] = matched[e.v] = 1;

    auto by_label = [&](int x, int y) { return label_of[x] < label_of[y]; };
    std::optional<int> exposed;
    for (int x = 1; x <= order; ++x) {
      if (matched[x] == 0 && (!exposed || by_label(x, *exposed))) exposed = x;
    }

    TreeEdge target;
    if (exposed) {
      const auto& nb = current.neighbors(*exposed);
      const int w = *std::ranges::min_element(nb, by_label);
      target = make_tree_edge(*exposed, w);
    } else {
      auto key = [&](const TreeEdge& e) {
        const int x = label_of[e.u];
        const int y = label_of[e.v];
        return std::pair{std::min(x, y), std::max(x, y)};
      };
      target = *std::ranges::min_element(local, {}, key);
    }
    const int fresh = local_id(label);
    std::erase(local, target);
    local.push_back(make_tree_edge(target.u, fresh));
    local.push_back(make_tree_edge(fresh, target.v));
  }

  std::vector<TreeEdge> out;
  out.reserve(local.size());
  for (const auto& e : local) out.push_back(make_tree_edge(label_of[e.u], label_of[e.v]));
  std::ranges::sort(out);
  return out;
}

// Recursion on s = sum over vertices outside the cover of (degree - 1).
// `in_cover` is indexed by label.
inline std::vector<TreeEdge> cover_tree_edges(std::vector<LabeledDegree> vertices,
                                              const std::vector<char>& in_cover) {
  std::int64_t s = 0;
  for (const auto& v : vertices) {
    if (in_cover[v.label] == 0) s += v.degree - 1;
  }
  if (s == 0) return max_matching_tree_edges(vertices);

  // p: outside the cover, degree > 1, largest label.
  // q: in the cover, minimum degree, largest label among ties.
  std::optional<std::size_t> p;
  std::optional<std::size_t> q;
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    const auto& v = vertices[r];
    if (in_cover[v.label] == 0) {
      if (v.degree > 1 && (!p || v.label > vertices[*p].label)) p = r;
    } else if (!q || v.degree < vertices[*q].degree ||
               (v.degree == vertices[*q].degree && v.label > vertices[*q].label)) {
      q = r;
    }
  }
  if (!p || !q) {
    throw Error(ErrorCode::kHypothesisViolated, "cover recursion lost its pivot");
  }
  const int p_label = vertices[*p].label;
  const int q_label = vertices[*q].label;
  const int q_degree = vertices[*q].degree;

  // The q_degree - 1 leaves of largest label become the star around v_q.
  std::vector<int> star;
  for (auto it = vertices.rbegin(); it != vertices.rend() && static_cast<int>(star.size()) < q_degree - 1; ++it) {
    if (it->degree == 1 && in_cover[it->label] == 0) star.push_back(it->label);
  }
  if (static_cast<int>(star.size()) != q_degree - 1) {
    throw Error(ErrorCode::kHypothesisViolated, "not enough leaves for the cover star");
  }

  std::vector<LabeledDegree> reduced;
  reduced.reserve(vertices.size());
  for (const auto& v : vertices) {
    if (v.label == q_label || std::ranges::find(star, v.label) != star.end()) continue;
    reduced.push_back(v);
    if (v.label == p_label) --reduced.back().degree;
  }
  if (reduced.size() < 3) {
    throw Error(ErrorCode::kHypothesisViolated, "cover recursion reached fewer than 3 vertices");
  }

  std::vector<TreeEdge> out = cover_tree_edges(std::move(reduced), in_cover);
  out.push_back(make_tree_edge(p_label, q_label));
  for (int leaf : star) out.push_back(make_tree_edge(q_label, leaf));
  std::ranges::sort(out);
  return out;
}

}  // namespace detail

inline int nu_max_tree(const DegreeSequence& d) {
  detail::require_tree_sequence(d);
  return std::min(d.size() / 2, d.size() - d.count(1));
}

// Smallest k with d_1 + ... + d_k >= n - 1.
inline int nu_min_tree(const DegreeSequence& d) {
  detail::require_tree_sequence(d);
  std::int64_t prefix = 0;
  for (int k = 1; k <= d.size(); ++k) {
    prefix += d.degree(k);
    if (prefix >= d.size() - 1) return k;
  }
  return d.size();  // unreachable: the full sum is 2(n - 1)
}

inline TreeIntervalResult matching_interval_tree(const DegreeSequence& d) {
  return {nu_min_tree(d), nu_max_tree(d)};
}

// Tree with d_T(v_i) = d_i and matching number nu_max_tree(d).
inline LabeledTree realize_tree_nu_max(const DegreeSequence& d) {
  detail::require_tree_sequence(d);
  std::vector<detail::LabeledDegree> vertices;
  for (int i = 1; i <= d.size(); ++i) vertices.push_back({i, d.degree(i)});
  return LabeledTree(d.size(), detail::max_matching_tree_edges(vertices));
}

// Tree with d_T(v_i) = d_i in which {v_i : i in cover} is a minimum vertex
// cover. Requires (i) d_i > 1 on the cover, (ii) |cover| <= n/2 and
// (iii) the cover's degree sum is at least the rest's.
inline LabeledTree realize_tree_with_cover(const DegreeSequence& d,
                                           std::span<const int> cover) {
  detail::require_tree_sequence(d);
  const int n = d.size();
  std::vector<char> in_cover(static_cast<std::size_t>(n) + 1, 0);
  for (int i : cover) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::kBadParams, "cover index " + std::to_string(i) + " out of range");
    }
    if (in_cover[i] != 0) {
      throw Error(ErrorCode::kBadParams, "cover index " + std::to_string(i) + " repeated");
    }
    in_cover[i] = 1;
  }
  std::int64_t inside = 0;
  std::int64_t outside = 0;
  for (int i = 1; i <= n; ++i) {
    if (in_cover[i] != 0) {
      if (d.degree(i) <= 1) {
        throw Error(ErrorCode::kHypothesisViolated,
                    "(i) violated: d_" + std::to_string(i) + " = " +
                        std::to_string(d.degree(i)) + " is not > 1");
      }
      inside += d.degree(i);
    } else {
      outside += d.degree(i);
    }
  }
  if (2 * static_cast<int>(cover.size()) > n) {
    throw Error(ErrorCode::kHypothesisViolated,
                "(ii) violated: |X| = " + std::to_string(cover.size()) + " > n/2");
  }
  if (inside < outside) {
    throw Error(ErrorCode::kHypothesisViolated,
                "(iii) violated: degree sum on X is " + std::to_string(inside) +
                    " < " + std::to_string(outside));
  }
  std::vector<detail::LabeledDegree> vertices;
  for (int i = 1; i <= n; ++i) vertices.push_back({i, d.degree(i)});
  return LabeledTree(n, detail::cover_tree_edges(std::move(vertices), in_cover));
}

// Tree with d_T(v_i) = d_i and matching number exactly nu, built with
// minimum vertex cover {v_1, ..., v_nu}.
inline LabeledTree realize_tree_with_nu(const DegreeSequence& d, int nu) {
  const auto interval = matching_interval_tree(d);
  if (nu < interval.nu_min || nu > interval.nu_max) {
    throw Error(ErrorCode::kOutOfRange,
                "nu = " + std::to_string(nu) + " outside [" +
                    std::to_string(interval.nu_min) + ", " +
                    std::to_string(interval.nu_max) + "]");
  }
  std::vector<int> cover(static_cast<std::size_t>(nu));
  for (int i = 0; i < nu; ++i) cover[i] = i + 1;
  return realize_tree_with_cover(d, cover);
}

}  // namespace degseq
