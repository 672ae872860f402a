#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/error.hpp"

namespace degseq {

struct Arc {
  int tail = 0;
  int head = 0;
  std::int64_t capacity = 0;
};

// Source/sink digraph with nonnegative integral capacities. Arcs keep their
// insertion order; that order drives the solver and makes it deterministic.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink, std::vector<Arc> arcs)
      : node_count_(node_count), source_(source), sink_(sink), arcs_(std::move(arcs)) {
    if (source < 0 || source >= node_count || sink < 0 || sink >= node_count ||
        source == sink) {
      throw Error(ErrorCode::kBadParams, "invalid source/sink");
    }
    for (std::size_t id = 0; id < arcs_.size(); ++id) {
      const auto& arc = arcs_[id];
      if (arc.tail < 0 || arc.tail >= node_count || arc.head < 0 ||
          arc.head >= node_count || arc.tail == arc.head) {
        throw Error(ErrorCode::kBadParams, "arc endpoint out of range");
      }
      if (arc.capacity < 0) {
        throw Error(ErrorCode::kNegativeCapacity, "negative arc capacity");
      }
      if (!lookup_.emplace(key(arc.tail, arc.head), id).second) {
        throw Error(ErrorCode::kBadParams, "parallel arcs are not supported");
      }
    }
  }

  [[nodiscard]] int node_count() const noexcept { return node_count_; }
  [[nodiscard]] int source() const noexcept { return source_; }
  [[nodiscard]] int sink() const noexcept { return sink_; }
  [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  [[nodiscard]] std::optional<std::size_t> find_arc(int tail, int head) const {
    if (auto it = lookup_.find(key(tail, head)); it != lookup_.end()) return it->second;
    return std::nullopt;
  }

 private:
  [[nodiscard]] std::uint64_t key(int tail, int head) const noexcept {
    return static_cast<std::uint64_t>(tail) * static_cast<std::uint64_t>(node_count_) +
           static_cast<std::uint64_t>(head);
  }

  int node_count_;
  int source_;
  int sink_;
  std::vector<Arc> arcs_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

struct IntegralFlow {
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs()
  std::int64_t value = 0;
  std::vector<char> source_side;  // residual reachability from the source: a minimum cut
};

inline bool is_valid_flow(const FlowNetwork& net, const IntegralFlow& flow) {
  if (flow.arc_flow.size() != net.arcs().size()) return false;
  std::vector<std::int64_t> balance(static_cast<std::size_t>(net.node_count()), 0);
  for (std::size_t id = 0; id < net.arcs().size(); ++id) {
    const auto& arc = net.arcs()[id];
    const auto f = flow.arc_flow[id];
    if (f < 0 || f > arc.capacity) return false;
    balance[arc.tail] -= f;
    balance[arc.head] += f;
  }
  for (int x = 0; x < net.node_count(); ++x) {
    if (x != net.source() && x != net.sink() && balance[x] != 0) return false;
  }
  return balance[net.sink()] == flow.value && balance[net.source()] == -flow.value;
}

// Dinic's blocking-flow algorithm (shortest augmenting paths).
class MaxFlowSolver {
 public:
  explicit MaxFlowSolver(const FlowNetwork& net)
      : net_(net), out_(static_cast<std::size_t>(net.node_count())) {
    residual_.reserve(2 * net.arcs().size());
    for (const auto& arc : net.arcs()) {
      out_[arc.tail].push_back(residual_.size());
      residual_.push_back({arc.head, arc.capacity});
      out_[arc.head].push_back(residual_.size());
      residual_.push_back({arc.tail, 0});
    }
    level_.resize(out_.size());
    cursor_.resize(out_.size());
  }

  IntegralFlow solve() {
    std::int64_t value = 0;
    while (build_levels()) {
      std::ranges::fill(cursor_, 0);
      while (const auto pushed =
                 augment(net_.source(), std::numeric_limits<std::int64_t>::max())) {
        value += pushed;
      }
    }
    IntegralFlow flow;
    flow.value = value;
    flow.arc_flow.reserve(net_.arcs().size());
    for (std::size_t id = 0; id < net_.arcs().size(); ++id) {
      flow.arc_flow.push_back(residual_[2 * id + 1].capacity);
    }
    flow.source_side.assign(out_.size(), 0);
    for (std::size_t x = 0; x < out_.size(); ++x) flow.source_side[x] = level_[x] >= 0 ? 1 : 0;
    return flow;
  }

 private:
  struct ResidualArc {
    int head;
    std::int64_t capacity;
  };

  bool build_levels() {
    std::ranges::fill(level_, -1);
    std::vector<int> queue{net_.source()};
    level_[net_.source()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (const auto id : out_[x]) {
        const auto& r = residual_[id];
        if (r.capacity > 0 && level_[r.head] < 0) {
          level_[r.head] = level_[x] + 1;
          queue.push_back(r.head);
        }
      }
    }
    return level_[net_.sink()] >= 0;
  }

  std::int64_t augment(int x, std::int64_t limit) {
    if (x == net_.sink()) return limit;
    for (auto& c = cursor_[x]; c < out_[x].size(); ++c) {
      const auto id = out_[x][c];
      auto& r = residual_[id];
      if (r.capacity <= 0 || level_[r.head] != level_[x] + 1) continue;
      if (const auto pushed = augment(r.head, std::min(limit, r.capacity)); pushed > 0) {
        r.capacity -= pushed;
        residual_[id ^ 1U].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<ResidualArc> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

inline IntegralFlow max_flow(const FlowNetwork& net) { return MaxFlowSolver(net).solve(); }

// The network N(d_A, d_B, nu, k). Nodes: source 0, v_i = i, w_j = n + j,
// sink n + m + 1.
//
// Every v_i and w_j with i, j <= nu carries one edge of the prescribed
// matching {v_i w_{nu+1-i}}, so their terminal arcs lose one unit of
// capacity. Middle arcs exist only where the cover
// {v_1..v_k} ∪ {w_1..w_{nu-k}} allows an edge and are absent on the
// matching diagonal i + j = nu + 1.
struct BipartiteNetwork {
  FlowNetwork network;
  int n = 0;
  int m = 0;
  int nu = 0;
  int k = 0;

  [[nodiscard]] int a_node(int i) const noexcept { return i; }
  [[nodiscard]] int b_node(int j) const noexcept { return n + j; }
};

inline bool has_middle_arc(int i, int j, int nu, int k) noexcept {
  return !((i > k && j > nu - k) || i + j == nu + 1);
}

inline std::int64_t source_capacity(const BipartiteDegreeSequence& dd, int nu, int i) {
  return dd.a.degree(i) - (i <= nu ? 1 : 0);
}

inline std::int64_t sink_capacity(const BipartiteDegreeSequence& dd, int nu, int j) {
  return dd.b.degree(j) - (j <= nu ? 1 : 0);
}

// Sum a_i - nu: the flow value that certifies a realization.
inline std::int64_t required_flow_value(const BipartiteDegreeSequence& dd, int nu) {
  return dd.a.sum() - nu;
}

namespace detail {

inline void require_network_params(const BipartiteDegreeSequence& dd, int nu, int k) {
  if (k < 0 || k > nu || nu > std::min(dd.n(), dd.m())) {
    throw Error(ErrorCode::kBadParams,
                "need 0 <= k <= nu <= min(n, m); got k = " + std::to_string(k) +
                    ", nu = " + std::to_string(nu));
  }
}

// Returns a message when some terminal capacity would be negative.
inline std::optional<std::string> negative_capacity(const BipartiteDegreeSequence& dd, int nu) {
  for (int i = 1; i <= nu; ++i) {
    if (dd.a.degree(i) == 0) return "a_" + std::to_string(i) + " = 0 with i <= nu";
  }
  for (int j = 1; j <= nu; ++j) {
    if (dd.b.degree(j) == 0) return "b_" + std::to_string(j) + " = 0 with j <= nu";
  }
  return std::nullopt;
}

}  // namespace detail

inline BipartiteNetwork build_network(const BipartiteDegreeSequence& dd, int nu, int k) {
  detail::require_network_params(dd, nu, k);
  if (auto msg = detail::negative_capacity(dd, nu)) {
    throw Error(ErrorCode::kNegativeCapacity, *msg);
  }
  const int n = dd.n();
  const int m = dd.m();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n + m + n * m));
  for (int i = 1; i <= n; ++i) arcs.push_back({0, i, source_capacity(dd, nu, i)});
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (has_middle_arc(i, j, nu, k)) arcs.push_back({i, n + j, 1});
    }
  }
  for (int j = 1; j <= m; ++j) arcs.push_back({n + j, n + m + 1, sink_capacity(dd, nu, j)});
  return {FlowNetwork(n + m + 2, 0, n + m + 1, std::move(arcs)), n, m, nu, k};
}

struct FlowRealization {
  LabeledBipartiteGraph graph;
  int k = 0;
};

// Certified negative answer. max_flow_by_k[k] is the maximum flow value of
// N(d_A, d_B, nu, k), or empty when the network could not be built.
struct Infeasible {
  std::string reason;
  std::int64_t required = 0;
  std::vector<std::optional<std::int64_t>> max_flow_by_k;
};

using RealizationOutcome = std::variant<FlowRealization, Infeasible>;

// Realization with matching number nu, extracted from the first k whose
// network carries a flow of value sum a_i - nu.
inline RealizationOutcome realize_bipartite_with_nu(const BipartiteDegreeSequence& dd, int nu) {
  if (nu < 0 || nu > std::min(dd.n(), dd.m())) {
    throw Error(ErrorCode::kOutOfRange,
                "nu = " + std::to_string(nu) + " outside [0, min(n, m)]");
  }
  Infeasible infeasible;
  infeasible.required = required_flow_value(dd, nu);
  if (!dd.sums_equal()) {
    infeasible.reason = "degree sums differ";
    return infeasible;
  }
  if (auto msg = detail::negative_capacity(dd, nu)) {
    infeasible.reason = *msg;
    infeasible.max_flow_by_k.assign(static_cast<std::size_t>(nu) + 1, std::nullopt);
    return infeasible;
  }
  for (int k = 0; k <= nu; ++k) {
    const auto bn = build_network(dd, nu, k);
    const auto flow = max_flow(bn.network);
    infeasible.max_flow_by_k.emplace_back(flow.value);
    if (flow.value != infeasible.required) continue;

    std::vector<BipartiteEdge> edges;
    const auto& arcs = bn.network.arcs();
    for (std::size_t id = 0; id < arcs.size(); ++id) {
      const auto& arc = arcs[id];
      if (arc.tail >= 1 && arc.tail <= bn.n && flow.arc_flow[id] == 1) {
        edges.push_back({arc.tail, arc.head - bn.n});
      }
    }
    for (int i = 1; i <= nu; ++i) edges.push_back({i, nu - i + 1});
    std::ranges::sort(edges);
    return FlowRealization{LabeledBipartiteGraph(dd.n(), dd.m(), edges), k};
  }
  infeasible.reason = "no k in [0, nu] reaches the required flow value";
  return infeasible;
}

// {v_i w_{nu-i+1} : i <= nu} is a maximum matching of g and
// {v_i : i <= k} ∪ {w_j : j <= nu - k} covers every edge.
inline bool verify_canonical_structure(const LabeledBipartiteGraph& g, int nu, int k) {
  if (k < 0 || k > nu || nu > std::min(g.n(), g.m())) return false;
  for (int i = 1; i <= nu; ++i) {
    if (!g.has_edge(i, nu - i + 1)) return false;
  }
  if (matching_number(g) != nu) return false;
  return std::ranges::all_of(g.edges(), [&](const BipartiteEdge& e) {
    return e.a <= k || e.b <= nu - k;
  });
}

}  // namespace degseq
