#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "degseq/degseq.hpp"
#include "json.hpp"

namespace degseq::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kAnswered = 0, kInconsistent = 1, kInvalidInput = 2 };

// Malformed command-line input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::vector<int> parse_sequence(std::string_view text, std::string_view flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw InputError(std::string(flag) + ": malformed entry '" + std::string(token) + "'");
    }
    if (value < 0) throw InputError(std::string(flag) + ": negative entry " + std::to_string(value));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// A sequence sorted nonincreasingly. input_label[p - 1] is the 1-based input
// position of the vertex at sorted position p.
struct SortedInput {
  DegreeSequence sequence;
  std::vector<int> input_label;
  bool reordered = false;

  [[nodiscard]] int label(int sorted_position) const { return input_label.at(sorted_position - 1); }
};

inline SortedInput sort_input(std::string_view text, std::string_view flag) {
  const auto raw = parse_sequence(text, flag);
  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::ranges::stable_sort(order, [&](int x, int y) { return raw[x] > raw[y]; });
  std::vector<int> values;
  std::vector<int> labels;
  for (int idx : order) {
    values.push_back(raw[idx]);
    labels.push_back(idx + 1);
  }
  const bool reordered = !std::ranges::is_sorted(raw, std::greater<>{});
  return {DegreeSequence(std::move(values)), std::move(labels), reordered};
}

struct Options {
  std::string format = "json";
};

class Printer {
 public:
  Printer(std::ostream& out, std::ostream& err, const Options& opts)
      : out_(out), err_(err), edges_(opts.format == "edges") {}

  [[nodiscard]] bool edges_format() const noexcept { return edges_; }
  void json(const Json& j) { out_ << j.dump() << '\n'; }
  void line(const std::string& s) { out_ << s << '\n'; }
  void note(const std::string& s) { err_ << s << '\n'; }

  void permutation(const char* key, const SortedInput& in, Json& j) {
    if (!in.reordered) return;
    if (edges_) {
      std::ostringstream os;
      os << "note: " << key << " sorted nonincreasingly; sorted position -> input position:";
      for (std::size_t p = 0; p < in.input_label.size(); ++p) {
        os << ' ' << (p + 1) << "->" << in.input_label[p];
      }
      note(os.str());
    } else {
      j[key] = in.input_label;
    }
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool edges_;
};

inline Json bipartite_edges_json(const LabeledBipartiteGraph& g, const SortedInput& a,
                                 const SortedInput& b) {
  std::vector<BipartiteEdge> relabeled;
  for (const auto& e : g.edges()) relabeled.push_back({a.label(e.a), b.label(e.b)});
  std::ranges::sort(relabeled);
  Json out = Json::array();
  for (const auto& e : relabeled) out.push_back({e.a, e.b});
  return out;
}

inline void print_bipartite_edges(Printer& pr, const LabeledBipartiteGraph& g,
                                  const SortedInput& a, const SortedInput& b) {
  for (const auto& e : bipartite_edges_json(g, a, b)) {
    pr.line("v" + std::to_string(e[0].get<int>()) + " w" + std::to_string(e[1].get<int>()));
  }
}

inline Json swap_json(const SwapStep& s, const SortedInput* a, const SortedInput* b) {
  if (a == nullptr) return {s.i, s.i2, s.j, s.j2};
  return {a->label(s.i), a->label(s.i2), b->label(s.j), b->label(s.j2)};
}

inline std::string swap_line(const Json& s) {
  return "swap v" + std::to_string(s[0].get<int>()) + " v" + std::to_string(s[1].get<int>()) +
         " w" + std::to_string(s[2].get<int>()) + " w" + std::to_string(s[3].get<int>());
}

// Edge list file: one "v<i> w<j>" (or "<i> <j>") per line; '#' starts a comment.
inline std::vector<BipartiteEdge> read_edge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<BipartiteEdge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string x;
    std::string y;
    if (!(fields >> x)) continue;
    auto number = [&](std::string token, char prefix) {
      if (!token.empty() && token.front() == prefix) token.erase(0, 1);
      int value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || end != token.data() + token.size() || value < 1) {
        throw InputError(path + ":" + std::to_string(line_no) + ": malformed edge");
      }
      return value;
    };
    std::string rest;
    if (!(fields >> y) || (fields >> rest)) {
      throw InputError(path + ":" + std::to_string(line_no) + ": expected two vertices");
    }
    edges.push_back({number(x, 'v'), number(y, 'w')});
  }
  return edges;
}

inline double oracle_cap_from_env() {
  const char* raw = std::getenv("DEGSEQ_ORACLE_CAP");
  if (raw == nullptr || *raw == '\0') return oracle::kDefaultCap;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(value > 0)) {
    throw InputError(std::string("DEGSEQ_ORACLE_CAP: malformed value '") + raw + "'");
  }
  return value;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching numbers of tree and bipartite degree sequence realizations", "degseq"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "edges"}))
      ->capture_default_str();

  std::string seq;
  std::string seq_a;
  std::string seq_b;
  int nu = 0;
  std::string method = "flow";
  bool linear = false;
  std::string from_path;
  std::string to_path;
  std::optional<int> n_opt;
  std::optional<int> m_opt;
  verify::SweepBounds bounds;

  auto* tree_check = app.add_subcommand("tree-check", "Is --seq a tree degree sequence?");
  tree_check->add_option("--seq", seq, "Degrees, comma separated")->required();

  auto* tree_interval = app.add_subcommand("tree-interval", "Matching numbers of trees with degrees --seq");
  tree_interval->add_option("--seq", seq, "Degrees, comma separated")->required();

  auto* tree_realize = app.add_subcommand("tree-realize", "Tree with degrees --seq and matching number --nu");
  tree_realize->add_option("--seq", seq, "Degrees, comma separated")->required();
  tree_realize->add_option("--nu", nu, "Matching number")->required();

  auto* bip_check = app.add_subcommand("bip-check", "Gale-Ryser test for (--a, --b)");
  auto* bip_interval = app.add_subcommand("bip-interval", "Matching numbers of realizations of (--a, --b)");
  auto* bip_realize = app.add_subcommand("bip-realize", "Realization of (--a, --b) with matching number --nu");
  auto* bip_interpolate = app.add_subcommand("bip-interpolate", "Swap walk from minimum to maximum matching number");
  for (auto* sub : {bip_check, bip_interval, bip_realize, bip_interpolate}) {
    sub->add_option("--a", seq_a, "Degrees of A, comma separated")->required();
    sub->add_option("--b", seq_b, "Degrees of B, comma separated")->required();
  }
  bip_interval->add_flag("--linear", linear, "Scan every nu instead of binary search");
  bip_realize->add_option("--nu", nu, "Matching number")->required();
  bip_realize->add_option("--method", method, "Construction")
      ->check(CLI::IsMember({"flow", "swap"}))
      ->capture_default_str();

  auto* swap_cmd = app.add_subcommand("swap-path", "Swap sequence between two realizations");
  swap_cmd->add_option("--from", from_path, "Edge list file of the first graph")->required();
  swap_cmd->add_option("--to", to_path, "Edge list file of the second graph")->required();
  swap_cmd->add_option("--n", n_opt, "Size of A (default: largest v index)");
  swap_cmd->add_option("--m", m_opt, "Size of B (default: largest w index)");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check everything against exhaustive enumeration");
  verify_cmd->add_option("--max-n", bounds.max_n, "Largest |A|")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-m", bounds.max_m, "Largest |B|")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--max-deg", bounds.max_deg, "Largest bipartite degree")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--tree-max-n", bounds.tree_max_n, "Largest tree order")->capture_default_str()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAnswered : kInvalidInput;
  }

  Printer pr(out, err, opts);
  try {
    if (*tree_check) {
      const auto in = sort_input(seq, "--seq");
      Json j;
      j["tree_degree_sequence"] = is_tree_degree_sequence(in.sequence);
      pr.permutation("permutation", in, j);
      pr.json(j);
      return kAnswered;
    }

    if (*tree_interval || *tree_realize) {
      const auto in = sort_input(seq, "--seq");
      const auto& d = in.sequence;
      if (!is_tree_degree_sequence(d)) throw InputError("--seq is not a tree degree sequence");
      // A single edge is the only tree on two vertices.
      const bool single_edge = d.size() == 2;
      const auto interval = single_edge ? TreeIntervalResult{1, 1} : matching_interval_tree(d);
      if (*tree_interval) {
        Json j;
        j["nu_min"] = interval.nu_min;
        j["nu_max"] = interval.nu_max;
        pr.permutation("permutation", in, j);
        pr.json(j);
        return kAnswered;
      }
      if (nu < interval.nu_min || nu > interval.nu_max) {
        throw Error(ErrorCode::kOutOfRange, "--nu " + std::to_string(nu) + " outside [" +
                                                std::to_string(interval.nu_min) + ", " +
                                                std::to_string(interval.nu_max) + "]");
      }
      const LabeledTree t = single_edge ? LabeledTree(2, {{1, 2}}) : realize_tree_with_nu(d, nu);
      std::vector<TreeEdge> edges;
      for (const auto& e : t.edges()) edges.push_back(make_tree_edge(in.label(e.u), in.label(e.v)));
      std::ranges::sort(edges);
      if (pr.edges_format()) {
        Json unused;
        pr.permutation("permutation", in, unused);
        for (const auto& e : edges) pr.line("v" + std::to_string(e.u) + " v" + std::to_string(e.v));
      } else {
        Json j;
        j["n"] = d.size();
        j["nu"] = nu;
        j["edges"] = Json::array();
        for (const auto& e : edges) j["edges"].push_back({e.u, e.v});
        pr.permutation("permutation", in, j);
        pr.json(j);
      }
      return kAnswered;
    }

    if (*bip_check || *bip_interval || *bip_realize || *bip_interpolate) {
      const auto a = sort_input(seq_a, "--a");
      const auto b = sort_input(seq_b, "--b");
      const BipartiteDegreeSequence dd{a.sequence, b.sequence};
      Json j;

      if (*bip_check) {
        const auto gr = gale_ryser(dd);
        j["graphical"] = gr.graphical;
        if (!gr.sums_equal) {
          j["sum_a"] = dd.a.sum();
          j["sum_b"] = dd.b.sum();
        } else if (gr.violated_k) {
          j["violated_k"] = *gr.violated_k;
        }
      } else if (*bip_interval) {
        const auto interval = matching_interval_bipartite(
            dd, linear ? IntervalSearch::kLinear : IntervalSearch::kBinary);
        j["empty"] = interval.empty;
        if (!interval.empty) {
          j["nu_min"] = interval.nu_min;
          j["nu_max"] = interval.nu_max;
        }
      } else if (*bip_realize) {
        if (nu < 0 || nu > std::min(dd.n(), dd.m())) {
          throw Error(ErrorCode::kOutOfRange, "--nu " + std::to_string(nu) + " outside [0, " +
                                                  std::to_string(std::min(dd.n(), dd.m())) + "]");
        }
        std::optional<LabeledBipartiteGraph> graph;
        j["nu"] = nu;
        j["method"] = method;
        if (method == "flow") {
          auto outcome = realize_bipartite_with_nu(dd, nu);
          if (auto* found = std::get_if<FlowRealization>(&outcome)) {
            j["feasible"] = true;
            j["k"] = found->k;
            graph = std::move(found->graph);
          } else {
            const auto& inf = std::get<Infeasible>(outcome);
            j["feasible"] = false;
            j["reason"] = inf.reason;
            j["required_flow"] = inf.required;
            j["max_flow_by_k"] = Json::array();
            for (const auto& v : inf.max_flow_by_k) {
              j["max_flow_by_k"].push_back(v ? Json(*v) : Json(nullptr));
            }
          }
        } else {
          const auto interval = matching_interval_bipartite(dd);
          if (!interval.empty && nu >= interval.nu_min && nu <= interval.nu_max) {
            j["feasible"] = true;
            graph = interpolate_nu(dd, nu);
          } else {
            j["feasible"] = false;
            j["reason"] = interval.empty ? "no bipartite realization"
                                         : "nu outside [" + std::to_string(interval.nu_min) + ", " +
                                               std::to_string(interval.nu_max) + "]";
          }
        }
        if (graph) {
          if (!graph->realizes(dd) || matching_number(*graph) != nu) {
            pr.note("internal inconsistency: realization fails verification");
            return kInconsistent;
          }
          j["edges"] = bipartite_edges_json(*graph, a, b);
        }
        if (pr.edges_format()) {
          pr.permutation("permutation_a", a, j);
          pr.permutation("permutation_b", b, j);
          if (graph) {
            print_bipartite_edges(pr, *graph, a, b);
          } else {
            pr.note("infeasible: " + j["reason"].get<std::string>());
          }
          return kAnswered;
        }
      } else {
        const auto interval = matching_interval_bipartite(dd);
        j["empty"] = interval.empty;
        if (!interval.empty) {
          const auto walk = matching_number_walk(dd);
          j["nu_min"] = interval.nu_min;
          j["nu_max"] = interval.nu_max;
          j["start"] = bipartite_edges_json(walk.start, a, b);
          j["start_nu"] = walk.nu.front();
          j["steps"] = Json::array();
          for (std::size_t t = 0; t < walk.steps.size(); ++t) {
            Json step;
            step["swap"] = swap_json(walk.steps[t], &a, &b);
            step["nu"] = walk.nu[t + 1];
            j["steps"].push_back(step);
          }
          if (pr.edges_format()) {
            pr.permutation("permutation_a", a, j);
            pr.permutation("permutation_b", b, j);
            print_bipartite_edges(pr, walk.start, a, b);
            pr.line("nu " + std::to_string(walk.nu.front()));
            for (const auto& step : j["steps"]) {
              pr.line(swap_line(step["swap"]) + " nu " + std::to_string(step["nu"].get<int>()));
            }
            return kAnswered;
          }
        } else if (pr.edges_format()) {
          pr.note("no bipartite realization");
          return kAnswered;
        }
      }
      pr.permutation("permutation_a", a, j);
      pr.permutation("permutation_b", b, j);
      pr.json(j);
      return kAnswered;
    }

    if (*swap_cmd) {
      const auto from = read_edge_file(from_path);
      const auto to = read_edge_file(to_path);
      int n = 0;
      int m = 0;
      for (const auto* list : {&from, &to}) {
        for (const auto& e : *list) {
          n = std::max(n, e.a);
          m = std::max(m, e.b);
        }
      }
      if (n_opt) n = *n_opt;
      if (m_opt) m = *m_opt;
      const LabeledBipartiteGraph g1(n, m, from);
      const LabeledBipartiteGraph g2(n, m, to);
      const auto path = swap_path(g1, g2);
      if (replay_swaps(g1, path) != g2) {
        pr.note("internal inconsistency: swap path does not reach the target");
        return kInconsistent;
      }
      if (pr.edges_format()) {
        for (const auto& s : path) pr.line(swap_line(swap_json(s, nullptr, nullptr)));
      } else {
        Json j;
        j["length"] = path.size();
        j["steps"] = Json::array();
        for (const auto& s : path) j["steps"].push_back(swap_json(s, nullptr, nullptr));
        pr.json(j);
      }
      return kAnswered;
    }

    if (*verify_cmd) {
      bounds.cap = oracle_cap_from_env();
      const auto report = verify::sweep(bounds);
      Json j;
      j["status"] = report.counterexample ? "fail" : "pass";
      j["tree_sequences"] = report.tree_sequences;
      j["bipartite_sequences"] = report.bipartite_sequences;
      if (report.counterexample) j["counterexample"] = *report.counterexample;
      pr.json(j);
      return report.counterexample ? kInconsistent : kAnswered;
    }
  } catch (const InputError& e) {
    pr.note(std::string("error: ") + e.what());
    return kInvalidInput;
  } catch (const Error& e) {
    pr.note(std::string("error: ") + e.what());
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace degseq::cli
