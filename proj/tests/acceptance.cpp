// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "cli.hpp"
#include "degseq/degseq.hpp"
#include "support.hpp"

namespace {

using namespace degseq;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

template <typename Fn>
void for_each_small_pair(Fn&& fn) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      oracle::for_each_nonincreasing_sequence(n, 0, 3, [&](const DegreeSequence& a) {
        oracle::for_each_nonincreasing_sequence(m, 0, 3, [&](const DegreeSequence& b) {
          fn(BipartiteDegreeSequence{a, b});
        });
      });
    }
  }
}

template <typename Fn>
void for_each_tree_sequence(Fn&& fn) {
  for (int n = 3; n <= 9; ++n) oracle::for_each_tree_sized_sequence(n, fn);
}

Outcome tree_interval_matches_oracle() {
  int count = 0;
  Outcome out;
  for_each_tree_sequence([&](const DegreeSequence& d) {
    if (!out.pass) return;
    ++count;
    const auto achieved = oracle::achievable_nu_set_tree(d);
    const auto interval = matching_interval_tree(d);
    std::set<int> predicted;
    for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) predicted.insert(nu);
    if (predicted != achieved) {
      out = fail(verify::format(d) + ": predicted " + verify::format(predicted) + ", oracle " +
                 verify::format(achieved));
    }
  });
  if (out.pass) out.detail = std::to_string(count) + " sequences";
  return out;
}

Outcome tree_constructions_exact() {
  int built = 0;
  Outcome out;
  for_each_tree_sequence([&](const DegreeSequence& d) {
    if (!out.pass) return;
    const auto interval = matching_interval_tree(d);
    for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) {
      const auto t = realize_tree_with_nu(d, nu);
      ++built;
      if (!std::ranges::equal(t.degrees(), d.values()) ||
          testing_support::brute_matching_number(t) != nu) {
        out = fail(verify::format(d) + " nu = " + std::to_string(nu));
        return;
      }
    }
  });
  if (out.pass) out.detail = std::to_string(built) + " trees";
  return out;
}

Outcome gale_ryser_matches_oracle() {
  int count = 0;
  Outcome out;
  for_each_small_pair([&](const BipartiteDegreeSequence& dd) {
    if (!out.pass) return;
    ++count;
    if (gale_ryser_check(dd) != !oracle::enumerate_bipartite(dd).empty()) {
      out = fail(verify::format(dd));
    }
  });
  if (out.pass) out.detail = std::to_string(count) + " sequence pairs";
  return out;
}

Outcome flow_feasibility_matches_oracle() {
  int realized = 0;
  Outcome out;
  for_each_small_pair([&](const BipartiteDegreeSequence& dd) {
    if (!out.pass) return;
    const auto achieved = oracle::achievable_nu_set_bipartite(dd);
    for (int nu = 0; nu <= std::min(dd.n(), dd.m()); ++nu) {
      const auto outcome = realize_bipartite_with_nu(dd, nu);
      const auto* found = std::get_if<FlowRealization>(&outcome);
      if ((found != nullptr) != achieved.contains(nu)) {
        out = fail(verify::format(dd) + " nu = " + std::to_string(nu) + ": feasibility");
        return;
      }
      if (found == nullptr) continue;
      ++realized;
      if (!found->graph.realizes(dd) ||
          testing_support::brute_matching_number(found->graph) != nu ||
          !verify_canonical_structure(found->graph, nu, found->k)) {
        out = fail(verify::format(dd) + " nu = " + std::to_string(nu) + ": realization");
        return;
      }
    }
  });
  if (out.pass) out.detail = std::to_string(realized) + " realizations checked";
  return out;
}

Outcome clean_cut_duality() {
  int networks = 0;
  Outcome out;
  auto check = [&](const BipartiteDegreeSequence& dd, int nu, int k) {
    const auto flow = max_flow(build_network(dd, nu, k).network).value;
    ++networks;
    if (min_clean_cut_capacity(dd, nu, k) != flow) {
      out = fail(verify::format(dd) + " nu = " + std::to_string(nu) + " k = " +
                 std::to_string(k));
    }
  };
  for_each_small_pair([&](const BipartiteDegreeSequence& dd) {
    for (int nu = 0; nu <= std::min(dd.n(), dd.m()) && out.pass; ++nu) {
      if (detail::negative_capacity(dd, nu)) continue;
      for (int k = 0; k <= nu && out.pass; ++k) check(dd, nu, k);
    }
  });
  std::mt19937 rng(20240601);
  int random = 0;
  while (out.pass && random < 1000) {
    const auto dd = random % 2 == 0 ? testing_support::random_graphical(rng, 8, 8, 5)
                                    : testing_support::random_pair(rng, 8, 8, 5);
    const int nu = static_cast<int>(rng() % (std::min(dd.n(), dd.m()) + 1));
    if (detail::negative_capacity(dd, nu)) continue;
    check(dd, nu, static_cast<int>(rng() % (nu + 1)));
    ++random;
  }
  if (out.pass) out.detail = std::to_string(networks) + " networks (1000 random)";
  return out;
}

Outcome inequalities_and_intervality() {
  int count = 0;
  Outcome out;
  for_each_small_pair([&](const BipartiteDegreeSequence& dd) {
    if (!out.pass) return;
    ++count;
    const auto achieved = oracle::achievable_nu_set_bipartite(dd);
    std::set<int> feasible;
    for (int nu = 0; nu <= std::min(dd.n(), dd.m()); ++nu) {
      if (check_inequalities(dd, nu)) feasible.insert(nu);
    }
    if (feasible != achieved) {
      out = fail(verify::format(dd) + ": inequalities " + verify::format(feasible) +
                 ", oracle " + verify::format(achieved));
    } else if (!verify::is_contiguous(achieved)) {
      out = fail(verify::format(dd) + ": not contiguous " + verify::format(achieved));
    }
  });
  if (out.pass) out.detail = std::to_string(count) + " sequence pairs";
  return out;
}

Outcome swap_interpolation() {
  std::mt19937 rng(7);
  int steps = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto dd = testing_support::random_graphical(rng, 6, 6, 6);
    const auto interval = matching_interval_bipartite(dd);
    if (interval.empty) return fail(verify::format(dd) + ": empty interval");
    for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) {
      const auto g = interpolate_nu(dd, nu);
      if (!g.realizes(dd) || testing_support::brute_matching_number(g) != nu) {
        return fail(verify::format(dd) + " nu = " + std::to_string(nu));
      }
    }
    const auto walk = matching_number_walk(dd);
    auto g = walk.start;
    int prev = testing_support::brute_matching_number(g);
    for (const auto& s : walk.steps) {
      g = apply_swap(g, s);
      const int now = testing_support::brute_matching_number(g);
      if (std::abs(now - prev) > 1) return fail(verify::format(dd) + ": jump in walk");
      prev = now;
      ++steps;
    }
    if (prev != interval.nu_max) return fail(verify::format(dd) + ": walk ends early");
  }
  return {true, "200 sequences, " + std::to_string(steps) + " swap steps"};
}

Outcome large_interval_timing() {
  std::mt19937 rng(100);
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    const double density = 0.1 + 0.15 * trial;
    std::bernoulli_distribution coin(density);
    std::vector<int> a(100, 0);
    std::vector<int> b(100, 0);
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        if (a[i] < 50 && b[j] < 50 && coin(rng)) {
          ++a[i];
          ++b[j];
        }
      }
    }
    std::ranges::shuffle(a, rng);
    auto join = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    const std::string sa = join(a);
    const std::string sb = join(b);
    const char* argv[] = {"degseq", "bip-interval", "--a", sa.c_str(), "--b", sb.c_str()};
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    const int code = cli::run(6, argv, out, err);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    worst = std::max(worst, secs);
    if (code != 0 || out.str().find("\"empty\":false") == std::string::npos) {
      return fail("bip-interval failed: " + out.str() + err.str());
    }
    if (secs >= 5.0) return fail("took " + std::to_string(secs) + " s");
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "6 instances, slowest %.3f s", worst);
  return {true, buf};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"tree interval equals oracle nu-set, 3 <= n <= 9", tree_interval_matches_oracle},
      {"tree realizations exact for every nu in the interval", tree_constructions_exact},
      {"Gale-Ryser agrees with oracle, n, m <= 4, entries <= 3", gale_ryser_matches_oracle},
      {"flow feasibility and extracted realizations agree with oracle",
       flow_feasibility_matches_oracle},
      {"min clean cut equals max flow (sweep + random)", clean_cut_duality},
      {"inequalities agree with oracle; nu-sets contiguous", inequalities_and_intervality},
      {"swap interpolation hits every nu with |delta nu| <= 1", swap_interpolation},
      {"bip-interval on n = m = 100, entries <= 50, under 5 s", large_interval_timing},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = criteria[c].second();
    } catch (const std::exception& e) {
      result = fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%s; %.2f s)\n", result.pass ? "PASS" : "FAIL", c + 1,
                criteria[c].first, result.detail.c_str(), secs);
    if (!result.pass) ++failed;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
