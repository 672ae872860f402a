#include <gtest/gtest.h>

#include <algorithm>

#include "degseq/oracle.hpp"
#include "degseq/tree.hpp"
#include "support.hpp"

namespace {

using namespace degseq;

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kBadParams;
}

TEST(IsTreeDegreeSequence, Examples) {
  EXPECT_TRUE(is_tree_degree_sequence(seq({2, 1, 1})));
  EXPECT_FALSE(is_tree_degree_sequence(seq({3, 1, 1, 1, 1})));
  EXPECT_TRUE(is_tree_degree_sequence(seq({3, 3, 2, 1, 1, 1, 1})));
  EXPECT_TRUE(is_tree_degree_sequence(seq({1, 1})));
  EXPECT_FALSE(is_tree_degree_sequence(seq({1})));
  EXPECT_FALSE(is_tree_degree_sequence(seq({2, 2, 0})));
}

TEST(TreeInterval, Examples) {
  EXPECT_EQ(nu_max_tree(seq({2, 2, 1, 1})), 2);
  EXPECT_EQ(nu_max_tree(seq({4, 1, 1, 1, 1})), 1);
  EXPECT_EQ(nu_max_tree(seq({3, 3, 2, 1, 1, 1, 1})), 3);
  EXPECT_EQ(nu_min_tree(seq({2, 1, 1})), 1);
  EXPECT_EQ(nu_min_tree(seq({3, 3, 2, 1, 1, 1, 1})), 2);
  EXPECT_EQ(nu_min_tree(seq({2, 2, 2, 1, 1})), 2);
  EXPECT_EQ(matching_interval_tree(seq({2, 1, 1})), (TreeIntervalResult{1, 1}));
  EXPECT_EQ(matching_interval_tree(seq({3, 3, 2, 1, 1, 1, 1})), (TreeIntervalResult{2, 3}));
  EXPECT_EQ(matching_interval_tree(seq({4, 1, 1, 1, 1})), (TreeIntervalResult{1, 1}));
}

TEST(TreeInterval, RejectsNonTreeInput) {
  EXPECT_EQ(code_of([] { (void)nu_max_tree(seq({3, 1, 1, 1, 1})); }), ErrorCode::kInvalidSequence);
  EXPECT_EQ(code_of([] { (void)nu_min_tree(seq({1, 1})); }), ErrorCode::kInvalidSequence);
}

TEST(RealizeTreeNuMax, Examples) {
  const auto t = realize_tree_nu_max(seq({2, 1, 1}));
  EXPECT_EQ(t.edges(), (std::vector<TreeEdge>{{1, 2}, {1, 3}}));
  const auto t2 = realize_tree_nu_max(seq({3, 3, 2, 1, 1, 1, 1}));
  EXPECT_EQ(t2.degrees(), (std::vector<int>{3, 3, 2, 1, 1, 1, 1}));
  EXPECT_EQ(testing_support::brute_matching_number(t2), 3);
  const auto path = realize_tree_nu_max(seq({2, 2, 1, 1}));
  EXPECT_EQ(path.degrees(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(tree_matching_number(path), 2);
}

TEST(RealizeTreeWithCover, Examples) {
  const std::vector<int> x1{1};
  const auto t = realize_tree_with_cover(seq({2, 1, 1}), x1);
  EXPECT_EQ(t.edges(), (std::vector<TreeEdge>{{1, 2}, {1, 3}}));

  const std::vector<int> x2{1, 2};
  const auto t2 = realize_tree_with_cover(seq({3, 3, 2, 1, 1, 1, 1}), x2);
  EXPECT_EQ(t2.degrees(), (std::vector<int>{3, 3, 2, 1, 1, 1, 1}));
  EXPECT_EQ(testing_support::brute_matching_number(t2), 2);
  for (const auto& e : t2.edges()) EXPECT_TRUE(e.u <= 2 || e.v <= 2);

  const std::vector<int> x3{3};
  try {
    (void)realize_tree_with_cover(seq({2, 2, 1, 1}), x3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHypothesisViolated);
    EXPECT_NE(std::string(e.what()).find("(i)"), std::string::npos);
  }
}

TEST(RealizeTreeWithCover, EveryValidCoverWorks) {
  // All index sets X satisfying the hypotheses, for every tree sequence up
  // to n = 8: the result has the degrees, X is a cover and nu = |X|.
  for (int n = 3; n <= 8; ++n) {
    oracle::for_each_tree_sized_sequence(n, [&](const DegreeSequence& d) {
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> cover;
        for (int i = 1; i <= n; ++i) {
          if (mask >> (i - 1) & 1u) cover.push_back(i);
        }
        std::int64_t inside = 0;
        bool leaves_outside = true;
        for (int i : cover) {
          inside += d.degree(i);
          leaves_outside = leaves_outside && d.degree(i) >= 2;
        }
        const bool ok = leaves_outside && 2 * static_cast<int>(cover.size()) <= n &&
                        inside >= n - 1;
        if (!ok) {
          EXPECT_THROW((void)realize_tree_with_cover(d, cover), Error);
          continue;
        }
        const auto t = realize_tree_with_cover(d, cover);
        ASSERT_TRUE(std::ranges::equal(t.degrees(), d.values()));
        for (const auto& e : t.edges()) {
          ASSERT_TRUE((mask >> (e.u - 1) & 1u) || (mask >> (e.v - 1) & 1u));
        }
        ASSERT_EQ(tree_matching_number(t), static_cast<int>(cover.size()));
      }
    });
  }
}

TEST(RealizeTreeWithNu, Examples) {
  const auto p3 = realize_tree_with_nu(seq({2, 1, 1}), 1);
  EXPECT_EQ(p3.edges(), (std::vector<TreeEdge>{{1, 2}, {1, 3}}));
  for (int nu : {2, 3}) {
    const auto t = realize_tree_with_nu(seq({3, 3, 2, 1, 1, 1, 1}), nu);
    EXPECT_EQ(t.degrees(), (std::vector<int>{3, 3, 2, 1, 1, 1, 1}));
    EXPECT_EQ(testing_support::brute_matching_number(t), nu);
  }
  EXPECT_EQ(code_of([] { (void)realize_tree_with_nu(seq({3, 3, 2, 1, 1, 1, 1}), 4); }),
            ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { (void)realize_tree_with_nu(seq({3, 3, 2, 1, 1, 1, 1}), 1); }),
            ErrorCode::kOutOfRange);
}

TEST(RealizeTreeWithNu, LongSequencesStayExact) {
  // Larger than the oracle reaches; checked against the tree DP only.
  const DegreeSequence d({6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  ASSERT_TRUE(is_tree_degree_sequence(d));
  const auto interval = matching_interval_tree(d);
  for (int nu = interval.nu_min; nu <= interval.nu_max; ++nu) {
    const auto t = realize_tree_with_nu(d, nu);
    ASSERT_TRUE(std::ranges::equal(t.degrees(), d.values()));
    ASSERT_EQ(tree_matching_number(t), nu);
  }
}

TEST(RealizeTreeWithNu, Deterministic) {
  const DegreeSequence d({3, 3, 2, 2, 1, 1, 1, 1});
  EXPECT_EQ(realize_tree_with_nu(d, 3), realize_tree_with_nu(d, 3));
}

}  // namespace
