#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "prefixnet/errors.hpp"
#include "prefixnet/hierarchy.hpp"
#include "support/oracles.hpp"

using namespace prefixnet;

namespace {

ProbabilityMassFunction random_pmf(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> w(n);
  for (auto& x : w) x = std::uniform_real_distribution<double>(0.001, 1.0)(rng);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("L" + std::to_string(i));
  return ProbabilityMassFunction::from_weights(labels, w);
}

const Leader* leader(const LeaderAssignment& a, const std::string& label) {
  for (const auto& l : a.leaders)
    if (l.label == label) return &l;
  return nullptr;
}

}  // namespace

TEST(DaryTreeType, Counts) {
  DaryTree t{3, 2};
  EXPECT_EQ(t.nodes_at_depth(0), 1u);
  EXPECT_EQ(t.nodes_at_depth(2), 9u);
  EXPECT_DOUBLE_EQ(t.total_nodes(), 13.0);
  EXPECT_DOUBLE_EQ((DaryTree{2, 2}).total_nodes(), 7.0);
  EXPECT_THROW((DaryTree{1, 2}).validate(), InvalidInput);
  EXPECT_THROW((DaryTree{2, -1}).validate(), InvalidInput);
}

TEST(NodeSelection, SpecExamples) {
  EXPECT_DOUBLE_EQ(node_selection_probability(1, 1, 2), 0.5);
  EXPECT_DOUBLE_EQ(node_selection_probability(0, 1, 2), 0.0);
  EXPECT_DOUBLE_EQ(node_selection_probability(3, 2, 3), 1.0 / 3);
  EXPECT_THROW(node_selection_probability(5, 2, 2), InvalidInput);
  EXPECT_THROW(node_selection_probability(1, 0, 2), InvalidInput);
}

TEST(LevelLeader, SpecExamples) {
  EXPECT_DOUBLE_EQ(level_leader_probability(1, 1, 2, 2), 1.0 / 7);
  EXPECT_DOUBLE_EQ(level_leader_probability(0, 1, 2, 2), 0.0);
  EXPECT_DOUBLE_EQ(level_leader_probability(4, 2, 3, 2), 4.0 / 13);
  EXPECT_THROW(level_leader_probability(3, 1, 2, 2), InvalidInput);
  EXPECT_THROW(level_leader_probability(1, 3, 2, 2), InvalidInput);
}

TEST(LocalLeader, SpecExamples) {
  EXPECT_DOUBLE_EQ(local_leader_probability({{1, 2}}, 2, 2), 3.0 / 7);
  EXPECT_DOUBLE_EQ(local_leader_probability({{0, 0}}, 2, 2), 0.0);
  EXPECT_DOUBLE_EQ(local_leader_probability({{2}}, 2, 1), 2.0 / 3);
  EXPECT_THROW(local_leader_probability({{3}}, 2, 1), InvalidInput);
  EXPECT_THROW(local_leader_probability({{1, 1, 1}}, 2, 2), InvalidInput);
}

TEST(AssignLeaders, SpecExamples) {
  auto a = assign_leaders(ProbabilityMassFunction({{"A", 0.5}, {"B", 0.25}, {"C", 0.25}}), 2);
  EXPECT_EQ(leader(a, "A")->path.to_string(2), "0");
  EXPECT_EQ(leader(a, "B")->path.to_string(2), "10");
  EXPECT_EQ(leader(a, "C")->path.to_string(2), "11");
  EXPECT_DOUBLE_EQ(a.expected_depth(), 1.5);
  EXPECT_EQ(a.tree.max_depth, 2);

  a = assign_leaders(ProbabilityMassFunction({{"A", 1.0}}), 2);
  EXPECT_LE(leader(a, "A")->path.length(), 1u);
  EXPECT_LE(a.expected_depth(), 1.0);

  a = assign_leaders(ProbabilityMassFunction({{"a", 0.25}, {"b", 0.25}, {"c", 0.25}, {"d", 0.25}}), 2);
  for (const auto& l : a.leaders) EXPECT_EQ(l.path.length(), 2u);
  EXPECT_DOUBLE_EQ(a.expected_depth(), 2.0);
}

TEST(AssignLeaders, LevelCounts) {
  const auto a = assign_leaders(ProbabilityMassFunction({{"A", 0.5}, {"B", 0.25}, {"C", 0.25}}), 2);
  EXPECT_EQ(level_counts(a).s, (std::vector<std::uint64_t>{1, 2}));
  EXPECT_DOUBLE_EQ(local_leader_probability(level_counts(a), 2, a.tree.max_depth), 3.0 / 7);
}

TEST(VerifySecure, SpecExamples) {
  LeaderAssignment ok{{2, 2}, {{"A", Codeword({0})}, {"B", Codeword({1, 0})}, {"C", Codeword({1, 1})}}, {}};
  EXPECT_TRUE(verify_secure(ok).secure());
  LeaderAssignment bad{{2, 2}, {{"A", Codeword({0})}, {"B", Codeword({0, 1})}}, {}};
  const auto r = verify_secure(bad);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0], (std::pair<std::string, std::string>{"A", "B"}));
  // listed as (ancestor, descendant) whatever the input order
  LeaderAssignment flipped{{2, 2}, {{"B", Codeword({0, 1})}, {"A", Codeword({0})}}, {}};
  EXPECT_EQ(verify_secure(flipped).violations[0], (std::pair<std::string, std::string>{"A", "B"}));
}

TEST(AssignLeaders, PropertiesOnRandomPmfs) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const int D = 2 + t % 3;
    const auto pmf = random_pmf(1 + static_cast<std::size_t>(t % 9), rng);
    const auto a = assign_leaders(pmf, D);
    const double H = shannon_entropy(pmf, D);
    const double L = a.expected_depth();
    ASSERT_TRUE(verify_secure(a).secure());
    ASSERT_LE(a.kraft_sum(), 1.0 + 1e-12);
    if (pmf.size() > 1) {
      ASSERT_GE(L, H - 1e-12);
      ASSERT_LT(L, H + 1);
    }
    // pairwise prefix oracle
    for (std::size_t i = 0; i < a.leaders.size(); ++i)
      for (std::size_t j = 0; j < a.leaders.size(); ++j) {
        if (i == j) continue;
        std::vector<int> x(a.leaders[i].path.digits().begin(), a.leaders[i].path.digits().end());
        std::vector<int> y(a.leaders[j].path.digits().begin(), a.leaders[j].path.digits().end());
        ASSERT_FALSE(oracle::word_prefix(x, y));
        // more important never sits deeper
        if (a.importance[i].p > a.importance[j].p) ASSERT_LE(x.size(), y.size());
      }
    // depth optimal over every prefix code
    if (pmf.size() <= 6) ASSERT_LE(L, oracle::min_expected_length(pmf.probabilities(), D) + 1e-12);
  }
}

TEST(VerifySecure, EquivalentToKraftForGeneratedAssignments) {
  // For canonical placements, secure iff the depths satisfy Kraft.
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_length_vector(n, 3, [](const std::vector<int>& l) {
      std::vector<Leader> leaders;
      int next = 0;
      // naive placement: i-th leader at the first free node of its depth in
      // lexicographic order, ignoring prefixes
      for (int len : l) {
        std::vector<std::uint32_t> digits(static_cast<std::size_t>(len), 0);
        int v = next++;
        for (int k = len - 1; k >= 0 && v > 0; --k) {
          digits[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(v % 2);
          v /= 2;
        }
        leaders.push_back({"x" + std::to_string(leaders.size()), Codeword(digits)});
      }
      const bool kraft = oracle::kraft_ok_exact(l, 2);
      if (!kraft) {
        // no placement at these depths can be prefix-free
        LeaderAssignment a{{2, 3}, leaders, {}};
        ASSERT_FALSE(verify_secure(a).secure());
        return;
      }
      const auto code = code_from_lengths({l, 2});
      std::vector<Leader> placed;
      for (const auto& c : code.assignments()) placed.push_back({c.label, c.codeword});
      ASSERT_TRUE(verify_secure({{2, 3}, placed, {}}).secure());
    });
}

TEST(Reliability, SpecExamples) {
  EXPECT_NEAR(path_reliability(0.1, 2), 0.81, 1e-15);
  EXPECT_EQ(path_reliability(0.0, 17), 1.0);
  EXPECT_NEAR(path_reliability(0.5, 10), std::pow(2.0, -10), 1e-18);
  EXPECT_NEAR(last_link_failure_probability(0.2, 3), 0.128, 1e-15);
  EXPECT_EQ(last_link_failure_probability(0.0, 4), 0.0);
  EXPECT_EQ(last_link_failure_probability(1.0, 1), 1.0);
  EXPECT_THROW(path_reliability(1.5, 1), InvalidInput);
  EXPECT_THROW(path_reliability(0.5, 0), InvalidInput);
  EXPECT_THROW(last_link_failure_probability(-0.1, 1), InvalidInput);
}

TEST(Reliability, FullDistributionSumsToOne) {
  for (double q : {0.0, 0.05, 0.3, 0.5, 0.9, 1.0})
    for (int n = 1; n <= 30; ++n) {
      double s = path_reliability(q, n);
      for (int k = 1; k <= n; ++k) s += last_link_failure_probability(q, k);
      ASSERT_NEAR(s, 1.0, 1e-12) << q << " " << n;
    }
}

TEST(Reliability, MonteCarloWithinThreeStandardErrors) {
  const double p = path_reliability(0.5, 10);
  const std::uint64_t trials = 1000000;
  const double est = estimate_path_reliability(0.5, 10, trials, 99);
  EXPECT_LE(std::abs(est - p), 3 * std::sqrt(p * (1 - p) / trials));
  EXPECT_EQ(est, estimate_path_reliability(0.5, 10, trials, 99));
}
