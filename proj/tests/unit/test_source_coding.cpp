#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "prefixnet/errors.hpp"
#include "prefixnet/pmf.hpp"
#include "prefixnet/source_coding.hpp"
#include "support/oracles.hpp"

using namespace prefixnet;

namespace {

ProbabilityMassFunction pmf_of(const std::vector<double>& p) {
  std::vector<PmfEntry> e;
  for (std::size_t i = 0; i < p.size(); ++i) e.push_back({std::string(1, static_cast<char>('a' + i)), p[i]});
  return ProbabilityMassFunction(e);
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<std::string> words(const PrefixCode& c) {
  std::vector<std::string> out;
  for (const auto& a : c.assignments()) out.push_back(a.codeword.to_string(c.alphabet_size()));
  return out;
}

}  // namespace

TEST(Pmf, RejectsBadInput) {
  EXPECT_THROW(ProbabilityMassFunction({}), InvalidInput);
  EXPECT_THROW(pmf_of({0.5, 0.4}), InvalidInput);
  EXPECT_THROW(pmf_of({1.2, -0.2}), InvalidInput);
  EXPECT_THROW(ProbabilityMassFunction({{"a", 0.5}, {"a", 0.5}}), InvalidInput);
  EXPECT_THROW(pmf_of({NAN, 1.0}), InvalidInput);
  EXPECT_NO_THROW(pmf_of({0.5, 0.5 + 1e-10}));
}

TEST(Pmf, FromWeightsNormalizes) {
  auto p = ProbabilityMassFunction::from_weights({"x", "y"}, {1.0, 3.0});
  EXPECT_DOUBLE_EQ(*p.probability("y"), 0.75);
  EXPECT_FALSE(p.probability("z").has_value());
}

TEST(Entropy, SpecExamples) {
  EXPECT_NEAR(shannon_entropy(pmf_of({0.25, 0.25, 0.25, 0.25})), 2.0, 1e-15);
  EXPECT_EQ(shannon_entropy(pmf_of({1.0})), 0.0);
  EXPECT_FALSE(std::signbit(shannon_entropy(pmf_of({1.0}))));
  EXPECT_NEAR(shannon_entropy(pmf_of({0.5, 0.25, 0.125, 0.125})), 1.75, 1e-15);
  EXPECT_THROW(shannon_entropy(pmf_of({1.0}), 1.0), InvalidInput);
}

TEST(Entropy, PermutationInvariantBitForBit) {
  std::mt19937_64 rng(3);
  std::vector<double> w(17);
  for (auto& x : w) x = std::uniform_real_distribution<double>(0.01, 1.0)(rng);
  double s = 0;
  for (auto x : w) s += x;
  for (auto& x : w) x /= s;
  const double h = shannon_entropy(w, 2.0);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(w.begin(), w.end(), rng);
    EXPECT_EQ(shannon_entropy(w, 2.0), h);
  }
}

TEST(Kraft, SpecExamples) {
  EXPECT_DOUBLE_EQ(kraft_sum({{1, 2, 3}, 2}), 0.875);
  EXPECT_TRUE(satisfies_kraft(CodeLengthSet{{1, 2, 3}, 2}));
  EXPECT_DOUBLE_EQ(kraft_sum({{1, 1, 1}, 2}), 1.5);
  EXPECT_FALSE(satisfies_kraft(CodeLengthSet{{1, 1, 1}, 2}));
  EXPECT_DOUBLE_EQ(kraft_sum({{1, 1, 1}, 3}), 1.0);
  EXPECT_TRUE(satisfies_kraft(CodeLengthSet{{1, 1, 1}, 3}));
}

TEST(Kraft, RejectsInvalidLengthSets) {
  EXPECT_EQ(kraft_sum({{}, 2}), 0.0);
  EXPECT_THROW(kraft_sum({{0, 1}, 2}), InvalidInput);
  EXPECT_THROW(kraft_sum({{1}, 1}), InvalidInput);
}

TEST(Kraft, ConsecutiveLengthsSpecExamples) {
  EXPECT_NEAR(consecutive_lengths_sum(1, 3, 2), 0.875, 1e-15);
  EXPECT_NEAR(consecutive_lengths_sum(1, 1, 2), 0.5, 1e-15);
  const double direct = std::pow(3.0, -2) + std::pow(3.0, -3) + std::pow(3.0, -4) + std::pow(3.0, -5);
  EXPECT_NEAR(consecutive_lengths_sum(2, 4, 3), direct, 1e-15);
}

TEST(Kraft, ConsecutiveClosedFormMatchesExpansion) {
  for (int D = 2; D <= 5; ++D)
    for (int n1 = 1; n1 <= 20; ++n1)
      for (int M = 1; M <= 20; ++M) {
        std::vector<int> l;
        for (int i = 0; i < M; ++i) l.push_back(n1 + i);
        ASSERT_NEAR(consecutive_lengths_sum(n1, M, D), kraft_sum({l, D}), 1e-12) << n1 << " " << M << " " << D;
        ASSERT_NEAR(consecutive_lengths_sum(n1, M, D), oracle::kraft_direct(l, D), 1e-12);
      }
}

TEST(Kraft, ArithmeticProgressionSpecExamples) {
  auto r = arithmetic_progression_satisfies_kraft(2, 2, 3, 2);
  EXPECT_NEAR(r.sum, 0.328125, 1e-15);
  EXPECT_TRUE(r.satisfied);
  r = arithmetic_progression_satisfies_kraft(1, 1, 5, 2);
  EXPECT_NEAR(r.sum, 0.96875, 1e-15);
  EXPECT_TRUE(r.satisfied);
  r = arithmetic_progression_satisfies_kraft(1, 1, 1, 2);
  EXPECT_NEAR(r.sum, 0.5, 1e-15);
  EXPECT_TRUE(r.satisfied);
}

TEST(Kraft, ArithmeticProgressionAgreesWithDirectSum) {
  for (int D = 2; D <= 5; ++D)
    for (int n1 = 1; n1 <= 8; ++n1)
      for (int step = 1; step <= 4; ++step)
        for (int M = 1; M <= 15; ++M) {
          std::vector<int> l;
          for (int i = 0; i < M; ++i) l.push_back(n1 + i * step);
          const auto r = arithmetic_progression_satisfies_kraft(n1, step, M, D);
          ASSERT_NEAR(r.sum, oracle::kraft_direct(l, D), 1e-12);
          ASSERT_TRUE(r.satisfied);
          ASSERT_LE(oracle::kraft_direct(l, D), 1.0);
        }
}

TEST(Kraft, AlphabetMonotonicitySpecExamples) {
  EXPECT_TRUE(kraft_alphabet_monotonicity({{2, 2, 3, 3, 4}, 2}, 3));
  EXPECT_TRUE(kraft_alphabet_monotonicity({{1}, 2}, 10));
  EXPECT_THROW(kraft_alphabet_monotonicity({{1, 1, 1}, 2}, 3), PreconditionViolation);
  EXPECT_THROW(kraft_alphabet_monotonicity({{1}, 3}, 3), InvalidInput);
}

TEST(Kraft, AlphabetMonotonicityOverAllSmallSets) {
  for (std::size_t n = 1; n <= 5; ++n)
    oracle::for_each_length_vector(n, 5, [](const std::vector<int>& l) {
      if (!oracle::kraft_ok_exact(l, 2)) return;
      for (int Dp = 3; Dp <= 10; ++Dp) {
        ASSERT_TRUE(kraft_alphabet_monotonicity({l, 2}, Dp));
        ASSERT_TRUE(oracle::kraft_ok_exact(l, Dp));
      }
    });
}

TEST(Codeword, ParseAndPrint) {
  EXPECT_EQ(Codeword::parse("102", 3).digits(), (std::vector<std::uint32_t>{1, 0, 2}));
  EXPECT_EQ(Codeword::parse("11.0.3", 12).digits(), (std::vector<std::uint32_t>{11, 0, 3}));
  EXPECT_EQ(Codeword({11, 0, 3}).to_string(12), "11.0.3");
  EXPECT_EQ(Codeword({1, 0}).to_string(2), "10");
  EXPECT_THROW(Codeword::parse("2", 2), InvalidInput);
  EXPECT_TRUE(Codeword({1}).is_prefix_of(Codeword({1, 0})));
  EXPECT_TRUE(Codeword({1}).is_prefix_of(Codeword({1})));
  EXPECT_FALSE(Codeword({1, 0}).is_prefix_of(Codeword({1})));
}

TEST(PrefixCodeType, RejectsNonPrefixFree) {
  EXPECT_THROW(PrefixCode(2, {{"a", Codeword({0})}, {"b", Codeword({0, 1})}}), InvalidInput);
  EXPECT_THROW(PrefixCode(2, {{"a", Codeword({0})}, {"a", Codeword({1})}}), InvalidInput);
  EXPECT_THROW(PrefixCode(2, {{"a", Codeword({2})}}), InvalidInput);
  EXPECT_NO_THROW(PrefixCode(2, {{"a", Codeword({0})}, {"b", Codeword({1, 0})}}));
}

TEST(CodeFromLengths, SpecExamples) {
  EXPECT_EQ(words(code_from_lengths({{1, 2, 2}, 2})), (std::vector<std::string>{"0", "10", "11"}));
  EXPECT_EQ(words(code_from_lengths({{2, 2, 2}, 2})), (std::vector<std::string>{"00", "01", "10"}));
  EXPECT_THROW(code_from_lengths({{1, 1, 1}, 2}), KraftViolation);
}

TEST(CodeFromLengths, KeepsInputOrderForLabels) {
  const std::vector<std::string> labels{"x", "y", "z"};
  const auto c = code_from_lengths({{2, 1, 2}, 2}, labels);
  EXPECT_EQ(c.find("y")->to_string(2), "0");
  EXPECT_EQ(c.find("x")->to_string(2), "10");
  EXPECT_EQ(c.find("z")->to_string(2), "11");
}

TEST(CodeFromLengths, PrefixFreeForEveryKraftSet) {
  for (int D = 2; D <= 4; ++D)
    for (std::size_t n = 1; n <= 6; ++n)
      oracle::for_each_length_vector(n, 4, [&](const std::vector<int>& l) {
        if (!oracle::kraft_ok_exact(l, D)) {
          ASSERT_THROW(code_from_lengths({l, D}), KraftViolation);
          return;
        }
        const auto c = code_from_lengths({l, D});
        ASSERT_EQ(c.lengths().lengths, l);
        for (std::size_t i = 0; i < c.size(); ++i)
          for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j) {
              std::vector<int> a(c.assignments()[i].codeword.digits().begin(), c.assignments()[i].codeword.digits().end());
              std::vector<int> b(c.assignments()[j].codeword.digits().begin(), c.assignments()[j].codeword.digits().end());
              ASSERT_FALSE(oracle::word_prefix(a, b));
            }
      });
}

TEST(PrefixViolations, ReportsPairs) {
  std::vector<Codeword> w{Codeword({0}), Codeword({0, 1}), Codeword({1}), Codeword({1})};
  const auto v = prefix_violations(w);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_EQ(v[1], (std::pair<std::size_t, std::size_t>{2, 3}));
}

TEST(Huffman, SpecExamples) {
  auto p = pmf_of({0.5, 0.25, 0.125, 0.125});
  auto c = huffman_code(p, 2);
  EXPECT_EQ(c.lengths().lengths, (std::vector<int>{1, 2, 3, 3}));
  EXPECT_NEAR(expected_length(c, p), 1.75, 1e-15);
  EXPECT_NEAR(expected_length(c, p), shannon_entropy(p), 1e-15);

  p = pmf_of({1.0 / 3, 1.0 / 3, 1.0 / 3});
  c = huffman_code(p, 2);
  EXPECT_EQ(sorted(c.lengths().lengths), (std::vector<int>{1, 2, 2}));
  EXPECT_NEAR(expected_length(c, p), 5.0 / 3, 1e-12);
  EXPECT_NEAR(oracle::min_expected_length(p.probabilities(), 2), 5.0 / 3, 1e-12);

  p = pmf_of({0.4, 0.3, 0.2, 0.1});
  c = huffman_code(p, 3);
  EXPECT_EQ(c.lengths().lengths, (std::vector<int>{1, 1, 2, 2}));
  EXPECT_NEAR(expected_length(c, p), 1.3, 1e-12);
  EXPECT_NEAR(oracle::min_expected_length(p.probabilities(), 3), 1.3, 1e-12);
}

TEST(Huffman, SingleSymbolGetsLengthOne) {
  const auto p = pmf_of({1.0});
  const auto c = huffman_code(p, 2);
  EXPECT_EQ(c.lengths().lengths, std::vector<int>{1});
  EXPECT_DOUBLE_EQ(expected_length(c, p), 1.0);
}

TEST(Huffman, RejectsBadAlphabet) { EXPECT_THROW(huffman_code(pmf_of({1.0}), 1), InvalidInput); }

TEST(ExpectedLength, SpecExamples) {
  const auto c = code_from_lengths({{1, 2, 2}, 2});
  const auto p = ProbabilityMassFunction({{"0", 0.5}, {"1", 0.25}, {"2", 0.25}});
  EXPECT_DOUBLE_EQ(expected_length(c, p), 1.5);
  const auto missing = ProbabilityMassFunction({{"0", 0.5}, {"9", 0.5}});
  EXPECT_THROW(expected_length(c, missing), InvalidInput);
}

TEST(Oracle, LengthEnumerationAgreesWithWordEnumeration) {
  // Validates the Kraft-based oracle against explicit codeword search.
  for (const auto& p : std::vector<std::vector<double>>{{0.6, 0.4}, {0.5, 0.3, 0.2}, {0.2, 0.2, 0.6}, {1.0}}) {
    EXPECT_NEAR(oracle::min_expected_length(p, 2), oracle::min_expected_length_by_words(p, 2, 3), 1e-12);
    EXPECT_NEAR(oracle::min_expected_length(p, 3), oracle::min_expected_length_by_words(p, 3, 2), 1e-12);
  }
}

TEST(Huffman, OptimalAndWithinEntropyBoundsOnRandomPmfs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 5;
    std::vector<double> w(n);
    for (auto& x : w) x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    double s = 0;
    for (auto x : w) s += x;
    for (auto& x : w) x /= s;
    const auto p = pmf_of(w);
    for (int D = 2; D <= 3; ++D) {
      const auto c = huffman_code(p, D);
      const double L = expected_length(c, p);
      const double H = shannon_entropy(p, D);
      ASSERT_LE(L, oracle::min_expected_length(w, D) + 1e-12);
      ASSERT_GE(L, H - 1e-12);
      ASSERT_LT(L, H + 1);
      ASSERT_TRUE(satisfies_kraft(c.lengths()));
    }
  }
}
