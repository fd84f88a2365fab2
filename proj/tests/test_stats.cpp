#include <gtest/gtest.h>

#include <cmath>

#include "conseq/stats.hpp"

using namespace conseq;
using namespace conseq::stats;

namespace {

BinaryTrialSequence alternating(std::size_t n) {
  std::vector<std::uint8_t> b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>(i % 2);
  return BinaryTrialSequence(std::move(b));
}

BinaryTrialSequence constant(std::size_t n, std::uint8_t v) {
  return BinaryTrialSequence(std::vector<std::uint8_t>(n, v));
}

// Textbook runs statistic written out from scratch.
double runs_z(const BinaryTrialSequence& b) {
  double n0 = 0, n1 = 0, runs = 1;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    (b.at(j) ? n1 : n0) += 1;
    if (j > 1 && b.at(j) != b.at(j - 1)) runs += 1;
  }
  const double n = n0 + n1;
  const double mu = 2 * n0 * n1 / n + 1;
  const double var = (mu - 1) * (mu - 2) / (n - 1);
  return (runs - mu) / std::sqrt(var);
}

}  // namespace

TEST(SplitMix64, ReferenceOutputs) {
  SplitMix64 g(1234567);
  for (std::uint64_t want : {6457827717110365317ULL, 3203168211198807973ULL, 9817491932198370423ULL,
                             4593380528125082431ULL, 16408922859458223821ULL}) {
    EXPECT_EQ(g.next(), want);
  }
}

TEST(BernoulliPrng, DeterministicAndDegenerate) {
  EXPECT_EQ(bernoulli_prng(Probability(1, 3), 1000, 7), bernoulli_prng(Probability(1, 3), 1000, 7));
  EXPECT_NE(bernoulli_prng(Probability(1, 3), 1000, 7), bernoulli_prng(Probability(1, 3), 1000, 8));
  EXPECT_EQ(bernoulli_prng(Probability(0, 1), 500, 1).ones(), 0u);
  EXPECT_EQ(bernoulli_prng(Probability(1, 1), 500, 1).ones(), 500u);
  EXPECT_THROW(bernoulli_prng(Probability(1, 2), 0, 1), std::invalid_argument);
}

TEST(BernoulliPrng, ThresholdIsExact) {
  // Bit t is 1 exactly when the raw output lies below p * 2^64.
  SplitMix64 g(99);
  auto bits = bernoulli_prng(Probability(1, 4), 200, 99);
  for (std::size_t t = 1; t <= 200; ++t) {
    EXPECT_EQ(bits.at(t), g.next() < (std::uint64_t{1} << 62) ? 1 : 0);
  }
}

TEST(BernoulliPrng, HalfAtSeed42WithinBand) {
  auto bits = bernoulli_prng(Probability(1, 2), 100000, 42);
  EXPECT_GE(bits.ones(), 49000u);
  EXPECT_LE(bits.ones(), 51000u);
}

TEST(CriticalValues, Table) {
  EXPECT_DOUBLE_EQ(normal_critical(0.05), 1.95996);
  EXPECT_DOUBLE_EQ(normal_critical(0.01), 2.57583);
  EXPECT_DOUBLE_EQ(chi_square_critical(2, 0.05), 5.991465);
  EXPECT_DOUBLE_EQ(chi_square_critical(10, 0.01), 23.209251);
  EXPECT_THROW(normal_critical(0.1), std::invalid_argument);
  EXPECT_THROW(chi_square_critical(0, 0.05), std::invalid_argument);
  EXPECT_THROW(chi_square_critical(11, 0.05), std::invalid_argument);
}

TEST(FrequencyTest, Examples) {
  auto ones = frequency_test(constant(100, 1), Probability(1, 2), 0.01);
  EXPECT_DOUBLE_EQ(ones.statistic, 10.0);
  EXPECT_FALSE(ones.pass);
  EXPECT_EQ(ones.n, 100u);
  EXPECT_EQ(ones.test_name, "frequency");

  auto designed = to_binary(build_ap_prefix(Probability(1, 2), 100));
  EXPECT_EQ(designed.ones(), 50u);
  auto r = frequency_test(designed, Probability(1, 2), 0.01);
  EXPECT_DOUBLE_EQ(r.statistic, 0.0);
  EXPECT_TRUE(r.pass);
}

TEST(FrequencyTest, Preconditions) {
  EXPECT_THROW(frequency_test(constant(29, 0), Probability(1, 2), 0.01), std::invalid_argument);
  EXPECT_THROW(frequency_test(constant(30, 0), Probability(0, 1), 0.01), std::invalid_argument);
  EXPECT_THROW(frequency_test(constant(30, 1), Probability(1, 1), 0.01), std::invalid_argument);
  EXPECT_THROW(frequency_test(constant(30, 1), Probability(1, 2), 0.02), std::invalid_argument);
}

TEST(FrequencyTest, DesignedStreamsAlwaysPass) {
  for (auto [num, den] : {std::pair{1, 7}, {1, 4}, {1, 2}, {3, 7}, {5, 9}, {9, 10}}) {
    Probability p(num, den);
    for (std::size_t n : {100, 1000, 12345}) {
      auto r = frequency_test(to_binary(build_ap_prefix(p, n)), p, 0.01);
      EXPECT_TRUE(r.pass) << num << "/" << den << " n=" << n;
    }
  }
}

TEST(RunsTest, AlternatingFails) {
  auto r = runs_test(alternating(100), 0.01);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.test_name, "runs");
  // 100 runs against a null mean of 51.
  EXPECT_NEAR(r.statistic, runs_z(alternating(100)), 1e-12);
  EXPECT_NEAR(r.statistic, 49.0 / std::sqrt(50.0 * 49.0 / 99.0), 1e-12);
}

TEST(RunsTest, MatchesTextbookFormulaOnPrng) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto b = bernoulli_prng(Probability(2, 5), 5000, seed);
    EXPECT_NEAR(runs_test(b, 0.05).statistic, runs_z(b), 1e-9);
  }
}

TEST(RunsTest, Preconditions) {
  EXPECT_THROW(runs_test(constant(100, 1), 0.01), std::invalid_argument);
  EXPECT_THROW(runs_test(alternating(20), 0.01), std::invalid_argument);
}

TEST(HarnessSanity, PrngHalfSeed42PassesBoth) {
  auto b = bernoulli_prng(Probability(1, 2), 100000, 42);
  EXPECT_TRUE(frequency_test(b, Probability(1, 2), 0.01).pass);
  EXPECT_TRUE(runs_test(b, 0.01).pass);
}

TEST(ChiSquare, Examples) {
  auto probs = ProbabilityVector::parse("1/4,1/2,1/4");
  std::vector<std::int64_t> counts = {2, 3, 1};
  auto r = chi_square_cells(counts, 6, probs, 0.05);
  EXPECT_NEAR(r.statistic, 1.0 / 3.0, 1e-15);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.test_name, "chi_square");

  std::vector<std::int64_t> exact = {25, 50, 25};
  EXPECT_EQ(chi_square_cells(exact, 100, probs, 0.01).statistic, 0.0);

  auto cs = build_cell_sequences(probs, 10000);
  std::vector<std::int64_t> totals;
  for (const auto& s : cs.sequences) totals.push_back(s.at(10000));
  auto g = chi_square_cells(totals, 10000, probs, 0.01);
  EXPECT_LE(g.statistic, 0.01);
  EXPECT_TRUE(g.pass);

  std::vector<std::int64_t> skewed = {80, 10, 10};
  EXPECT_FALSE(chi_square_cells(skewed, 100, probs, 0.01).pass);
}

TEST(ChiSquare, Preconditions) {
  auto probs = ProbabilityVector::parse("1/4,1/2,1/4");
  std::vector<std::int64_t> counts = {2, 3, 1};
  EXPECT_THROW(chi_square_cells(counts, 7, probs, 0.05), std::invalid_argument);
  std::vector<std::int64_t> two = {3, 3};
  EXPECT_THROW(chi_square_cells(two, 6, probs, 0.05), std::invalid_argument);
  std::vector<std::int64_t> small = {1, 1, 1};
  EXPECT_THROW(chi_square_cells(small, 3, probs, 0.05), std::invalid_argument);
  std::vector<std::int64_t> single = {5};
  EXPECT_THROW(chi_square_cells(single, 5, ProbabilityVector::parse("1"), 0.05), std::invalid_argument);
}

TEST(Compare, DesignedVersusPrng) {
  Probability half(1, 2);
  auto designed = to_binary(build_ap_prefix(half, 10000));
  auto reports = compare(designed, half, 42, 0.01);
  ASSERT_EQ(reports.size(), 4u);
  EXPECT_EQ(reports[0].stream, Stream::Designed);
  EXPECT_EQ(reports[0].report.test_name, "frequency");
  EXPECT_TRUE(reports[0].report.pass);
  EXPECT_EQ(reports[1].report.test_name, "runs");
  EXPECT_FALSE(reports[1].report.pass);
  EXPECT_FALSE(reports[1].seed.has_value());
  EXPECT_EQ(reports[2].stream, Stream::Prng);
  EXPECT_TRUE(reports[2].report.pass);
  EXPECT_TRUE(reports[3].report.pass);
  EXPECT_EQ(reports[3].seed, 42u);
  EXPECT_EQ(to_string(Stream::Prng), "prng");
}

TEST(Compare, SerialMatchesParallelAndPropagatesErrors) {
  Probability p(3, 7);
  auto designed = to_binary(build_ap_prefix(p, 2000));
  auto a = compare(designed, p, 5, 0.05, Execution::Serial);
  auto b = compare(designed, p, 5, 0.05, Execution::Parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].report.statistic, b[i].report.statistic);
    EXPECT_EQ(a[i].report.pass, b[i].report.pass);
  }
  EXPECT_THROW(compare(designed, p, 5, 0.2), std::invalid_argument);
  EXPECT_THROW(compare(to_binary(build_ap_prefix(p, 10)), p, 5, 0.05), std::invalid_argument);
}

TEST(TruncateFreeze, KnownPortionPassesFrequency) {
  Probability half(1, 2);
  auto frozen = truncate_freeze(build_ap_prefix(half, 10000), 10000, 1000000);
  auto bits = to_binary(frozen);
  std::vector<std::uint8_t> head(bits.bits().begin(), bits.bits().begin() + 10000);
  EXPECT_TRUE(frequency_test(BinaryTrialSequence(head), half, 0.01).pass);
  EXPECT_LT(Rational(frozen.at(1000000), 1000000), Rational(2, 100));
}
