#pragma once

// Side-by-side statistical battery for designed bit streams and a seeded
// Bernoulli reference stream. Counts are exact integers; statistics are
// doubles.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conseq/cell_dist.hpp"
#include "conseq/event_seq.hpp"
#include "conseq/execution.hpp"
#include "conseq/rational.hpp"

namespace conseq::stats {

/// Identifies the reference generator in serialized reports.
inline constexpr std::string_view kPrngVersion = "splitmix64-v1";

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
/// increment; each output is the state passed through the variant-13
/// finalizer. Bit-exact on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Bit t is 1 iff u_t / 2^64 < p, compared exactly, where u_t is the t-th
/// SplitMix64 output for `seed`. Requires n >= 1.
BinaryTrialSequence bernoulli_prng(const Probability& p, std::size_t n, std::uint64_t seed);

struct TestReport {
  std::string test_name;
  double statistic = 0.0;
  double alpha = 0.0;
  bool pass = false;
  std::size_t n = 0;
};

/// Two-sided normal critical value; only alpha in {0.05, 0.01}.
double normal_critical(double alpha);
/// Upper chi-square critical value for 1 <= df <= 10, alpha in {0.05, 0.01}.
double chi_square_critical(std::size_t df, double alpha);

/// One-proportion z-test: z = (x - n p) / sqrt(n p (1 - p)).
/// Requires n >= 30 and 0 < p < 1.
TestReport frequency_test(const BinaryTrialSequence& bits, const Probability& p, double alpha);

/// Wald-Wolfowitz runs test standardized against the observed 0/1 counts.
/// Requires n >= 30 and both symbols present.
TestReport runs_test(const BinaryTrialSequence& bits, double alpha);

/// Pearson goodness of fit with m - 1 degrees of freedom. Requires
/// sum(counts) = n, m >= 2, and n p_k >= 1 for every cell.
TestReport chi_square_cells(std::span<const std::int64_t> counts, std::size_t n,
                            const ProbabilityVector& probs, double alpha);

enum class Stream { Designed, Prng };
std::string_view to_string(Stream s);

struct StreamReport {
  Stream stream;
  TestReport report;
  std::optional<std::uint64_t> seed;  // set for the PRNG stream
};

/// Frequency and runs tests on the designed bits and on
/// bernoulli_prng(p, n, seed); four reports, designed first.
std::vector<StreamReport> compare(const BinaryTrialSequence& designed, const Probability& p,
                                  std::uint64_t seed, double alpha,
                                  Execution exec = Execution::Parallel);

}  // namespace conseq::stats
