#pragma once

// Cumulative-success sequences: a(n) counts the successes among the first n
// trials, so a(1) <= 1 and every step is 0 or 1. The builders here produce
// sequences whose relative frequency a(n)/n approaches a target p, along
// with variants that share the same limit and sequences with no limit.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "conseq/execution.hpp"
#include "conseq/rational.hpp"

namespace conseq {

/// Result of a membership check; `violation` is the smallest 1-based index
/// that breaks a(1) <= 1 or 0 <= a(k+1) - a(k) <= 1.
struct Membership {
  bool ok = true;
  std::optional<std::size_t> violation;
  explicit operator bool() const { return ok; }
};

Membership check_membership_A(std::span<const std::int64_t> terms);

/// A finite prefix a(1..n) of a cumulative-success sequence. Construction
/// validates membership and throws std::invalid_argument otherwise.
class CumulativeSequence {
 public:
  CumulativeSequence() = default;
  explicit CumulativeSequence(std::vector<std::int64_t> terms);

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// 1-based access a(k).
  std::int64_t at(std::size_t k) const { return terms_.at(k - 1); }
  std::span<const std::int64_t> terms() const { return terms_; }

  friend bool operator==(const CumulativeSequence&, const CumulativeSequence&) = default;

 private:
  std::vector<std::int64_t> terms_;
};

/// (n, a(n)) kept as a pair rather than a reduced fraction.
struct FrequencyPoint {
  std::int64_t trial = 0;
  std::int64_t successes = 0;
  Rational value() const { return Rational(successes, trial); }
  friend bool operator==(const FrequencyPoint&, const FrequencyPoint&) = default;
};

/// Canonical member converging to p: a(k) is the unique j with
/// j/k <= p < (j+1)/k, and a(k) = k when p = 1.
CumulativeSequence build_ap_prefix(const Probability& p, std::size_t n);

std::vector<FrequencyPoint> g_ap(const CumulativeSequence& seq);

struct DeviationReport {
  Rational max_deviation{0};
  bool within_bound = true;  // |a(k)/k - p| <= 1/k for all k
  std::optional<std::size_t> first_violation;
};

DeviationReport max_deviation(const CumulativeSequence& seq, const Probability& p,
                              Execution exec = Execution::Parallel);

/// Rises by one for the first m steps, then freezes; frequency tends to 0.
CumulativeSequence variant_p0(std::size_t m, std::size_t n);

/// Zero through index m, then rises by one each step; frequency tends to 1.
CumulativeSequence variant_p1(std::size_t m, std::size_t n);

/// Keeps a(k) for k >= block_index and rewrites the earlier terms so that
/// they descend by one per step backwards from a(block_index), stopping at 0.
CumulativeSequence backshift_variant(const CumulativeSequence& seq, std::size_t block_index);

/// a(k) for k <= m, a(m) afterwards, total length n.
CumulativeSequence truncate_freeze(const CumulativeSequence& seq, std::size_t m, std::size_t n);

struct NonconvergentSequence {
  CumulativeSequence seq;
  /// 1-based trials after which the phase flipped.
  std::vector<std::size_t> switches;
};

/// Oscillating member: rises until a(k)/k >= high, stalls until
/// a(k)/k <= low, and repeats. Starts at a(1) = 0.
NonconvergentSequence build_nonconvergent(const Probability& low, const Probability& high,
                                          std::size_t n);

}  // namespace conseq
