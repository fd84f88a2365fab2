#pragma once

// Trial-outcome bit sequences and their labeled event statements.
//
// A cumulative sequence fixes its outcome bits uniquely: bit j is
// a(j) - a(j-1). Bits then map to E_j (success) or E'_j (failure), and the
// join of the single-statement operators C({M_j}, {G}) realizes, at {G},
// exactly the labeled trace.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "conseq/closure.hpp"
#include "conseq/freq_seq.hpp"

namespace conseq {

class BinaryTrialSequence {
 public:
  BinaryTrialSequence() = default;
  /// Throws std::invalid_argument on any value outside {0, 1}.
  explicit BinaryTrialSequence(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t at(std::size_t j) const { return bits_.at(j - 1); }  // 1-based
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::size_t ones() const;

  friend bool operator==(const BinaryTrialSequence&, const BinaryTrialSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Entry j (1-based) is E_j or E'_j.
class LabeledEventSequence {
 public:
  LabeledEventSequence() = default;
  /// Throws std::invalid_argument unless labels run 1..n in order and no
  /// entry is the source.
  explicit LabeledEventSequence(std::vector<Statement> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Statement>& entries() const { return entries_; }

  friend bool operator==(const LabeledEventSequence&, const LabeledEventSequence&) = default;

 private:
  std::vector<Statement> entries_;
};

/// "E'_1 E_2 E'_3 ..."
std::string to_string(const LabeledEventSequence& seq);

BinaryTrialSequence to_binary(const CumulativeSequence& seq);
CumulativeSequence from_binary(const BinaryTrialSequence& bits);

LabeledEventSequence label_events(const BinaryTrialSequence& bits);

/// Join over j of C({M(bit_j)}, {G}) for the canonical p-member of length n.
SourceConditionalOperator trial_operator(const Probability& p, std::size_t n);

/// realize(trial_operator(p, n), {G}) sorted by label.
LabeledEventSequence realize_trace(const Probability& p, std::size_t n);

/// Orders a realized statement set by label. Throws std::invalid_argument
/// if the set does not hold exactly one statement per label 1..n.
LabeledEventSequence order_by_label(const StatementSet& realized);

}  // namespace conseq
