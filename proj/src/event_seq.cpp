#include "conseq/event_seq.hpp"

#include <algorithm>
#include <stdexcept>

namespace conseq {

BinaryTrialSequence::BinaryTrialSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw std::invalid_argument("trial bits must be 0 or 1");
  }
}

std::size_t BinaryTrialSequence::ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

LabeledEventSequence::LabeledEventSequence(std::vector<Statement> entries)
    : entries_(std::move(entries)) {
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j].is_source() || *entries_[j].label() != j + 1) {
      throw std::invalid_argument("labeled sequence must run E/E' 1..n in order");
    }
  }
}

std::string to_string(const LabeledEventSequence& seq) {
  std::string out;
  for (const auto& s : seq.entries()) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

BinaryTrialSequence to_binary(const CumulativeSequence& seq) {
  std::vector<std::uint8_t> bits(seq.size());
  std::int64_t prev = 0;
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    bits[j - 1] = static_cast<std::uint8_t>(seq.at(j) - prev);
    prev = seq.at(j);
  }
  return BinaryTrialSequence(std::move(bits));
}

CumulativeSequence from_binary(const BinaryTrialSequence& bits) {
  std::vector<std::int64_t> terms(bits.size());
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < bits.size(); ++j) {
    sum += bits.bits()[j];
    terms[j] = sum;
  }
  return CumulativeSequence(std::move(terms));
}

LabeledEventSequence label_events(const BinaryTrialSequence& bits) {
  std::vector<Statement> entries;
  entries.reserve(bits.size());
  for (std::uint32_t j = 1; j <= bits.size(); ++j) {
    entries.push_back(bits.at(j) ? Statement::event(j) : Statement::non_event(j));
  }
  return LabeledEventSequence(std::move(entries));
}

SourceConditionalOperator trial_operator(const Probability& p, std::size_t n) {
  auto labeled = label_events(to_binary(build_ap_prefix(p, n)));
  // The join of C({s_j}, {G}) over j is C({s_1, ..., s_n}, {G}).
  return SourceConditionalOperator(
      StatementSet(labeled.entries().begin(), labeled.entries().end()));
}

LabeledEventSequence order_by_label(const StatementSet& realized) {
  // Canonical statement order is already by label.
  std::vector<Statement> entries(realized.begin(), realized.end());
  return LabeledEventSequence(std::move(entries));
}

LabeledEventSequence realize_trace(const Probability& p, std::size_t n) {
  return order_by_label(realize(trial_operator(p, n), StatementSet{Statement::source()}));
}

}  // namespace conseq
