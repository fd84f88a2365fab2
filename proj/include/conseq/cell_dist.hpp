#pragma once

// Multi-cell distributions. Each trial lands in exactly one of m cells and
// the per-cell cumulative counts track t * p_k.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "conseq/closure.hpp"
#include "conseq/event_seq.hpp"
#include "conseq/freq_seq.hpp"
#include "conseq/rational.hpp"

namespace conseq {

/// m >= 1 exact cell probabilities summing to one.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<Probability> cells);
  /// Comma-separated rationals, e.g. "1/4,1/2,1/4" or "0.25,0.5,0.25".
  static ProbabilityVector parse(std::string_view text);

  std::size_t size() const { return cells_.size(); }
  const Probability& operator[](std::size_t k) const { return cells_[k]; }
  const std::vector<Probability>& cells() const { return cells_; }
  std::vector<Rational> values() const;

 private:
  std::vector<Probability> cells_;
};

/// Entry t (0-based storage, trial t+1) is the 1-based receiving cell.
struct CellAssignment {
  std::vector<std::uint32_t> cells;
  friend bool operator==(const CellAssignment&, const CellAssignment&) = default;
};

/// m statements sharing one trial label, exactly one of which is an event.
class OneHotTrial {
 public:
  explicit OneHotTrial(std::vector<Statement> coordinates);
  const std::vector<Statement>& coordinates() const { return coordinates_; }
  /// 1-based coordinate holding the event.
  std::size_t hot_cell() const;
  friend bool operator==(const OneHotTrial&, const OneHotTrial&) = default;

 private:
  std::vector<Statement> coordinates_;
};

struct CellSequences {
  CellAssignment assignment;
  std::vector<CumulativeSequence> sequences;  // one per cell
};

/// Greedy largest deficit: trial t goes to the cell maximizing
/// t * p_k - a_k(t-1), lowest index on ties.
CellSequences build_cell_sequences(const ProbabilityVector& probs, std::size_t n);

struct CellTableReport {
  bool membership = true;
  bool one_hot = true;
  bool conservation = true;
  std::optional<std::size_t> membership_cell;   // first cell outside A (1-based)
  std::optional<std::size_t> one_hot_trial;     // first trial with != 1 increment
  std::optional<std::size_t> conservation_trial;  // first trial with sum != t
  bool all() const { return membership && one_hot && conservation; }
};

/// Throws std::invalid_argument on unequal lengths or a cell-count mismatch.
CellTableReport validate_cell_table(std::span<const std::vector<std::int64_t>> sequences,
                                    const ProbabilityVector& probs);

/// Throws std::invalid_argument if an entry is 0 or exceeds m.
std::vector<OneHotTrial> trials_to_tuples(const CellAssignment& assignment, std::size_t m);

/// Trial t of the distribution, obtained by realizing the product of the
/// per-cell operators at (G, ..., G). Throws std::invalid_argument if t is 0
/// or exceeds n.
OneHotTrial cell_operator_realization(const ProbabilityVector& probs, std::size_t n,
                                      std::size_t t);

/// max over k, t of |a_k(t) - t p_k|. Throws std::invalid_argument on
/// unequal lengths.
Rational discrepancy(std::span<const CumulativeSequence> sequences, const ProbabilityVector& probs,
                     Execution exec = Execution::Parallel);

}  // namespace conseq
