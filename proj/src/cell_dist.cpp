#include "conseq/cell_dist.hpp"

#include <algorithm>
#include <stdexcept>

#include "conseq/kernels/scan_kernels.hpp"

namespace conseq {

ProbabilityVector::ProbabilityVector(std::vector<Probability> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("probability vector needs at least one cell");
  Rational sum{0};
  for (const auto& p : cells_) sum += p.value();
  if (sum != 1) throw std::invalid_argument("cell probabilities must sum to 1");
}

ProbabilityVector ProbabilityVector::parse(std::string_view text) {
  std::vector<Probability> cells;
  for (;;) {
    auto comma = text.find(',');
    auto field = text.substr(0, comma);
    const auto first = field.find_first_not_of(" \t");
    field = first == std::string_view::npos
                ? std::string_view{}
                : field.substr(first, field.find_last_not_of(" \t") - first + 1);
    cells.push_back(Probability::parse(field));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return ProbabilityVector(std::move(cells));
}

std::vector<Rational> ProbabilityVector::values() const {
  std::vector<Rational> out;
  for (const auto& p : cells_) out.push_back(p.value());
  return out;
}

OneHotTrial::OneHotTrial(std::vector<Statement> coordinates) : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty()) throw std::invalid_argument("one-hot tuple needs a coordinate");
  const auto label = coordinates_.front().label();
  std::size_t events = 0;
  for (const auto& s : coordinates_) {
    if (s.is_source() || s.label() != label) {
      throw std::invalid_argument("one-hot coordinates must share one trial label");
    }
    if (s.kind() == StatementKind::Event) ++events;
  }
  if (events != 1) throw std::invalid_argument("one-hot tuple needs exactly one event");
}

std::size_t OneHotTrial::hot_cell() const {
  auto it = std::find_if(coordinates_.begin(), coordinates_.end(),
                         [](const Statement& s) { return s.kind() == StatementKind::Event; });
  return static_cast<std::size_t>(it - coordinates_.begin()) + 1;
}

CellSequences build_cell_sequences(const ProbabilityVector& probs, std::size_t n) {
  if (n == 0) throw std::invalid_argument("trial count must be positive");
  const std::size_t m = probs.size();
  std::vector<std::int64_t> counts(m, 0);
  std::vector<std::vector<std::int64_t>> terms(m, std::vector<std::int64_t>(n));
  CellSequences out;
  out.assignment.cells.resize(n);

  for (std::size_t t = 1; t <= n; ++t) {
    // deficit_k = (t num_k - a_k den_k) / den_k
    std::size_t best = 0;
    __int128 best_num = 0;
    __int128 best_den = 1;
    for (std::size_t k = 0; k < m; ++k) {
      const __int128 den = probs[k].den();
      const __int128 num = static_cast<__int128>(t) * probs[k].num() - counts[k] * den;
      if (k == 0 || num * best_den > best_num * den) {
        best = k;
        best_num = num;
        best_den = den;
      }
    }
    ++counts[best];
    out.assignment.cells[t - 1] = static_cast<std::uint32_t>(best + 1);
    for (std::size_t k = 0; k < m; ++k) terms[k][t - 1] = counts[k];
  }

  for (auto& seq : terms) out.sequences.emplace_back(std::move(seq));
  return out;
}

CellTableReport validate_cell_table(std::span<const std::vector<std::int64_t>> sequences,
                                    const ProbabilityVector& probs) {
  if (sequences.size() != probs.size()) throw std::invalid_argument("cell count mismatch");
  for (const auto& s : sequences) {
    if (s.size() != sequences.front().size()) throw std::invalid_argument("unequal lengths");
  }

  CellTableReport report;
  for (std::size_t k = 0; k < sequences.size(); ++k) {
    if (!check_membership_A(sequences[k])) {
      report.membership = false;
      report.membership_cell = k + 1;
      break;
    }
  }

  const std::size_t n = sequences.front().size();
  for (std::size_t t = 1; t <= n; ++t) {
    std::int64_t increments = 0;
    std::int64_t sum = 0;
    for (const auto& s : sequences) {
      const std::int64_t prev = t == 1 ? 0 : s[t - 2];
      if (s[t - 1] != prev) ++increments;
      sum += s[t - 1];
    }
    if (report.one_hot && increments != 1) {
      report.one_hot = false;
      report.one_hot_trial = t;
    }
    if (report.conservation && sum != static_cast<std::int64_t>(t)) {
      report.conservation = false;
      report.conservation_trial = t;
    }
  }
  return report;
}

std::vector<OneHotTrial> trials_to_tuples(const CellAssignment& assignment, std::size_t m) {
  std::vector<OneHotTrial> out;
  out.reserve(assignment.cells.size());
  for (std::size_t i = 0; i < assignment.cells.size(); ++i) {
    const std::uint32_t cell = assignment.cells[i];
    if (cell == 0 || cell > m) throw std::invalid_argument("cell index outside 1..m");
    const auto label = static_cast<std::uint32_t>(i + 1);
    std::vector<Statement> coords;
    coords.reserve(m);
    for (std::size_t k = 1; k <= m; ++k) {
      coords.push_back(k == cell ? Statement::event(label) : Statement::non_event(label));
    }
    out.emplace_back(std::move(coords));
  }
  return out;
}

OneHotTrial cell_operator_realization(const ProbabilityVector& probs, std::size_t n,
                                      std::size_t t) {
  if (t == 0 || t > n) throw std::invalid_argument("trial outside 1..n");
  auto cells = build_cell_sequences(probs, n);
  const auto label = static_cast<std::uint32_t>(t);

  // Factor k attaches the trial-t statement of cell k's own outcome bits.
  std::vector<SourceConditionalOperator> ops;
  for (const auto& seq : cells.sequences) {
    const bool hit = to_binary(seq).at(t) == 1;
    ops.emplace_back(StatementSet{hit ? Statement::event(label) : Statement::non_event(label)});
  }
  const TupleSet sources{StatementTuple(probs.size(), Statement::source())};
  TupleSet realized = realize_product(ops, sources);
  if (realized.size() != 1) throw std::logic_error("product realization is not a single tuple");
  return OneHotTrial(*realized.begin());
}

Rational discrepancy(std::span<const CumulativeSequence> sequences, const ProbabilityVector& probs,
                     Execution exec) {
  if (sequences.size() != probs.size()) throw std::invalid_argument("cell count mismatch");
  std::vector<std::span<const std::int64_t>> cells;
  for (const auto& s : sequences) {
    if (s.size() != sequences.front().size()) throw std::invalid_argument("unequal lengths");
    cells.push_back(s.terms());
  }
  const auto values = probs.values();
  auto scan = exec == Execution::Parallel ? kernels::discrepancy_scan_parallel(cells, values)
                                          : kernels::discrepancy_scan_serial(cells, values);
  return scan.max_discrepancy;
}

}  // namespace conseq
