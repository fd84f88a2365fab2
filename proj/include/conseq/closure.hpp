#pragma once

// Consequence (closure) operators over finite statement languages.
//
// Two representations live here. SourceConditionalOperator is the symbolic
// family C(X, {G}): it adds the attachments X to any premise set that already
// contains the source G and leaves every other set untouched. The
// extensional form is a full table over the power set of a small universe
// and exists so that closure axioms can be checked by brute force.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conseq/execution.hpp"
#include "conseq/kernels/axiom_kernels.hpp"
#include "conseq/language.hpp"

namespace conseq {

using kernels::Axiom;
using kernels::Mask;

class SourceConditionalOperator {
 public:
  explicit SourceConditionalOperator(StatementSet attachments,
                                     Statement source = Statement::source());

  const StatementSet& attachments() const { return attachments_; }
  const Statement& source() const { return source_; }

  friend bool operator==(const SourceConditionalOperator&,
                         const SourceConditionalOperator&) = default;

 private:
  StatementSet attachments_;
  Statement source_;
};

/// Y with the attachments added when the source is in Y; Y otherwise.
StatementSet apply(const SourceConditionalOperator& op, const StatementSet& y);

/// apply(op, y) minus y: the statements the operator actually produced.
StatementSet realize(const SourceConditionalOperator& op, const StatementSet& y);

/// C(X1 u X2, {G}). Throws std::invalid_argument if the sources differ.
SourceConditionalOperator join_family(const SourceConditionalOperator& a,
                                      const SourceConditionalOperator& b);

/// Canonical text form, e.g. "C({E_1,E'_2},{G})".
std::string to_string(const SourceConditionalOperator& op);

/// Parses the canonical text form back.
SourceConditionalOperator parse_operator(std::string_view text);

// ---------------------------------------------------------------------------
// Extensional operators

inline constexpr std::size_t kMaxExtensionalElements = 12;

template <class Element>
struct BasicCounterexample {
  Axiom axiom;
  std::set<Element> subset;
  std::optional<std::set<Element>> superset;  // set when axiom == Monotone
};

template <class Element>
struct BasicAxiomReport {
  bool axiom_i = true;
  bool axiom_ii = true;
  bool axiom_iii = true;
  /// First failure, checking (i) then (ii) then (iii), each in SubsetOrder.
  std::optional<BasicCounterexample<Element>> counterexample;

  bool all() const { return axiom_i && axiom_ii && axiom_iii; }
};

/// A map on the power set of a finite universe stored as a table of masks.
/// Universe elements are kept sorted; element i corresponds to bit i.
template <class Element>
class BasicExtensionalOperator {
 public:
  BasicExtensionalOperator(std::vector<Element> universe, std::vector<Mask> table)
      : universe_(std::move(universe)), table_(std::move(table)) {
    if (universe_.size() > kMaxExtensionalElements) {
      throw std::length_error("extensional operators are capped at 12 elements");
    }
    if (!std::is_sorted(universe_.begin(), universe_.end()) ||
        std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end()) {
      throw std::invalid_argument("universe must be sorted and duplicate-free");
    }
    if (table_.size() != subset_count()) throw std::invalid_argument("table is not total");
    for (Mask m : table_) {
      if ((m & ~full_mask()) != 0) throw std::invalid_argument("table entry outside universe");
    }
  }

  /// Tabulates `fn` over every subset of `universe`.
  template <class Fn>
  static BasicExtensionalOperator tabulate(std::vector<Element> universe, Fn&& fn) {
    if (universe.size() > kMaxExtensionalElements) {
      throw std::length_error("extensional operators are capped at 12 elements");
    }
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    BasicExtensionalOperator probe(universe, std::vector<Mask>(std::size_t{1} << universe.size()));
    std::vector<Mask> table(probe.subset_count());
    for (std::size_t m = 0; m < table.size(); ++m) {
      table[m] = probe.mask_of(fn(probe.set_of(static_cast<Mask>(m))));
    }
    return BasicExtensionalOperator(std::move(universe), std::move(table));
  }

  static BasicExtensionalOperator identity(std::vector<Element> universe) {
    return tabulate(std::move(universe), [](const std::set<Element>& y) { return y; });
  }

  static BasicExtensionalOperator constant_universe(std::vector<Element> universe) {
    std::set<Element> all(universe.begin(), universe.end());
    return tabulate(std::move(universe), [&](const std::set<Element>&) { return all; });
  }

  const std::vector<Element>& universe() const { return universe_; }
  std::span<const Mask> table() const { return table_; }
  unsigned elements() const { return static_cast<unsigned>(universe_.size()); }
  std::size_t subset_count() const { return std::size_t{1} << universe_.size(); }
  Mask full_mask() const { return static_cast<Mask>(subset_count() - 1); }

  Mask operator()(Mask y) const { return table_.at(y); }
  std::set<Element> operator()(const std::set<Element>& y) const {
    return set_of(table_[mask_of(y)]);
  }

  /// Throws std::invalid_argument if `s` leaves the universe.
  Mask mask_of(const std::set<Element>& s) const {
    Mask m = 0;
    for (const auto& e : s) {
      auto it = std::lower_bound(universe_.begin(), universe_.end(), e);
      if (it == universe_.end() || !(*it == e)) {
        throw std::invalid_argument("element outside operator universe");
      }
      m |= Mask{1} << (it - universe_.begin());
    }
    return m;
  }

  std::set<Element> set_of(Mask m) const {
    std::set<Element> out;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (m & (Mask{1} << i)) out.insert(universe_[i]);
    }
    return out;
  }

  friend bool operator==(const BasicExtensionalOperator&, const BasicExtensionalOperator&) = default;

 private:
  std::vector<Element> universe_;
  std::vector<Mask> table_;
};

using ExtensionalOperator = BasicExtensionalOperator<Statement>;
using AxiomReport = BasicAxiomReport<Statement>;

/// Statement tuples index the product language L1 x ... x Lm.
using StatementTuple = std::vector<Statement>;
using TupleSet = std::set<StatementTuple>;
using ProductExtensionalOperator = BasicExtensionalOperator<StatementTuple>;
using ProductAxiomReport = BasicAxiomReport<StatementTuple>;

template <class Element>
BasicAxiomReport<Element> check_axioms(const BasicExtensionalOperator<Element>& op,
                                       Execution exec = Execution::Parallel) {
  const kernels::SubsetOrder order(op.elements());
  auto first = [&](Axiom a) {
    return exec == Execution::Parallel
               ? kernels::first_violation_parallel(op.table(), op.elements(), a, order)
               : kernels::first_violation_serial(op.table(), op.elements(), a, order);
  };

  BasicAxiomReport<Element> report;
  for (Axiom a : {Axiom::Closure, Axiom::Monotone, Axiom::Finitary}) {
    auto witness = first(a);
    if (!witness) continue;
    (a == Axiom::Closure ? report.axiom_i : a == Axiom::Monotone ? report.axiom_ii : report.axiom_iii) =
        false;
    if (!report.counterexample) {
      BasicCounterexample<Element> cx{a, op.set_of(witness->subset), std::nullopt};
      if (witness->superset) cx.superset = op.set_of(*witness->superset);
      report.counterexample = std::move(cx);
    }
  }
  return report;
}

/// True iff the operator maps the empty set to itself.
template <class Element>
bool is_axiomless(const BasicExtensionalOperator<Element>& op) {
  return op(Mask{0}) == 0;
}

/// Tabulates `op` over every subset of `language`. Throws
/// std::invalid_argument if the attachments or source fall outside the
/// language and std::length_error beyond 12 statements.
ExtensionalOperator extensionalize(const SourceConditionalOperator& op, const Language& language);

/// Least closure operator above both inputs: Z <- op1(op2(Z)) iterated from
/// Y until it stabilizes. Both inputs must satisfy (i) and (ii) over the same
/// universe, else std::invalid_argument.
ExtensionalOperator lub_extensional(const ExtensionalOperator& a, const ExtensionalOperator& b);

/// Checks exhaustively that every self-map of P(L) satisfying (i) and (iii)
/// also satisfies (ii). Throws std::length_error for |L| > 2.
bool verify_monotone_redundancy(const Language& language, Execution exec = Execution::Parallel);

/// "{} -> {}" lines, one per subset in SubsetOrder.
std::string render_table(const ExtensionalOperator& op);

// ---------------------------------------------------------------------------
// Products

/// pr_k(X) for 0-based coordinate k.
StatementSet project(const TupleSet& x, std::size_t k);

/// Cartesian product of the given coordinate sets, lexicographic order.
TupleSet cartesian(std::span<const StatementSet> factors);

/// C_1(pr_1 X) x ... x C_m(pr_m X). Throws std::invalid_argument when ops is
/// empty or any tuple has the wrong arity.
TupleSet product_apply(std::span<const SourceConditionalOperator> ops, const TupleSet& x);

/// realize(C_1, pr_1 X) x ... x realize(C_m, pr_m X).
TupleSet realize_product(std::span<const SourceConditionalOperator> ops, const TupleSet& x);

/// Product of extensional factors tabulated over the tuple universe
/// U_1 x ... x U_m. Throws std::length_error beyond 12 tuples.
ProductExtensionalOperator product_extensional(std::span<const ExtensionalOperator> factors);

}  // namespace conseq
