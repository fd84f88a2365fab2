#include "conseq/kernels/axiom_kernels.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace conseq::kernels {

SubsetOrder::SubsetOrder(unsigned n) : n_(n) {
  if (n > kMaxMaskElements) throw std::length_error("subset order capped at 16 elements");
  const std::size_t count = std::size_t{1} << n;
  order_.resize(count);
  for (std::size_t m = 0; m < count; ++m) order_[m] = static_cast<Mask>(m);
  std::sort(order_.begin(), order_.end(), less);
  rank_.resize(count);
  for (std::size_t r = 0; r < count; ++r) rank_[order_[r]] = static_cast<std::uint32_t>(r);
}

bool SubsetOrder::less(Mask a, Mask b) {
  int pa = std::popcount(a);
  int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  // Both lists agree below the lowest differing bit; whichever holds that
  // element has the smaller entry at the first differing position.
  Mask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

namespace {

bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::optional<Mask> first_bad_superset(std::span<const Mask> table, Mask y,
                                       const SubsetOrder& order) {
  for (Mask z : order.masks()) {
    if (subset_of(y, z) && !subset_of(table[y], table[z])) return z;
  }
  return std::nullopt;
}

bool monotone_at(std::span<const Mask> table, unsigned n, Mask y) {
  const Mask full = (Mask{1} << n) - 1;
  const Mask free = full & ~y;
  // Every superset of y is y | s for s a submask of the complement.
  for (Mask s = free;; s = (s - 1) & free) {
    if (!subset_of(table[y], table[y | s])) return false;
    if (s == 0) break;
  }
  return true;
}

bool finitary_at(std::span<const Mask> table, Mask y) {
  Mask acc = 0;
  for (Mask a = y;; a = (a - 1) & y) {
    acc |= table[a];
    if (a == 0) break;
  }
  return acc == table[y];
}

bool closure_at(std::span<const Mask> table, unsigned n, Mask y) {
  const Mask full = (Mask{1} << n) - 1;
  Mask cy = table[y];
  return subset_of(y, cy) && subset_of(cy, full) && table[cy] == cy;
}

}  // namespace

std::optional<MaskWitness> violation_at(std::span<const Mask> table, unsigned n, Axiom axiom,
                                        Mask subset, const SubsetOrder& order) {
  switch (axiom) {
    case Axiom::Closure:
      if (!closure_at(table, n, subset)) return MaskWitness{subset, std::nullopt};
      return std::nullopt;
    case Axiom::Monotone:
      if (!monotone_at(table, n, subset)) {
        return MaskWitness{subset, first_bad_superset(table, subset, order)};
      }
      return std::nullopt;
    case Axiom::Finitary:
      if (!finitary_at(table, subset)) return MaskWitness{subset, std::nullopt};
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

void check_shape(std::span<const Mask> table, unsigned n, const SubsetOrder& order) {
  if (n > kMaxMaskElements) throw std::length_error("mask tables capped at 16 elements");
  if (table.size() != (std::size_t{1} << n) || order.elements() != n) {
    throw std::invalid_argument("table size does not match universe");
  }
  const Mask full = (Mask{1} << n) - 1;
  for (Mask m : table) {
    if (!subset_of(m, full)) throw std::invalid_argument("table entry outside universe");
  }
}

}  // namespace

std::optional<MaskWitness> first_violation_serial(std::span<const Mask> table, unsigned n,
                                                  Axiom axiom, const SubsetOrder& order) {
  check_shape(table, n, order);
  for (Mask y : order.masks()) {
    if (auto w = violation_at(table, n, axiom, y, order)) return w;
  }
  return std::nullopt;
}

std::optional<MaskWitness> first_violation_parallel(std::span<const Mask> table, unsigned n,
                                                    Axiom axiom, const SubsetOrder& order) {
  check_shape(table, n, order);
  const auto count = static_cast<std::int64_t>(order.size());
  std::int64_t first = std::numeric_limits<std::int64_t>::max();

#pragma omp parallel for reduction(min : first) schedule(static)
  for (std::int64_t r = 0; r < count; ++r) {
    if (r >= first) continue;
    Mask y = order.at(static_cast<std::size_t>(r));
    bool ok = true;
    switch (axiom) {
      case Axiom::Closure:
        ok = closure_at(table, n, y);
        break;
      case Axiom::Monotone:
        ok = monotone_at(table, n, y);
        break;
      case Axiom::Finitary:
        ok = finitary_at(table, y);
        break;
    }
    if (!ok && r < first) first = r;
  }

  if (first == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return violation_at(table, n, axiom, order.at(static_cast<std::size_t>(first)), order);
}

namespace {

constexpr unsigned kMaxCensusElements = 2;

std::uint64_t map_count(unsigned n) {
  if (n > kMaxCensusElements) {
    throw std::length_error("exhaustive map enumeration capped at 2 elements");
  }
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t maps = 1;
  for (std::uint64_t i = 0; i < subsets; ++i) maps *= subsets;
  return maps;
}

// Decodes map number `index` as base-2^n digits, one per subset.
void decode_map(std::uint64_t index, unsigned n, std::vector<Mask>& table) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t y = 0; y < subsets; ++y) {
    table[y] = static_cast<Mask>(index % subsets);
    index /= subsets;
  }
}

bool holds_everywhere(std::span<const Mask> table, unsigned n, Axiom axiom) {
  const Mask count = Mask{1} << n;
  for (Mask y = 0; y < count; ++y) {
    bool ok = axiom == Axiom::Closure    ? closure_at(table, n, y)
              : axiom == Axiom::Monotone ? monotone_at(table, n, y)
                                         : finitary_at(table, y);
    if (!ok) return false;
  }
  return true;
}

}  // namespace

MonotoneCensus monotone_census_serial(unsigned n) {
  MonotoneCensus census;
  census.maps = map_count(n);
  std::vector<Mask> table(std::size_t{1} << n);
  for (std::uint64_t i = 0; i < census.maps; ++i) {
    decode_map(i, n, table);
    if (holds_everywhere(table, n, Axiom::Closure) && holds_everywhere(table, n, Axiom::Finitary)) {
      ++census.closure_finitary;
      if (!holds_everywhere(table, n, Axiom::Monotone)) ++census.counterexamples;
    }
  }
  return census;
}

MonotoneCensus monotone_census_parallel(unsigned n) {
  const std::uint64_t maps = map_count(n);
  std::uint64_t closure_finitary = 0;
  std::uint64_t counterexamples = 0;

#pragma omp parallel reduction(+ : closure_finitary, counterexamples)
  {
    std::vector<Mask> table(std::size_t{1} << n);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(maps); ++i) {
      decode_map(static_cast<std::uint64_t>(i), n, table);
      if (holds_everywhere(table, n, Axiom::Closure) &&
          holds_everywhere(table, n, Axiom::Finitary)) {
        ++closure_finitary;
        if (!holds_everywhere(table, n, Axiom::Monotone)) ++counterexamples;
      }
    }
  }
  return {maps, closure_finitary, counterexamples};
}

}  // namespace conseq::kernels
