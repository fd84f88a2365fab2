#pragma once

// Bitmask kernels behind the extensional operator checks. A finite universe
// of n <= 16 elements is indexed 0..n-1; a subset is a Mask and an operator
// is a table of 2^n masks indexed by subset.
//
// Each check has a serial reference and an OpenMP version. Both report the
// same witness: the first failing subset in SubsetOrder.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace conseq::kernels {

using Mask = std::uint32_t;

inline constexpr unsigned kMaxMaskElements = 16;

enum class Axiom : std::uint8_t {
  Closure,    // (i)  Y <= C(Y) = C(C(Y)) <= L
  Monotone,   // (ii) Y <= Z implies C(Y) <= C(Z)
  Finitary,   // (iii) C(Y) = union of C(A) over A <= Y
};

/// Subsets ordered by size, then lexicographically on their ascending
/// element-index lists.
class SubsetOrder {
 public:
  explicit SubsetOrder(unsigned n);

  unsigned elements() const { return n_; }
  std::size_t size() const { return order_.size(); }
  Mask at(std::size_t rank) const { return order_[rank]; }
  std::size_t rank(Mask m) const { return rank_[m]; }
  std::span<const Mask> masks() const { return order_; }

  /// Strict order between two masks of the same universe.
  static bool less(Mask a, Mask b);

 private:
  unsigned n_;
  std::vector<Mask> order_;
  std::vector<std::uint32_t> rank_;
};

struct MaskWitness {
  Mask subset = 0;
  std::optional<Mask> superset;  // only for Monotone
  friend bool operator==(const MaskWitness&, const MaskWitness&) = default;
};

/// Does `subset` violate `axiom` for `table`? For Monotone the superset
/// returned is the first offending Z in `order`.
std::optional<MaskWitness> violation_at(std::span<const Mask> table, unsigned n, Axiom axiom,
                                        Mask subset, const SubsetOrder& order);

std::optional<MaskWitness> first_violation_serial(std::span<const Mask> table, unsigned n,
                                                  Axiom axiom, const SubsetOrder& order);
std::optional<MaskWitness> first_violation_parallel(std::span<const Mask> table, unsigned n,
                                                    Axiom axiom, const SubsetOrder& order);

struct MonotoneCensus {
  std::uint64_t maps = 0;             // all self-maps of the power set
  std::uint64_t closure_finitary = 0;  // maps satisfying (i) and (iii)
  std::uint64_t counterexamples = 0;  // of those, maps failing (ii)
  friend bool operator==(const MonotoneCensus&, const MonotoneCensus&) = default;
};

/// Enumerates every map from P(U) to P(U) for |U| = n <= 2.
MonotoneCensus monotone_census_serial(unsigned n);
MonotoneCensus monotone_census_parallel(unsigned n);

}  // namespace conseq::kernels
