#include "conseq/kernels/scan_kernels.hpp"

#include <limits>
#include <stdexcept>

namespace conseq::kernels {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Deviation at trial k is dev / (k * den); candidates compare by cross-product.
struct DevCandidate {
  i128 dev = 0;
  std::size_t k = 0;  // 0 = none yet

  bool beats(const DevCandidate& other) const {
    if (k == 0) return false;
    if (other.k == 0) return true;
    i128 lhs = dev * static_cast<i128>(other.k);
    i128 rhs = other.dev * static_cast<i128>(k);
    return lhs > rhs || (lhs == rhs && k < other.k);
  }
};

DeviationScan finish(const DevCandidate& best, std::size_t first_violation, const Rational& p) {
  DeviationScan out;
  if (best.k != 0) {
    out.max_deviation = make_rational(best.dev, static_cast<i128>(best.k) * p.denominator());
    out.argmax = best.k;
  }
  out.first_violation = first_violation;
  out.within_bound = first_violation == 0;
  return out;
}

}  // namespace

Rational make_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();
  if (abs128(num) > kMax || den > kMax) throw std::overflow_error("rational out of int64 range");
  return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

DeviationScan deviation_scan_serial(std::span<const std::int64_t> terms, const Rational& p) {
  const i128 num = p.numerator();
  const i128 den = p.denominator();
  DevCandidate best;
  std::size_t first_violation = 0;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::size_t k = i + 1;
    DevCandidate c{abs128(static_cast<i128>(terms[i]) * den - static_cast<i128>(k) * num), k};
    if (c.beats(best)) best = c;
    // |a/k - p| <= 1/k  <=>  |a den - k num| <= den
    if (first_violation == 0 && c.dev > den) first_violation = k;
  }
  return finish(best, first_violation, p);
}

DeviationScan deviation_scan_parallel(std::span<const std::int64_t> terms, const Rational& p) {
  const i128 num = p.numerator();
  const i128 den = p.denominator();
  const auto count = static_cast<std::int64_t>(terms.size());
  DevCandidate best;
  std::size_t first_violation = std::numeric_limits<std::size_t>::max();

#pragma omp parallel
  {
    DevCandidate local;
    std::size_t local_violation = std::numeric_limits<std::size_t>::max();
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < count; ++i) {
      const auto k = static_cast<std::size_t>(i + 1);
      DevCandidate c{abs128(static_cast<i128>(terms[i]) * den - static_cast<i128>(k) * num), k};
      if (c.beats(local)) local = c;
      if (c.dev > den && k < local_violation) local_violation = k;
    }
#pragma omp critical(conseq_deviation_scan)
    {
      if (local.beats(best)) best = local;
      if (local_violation < first_violation) first_violation = local_violation;
    }
  }

  if (first_violation == std::numeric_limits<std::size_t>::max()) first_violation = 0;
  return finish(best, first_violation, p);
}

namespace {

// Discrepancy of cell k at trial t is dev / den_k.
struct CellCandidate {
  i128 dev = 0;
  i128 den = 1;
  std::size_t cell = 0;  // 0 = none yet
  std::size_t trial = 0;

  bool beats(const CellCandidate& other) const {
    if (cell == 0) return false;
    if (other.cell == 0) return true;
    i128 lhs = dev * other.den;
    i128 rhs = other.dev * den;
    if (lhs != rhs) return lhs > rhs;
    if (trial != other.trial) return trial < other.trial;
    return cell < other.cell;
  }
};

void check_cells(std::span<const std::span<const std::int64_t>> cells,
                 std::span<const Rational> probs) {
  if (cells.size() != probs.size()) throw std::invalid_argument("cell/probability count mismatch");
  for (const auto& c : cells) {
    if (c.size() != cells.front().size()) throw std::invalid_argument("unequal sequence lengths");
  }
}

DiscrepancyScan finish(const CellCandidate& best) {
  DiscrepancyScan out;
  if (best.cell != 0) {
    out.max_discrepancy = make_rational(best.dev, best.den);
    out.cell = best.cell;
    out.trial = best.trial;
  }
  return out;
}

CellCandidate scan_trial(std::span<const std::span<const std::int64_t>> cells,
                         std::span<const Rational> probs, std::size_t i) {
  CellCandidate best;
  const auto t = static_cast<i128>(i + 1);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const i128 num = probs[k].numerator();
    const i128 den = probs[k].denominator();
    CellCandidate c{abs128(static_cast<i128>(cells[k][i]) * den - t * num), den, k + 1, i + 1};
    if (c.beats(best)) best = c;
  }
  return best;
}

}  // namespace

DiscrepancyScan discrepancy_scan_serial(std::span<const std::span<const std::int64_t>> cells,
                                        std::span<const Rational> probs) {
  check_cells(cells, probs);
  CellCandidate best;
  const std::size_t n = cells.empty() ? 0 : cells.front().size();
  for (std::size_t i = 0; i < n; ++i) {
    CellCandidate c = scan_trial(cells, probs, i);
    if (c.beats(best)) best = c;
  }
  return finish(best);
}

DiscrepancyScan discrepancy_scan_parallel(std::span<const std::span<const std::int64_t>> cells,
                                          std::span<const Rational> probs) {
  check_cells(cells, probs);
  CellCandidate best;
  const auto n = static_cast<std::int64_t>(cells.empty() ? 0 : cells.front().size());

#pragma omp parallel
  {
    CellCandidate local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < n; ++i) {
      CellCandidate c = scan_trial(cells, probs, static_cast<std::size_t>(i));
      if (c.beats(local)) local = c;
    }
#pragma omp critical(conseq_discrepancy_scan)
    {
      if (local.beats(best)) best = local;
    }
  }
  return finish(best);
}

}  // namespace conseq::kernels
