#pragma once

// Exact-arithmetic scans over cumulative sequences. Intermediate products use
// 128-bit integers, so no rounding occurs for denominators below 2^40 and
// sequence lengths below 2^40.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "conseq/rational.hpp"

namespace conseq::kernels {

struct DeviationScan {
  Rational max_deviation{0};    // max_k |a(k)/k - p|
  std::size_t argmax = 0;       // first trial attaining it (1-based; 0 when empty)
  bool within_bound = true;     // |a(k)/k - p| <= 1/k for every k
  std::size_t first_violation = 0;  // first k breaking the bound (0 when none)
  friend bool operator==(const DeviationScan&, const DeviationScan&) = default;
};

DeviationScan deviation_scan_serial(std::span<const std::int64_t> terms, const Rational& p);
DeviationScan deviation_scan_parallel(std::span<const std::int64_t> terms, const Rational& p);

struct DiscrepancyScan {
  Rational max_discrepancy{0};  // max_{k,t} |a_k(t) - t p_k|
  std::size_t cell = 0;         // 1-based cell of the first maximum
  std::size_t trial = 0;        // 1-based trial of the first maximum
  friend bool operator==(const DiscrepancyScan&, const DiscrepancyScan&) = default;
};

/// `cells[k]` is the cumulative count sequence of cell k; all equal length.
DiscrepancyScan discrepancy_scan_serial(std::span<const std::span<const std::int64_t>> cells,
                                        std::span<const Rational> probs);
DiscrepancyScan discrepancy_scan_parallel(std::span<const std::span<const std::int64_t>> cells,
                                          std::span<const Rational> probs);

/// Builds num/den from 128-bit parts, reducing first. Throws
/// std::overflow_error if the reduced value does not fit.
Rational make_rational(__int128 num, __int128 den);

}  // namespace conseq::kernels
