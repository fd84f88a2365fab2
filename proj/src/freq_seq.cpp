#include "conseq/freq_seq.hpp"

#include <algorithm>
#include <stdexcept>

#include "conseq/kernels/scan_kernels.hpp"

namespace conseq {

Membership check_membership_A(std::span<const std::int64_t> terms) {
  std::int64_t prev = 0;  // a(0) = 0 makes a(1) <= 1 the same step rule
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::int64_t step = terms[i] - prev;
    if (step < 0 || step > 1) return {false, i + 1};
    prev = terms[i];
  }
  return {true, std::nullopt};
}

CumulativeSequence::CumulativeSequence(std::vector<std::int64_t> terms) : terms_(std::move(terms)) {
  if (auto m = check_membership_A(terms_); !m) {
    throw std::invalid_argument("not a cumulative-success sequence (index " +
                                std::to_string(*m.violation) + ")");
  }
}

CumulativeSequence build_ap_prefix(const Probability& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("prefix length must be positive");
  std::vector<std::int64_t> terms(n);
  const __int128 num = p.num();
  const __int128 den = p.den();
  for (std::size_t k = 1; k <= n; ++k) {
    // p = 1 sits in no half-open [j/k, (j+1)/k) with j < k; take a(k) = k.
    terms[k - 1] = p.is_one() ? static_cast<std::int64_t>(k)
                              : static_cast<std::int64_t>(static_cast<__int128>(k) * num / den);
  }
  return CumulativeSequence(std::move(terms));
}

std::vector<FrequencyPoint> g_ap(const CumulativeSequence& seq) {
  std::vector<FrequencyPoint> out;
  out.reserve(seq.size());
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    out.push_back({static_cast<std::int64_t>(k), seq.at(k)});
  }
  return out;
}

DeviationReport max_deviation(const CumulativeSequence& seq, const Probability& p, Execution exec) {
  auto scan = exec == Execution::Parallel ? kernels::deviation_scan_parallel(seq.terms(), p.value())
                                          : kernels::deviation_scan_serial(seq.terms(), p.value());
  DeviationReport out;
  out.max_deviation = scan.max_deviation;
  out.within_bound = scan.within_bound;
  if (scan.first_violation != 0) out.first_violation = scan.first_violation;
  return out;
}

CumulativeSequence variant_p0(std::size_t m, std::size_t n) {
  if (m < 2) throw std::invalid_argument("variant requires m > 1");
  if (n == 0) throw std::invalid_argument("prefix length must be positive");
  std::vector<std::int64_t> terms(n);
  for (std::size_t k = 1; k <= n; ++k) {
    // a(1) = 0 and a(k+1) = a(k) + 1 for k <= m, so a(k) = min(k, m+1) - 1.
    terms[k - 1] = static_cast<std::int64_t>(std::min(k, m + 1) - 1);
  }
  return CumulativeSequence(std::move(terms));
}

CumulativeSequence variant_p1(std::size_t m, std::size_t n) {
  if (m < 2) throw std::invalid_argument("variant requires m > 1");
  if (n == 0) throw std::invalid_argument("prefix length must be positive");
  std::vector<std::int64_t> terms(n);
  for (std::size_t k = 1; k <= n; ++k) {
    terms[k - 1] = k <= m ? 0 : static_cast<std::int64_t>(k - m);
  }
  return CumulativeSequence(std::move(terms));
}

CumulativeSequence backshift_variant(const CumulativeSequence& seq, std::size_t block_index) {
  if (block_index == 0 || block_index > seq.size()) {
    throw std::invalid_argument("block index out of range");
  }
  std::vector<std::int64_t> terms(seq.terms().begin(), seq.terms().end());
  const std::int64_t anchor = seq.at(block_index);
  for (std::size_t k = block_index - 1; k >= 1; --k) {
    terms[k - 1] = std::max<std::int64_t>(anchor - static_cast<std::int64_t>(block_index - k), 0);
  }
  return CumulativeSequence(std::move(terms));
}

CumulativeSequence truncate_freeze(const CumulativeSequence& seq, std::size_t m, std::size_t n) {
  if (m == 0 || m > seq.size()) throw std::invalid_argument("freeze index out of range");
  if (n < m) throw std::invalid_argument("frozen length shorter than the kept prefix");
  std::vector<std::int64_t> terms(n, seq.at(m));
  std::copy_n(seq.terms().begin(), m, terms.begin());
  return CumulativeSequence(std::move(terms));
}

NonconvergentSequence build_nonconvergent(const Probability& low, const Probability& high,
                                          std::size_t n) {
  if (!(low.value() < high.value())) throw std::invalid_argument("low must be below high");
  if (n == 0) throw std::invalid_argument("prefix length must be positive");

  // a/k >= num/den  <=>  a den >= k num
  auto at_least = [](std::int64_t a, std::size_t k, const Probability& p) {
    return static_cast<__int128>(a) * p.den() >= static_cast<__int128>(k) * p.num();
  };
  auto at_most = [](std::int64_t a, std::size_t k, const Probability& p) {
    return static_cast<__int128>(a) * p.den() <= static_cast<__int128>(k) * p.num();
  };

  NonconvergentSequence out;
  std::vector<std::int64_t> terms(n);
  bool rising = false;
  std::int64_t a = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1 && rising) ++a;
    terms[k - 1] = a;
    if (rising && at_least(a, k, high)) {
      rising = false;
      out.switches.push_back(k);
    } else if (!rising && at_most(a, k, low)) {
      rising = true;
      out.switches.push_back(k);
    }
  }
  out.seq = CumulativeSequence(std::move(terms));
  return out;
}

}  // namespace conseq
