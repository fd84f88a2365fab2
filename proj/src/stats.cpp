#include "conseq/stats.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace conseq::stats {

namespace {

constexpr std::size_t kMinSample = 30;

// Upper quantiles of chi-square, df = 1..10.
constexpr std::array<double, 10> kChi05 = {3.841459,  5.991465,  7.814728,  9.487729,
                                           11.070498, 12.591587, 14.067140, 15.507313,
                                           16.918978, 18.307038};
constexpr std::array<double, 10> kChi01 = {6.634897,  9.210340,  11.344867, 13.276704,
                                           15.086272, 16.811894, 18.475307, 20.090235,
                                           21.665994, 23.209251};

bool is_alpha(double alpha, double v) { return alpha == v; }

void check_alpha(double alpha) {
  if (!is_alpha(alpha, 0.05) && !is_alpha(alpha, 0.01)) {
    throw std::invalid_argument("alpha must be 0.05 or 0.01");
  }
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

BinaryTrialSequence bernoulli_prng(const Probability& p, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  SplitMix64 gen(seed);
  std::vector<std::uint8_t> bits(n);
  const auto num = static_cast<unsigned __int128>(p.num());
  const auto den = static_cast<unsigned __int128>(p.den());
  for (auto& b : bits) {
    // u / 2^64 < num / den  <=>  u den < num 2^64
    const auto u = static_cast<unsigned __int128>(gen.next());
    b = (u * den < (num << 64)) ? 1 : 0;
  }
  return BinaryTrialSequence(std::move(bits));
}

double normal_critical(double alpha) {
  check_alpha(alpha);
  return is_alpha(alpha, 0.05) ? 1.95996 : 2.57583;
}

double chi_square_critical(std::size_t df, double alpha) {
  check_alpha(alpha);
  if (df < 1 || df > kChi05.size()) throw std::invalid_argument("chi-square df must be 1..10");
  return is_alpha(alpha, 0.05) ? kChi05[df - 1] : kChi01[df - 1];
}

TestReport frequency_test(const BinaryTrialSequence& bits, const Probability& p, double alpha) {
  if (bits.size() < kMinSample) throw std::invalid_argument("frequency test needs n >= 30");
  if (p.is_zero() || p.is_one()) throw std::invalid_argument("frequency test needs 0 < p < 1");
  const double crit = normal_critical(alpha);
  const double n = static_cast<double>(bits.size());
  const double x = static_cast<double>(bits.ones());
  const double pd = to_double(p.value());
  const double z = (x - n * pd) / std::sqrt(n * pd * (1.0 - pd));
  return {"frequency", z, alpha, std::abs(z) <= crit, bits.size()};
}

TestReport runs_test(const BinaryTrialSequence& bits, double alpha) {
  if (bits.size() < kMinSample) throw std::invalid_argument("runs test needs n >= 30");
  const std::size_t ones = bits.ones();
  if (ones == 0 || ones == bits.size()) {
    throw std::invalid_argument("runs test needs both symbols present");
  }
  const double crit = normal_critical(alpha);

  std::size_t runs = 1;
  for (std::size_t i = 1; i < bits.size(); ++i) {
    if (bits.bits()[i] != bits.bits()[i - 1]) ++runs;
  }
  const double n = static_cast<double>(bits.size());
  const double n1 = static_cast<double>(ones);
  const double n0 = n - n1;
  const double mean = 2.0 * n0 * n1 / n + 1.0;
  const double var = 2.0 * n0 * n1 * (2.0 * n0 * n1 - n) / (n * n * (n - 1.0));
  const double z = (static_cast<double>(runs) - mean) / std::sqrt(var);
  return {"runs", z, alpha, std::abs(z) <= crit, bits.size()};
}

TestReport chi_square_cells(std::span<const std::int64_t> counts, std::size_t n,
                            const ProbabilityVector& probs, double alpha) {
  if (counts.size() != probs.size()) throw std::invalid_argument("cell count mismatch");
  if (counts.size() < 2) throw std::invalid_argument("chi-square needs at least two cells");
  std::int64_t total = 0;
  for (auto c : counts) total += c;
  if (total != static_cast<std::int64_t>(n)) throw std::invalid_argument("counts do not sum to n");
  const double crit = chi_square_critical(counts.size() - 1, alpha);

  double stat = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    // n p_k >= 1  <=>  n num >= den
    if (static_cast<__int128>(n) * probs[k].num() < probs[k].den()) {
      throw std::invalid_argument("expected cell count below 1");
    }
    const double expected = static_cast<double>(n) * to_double(probs[k].value());
    const double diff = static_cast<double>(counts[k]) - expected;
    stat += diff * diff / expected;
  }
  return {"chi_square", stat, alpha, stat <= crit, n};
}

std::string_view to_string(Stream s) { return s == Stream::Designed ? "designed" : "prng"; }

std::vector<StreamReport> compare(const BinaryTrialSequence& designed, const Probability& p,
                                  std::uint64_t seed, double alpha, Execution exec) {
  const BinaryTrialSequence prng = bernoulli_prng(p, designed.size(), seed);
  std::vector<StreamReport> out(4, StreamReport{Stream::Designed, {}, std::nullopt});
  std::array<const BinaryTrialSequence*, 2> streams = {&designed, &prng};

  // Slots: 0,1 designed (frequency, runs); 2,3 prng.
  auto run = [&](int slot) {
    const int s = slot / 2;
    const auto& bits = *streams[s];
    out[slot].stream = s == 0 ? Stream::Designed : Stream::Prng;
    out[slot].report = slot % 2 == 0 ? frequency_test(bits, p, alpha) : runs_test(bits, alpha);
    if (s == 1) out[slot].seed = seed;
  };

  if (exec == Execution::Serial) {
    for (int slot = 0; slot < 4; ++slot) run(slot);
    return out;
  }

  // Exceptions may not cross the parallel region; rethrow the first by slot.
  std::array<std::exception_ptr, 4> errors{};
#pragma omp parallel for schedule(static)
  for (int slot = 0; slot < 4; ++slot) {
    try {
      run(slot);
    } catch (...) {
      errors[slot] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace conseq::stats
