#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74 compares rational against a plain integer through a free
// template that C++20 rewrites into a call to itself. Exact-match overloads
// for the integer types used here take precedence and avoid the recursion.
namespace boost {
#define CONSEQ_RATIONAL_INT_EQ(Int)                                                   \
  inline bool operator==(const rational<std::int64_t>& a, Int b) {                    \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);     \
  }                                                                                   \
  inline bool operator==(Int b, const rational<std::int64_t>& a) { return a == b; }  \
  inline bool operator!=(const rational<std::int64_t>& a, Int b) { return !(a == b); } \
  inline bool operator!=(Int b, const rational<std::int64_t>& a) { return !(a == b); }
CONSEQ_RATIONAL_INT_EQ(int)
CONSEQ_RATIONAL_INT_EQ(long)
CONSEQ_RATIONAL_INT_EQ(long long)
#undef CONSEQ_RATIONAL_INT_EQ
}  // namespace boost

namespace conseq {

/// Exact rational on 64-bit integers; always kept in lowest terms with a
/// positive denominator.
using Rational = boost::rational<std::int64_t>;

/// Parses "num/den", an integer, or an exact decimal such as "0.25".
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "3/7", or "2" when the denominator is one.
std::string to_string(const Rational& r);

/// A probability in [0, 1], exact.
class Probability {
 public:
  Probability() = default;
  /// Throws std::invalid_argument("probability out of range") outside [0, 1].
  explicit Probability(Rational value);
  Probability(std::int64_t num, std::int64_t den) : Probability(Rational(num, den)) {}

  static Probability parse(std::string_view text);

  const Rational& value() const { return value_; }
  std::int64_t num() const { return value_.numerator(); }
  std::int64_t den() const { return value_.denominator(); }
  bool is_zero() const { return value_.numerator() == 0; }
  bool is_one() const { return value_.numerator() == value_.denominator(); }

  friend bool operator==(const Probability&, const Probability&) = default;

 private:
  Rational value_{0};
};

std::string to_string(const Probability& p);

}  // namespace conseq
