#include "conseq/rational.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace conseq {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("malformed rational: ''");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_int(text.substr(0, slash), text);
    std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }

  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative) int_part.remove_prefix(1);
  if (frac_part.empty() || frac_part.front() == '-' || frac_part.front() == '+') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  // 10^18 is the largest power of ten that fits in int64.
  if (frac_part.size() > 18) {
    throw std::invalid_argument("too many decimal digits: '" + std::string(text) + "'");
  }
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  std::int64_t frac = parse_int(frac_part, text);
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  if (whole > (std::numeric_limits<std::int64_t>::max() - frac) / scale) {
    throw std::invalid_argument("decimal out of range: '" + std::string(text) + "'");
  }
  Rational r(whole * scale + frac, scale);
  return negative ? -r : r;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Probability::Probability(Rational value) : value_(value) {
  if (value_ < 0 || value_ > 1) throw std::invalid_argument("probability out of range");
}

Probability Probability::parse(std::string_view text) { return Probability(parse_rational(text)); }

std::string to_string(const Probability& p) { return to_string(p.value()); }

}  // namespace conseq
