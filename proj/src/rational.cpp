#include "paramcode/rational.hpp"

#include <charconv>
#include <numeric>

#include "paramcode/error.hpp"

namespace paramcode {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::DomainError, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last)
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));

  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text), 1);

  const std::string_view frac = text.substr(dot + 1);
  if (frac.size() > 15 || frac.empty())
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(text) + "'");
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;

  std::string_view int_part = text.substr(0, dot);
  const bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative) int_part.remove_prefix(1);
  const std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  const std::int64_t fraction = parse_int(frac, text);
  if (fraction < 0 || whole < 0)
    throw Error(ErrorKind::DomainError, "not a rational number: '" + std::string(text) + "'");
  const std::int64_t magnitude = whole * scale + fraction;
  return Rational(negative ? -magnitude : magnitude, scale);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace paramcode
