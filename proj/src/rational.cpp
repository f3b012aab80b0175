#include "spectough/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "spectough/error.hpp"

namespace spectough {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const wide_int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

void require_finite(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    throw Error(ErrorCode::InvalidArgument, "arithmetic on infinite rational");
  }
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::MalformedInput, "not a rational: \"" + std::string(whole) + "\"");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide_int num, wide_int den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr wide_int lo = std::numeric_limits<std::int64_t>::min();
  constexpr wide_int hi = std::numeric_limits<std::int64_t>::max();
  if (num < lo || num > hi || den > hi) {
    throw Error(ErrorCode::SizeOverflow, "rational overflows 64-bit numerator/denominator");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "inf" || text == "+inf") return infinity();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), whole);
    const std::int64_t den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw Error(ErrorCode::MalformedInput, "zero denominator in \"" + std::string(whole) + "\"");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac_part.empty()) || frac_part.size() > 17 ||
        frac_part.find_first_not_of("0123456789") != std::string_view::npos ||
        int_part.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::MalformedInput, "not a rational: \"" + std::string(whole) + "\"");
    }
    const std::int64_t whole_units = int_part.empty() ? 0 : parse_int(int_part, whole);
    const std::int64_t frac = frac_part.empty() ? 0 : parse_int(frac_part, whole);
    wide_int scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    wide_int num = static_cast<wide_int>(whole_units) * scale + frac;
    if (negative) num = -num;
    return from_wide(num, scale);
  }
  return Rational(parse_int(text, whole));
}

double Rational::to_double() const {
  if (is_infinite()) return std::numeric_limits<double>::infinity();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (is_infinite()) return "inf";
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  require_finite(a, b);
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ + static_cast<wide_int>(b.num_) * a.den_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  require_finite(a, b);
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_ - static_cast<wide_int>(b.num_) * a.den_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  require_finite(a, b);
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.num_,
                             static_cast<wide_int>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  require_finite(a, b);
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return Rational::from_wide(static_cast<wide_int>(a.num_) * b.den_,
                             static_cast<wide_int>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace spectough
