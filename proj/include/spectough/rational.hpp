#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace spectough {

// 128-bit intermediate for exact cross-multiplication.
__extension__ typedef __int128 wide_int;

/// Exact p/q in lowest terms (q > 0), or the sentinel +infinity.
///
/// Comparisons cross-multiply in 128-bit integers, so any two finite values
/// with 64-bit numerator and denominator compare exactly.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  static constexpr Rational infinity() {
    Rational r;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  /// Accepts "p", "p/q", decimals such as "0.75" or "-1.5", and "inf".
  static Rational parse(std::string_view text);

  bool is_infinite() const { return den_ == 0; }
  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const;
  /// "p/q" (denominator always written) or "inf".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace spectough
