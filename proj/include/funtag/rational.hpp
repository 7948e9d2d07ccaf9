#ifndef FUNTAG_RATIONAL_HPP_
#define FUNTAG_RATIONAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace funtag {

// Exact fraction arithmetic for scores; totals mix whole and half points and
// their percentages must come out exactly, so no floating point on the data
// path. Always kept normalized with a positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t value) : num(value), den(1) {}  // NOLINT(runtime/explicit)
  Rational(std::int64_t n, std::int64_t d);

  static std::optional<Rational> from_decimal(std::string_view text);

  Rational operator+(const Rational& other) const;
  Rational operator-(const Rational& other) const;
  Rational operator*(const Rational& other) const;
  Rational operator/(const Rational& other) const;

  friend bool operator==(const Rational&, const Rational&) = default;
  bool operator<(const Rational& other) const;
  bool operator<=(const Rational& other) const;
  bool operator>(const Rational& other) const { return other < *this; }
  bool operator>=(const Rational& other) const { return other <= *this; }

  double to_double() const { return static_cast<double>(num) / den; }

  // Exact decimal when the reduced denominator is 2^a 5^b, else "num/den".
  std::string to_string() const;

  // Fixed-point decimal with the given digits, rounding half away from zero.
  std::string to_fixed(int digits) const;
};

}  // namespace funtag

#endif  // FUNTAG_RATIONAL_HPP_
