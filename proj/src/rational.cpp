#include "funtag/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace funtag {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::optional<Rational> Rational::from_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '.') {
      if (after_point) return std::nullopt;
      after_point = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    num = num * 10 + (c - '0');
    if (after_point) den *= 10;
    any_digit = true;
  }
  if (!any_digit) return std::nullopt;
  return Rational(negative ? -num : num, den);
}

Rational Rational::operator+(const Rational& other) const {
  return Rational(num * other.den + other.num * den, den * other.den);
}

Rational Rational::operator-(const Rational& other) const {
  return Rational(num * other.den - other.num * den, den * other.den);
}

Rational Rational::operator*(const Rational& other) const {
  return Rational(num * other.num, den * other.den);
}

Rational Rational::operator/(const Rational& other) const {
  if (other.num == 0) throw std::invalid_argument("division by zero");
  return Rational(num * other.den, den * other.num);
}

bool Rational::operator<(const Rational& other) const {
  return num * other.den < other.num * den;
}

bool Rational::operator<=(const Rational& other) const {
  return num * other.den <= other.num * den;
}

std::string Rational::to_string() const {
  std::int64_t d = den;
  int tens = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++tens;
  }
  int fives = 0;
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1)
    return std::to_string(num) + "/" + std::to_string(den);
  int digits = tens > fives ? tens : fives;
  if (digits == 0) return std::to_string(num);

  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = num * (scale / den);
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string frac = std::to_string(scaled % scale);
  frac.insert(frac.begin(), digits - frac.size(), '0');
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  return (negative ? "-" : "") + std::to_string(scaled / scale) + "." + frac;
}

std::string Rational::to_fixed(int digits) const {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t n = num < 0 ? -num : num;
  // round(n/den * scale) half away from zero
  std::int64_t scaled = (n * scale * 2 + den) / (2 * den);
  std::string frac = std::to_string(scaled % scale);
  if (digits > 0) {
    frac.insert(frac.begin(), digits - frac.size(), '0');
    return (num < 0 && scaled != 0 ? "-" : "") + std::to_string(scaled / scale) +
           "." + frac;
  }
  return (num < 0 && scaled != 0 ? "-" : "") + std::to_string(scaled);
}

}  // namespace funtag
