#pragma once

#include <compare>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace pervarr {

// Arbitrary-precision rational number, always in lowest terms with a
// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rational(const mpq_class& value);

  static Rational zero() { return Rational(); }
  static Rational one() { return Rational(1); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  Rational pow(unsigned exponent) const;
  // Idempotent; arithmetic results are already canonical.
  Rational normalized() const;

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational x, const Rational& y) { return x += y; }
  friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
  friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
  friend Rational operator/(Rational x, const Rational& y) { return x /= y; }
  Rational operator-() const;

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    int c = cmp(x.value_, y.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "p" or "p/q" in lowest terms.
  std::string to_string() const;

 private:
  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

}  // namespace pervarr
