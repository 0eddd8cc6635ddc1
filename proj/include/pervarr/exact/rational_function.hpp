#pragma once

#include <ostream>
#include <span>
#include <string>

#include "pervarr/exact/polynomial.hpp"

namespace pervarr {

// Quotient of two polynomials over Q, used as the generic point of the
// parameter space. Not reduced to lowest terms: normalization only strips
// monomial content, makes the denominator's leading coefficient 1, and
// absorbs the denominator when it divides the numerator exactly. Equality
// is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long constant) : numerator_(constant) {}  // NOLINT
  RationalFunction(const Rational& constant) : numerator_(constant) {}  // NOLINT
  RationalFunction(Polynomial numerator) : numerator_(std::move(numerator)) {}  // NOLINT
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction zero() { return {}; }
  static RationalFunction one() { return {1}; }
  static RationalFunction generator(std::size_t index, std::size_t nvars) {
    return {Polynomial::generator(index, nvars)};
  }

  const Polynomial& numerator() const { return numerator_; }
  const Polynomial& denominator() const { return denominator_; }
  std::size_t nvars() const;

  bool is_zero() const { return numerator_.is_zero(); }
  bool is_one() const { return numerator_ == denominator_; }
  bool is_polynomial() const { return denominator_.is_constant(); }

  RationalFunction inverse() const;
  RationalFunction normalized() const;
  Rational evaluate(std::span<const Rational> point) const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction x, const RationalFunction& y) { return x += y; }
  friend RationalFunction operator-(RationalFunction x, const RationalFunction& y) { return x -= y; }
  friend RationalFunction operator*(RationalFunction x, const RationalFunction& y) { return x *= y; }
  friend RationalFunction operator/(RationalFunction x, const RationalFunction& y) { return x /= y; }
  RationalFunction operator-() const;

  // p/q == r/s iff p*s == r*q.
  friend bool operator==(const RationalFunction& x, const RationalFunction& y);

  // Numerator alone when the denominator is 1, otherwise "(p)/(q)".
  std::string to_string() const;

 private:
  void normalize();

  Polynomial numerator_;
  Polynomial denominator_{1};
};

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace pervarr
