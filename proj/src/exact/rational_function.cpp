#include "pervarr/exact/rational_function.hpp"

#include <algorithm>

#include "pervarr/error.hpp"

namespace pervarr {

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw DivisionByZero();
  normalize();
}

std::size_t RationalFunction::nvars() const {
  return std::max(numerator_.nvars(), denominator_.nvars());
}

void RationalFunction::normalize() {
  if (numerator_.is_zero()) {
    denominator_ = Polynomial(1);
    return;
  }
  std::size_t nvars = this->nvars();
  numerator_ = numerator_.with_nvars(nvars);
  denominator_ = denominator_.with_nvars(nvars);

  Monomial gn = numerator_.monomial_gcd();
  Monomial gd = denominator_.monomial_gcd();
  Monomial common(nvars, 0);
  bool any = false;
  for (std::size_t i = 0; i < nvars; ++i) {
    common[i] = std::min(gn[i], gd[i]);
    any = any || common[i] != 0;
  }
  if (any) {
    numerator_ = numerator_.divide_by_monomial(common);
    denominator_ = denominator_.divide_by_monomial(common);
  }

  Rational lc = denominator_.leading_coefficient();
  if (!lc.is_one()) {
    Rational inv = lc.inverse();
    numerator_ = numerator_.scaled(inv);
    denominator_ = denominator_.scaled(inv);
  }
  if (denominator_.is_constant()) return;
  if (auto q = numerator_.try_divide(denominator_)) {
    numerator_ = std::move(*q);
    denominator_ = Polynomial(Rational(1), nvars);
  }
}

RationalFunction RationalFunction::normalized() const {
  RationalFunction f = *this;
  f.normalize();
  return f;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return {denominator_, numerator_};
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  return numerator_.evaluate(point) / denominator_.evaluate(point);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  if (denominator_ == other.denominator_) {
    numerator_ += other.numerator_;
  } else {
    numerator_ = numerator_ * other.denominator_ + other.numerator_ * denominator_;
    denominator_ *= other.denominator_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this += -other;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  numerator_ *= other.numerator_;
  denominator_ *= other.denominator_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  return *this *= other.inverse();
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.numerator_ = -f.numerator_;
  return f;
}

bool operator==(const RationalFunction& x, const RationalFunction& y) {
  if (x.denominator_ == y.denominator_) return x.numerator_ == y.numerator_;
  return x.numerator_ * y.denominator_ == y.numerator_ * x.denominator_;
}

std::string RationalFunction::to_string() const {
  if (denominator_.is_constant() && denominator_.constant_value().is_one()) {
    return numerator_.to_string();
  }
  return "(" + numerator_.to_string() + ")/(" + denominator_.to_string() + ")";
}

}  // namespace pervarr
