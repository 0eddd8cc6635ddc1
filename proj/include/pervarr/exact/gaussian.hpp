#pragma once

#include <ostream>
#include <string>

#include "pervarr/exact/rational.hpp"

namespace pervarr {

// Element of Q(i). Covers the 4th roots of unity as monodromy values.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}      // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return {1}; }
  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const { return re_.is_one() && im_.is_zero(); }

  GaussianRational conjugate() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  GaussianRational normalized() const { return *this; }

  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);
  GaussianRational& operator/=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational x, const GaussianRational& y) { return x += y; }
  friend GaussianRational operator-(GaussianRational x, const GaussianRational& y) { return x -= y; }
  friend GaussianRational operator*(GaussianRational x, const GaussianRational& y) { return x *= y; }
  friend GaussianRational operator/(GaussianRational x, const GaussianRational& y) { return x /= y; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

  // "a+bi" with zero parts suppressed: "0", "3", "-i", "1/2-3i".
  std::string to_string() const;

 private:
  Rational re_;
  Rational im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
  return os << x.to_string();
}

}  // namespace pervarr
