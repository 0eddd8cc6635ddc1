#include "pervarr/exact/gaussian.hpp"

#include "pervarr/error.hpp"

namespace pervarr {

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& other) {
  return *this *= other.inverse();
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == Rational(1)) {
    imag = "i";
  } else if (im_ == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im_.to_string() + "i";
  }
  if (re_.is_zero()) return imag;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

}  // namespace pervarr
