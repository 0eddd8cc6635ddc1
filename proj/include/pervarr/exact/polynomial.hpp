#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pervarr/exact/rational.hpp"

namespace pervarr {

using Monomial = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Monomial& m);

// Graded-lexicographic order, greatest first; t1 > t2 > ... within a degree.
struct GrlexGreater {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

// Sparse multivariate polynomial over Q in the variables t1..t_nvars.
//
// Every stored exponent vector has length nvars() and no stored coefficient
// is zero, so the zero polynomial is exactly the empty term map. Operands
// with different variable counts are padded to the larger count.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(const Rational& constant, std::size_t nvars = 0);   // NOLINT

  // The generator t_index (1-based) in a ring of nvars variables.
  static Polynomial generator(std::size_t index, std::size_t nvars);
  static Polynomial monomial(Monomial exponents, Rational coefficient);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term when is_constant(), zero otherwise.
  Rational constant_value() const;
  std::uint32_t total_degree() const;

  // Requires !is_zero().
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Polynomial with_nvars(std::size_t nvars) const;
  Polynomial pow(unsigned exponent) const;
  Polynomial scaled(const Rational& factor) const;
  Rational evaluate(std::span<const Rational> point) const;

  // Quotient when divisor divides *this exactly, nullopt otherwise.
  std::optional<Polynomial> try_divide(const Polynomial& divisor) const;
  // Throws DomainError when the division is not exact.
  Polynomial exact_divide(const Polynomial& divisor) const;

  // Componentwise minimum exponent over all terms (the monomial content).
  Monomial monomial_gcd() const;
  Polynomial divide_by_monomial(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& x, const Polynomial& y);

  // Terms in grlex order, e.g. "t1*t2^2-3/2t3+1"; degree-one terms use the
  // juxtaposed "2t1" form so linear polynomials re-parse.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  void pad_to(std::size_t nvars);

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace pervarr
