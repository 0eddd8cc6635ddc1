#include "pervarr/exact/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "pervarr/error.hpp"

namespace pervarr {

std::uint32_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

bool GrlexGreater::operator()(const Monomial& x, const Monomial& y) const {
  auto dx = total_degree(x);
  auto dy = total_degree(y);
  if (dx != dy) return dx > dy;
  return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
}

namespace {

Monomial padded(const Monomial& m, std::size_t nvars) {
  Monomial out = m;
  out.resize(nvars, 0);
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant, std::size_t nvars) : nvars_(nvars) {
  if (!constant.is_zero()) terms_.emplace(Monomial(nvars, 0), constant);
}

Polynomial Polynomial::generator(std::size_t index, std::size_t nvars) {
  if (index == 0 || index > nvars) {
    throw DomainError("generator t" + std::to_string(index) + " outside ring of " +
                      std::to_string(nvars) + " variables");
  }
  Monomial m(nvars, 0);
  m[index - 1] = 1;
  return monomial(std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(Monomial exponents, Rational coefficient) {
  Polynomial p;
  p.nvars_ = exponents.size();
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(exponents), std::move(coefficient));
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && pervarr::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational();
  const auto& [m, c] = *terms_.rbegin();  // smallest in grlex is the constant term
  return pervarr::total_degree(m) == 0 ? c : Rational();
}

std::uint32_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : pervarr::total_degree(leading_monomial());
}

void Polynomial::pad_to(std::size_t nvars) {
  if (nvars <= nvars_) return;
  TermMap out;
  for (auto& [m, c] : terms_) out.emplace(padded(m, nvars), std::move(c));
  terms_ = std::move(out);
  nvars_ = nvars;
}

Polynomial Polynomial::with_nvars(std::size_t nvars) const {
  Polynomial p = *this;
  p.pad_to(nvars);
  return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ > nvars_) pad_to(other.nvars_);
  if (other.nvars_ == nvars_) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
  } else {
    for (const auto& [m, c] : other.terms_) add_term(padded(m, nvars_), c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  std::size_t nvars = std::max(x.nvars_, y.nvars_);
  Polynomial out;
  out.nvars_ = nvars;
  if (x.is_zero() || y.is_zero()) return out;
  Monomial m(nvars, 0);
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      std::fill(m.begin(), m.end(), 0);
      for (std::size_t i = 0; i < mx.size(); ++i) m[i] += mx[i];
      for (std::size_t i = 0; i < my.size(); ++i) m[i] += my[i];
      out.add_term(m, cx * cy);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

bool operator==(const Polynomial& x, const Polynomial& y) {
  if (x.nvars_ == y.nvars_) return x.terms_ == y.terms_;
  std::size_t nvars = std::max(x.nvars_, y.nvars_);
  return x.with_nvars(nvars).terms_ == y.with_nvars(nvars).terms_;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result(Rational(1), nvars_);
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor.is_zero()) return Polynomial(Rational(), nvars_);
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c *= factor;
  return p;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() < nvars_) {
    throw DimensionError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(nvars_) + " variables");
  }
  Rational sum;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i]) term *= point[i].pow(m[i]);
    }
    sum += term;
  }
  return sum;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  std::size_t nvars = std::max(nvars_, divisor.nvars_);
  Polynomial remainder = with_nvars(nvars);
  Polynomial d = divisor.with_nvars(nvars);
  Polynomial quotient(Rational(), nvars);
  const Monomial& lm = d.leading_monomial();
  const Rational lc_inv = d.leading_coefficient().inverse();
  Monomial step(nvars, 0);
  while (!remainder.is_zero()) {
    const Monomial& rm = remainder.leading_monomial();
    for (std::size_t i = 0; i < nvars; ++i) {
      if (rm[i] < lm[i]) return std::nullopt;
      step[i] = rm[i] - lm[i];
    }
    Polynomial term = monomial(step, remainder.leading_coefficient() * lc_inv);
    quotient += term;
    remainder -= term * d;
  }
  return quotient;
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  auto q = try_divide(divisor);
  if (!q) throw DomainError("polynomial division is not exact");
  return *std::move(q);
}

Monomial Polynomial::monomial_gcd() const {
  if (terms_.empty()) return Monomial(nvars_, 0);
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], m[i]);
  }
  return g;
}

Polynomial Polynomial::divide_by_monomial(const Monomial& d) const {
  Polynomial out;
  out.nvars_ = nvars_;
  for (const auto& [m, c] : terms_) {
    Monomial q = m;
    for (std::size_t i = 0; i < d.size() && i < q.size(); ++i) {
      if (q[i] < d[i]) throw DomainError("monomial does not divide polynomial");
      q[i] -= d[i];
    }
    out.terms_.emplace(std::move(q), c);
  }
  return out;
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 't' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = c.sign() < 0 ? -c : c;
    if (c.sign() < 0) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string vars = monomial_string(m);
    if (vars.empty()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string();
      out += vars;
    }
  }
  return out;
}

}  // namespace pervarr
