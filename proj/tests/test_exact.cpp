#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pervarr/error.hpp"
#include "pervarr/exact/field.hpp"

using namespace pervarr;
using pervarr::testing::random_gaussian;
using pervarr::testing::random_polynomial;
using pervarr::testing::random_rational;

namespace {

Polynomial t(std::size_t i, std::size_t nvars = 3) { return Polynomial::generator(i, nvars); }

}  // namespace

TEST_CASE("rational arithmetic is canonical") {
  CHECK(Rational(2, 3) + Rational(1, 3) == Rational(1));
  CHECK((Rational(2, 3) + Rational(1, 3)).denominator() == 1);
  Rational x(6, -4);
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x.to_string() == "-3/2");
  CHECK(Rational(5).to_string() == "5");
  CHECK(x.normalized().normalized() == x.normalized());
}

TEST_CASE("division by zero is reported") {
  CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(GaussianRational().inverse(), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction().inverse(), DivisionByZero);
  CHECK_THROWS_AS(RationalFunction(Polynomial(1), Polynomial()), DivisionByZero);
}

TEST_CASE("gaussian rationals") {
  auto i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(i.inverse() == -i);
  CHECK(GaussianRational(Rational(1), Rational(2)).to_string() == "1+2i");
  CHECK(GaussianRational(Rational(1), Rational(-1)).to_string() == "1-i");
  CHECK((-i).to_string() == "-i");
  CHECK(GaussianRational(Rational(0), Rational(3, 4)).to_string() == "3/4i");
  CHECK(GaussianRational().to_string() == "0");
  // i^4 == 1 but i != 1
  CHECK(i * i * i * i == GaussianRational::one());
  CHECK_FALSE(i.is_one());
}

TEST_CASE("polynomial printing follows graded lexicographic order") {
  Polynomial p = t(2) * t(3) - Polynomial(1) + t(1) * t(2) * t(2) + t(3).scaled(Rational(-3, 2));
  CHECK(p.to_string() == "t1*t2^2+t2*t3-3/2t3-1");
  CHECK(Polynomial().to_string() == "0");
  CHECK((t(1) + t(2)).to_string() == "t1+t2");
}

TEST_CASE("zero polynomial has no terms") {
  Polynomial p = t(1) - t(1);
  CHECK(p.is_zero());
  CHECK(p.term_count() == 0);
  CHECK(p == Polynomial());
  CHECK((t(1) * Polynomial()).is_zero());
}

TEST_CASE("polynomials with different variable counts compare by padding") {
  CHECK(Polynomial(3) == Polynomial(Rational(3), 4));
  CHECK(t(1, 1) + t(2, 2) == t(2, 2) + t(1, 2));
  CHECK((t(1, 1) + t(2, 2)).nvars() == 2);
}

TEST_CASE("exact polynomial division") {
  Polynomial f = t(1) * t(2) - Polynomial(1);
  Polynomial g = t(1) + t(3).scaled(2);
  CHECK((f * g).exact_divide(g) == f);
  CHECK((f * g).exact_divide(f) == g);
  CHECK_FALSE(f.try_divide(g).has_value());
  CHECK_THROWS_AS(f.exact_divide(g), DomainError);
}

TEST_CASE("rational function equality by cross-multiplication") {
  // (t1^2 - 1)/(t1 - 1) == (t1 + 1)/1: both cross-products expand to t1^2 - 1.
  Polynomial t1 = t(1, 1);
  Polynomial lhs_num = t1 * t1 - Polynomial(1);
  Polynomial lhs_den = t1 - Polynomial(1);
  CHECK(lhs_num * Polynomial(1) == (t1 + Polynomial(1)) * lhs_den);
  RationalFunction lhs(lhs_num, lhs_den);
  CHECK(lhs == RationalFunction(t1 + Polynomial(1)));
  CHECK(lhs.is_polynomial());

  RationalFunction q(t(1), t(2));
  CHECK(q * RationalFunction(t(2), t(1)) == RationalFunction::one());
  CHECK_FALSE(q == RationalFunction(t(2), t(1)));
  CHECK(q.to_string() == "(t1)/(t2)");
}

TEST_CASE("x * inverse(x) == 1 in every field mode") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = random_rational(rng, 50, true);
    CHECK(x * x.inverse() == Rational::one());
    GaussianRational z = random_gaussian(rng);
    if (!z.is_zero()) CHECK(z * z.inverse() == GaussianRational::one());
  }
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial num = random_polynomial(rng, 3, 3, 3);
    Polynomial den = random_polynomial(rng, 3, 3, 3);
    if (num.is_zero() || den.is_zero()) continue;
    RationalFunction f(num, den);
    CHECK(f * f.inverse() == RationalFunction::one());
  }
}

TEST_CASE("polynomial ring axioms on random sparse inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t nvars = 1 + trial % 4;
    Polynomial p = random_polynomial(rng, nvars, 5, 4);
    Polynomial q = random_polynomial(rng, nvars, 5, 4);
    Polynomial r = random_polynomial(rng, nvars, 5, 4);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p + q) + r == p + (q + r));
    const Polynomial pq = p * q;
    for (const auto& [m, c] : pq.terms()) {
      CHECK(m.size() == nvars);
      CHECK_FALSE(c.is_zero());
    }
  }
}

TEST_CASE("rational function normalization is idempotent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial num = random_polynomial(rng, 3, 3, 3);
    Polynomial den = random_polynomial(rng, 3, 3, 3);
    if (den.is_zero()) continue;
    RationalFunction f(num * t(1), den * t(1));
    RationalFunction once = f.normalized();
    RationalFunction twice = once.normalized();
    CHECK(once.numerator() == twice.numerator());
    CHECK(once.denominator() == twice.denominator());
    CHECK(once == RationalFunction(num, den));
  }
}

TEST_CASE("parse literals") {
  CHECK(std::get<Rational>(parse_field_element("-3/7", FieldMode::rational)) == Rational(-3, 7));
  CHECK(std::get<GaussianRational>(parse_field_element("1+2i", FieldMode::gaussian)) ==
        GaussianRational(Rational(1), Rational(2)));
  CHECK(std::get<RationalFunction>(parse_field_element("t1", FieldMode::symbolic, 1)) ==
        RationalFunction::generator(1, 1));
  CHECK(std::get<GaussianRational>(parse_field_element("-i", FieldMode::gaussian)) ==
        -GaussianRational::i());
  CHECK(std::get<Rational>(parse_field_element("4/6", FieldMode::rational)) == Rational(2, 3));
  CHECK(std::get<RationalFunction>(parse_field_element("2t2-1/2", FieldMode::symbolic, 2)) ==
        RationalFunction(t(2, 2).scaled(2) - Polynomial(Rational(1, 2))));
  CHECK(std::get<Rational>(parse_field_element("1+2-3", FieldMode::rational)) == Rational(0));
}

TEST_CASE("parse errors carry a position") {
  auto position_of = [](const std::string& text, FieldMode mode, std::size_t nvars = 0) {
    try {
      parse_field_element(text, mode, nvars);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position_of("i", FieldMode::rational) == 0);
  CHECK(position_of("1+i", FieldMode::rational) == 2);
  CHECK(position_of("t1", FieldMode::gaussian) == 0);
  CHECK(position_of("t3", FieldMode::symbolic, 2) == 1);
  CHECK(position_of("1/0", FieldMode::rational) == 2);
  CHECK(position_of("1/", FieldMode::rational) == 2);
  CHECK(position_of("", FieldMode::rational) == 0);
  CHECK(position_of("2x", FieldMode::rational) == 1);
  CHECK(position_of("1++2", FieldMode::rational) == 2);
  CHECK_THROWS_AS(parse_field_mode("complex"), ParseError);
}

TEST_CASE("parse round-trips through the canonical printer") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Rational x = random_rational(rng, 1000);
    CHECK(std::get<Rational>(parse_field_element(x.to_string(), FieldMode::rational)) == x);
    GaussianRational z = random_gaussian(rng, 30);
    CHECK(std::get<GaussianRational>(parse_field_element(z.to_string(), FieldMode::gaussian)) == z);
    Polynomial p = random_polynomial(rng, 3, 4, 4);
    auto parsed = std::get<RationalFunction>(parse_field_element(p.to_string(), FieldMode::symbolic, 3));
    CHECK(parsed == RationalFunction(p));
    CHECK(parsed.to_string() == p.to_string());
  }
}

TEST_CASE("mode inference") {
  CHECK(infer_field_mode("1,2,1/2") == FieldMode::rational);
  CHECK(infer_field_mode("1+i,1-i") == FieldMode::gaussian);
  CHECK(infer_field_mode("t1,2") == FieldMode::symbolic);
}
