#include <cctype>

#include "pervarr/error.hpp"
#include "pervarr/exact/field.hpp"

namespace pervarr {

std::string to_string(FieldMode mode) {
  switch (mode) {
    case FieldMode::rational: return "rational";
    case FieldMode::gaussian: return "gaussian";
    case FieldMode::symbolic: return "symbolic";
  }
  return "?";
}

FieldMode parse_field_mode(const std::string& text) {
  if (text == "rational") return FieldMode::rational;
  if (text == "gaussian") return FieldMode::gaussian;
  if (text == "symbolic") return FieldMode::symbolic;
  throw ParseError("unknown field mode '" + text + "'", 0);
}

std::string to_string(const FieldElement& x) {
  return std::visit([](const auto& v) { return v.to_string(); }, x);
}

FieldMode infer_field_mode(const std::string& text) {
  if (text.find('t') != std::string::npos) return FieldMode::symbolic;
  if (text.find('i') != std::string::npos) return FieldMode::gaussian;
  return FieldMode::rational;
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, FieldMode mode, std::size_t nvars)
      : text_(text), mode_(mode), nvars_(nvars), poly_(Rational(), nvars) {}

  FieldElement parse() {
    if (text_.empty()) fail("empty element");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    while (pos_ < text_.size()) {
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      ++pos_;
      term(c == '-');
    }
    switch (mode_) {
      case FieldMode::rational: return real_;
      case FieldMode::gaussian: return GaussianRational(real_, imag_);
      case FieldMode::symbolic: return RationalFunction(poly_ + Polynomial(real_, nvars_));
    }
    return real_;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  mpz_class integer() {
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  unsigned small_positive() {
    std::size_t start = pos_;
    mpz_class v = integer();
    if (v == 0 || !v.fits_uint_p()) {
      pos_ = start;
      fail("expected a positive index");
    }
    return static_cast<unsigned>(v.get_ui());
  }

  void term(bool negative) {
    Rational coeff(1);
    bool has_coeff = false;
    if (at_digit()) {
      mpz_class num = integer();
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        std::size_t den_pos = pos_;
        den = integer();
        if (den == 0) {
          pos_ = den_pos;
          fail("zero denominator");
        }
      }
      coeff = Rational(num, den);
      has_coeff = true;
    }
    if (negative) coeff = -coeff;

    if (peek() == 'i') {
      if (mode_ != FieldMode::gaussian) {
        fail("imaginary unit not allowed in " + to_string(mode_) + " mode");
      }
      ++pos_;
      imag_ += coeff;
    } else if (peek() == 't') {
      if (mode_ != FieldMode::symbolic) {
        fail("variable not allowed in " + to_string(mode_) + " mode");
      }
      poly_ += monomial(coeff);
    } else if (has_coeff) {
      real_ += coeff;
    } else {
      fail("expected a term");
    }
  }

  Polynomial monomial(const Rational& coeff) {
    Monomial exps(nvars_, 0);
    for (;;) {
      if (peek() != 't') fail("expected a variable");
      ++pos_;
      std::size_t index_pos = pos_;
      unsigned index = small_positive();
      if (index > nvars_) {
        pos_ = index_pos;
        fail("variable t" + std::to_string(index) + " exceeds n=" + std::to_string(nvars_));
      }
      unsigned exponent = 1;
      if (peek() == '^') {
        ++pos_;
        exponent = small_positive();
      }
      exps[index - 1] += exponent;
      if (peek() != '*') break;
      ++pos_;
    }
    return Polynomial::monomial(std::move(exps), coeff);
  }

  const std::string& text_;
  FieldMode mode_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
  Rational real_;
  Rational imag_;
  Polynomial poly_;
};

}  // namespace

FieldElement parse_field_element(const std::string& text, FieldMode mode, std::size_t nvars) {
  return Parser(text, mode, nvars).parse();
}

}  // namespace pervarr
