#pragma once

#include <concepts>
#include <string>
#include <variant>

#include "pervarr/exact/gaussian.hpp"
#include "pervarr/exact/rational.hpp"
#include "pervarr/exact/rational_function.hpp"

namespace pervarr {

template <class F>
concept Field = std::regular<F> && requires(const F& x, const F& y) {
  { F::zero() } -> std::same_as<F>;
  { F::one() } -> std::same_as<F>;
  { x + y } -> std::same_as<F>;
  { x - y } -> std::same_as<F>;
  { x * y } -> std::same_as<F>;
  { x / y } -> std::same_as<F>;
  { -x } -> std::same_as<F>;
  { x.inverse() } -> std::same_as<F>;
  { x.normalized() } -> std::same_as<F>;
  { x.is_zero() } -> std::same_as<bool>;
  { x.to_string() } -> std::same_as<std::string>;
};

enum class FieldMode { rational, gaussian, symbolic };

std::string to_string(FieldMode mode);
FieldMode parse_field_mode(const std::string& text);

template <Field F>
constexpr FieldMode field_mode_of() {
  if constexpr (std::same_as<F, Rational>) {
    return FieldMode::rational;
  } else if constexpr (std::same_as<F, GaussianRational>) {
    return FieldMode::gaussian;
  } else {
    return FieldMode::symbolic;
  }
}

using FieldElement = std::variant<Rational, GaussianRational, RationalFunction>;

std::string to_string(const FieldElement& x);

// Parses one element of the grammar
//   elem  := term (('+'|'-') term)*
//   term  := coeff | coeff? 'i' | coeff? var
//   coeff := int ('/' posint)?
//   var   := 't' posint
// with an optional leading sign. In symbolic mode a var may also be a
// product "t1*t2^3", which is what the canonical printer emits for
// higher-degree monomials. Variables must satisfy 1 <= index <= nvars.
FieldElement parse_field_element(const std::string& text, FieldMode mode, std::size_t nvars = 0);

// Cheapest mode able to hold the literal: symbolic if it mentions 't',
// gaussian if it mentions 'i', rational otherwise.
FieldMode infer_field_mode(const std::string& text);

}  // namespace pervarr
