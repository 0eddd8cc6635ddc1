#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "pervarr/arrangement.hpp"
#include "pervarr/cli.hpp"

namespace pervarr::cli {

struct Input {
  FieldMode mode = FieldMode::rational;
  std::vector<FieldElement> a;
  std::size_t nvars = 0;
};

FieldMode resolve_mode(const RunConfig& cfg);

// The monodromy vector named by -a, or t1..tn in symbolic mode with -n only.
Input resolve_input(const RunConfig& cfg);

// Calls fn(LocalSystem<F>) for the field selected by the input's mode.
template <class Fn>
decltype(auto) with_local_system(const Input& in, Fn&& fn) {
  auto build = [&]<Field F>() {
    std::vector<F> a;
    a.reserve(in.a.size());
    for (const auto& x : in.a) a.push_back(std::get<F>(x));
    return make_local_system(std::move(a));
  };
  switch (in.mode) {
    case FieldMode::gaussian: return fn(build.template operator()<GaussianRational>());
    case FieldMode::symbolic: return fn(build.template operator()<RationalFunction>());
    case FieldMode::rational: break;
  }
  return fn(build.template operator()<Rational>());
}

std::string csv_field(const std::string& text);

template <Field F>
std::vector<std::vector<std::string>> matrix_strings(const Matrix<F>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).to_string());
  return out;
}

// Bracketed rows with right-aligned columns.
std::string render_rows(const std::vector<std::vector<std::string>>& rows,
                        const std::string& indent);

// Fixed-width table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace pervarr::cli
