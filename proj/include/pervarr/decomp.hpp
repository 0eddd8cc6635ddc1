#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "pervarr/mv.hpp"

namespace pervarr {

// Simple objects of the glued category: T-hat(L) for L simple on
// C^2 - {0}, or the zero-winged 0 -> L -> 0 with L on the origin.
enum class SimpleKind { phi, that };

std::string to_string(SimpleKind kind);

struct SimpleFactor {
  SimpleKind kind = SimpleKind::that;
  std::size_t multiplicity = 0;
  std::string description;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

// Composition-length report for Rj_* L_a.
struct FactorReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> a;
  std::string product;
  bool product_is_one = false;
  bool irreducible = false;
  std::size_t closed_form_count = 0;
  std::size_t oracle_count = 0;
  std::size_t rank_var = 0;
  std::vector<SimpleFactor> factors;
  bool agrees = false;

  friend bool operator==(const FactorReport&, const FactorReport&) = default;
};

inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const FactorReport& report);
// Throws nlohmann::json::exception or Error on a malformed document.
FactorReport factor_report_from_json(const nlohmann::json& j);
std::string render_pretty(const FactorReport& report);

// Verdict for Rj_* L_a: every a_i != 1 and, when n >= 3, a_1...a_n != 1.
// For two lines the arrangement is a normal crossing; there the variation
// at the origin is invertible whenever a_1, a_2 != 1, whatever the product.
template <Field F>
bool is_irreducible(const LocalSystem<F>& L) {
  if (L.k() != 0) return false;
  return L.n() <= 2 || !L.product_is_one();
}

// Number of composition factors from (n, k, product):
//   k = n                  -> 2n
//   k < n, product == 1    -> n + k - 1
//   k < n, product != 1    -> k + 1
template <Field F>
std::size_t count_closed_form(const LocalSystem<F>& L) {
  const std::size_t n = L.n(), k = L.k();
  if (k == n) return 2 * n;
  if (L.product_is_one()) return n + k - 1;
  return k + 1;
}

namespace detail {

// dim psi_c of the full pushforward: kernel of the all-ones row map.
inline std::size_t pushforward_psic_dim(std::size_t n) { return n >= 2 ? n - 1 : 0; }

template <Field F>
std::string trivial_lines_text(const LocalSystem<F>& L) {
  std::string lines;
  for (std::size_t i = 0; i < L.n(); ++i) {
    if (!L.is_trivial_at(i)) continue;
    if (!lines.empty()) lines += ',';
    lines += std::to_string(i + 1);
  }
  return lines;
}

template <Field F>
std::vector<SimpleFactor> simples_from_rank(const LocalSystem<F>& L, std::size_t psic_dim,
                                           std::size_t rank_var) {
  std::vector<SimpleFactor> out;
  out.push_back({SimpleKind::that, 1,
                 "intermediate extension of the local system on the complement"});
  if (L.k() > 0) {
    out.push_back({SimpleKind::that, L.k(),
                   "intermediate extensions of constant sheaves on lines " + trivial_lines_text(L)});
  }
  if (psic_dim > rank_var) {
    out.push_back({SimpleKind::phi, psic_dim - rank_var,
                   "skyscraper at the origin (cokernel of var)"});
  }
  return out;
}

template <Field F>
void fill_common(FactorReport& r, const LocalSystem<F>& L) {
  r.n = L.n();
  r.k = L.k();
  for (const auto& x : L.a()) r.a.push_back(x.to_string());
  r.product = L.product().to_string();
  r.product_is_one = L.product_is_one();
  r.irreducible = is_irreducible(L);
}

}  // namespace detail

// Rank-based count: the pushforward across the lines has k + 1 simple
// factors (k line-supported ones and the intermediate extension); each
// contributes T-hat, and the cokernel of var in psi_c adds one skyscraper
// per dimension:
//   c = (k + 1) + dim psi_c - rank(var).
template <Field F>
FactorReport count_oracle(const LocalSystem<F>& L) {
  FactorReport r;
  detail::fill_common(r, L);
  const auto stage2 = stage2_pushforward(stage1_pushforward(L), L);
  const std::size_t psic_dim = detail::pushforward_psic_dim(L.n());
  if (stage2.psic_dim() != psic_dim) {
    throw DomainError("psi_c has dimension " + std::to_string(stage2.psic_dim()) +
                      ", expected " + std::to_string(psic_dim));
  }
  r.rank_var = rank(stage2.varmap);
  r.oracle_count = (L.k() + 1) + psic_dim - r.rank_var;
  r.closed_form_count = count_closed_form(L);
  r.factors = detail::simples_from_rank(L, psic_dim, r.rank_var);
  r.agrees = r.closed_form_count == r.oracle_count;
  return r;
}

template <Field F>
std::vector<SimpleFactor> classify_simples(const LocalSystem<F>& L) {
  return count_oracle(L).factors;
}

// Branch counts of the D_I / D_II splitting. For each branch the closed
// form is the stated lemma value and the oracle comes from the rank of
// var_I or var_II:
//   D_I  : k + (k - rank var_I)          (2k if product == 1, else k)
//   D_II : 1 + (n-k-1 - rank var_II)     (n-k-1 if product == 1, else 1)
// When k = n the D_II branch has no origin data and contributes nothing.
struct BranchReports {
  FactorReport d_I;
  FactorReport d_II;

  std::size_t oracle_total() const { return d_I.oracle_count + d_II.oracle_count; }
  std::size_t closed_form_total() const {
    return d_I.closed_form_count + d_II.closed_form_count;
  }
};

template <Field F>
BranchReports decompose_branches(const LocalSystem<F>& L) {
  const std::size_t n = L.n(), k = L.k();
  const bool one = L.product_is_one();
  BranchReports out;
  detail::fill_common(out.d_I, L);
  detail::fill_common(out.d_II, L);

  if (k > 0) {
    auto& b = out.d_I;
    b.rank_var = rank(var_I_matrix(L));
    b.oracle_count = k + (k - b.rank_var);
    b.closed_form_count = one ? 2 * k : k;
    b.factors.push_back({SimpleKind::that, k,
                         "constant sheaves on lines " + detail::trivial_lines_text(L)});
    if (k > b.rank_var) {
      b.factors.push_back({SimpleKind::phi, k - b.rank_var, "skyscraper at the origin"});
    }
  }
  out.d_I.agrees = out.d_I.oracle_count == out.d_I.closed_form_count;

  if (k < n) {
    auto& b = out.d_II;
    const std::size_t dim = n - k - 1;
    b.rank_var = rank(var_II_matrix(L));
    b.oracle_count = 1 + (dim - b.rank_var);
    b.closed_form_count = one ? n - k - 1 : 1;
    b.factors.push_back({SimpleKind::that, 1, "image of var_II"});
    if (dim > b.rank_var) {
      b.factors.push_back({SimpleKind::phi, dim - b.rank_var, "cokernel of var_II"});
    }
  }
  out.d_II.agrees = out.d_II.oracle_count == out.d_II.closed_form_count;
  return out;
}

}  // namespace pervarr
