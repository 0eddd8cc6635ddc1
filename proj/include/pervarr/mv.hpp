#pragma once

#include <cstddef>
#include <vector>

#include "pervarr/arrangement.hpp"

namespace pervarr {

// The n x n matrix of the variation map, read through
//   B_1 + ... + B_n -> psi -> psi_c -> B_1 + ... + B_n,
// with 1-based accessors d(r, c) and the tail products
// beta(j) = a_j a_{j+1} ... a_n (beta(n + 1) = 1).
template <Field F>
struct VarMatrix {
  std::size_t n = 0;
  Matrix<F> entries;
  std::vector<F> betas;  // betas[j - 1] = beta(j), j = 1..n+1

  const F& d(std::size_t r, std::size_t c) const { return entries(r - 1, c - 1); }
  const F& beta(std::size_t j) const { return betas.at(j - 1); }
};

namespace detail {

// a_from * ... * a_to (1-based, inclusive); 1 when from > to.
template <Field F>
F range_product(const LocalSystem<F>& L, std::size_t from, std::size_t to) {
  F out = F::one();
  for (std::size_t i = from; i <= to; ++i) out *= L.monodromy(i - 1);
  return out;
}

}  // namespace detail

// Entry-wise closed form:
//   r < c : (1 - a_r) a_1..a_{r-1} a_{c+1}..a_n
//   r = c : -1 + (a_1..a_n) / a_c
//   r > c : (1 - a_r) a_{c+1}..a_{r-1}
template <Field F>
VarMatrix<F> ambient_var_matrix(const LocalSystem<F>& L) {
  const std::size_t n = L.n();
  VarMatrix<F> M;
  M.n = n;
  M.entries = Matrix<F>(n, n);
  for (std::size_t j = 1; j <= n + 1; ++j) M.betas.push_back(detail::range_product(L, j, n));

  for (std::size_t r = 1; r <= n; ++r) {
    const F one_minus_ar = F::one() - L.monodromy(r - 1);
    for (std::size_t c = 1; c <= n; ++c) {
      F v;
      if (r < c) {
        v = one_minus_ar * detail::range_product(L, 1, r - 1) * M.beta(c + 1);
      } else if (r == c) {
        v = -F::one() + L.product() / L.monodromy(c - 1);
      } else {
        v = one_minus_ar * detail::range_product(L, c + 1, r - 1);
      }
      M.entries(r - 1, c - 1) = std::move(v);
    }
  }
  return M;
}

// Column l assembled from the cyclic sum
//   var(e_l) = -sum_{i=l+1}^{l+n} p_i a_{i-1} ... a_{l+1} e_i + (prod a) e_l - e_l
// with p_i = a_i - 1, indices taken mod n, a_{i-1}...a_{l+1} read as the
// cyclic run a_{l+1}, a_{l+2}, ..., a_{i-1} (empty for i = l+1, the single
// factor a_{l+1} for i = l+2). The term i = l+n lands on the diagonal.
template <Field F>
VarMatrix<F> ambient_var_from_formula(const LocalSystem<F>& L) {
  const std::size_t n = L.n();
  auto a = [&](std::size_t i) -> const F& { return L.monodromy((i - 1) % n); };

  VarMatrix<F> M;
  M.n = n;
  M.entries = Matrix<F>(n, n);
  M.betas.assign(n + 1, F::one());
  for (std::size_t j = n; j >= 1; --j) M.betas[j - 1] = M.betas[j] * a(j);

  for (std::size_t l = 1; l <= n; ++l) {
    F run = F::one();  // a_{l+1} ... a_{i-1}
    for (std::size_t i = l + 1; i <= l + n; ++i) {
      if (i >= l + 2) run *= a(i - 1);
      const std::size_t row = (i - 1) % n + 1;
      const F p_i = a(i) - F::one();
      M.entries(row - 1, l - 1) -= p_i * run;
    }
    M.entries(l - 1, l - 1) += L.product() - F::one();
  }
  return M;
}

// The matrix obtained by deleting the first column and the last row.
template <Field F>
Matrix<F> minor_matrix(const VarMatrix<F>& M) {
  if (M.n < 2) throw DomainError("no minor for n=1");
  return delete_row_col(M.entries, M.n - 1, 0);
}

// (-1)^(n-1) (a_1 - 1) (a_1...a_n - 1)^(n-2)
template <Field F>
F minor_det_closed_form(const LocalSystem<F>& L) {
  const std::size_t n = L.n();
  if (n < 2) throw DomainError("no minor for n=1");
  F value = L.monodromy(0) - F::one();
  const F base = L.product() - F::one();
  for (std::size_t i = 0; i + 2 < n; ++i) value *= base;
  return n % 2 == 0 ? -value : value;
}

// Object psi -m-> Phi -n-> psi_c over the origin. psi is presented as a
// cokernel of B_1 + ... + B_n, psi_c by a kernel basis inside it.
template <Field F>
struct Stage2Object {
  Cokernel<F> psi;
  Matrix<F> psic_basis;  // columns: basis of psi_c inside B_1 + ... + B_n
  std::size_t phi_dim = 0;
  Matrix<F> varmap;      // psi_c dim x psi dim
  Matrix<F> m;           // Phi dim x psi dim
  Matrix<F> nmap;        // psi_c dim x Phi dim

  std::size_t psi_dim() const { return psi.dimension(); }
  std::size_t psic_dim() const { return psic_basis.cols(); }
  bool commutes() const { return nmap * m == varmap; }
};

// Applies the direct image across the origin to a rank-one-shaped
// Stage1Diagram (dim A <= 1, every dim B_i <= 1), reading var from the
// ambient matrix restricted to the nonzero arms. Phi = psi_c, n = id.
template <Field F>
Stage2Object<F> stage2_pushforward(const Stage1Diagram<F>& d, const LocalSystem<F>& L) {
  if (d.arms() != L.n()) throw DimensionError("diagram does not match the local system");
  if (d.dim_a > 1) throw DomainError("stage-2 construction needs dim A <= 1");
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < d.arms(); ++i) {
    if (d.dim_b[i] > 1) throw DomainError("stage-2 construction needs dim B_i <= 1");
    if (d.dim_b[i] == 1) active.push_back(i);
  }

  const Matrix<F> ambient = ambient_var_matrix(L).entries.submatrix(active, active);
  const Matrix<F> P = d.stacked_p();
  const Matrix<F> Q = d.concatenated_q();
  if (!(ambient * P).is_zero() || !(Q * ambient).is_zero()) {
    throw DomainError("variation does not descend to psi -> psi_c for this diagram");
  }

  Stage2Object<F> out;
  out.psi = cokernel_basis(P);
  const auto kernel = kernel_basis(Q);
  out.psic_basis = Matrix<F>::from_columns(active.size(), kernel);

  out.varmap = Matrix<F>(kernel.size(), out.psi.dimension());
  for (std::size_t j = 0; j < out.psi.dimension(); ++j) {
    const Vector<F> image = ambient.apply(out.psi.representatives[j]);
    const Vector<F> coords = kernel_coordinates(Q, std::span<const F>(image));
    for (std::size_t i = 0; i < coords.size(); ++i) out.varmap(i, j) = coords[i];
  }
  out.phi_dim = kernel.size();
  out.m = out.varmap;
  out.nmap = Matrix<F>::identity(kernel.size());
  return out;
}

// var on psi(D_I) = psi_c(D_I) = C^k: the scalar (a_1...a_n - 1).
template <Field F>
Matrix<F> var_I_matrix(const LocalSystem<F>& L) {
  if (L.k() == 0) throw DomainError("var_I needs at least one trivial line (k >= 1)");
  return Matrix<F>::scalar(L.k(), L.product() - F::one());
}

// var on psi(D_II) in the basis e_{k+1}, ..., e_{n-1} of the sorted lines:
// rows and columns k+1..n-1 of the ambient matrix.
template <Field F>
Matrix<F> var_II_matrix(const LocalSystem<F>& L) {
  const std::size_t n = L.n();
  const std::size_t k = L.k();
  if (k == n) throw DomainError("D_II has no data at the origin when every a_i = 1");
  const auto sorted = L.permuted(L.trivial_first_order());
  const auto M = ambient_var_matrix(sorted);
  std::vector<std::size_t> basis;
  for (std::size_t i = k; i + 1 < n; ++i) basis.push_back(i);
  return M.entries.submatrix(basis, basis);
}

}  // namespace pervarr
