#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "pervarr/linalg/linalg.hpp"

namespace pervarr {

// Rank-1 local system on the complement of n lines through the origin in
// C^2, given by the monodromy a_i of a loop around line i. Only n and a are
// stored; any central arrangement is homotopic to x^n = y^n.
template <Field F>
class LocalSystem {
 public:
  explicit LocalSystem(std::vector<F> a) : a_(std::move(a)) {
    if (a_.empty()) throw DomainError("a local system needs at least one line");
    product_ = F::one();
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (a_[i].is_zero()) {
        throw DomainError("monodromy a" + std::to_string(i + 1) + " is zero (not invertible)");
      }
      if (a_[i] == F::one()) ++k_;
      product_ *= a_[i];
    }
  }

  std::size_t n() const { return a_.size(); }
  const std::vector<F>& a() const { return a_; }
  // 0-based.
  const F& monodromy(std::size_t i) const { return a_[i]; }
  bool is_trivial_at(std::size_t i) const { return a_[i] == F::one(); }

  // Number of lines with trivial monodromy.
  std::size_t k() const { return k_; }
  const F& product() const { return product_; }
  bool product_is_one() const { return product_ == F::one(); }

  // Line j of the result is line order[j] of *this.
  LocalSystem permuted(std::span<const std::size_t> order) const {
    if (order.size() != a_.size()) throw DimensionError("permutation length mismatch");
    std::vector<F> b;
    b.reserve(order.size());
    for (auto i : order) b.push_back(a_.at(i));
    return LocalSystem(std::move(b));
  }

  // Stable order putting the trivial lines first.
  std::vector<std::size_t> trivial_first_order() const {
    std::vector<std::size_t> order(a_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_partition(order.begin(), order.end(),
                          [this](std::size_t i) { return is_trivial_at(i); });
    return order;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i) out += ',';
      out += a_[i].to_string();
    }
    return out + ")";
  }

 private:
  std::vector<F> a_;
  std::size_t k_ = 0;
  F product_;
};

template <Field F>
LocalSystem<F> make_local_system(std::vector<F> a) {
  return LocalSystem<F>(std::move(a));
}

// Local system at the generic point t1..tn of the parameter space.
inline LocalSystem<RationalFunction> symbolic_local_system(std::size_t n) {
  std::vector<RationalFunction> a;
  for (std::size_t i = 1; i <= n; ++i) a.push_back(RationalFunction::generator(i, n));
  return LocalSystem<RationalFunction>(std::move(a));
}

// Quiver object on C^2 - {0}: a stalk A on the complement and, for each
// line i, an arm B_i with maps p_i : A -> B_i and q_i : B_i -> A.
template <Field F>
struct Stage1Diagram {
  std::size_t dim_a = 0;
  std::vector<std::size_t> dim_b;
  std::vector<Matrix<F>> p;  // dim_b[i] x dim_a
  std::vector<Matrix<F>> q;  // dim_a x dim_b[i]

  std::size_t arms() const { return dim_b.size(); }
  std::size_t total_arm_dimension() const {
    return std::accumulate(dim_b.begin(), dim_b.end(), std::size_t{0});
  }

  // q_i p_i == (monodromy_i - 1) id_A for every arm.
  bool commutes(std::span<const F> monodromy) const {
    if (monodromy.size() != arms()) return false;
    for (std::size_t i = 0; i < arms(); ++i) {
      if (q[i] * p[i] != Matrix<F>::scalar(dim_a, monodromy[i] - F::one())) return false;
    }
    return true;
  }

  // Matrix (p_1; ...; p_n) : A -> B_1 + ... + B_n.
  Matrix<F> stacked_p() const {
    Matrix<F> out(total_arm_dimension(), dim_a);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < arms(); ++i) {
      for (std::size_t r = 0; r < dim_b[i]; ++r)
        for (std::size_t c = 0; c < dim_a; ++c) out(offset + r, c) = p[i](r, c);
      offset += dim_b[i];
    }
    return out;
  }

  // Matrix (q_1 ... q_n) : B_1 + ... + B_n -> A.
  Matrix<F> concatenated_q() const {
    Matrix<F> out(dim_a, total_arm_dimension());
    std::size_t offset = 0;
    for (std::size_t i = 0; i < arms(); ++i) {
      for (std::size_t r = 0; r < dim_a; ++r)
        for (std::size_t c = 0; c < dim_b[i]; ++c) out(r, offset + c) = q[i](r, c);
      offset += dim_b[i];
    }
    return out;
  }

  friend bool operator==(const Stage1Diagram&, const Stage1Diagram&) = default;
};

namespace detail {

template <Field F>
Stage1Diagram<F> rank_one_diagram(std::size_t arms) {
  Stage1Diagram<F> d;
  d.dim_a = 1;
  d.dim_b.assign(arms, 1);
  d.p.assign(arms, Matrix<F>(1, 1));
  d.q.assign(arms, Matrix<F>(1, 1));
  return d;
}

template <Field F>
void set_empty_arm(Stage1Diagram<F>& d, std::size_t i) {
  d.dim_b[i] = 0;
  d.p[i] = Matrix<F>(0, d.dim_a);
  d.q[i] = Matrix<F>(d.dim_a, 0);
}

}  // namespace detail

// Direct image to C^2 - {0}: A -(a_i - 1)-> B_i -(id)-> A.
template <Field F>
Stage1Diagram<F> stage1_pushforward(const LocalSystem<F>& L) {
  auto d = detail::rank_one_diagram<F>(L.n());
  for (std::size_t i = 0; i < L.n(); ++i) {
    d.p[i](0, 0) = L.monodromy(i) - F::one();
    d.q[i](0, 0) = F::one();
  }
  return d;
}

// Extension by zero: A -(id)-> B_i -(a_i - 1)-> A.
template <Field F>
Stage1Diagram<F> stage1_shriek(const LocalSystem<F>& L) {
  auto d = detail::rank_one_diagram<F>(L.n());
  for (std::size_t i = 0; i < L.n(); ++i) {
    d.p[i](0, 0) = F::one();
    d.q[i](0, 0) = L.monodromy(i) - F::one();
  }
  return d;
}

// Intermediate extension: each arm is the image of a_i - 1.
template <Field F>
Stage1Diagram<F> stage1_intermediate(const LocalSystem<F>& L) {
  auto d = detail::rank_one_diagram<F>(L.n());
  for (std::size_t i = 0; i < L.n(); ++i) {
    if (L.is_trivial_at(i)) {
      detail::set_empty_arm(d, i);
    } else {
      d.p[i](0, 0) = L.monodromy(i) - F::one();
      d.q[i](0, 0) = F::one();
    }
  }
  return d;
}

// A diagram whose stalk is a simple local system is simple iff it is the
// image factorization of var on every arm: p_i onto, q_i into.
template <Field F>
bool stage1_irreducible(const Stage1Diagram<F>& d, const LocalSystem<F>& L) {
  if (d.arms() != L.n() || d.dim_a != 1) {
    throw DimensionError("diagram does not match the local system");
  }
  for (std::size_t i = 0; i < d.arms(); ++i) {
    if (rank(d.p[i]) != d.dim_b[i] || rank(d.q[i]) != d.dim_b[i]) return false;
  }
  return true;
}

// Splitting of the pushforward by the trivial lines. Both diagrams are
// expressed in the sorted line order (trivial lines first); order[j] is the
// original index of sorted line j.
template <Field F>
struct SplitDiagrams {
  Stage1Diagram<F> d_I;   // A = 0, arms 1..k one-dimensional with zero maps
  Stage1Diagram<F> d_II;  // A = C, arms k+1..n as in the pushforward
  std::vector<std::size_t> order;
  LocalSystem<F> sorted;
};

template <Field F>
SplitDiagrams<F> split_DI_DII(const LocalSystem<F>& L) {
  auto order = L.trivial_first_order();
  LocalSystem<F> sorted = L.permuted(order);
  const std::size_t n = L.n();
  const std::size_t k = L.k();

  Stage1Diagram<F> d_I;
  d_I.dim_a = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t dim = i < k ? 1 : 0;
    d_I.dim_b.push_back(dim);
    d_I.p.emplace_back(dim, 0);
    d_I.q.emplace_back(0, dim);
  }

  Stage1Diagram<F> d_II = stage1_pushforward(sorted);
  for (std::size_t i = 0; i < k; ++i) detail::set_empty_arm(d_II, i);

  return {std::move(d_I), std::move(d_II), std::move(order), std::move(sorted)};
}

}  // namespace pervarr
