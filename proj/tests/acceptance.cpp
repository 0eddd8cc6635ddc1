// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pervarr/decomp.hpp"

using namespace pervarr;
using pervarr::testing::random_rational;

namespace {

using Q = Rational;
using RF = RationalFunction;
using Clock = std::chrono::steady_clock;

const std::vector<Q> kGridValues = {Q(1), Q(-1), Q(2), Q(1, 2), Q(3), Q(1, 3), Q(2, 3)};

struct Outcome {
  bool pass = true;
  std::string detail;
};

template <class Fn>
void for_each_grid_point(std::size_t max_n, Fn&& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
      std::vector<Q> a;
      for (auto d : digits) a.push_back(kGridValues[d]);
      fn(make_local_system(std::move(a)));
      std::size_t i = 0;
      while (i < n && ++digits[i] == kGridValues.size()) digits[i++] = 0;
      if (i == n) break;
    }
  }
}

void fail_with(Outcome& o, const std::string& what) {
  if (o.pass) o.detail = what;
  o.pass = false;
}

Outcome symbolic_minor_identity() {
  Outcome o;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto L = symbolic_local_system(n);
    if (determinant(minor_matrix(ambient_var_matrix(L))) != minor_det_closed_form(L)) {
      fail_with(o, "mismatch at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n=2..6";
  return o;
}

Outcome numeric_minor_identity() {
  Outcome o;
  std::mt19937_64 rng(12);
  std::size_t points = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    for (int t = 0; t < 100; ++t, ++points) {
      std::vector<Q> a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(random_rational(rng, 9, true));
      const auto L = make_local_system(std::move(a));
      if (determinant(minor_matrix(ambient_var_matrix(L))) != minor_det_closed_form(L)) {
        fail_with(o, "mismatch at a=" + L.to_string());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " points";
  return o;
}

Outcome matrix_fidelity() {
  Outcome o;
  auto a = [](std::size_t i) { return RF::generator(i, 4); };
  const RF one = RF::one();
  // Reference n = 4 matrix, entry by entry.
  const Matrix<RF> reference{
      {-one + a(2) * a(3) * a(4), (one - a(1)) * a(3) * a(4), (one - a(1)) * a(4), one - a(1)},
      {one - a(2), -one + a(1) * a(3) * a(4), (one - a(2)) * a(1) * a(4), (one - a(2)) * a(1)},
      {(one - a(3)) * a(2), one - a(3), -one + a(1) * a(2) * a(4), (one - a(3)) * a(1) * a(2)},
      {(one - a(4)) * a(2) * a(3), (one - a(4)) * a(3), one - a(4), -one + a(1) * a(2) * a(3)},
  };
  if (ambient_var_matrix(symbolic_local_system(4)).entries != reference) {
    fail_with(o, "M_4 differs from the reference matrix");
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto L = symbolic_local_system(n);
    if (ambient_var_matrix(L).entries != ambient_var_from_formula(L).entries) {
      fail_with(o, "cross-path mismatch at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "M_4 verbatim; cross-path n=2..6";
  return o;
}

Outcome irreducibility_on_grid() {
  Outcome o;
  std::size_t points = 0;
  for_each_grid_point(5, [&](const LocalSystem<Q>& L) {
    ++points;
    const bool verdict = is_irreducible(L);
    const bool closed_one = count_closed_form(L) == 1;
    const bool oracle_one = count_oracle(L).oracle_count == 1;
    if (verdict != closed_one || verdict != oracle_one) {
      fail_with(o, "disagreement at a=" + L.to_string());
    }
  });
  if (o.pass) o.detail = std::to_string(points) + " points";
  return o;
}

Outcome counts_on_grid() {
  Outcome o;
  std::size_t points = 0, branch_points = 0;
  for_each_grid_point(5, [&](const LocalSystem<Q>& L) {
    ++points;
    const auto r = count_oracle(L);
    if (r.oracle_count != count_closed_form(L)) {
      fail_with(o, "closed form " + std::to_string(count_closed_form(L)) + " vs oracle " +
                       std::to_string(r.oracle_count) + " at a=" + L.to_string());
    }
    if (L.k() >= 1) {
      ++branch_points;
      const auto b = decompose_branches(L);
      if (b.oracle_total() != r.oracle_count || b.closed_form_total() != r.closed_form_count ||
          !b.d_I.agrees || !b.d_II.agrees) {
        fail_with(o, "branch sum mismatch at a=" + L.to_string());
      }
    }
  });
  if (o.pass) {
    o.detail = std::to_string(points) + " points, " + std::to_string(branch_points) +
               " branch splits";
  }
  return o;
}

Outcome rank_one_lemma() {
  Outcome o;
  std::size_t hits = 0;
  for_each_grid_point(5, [&](const LocalSystem<Q>& L) {
    if (!L.product_is_one() || L.k() + 1 >= L.n()) return;
    ++hits;
    const auto r = rank(var_II_matrix(L));
    if (r != 1) fail_with(o, "rank " + std::to_string(r) + " at a=" + L.to_string());
  });
  if (hits == 0) fail_with(o, "no grid point satisfies the hypotheses");
  if (o.pass) o.detail = std::to_string(hits) + " points satisfy the hypotheses";
  return o;
}

Outcome one_line() {
  Outcome o;
  for (const Q alpha : kGridValues) {
    const auto L = make_local_system(std::vector<Q>{alpha});
    const std::size_t want = alpha == Q(1) ? 2 : 1;
    if (count_oracle(L).oracle_count != want || count_closed_form(L) != want) {
      fail_with(o, "wrong count at a=" + L.to_string());
    }
  }
  if (o.pass) o.detail = "count 2 at a=1, 1 otherwise";
  return o;
}

Outcome permutation_invariance() {
  Outcome o;
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<std::size_t> pick(0, kGridValues.size() - 1);
  std::uniform_int_distribution<std::size_t> length(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = length(rng);
    std::vector<Q> a;
    for (std::size_t i = 0; i < n; ++i) {
      // mix grid values with arbitrary rationals
      a.push_back(trial % 2 ? kGridValues[pick(rng)] : random_rational(rng, 5, true));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const auto L = make_local_system(a);
    const auto P = L.permuted(order);
    const auto rl = count_oracle(L), rp = count_oracle(P);
    if (rl.oracle_count != rp.oracle_count || count_closed_form(L) != count_closed_form(P) ||
        is_irreducible(L) != is_irreducible(P)) {
      fail_with(o, "not invariant at a=" + L.to_string());
    }
  }
  if (o.pass) o.detail = "1000 pairs";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "minor determinant identity, symbolic n=2..6", 60, symbolic_minor_identity},
      {2, "minor determinant identity, 100 random rational points per n, n=2..12", 10,
       numeric_minor_identity},
      {3, "reference M_4 and cross-path identity, symbolic", 0, matrix_fidelity},
      {4, "irreducibility verdict = (count 1) on the 7^n grid, n<=5", 120,
       irreducibility_on_grid},
      {5, "closed-form counts = rank oracle and branch sums on the grid", 0, counts_on_grid},
      {6, "rank(var_II) = 1 under the rank-one hypotheses", 0, rank_one_lemma},
      {7, "one line: count 1 for a!=1, 2 for a=1", 0, one_line},
      {8, "permutation invariance, 1000 random pairs", 0, permutation_invariance},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      fail_with(o, "took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
