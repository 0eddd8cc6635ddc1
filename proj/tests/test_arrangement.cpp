#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pervarr/arrangement.hpp"

using namespace pervarr;

using Q = Rational;
using MQ = Matrix<Rational>;

namespace {

LocalSystem<Q> ls(std::vector<Q> a) { return make_local_system(std::move(a)); }

const std::vector<Q> kGridValues = {Q(1), Q(-1), Q(2), Q(1, 2), Q(3), Q(1, 3), Q(2, 3)};

// Every point of values^n, n = 1..max_n.
template <class Fn>
void for_each_grid_point(std::size_t max_n, Fn&& fn) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<std::size_t> digits(n, 0);
    for (;;) {
      std::vector<Q> a;
      for (auto d : digits) a.push_back(kGridValues[d]);
      fn(ls(std::move(a)));
      std::size_t i = 0;
      while (i < n && ++digits[i] == kGridValues.size()) digits[i++] = 0;
      if (i == n) break;
    }
  }
}

}  // namespace

TEST_CASE("make_local_system computes k and the product") {
  auto a = ls({2, 3, 5});
  CHECK(a.k() == 0);
  CHECK(a.product() == Q(30));
  auto b = ls({1, 1});
  CHECK(b.k() == 2);
  CHECK(b.product_is_one());
  auto c = ls({1, 2, Q(1, 2)});
  CHECK(c.k() == 1);
  CHECK(c.product() == Q(1));
  CHECK(c.to_string() == "(1,2,1/2)");
}

TEST_CASE("zero monodromy is rejected") {
  CHECK_THROWS_AS(ls({2, 0}), DomainError);
  CHECK_THROWS_AS(ls({}), DomainError);
}

TEST_CASE("gaussian and symbolic local systems") {
  using G = GaussianRational;
  auto i = G::i();
  LocalSystem<G> g({i, -i, G(1)});
  CHECK(g.k() == 1);
  CHECK(g.product_is_one());
  auto s = symbolic_local_system(3);
  CHECK(s.k() == 0);
  CHECK_FALSE(s.product_is_one());
}

TEST_CASE("pushforward diagram") {
  auto d = stage1_pushforward(ls({2}));
  CHECK(d.p[0] == MQ{{1}});
  CHECK(d.q[0] == MQ{{1}});

  auto ones = stage1_pushforward(ls({1, 1, 1}));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(ones.p[i] == MQ{{0}});
    CHECK(ones.q[i] == MQ{{1}});
  }

  auto mixed = stage1_pushforward(ls({2, Q(1, 2)}));
  CHECK(mixed.p[0] == MQ{{1}});
  CHECK(mixed.p[1] == MQ{{Q(-1, 2)}});
  CHECK(mixed.q[1] == MQ{{1}});
  CHECK(mixed.dim_a == 1);
  CHECK(mixed.dim_b == std::vector<std::size_t>{1, 1});
}

TEST_CASE("extension by zero diagram") {
  auto d = stage1_shriek(ls({2}));
  CHECK(d.p[0] == MQ{{1}});
  CHECK(d.q[0] == MQ{{1}});
  CHECK(stage1_shriek(ls({1})).q[0] == MQ{{0}});
  auto e = stage1_shriek(ls({3, 4}));
  CHECK(e.q[0] == MQ{{2}});
  CHECK(e.q[1] == MQ{{3}});
}

TEST_CASE("intermediate extension diagram") {
  CHECK(stage1_intermediate(ls({2, 3})).dim_b == std::vector<std::size_t>{1, 1});
  CHECK(stage1_intermediate(ls({1})).dim_b == std::vector<std::size_t>{0});
  CHECK(stage1_intermediate(ls({1, 2})).dim_b == std::vector<std::size_t>{0, 1});
}

TEST_CASE("irreducibility across the lines") {
  auto check = [](std::vector<Q> a) {
    auto L = ls(std::move(a));
    return stage1_irreducible(stage1_pushforward(L), L);
  };
  CHECK(check({2, 3, 5}));
  CHECK_FALSE(check({1, 2}));
  CHECK(check({-1, -1}));
  auto L = ls({2, 3});
  CHECK(stage1_irreducible(stage1_intermediate(L), L));
  CHECK_FALSE(stage1_irreducible(stage1_shriek(ls({1, 3})), ls({1, 3})));
}

TEST_CASE("D_I / D_II splitting") {
  auto all = split_DI_DII(ls({1, 1, 1}));
  CHECK(all.d_I.dim_a == 0);
  CHECK(all.d_I.dim_b == std::vector<std::size_t>{1, 1, 1});
  CHECK(all.d_II.dim_a == 1);
  CHECK(all.d_II.total_arm_dimension() == 0);

  auto none = split_DI_DII(ls({2, 3}));
  CHECK(none.d_I.total_arm_dimension() == 0);
  CHECK(none.d_I.dim_a == 0);
  CHECK(none.d_II == stage1_pushforward(ls({2, 3})));

  auto mixed = split_DI_DII(ls({2, 1, Q(1, 2)}));
  CHECK(mixed.order == std::vector<std::size_t>{1, 0, 2});
  CHECK(mixed.d_I.dim_b == std::vector<std::size_t>{1, 0, 0});
  CHECK(mixed.d_II.dim_b == std::vector<std::size_t>{0, 1, 1});
  CHECK(mixed.d_II.p[1] == MQ{{1}});
  CHECK(mixed.d_II.p[2] == MQ{{Q(-1, 2)}});
  CHECK(mixed.sorted.a() == std::vector<Q>{1, 2, Q(1, 2)});
}

TEST_CASE("diagram invariants over the grid") {
  for_each_grid_point(4, [](const LocalSystem<Q>& L) {
    const auto push = stage1_pushforward(L);
    const std::span<const Q> a(L.a());
    CHECK(push.commutes(a));
    CHECK(stage1_shriek(L).commutes(a));
    const auto mid = stage1_intermediate(L);
    CHECK(mid.commutes(a));
    for (std::size_t i = 0; i < L.n(); ++i) CHECK(mid.dim_b[i] == rank(push.p[i]));

    const auto split = split_DI_DII(L);
    const auto sorted_push = stage1_pushforward(split.sorted);
    const std::span<const Q> sorted_a(split.sorted.a());
    CHECK(split.d_I.commutes(sorted_a));
    CHECK(split.d_II.commutes(sorted_a));
    CHECK(split.d_I.dim_a + split.d_II.dim_a == sorted_push.dim_a);
    for (std::size_t i = 0; i < L.n(); ++i) {
      CHECK(split.d_I.dim_b[i] + split.d_II.dim_b[i] == sorted_push.dim_b[i]);
      CHECK(split.sorted.monodromy(i) == L.monodromy(split.order[i]));
    }
    CHECK(stage1_irreducible(push, L) == (L.k() == 0));
  });
}
