/*
Copyright 2026 The emb7 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include "emb7/error.hpp"
#include "emb7/moves.hpp"
#include "generators.hpp"

using namespace emb7;

TEST_SUITE("moves") {

TEST_CASE("apply_move examples") {
  const auto s1xs3 = builtin("s1xs3");
  SUBCASE("l = 0 translates beta in the infinite fiber") {
    const EmbeddingClass c{{}, IntMatrix{{0}}, make_vector({0})};
    const EmbeddingClass r = apply_move(s1xs3, c, Move{make_vector({1}), 0, 5});
    CHECK(r.L == IntMatrix{{0}});
    REQUIRE(r.beta_known());
    CHECK(*r.beta == make_vector({5}));
  }
  SUBCASE("l != 0 changes L and forgets beta") {
    const EmbeddingClass c{{}, IntMatrix{{2}}, make_vector({1})};
    const EmbeddingClass r = apply_move(s1xs3, c, Move{make_vector({1}), 3, 0});
    CHECK(r.L == IntMatrix{{5}});
    CHECK(!r.beta_known());
  }
  SUBCASE("trivial move") {
    const auto t = builtin("t2xs2");
    const KappaValue u = make_vector({2, 0});
    const IntMatrix l{{0, 0}, {2, 0}};
    const IntVector beta = canonical_representative(k_group(t, u, l).group, make_vector({5, 3}));
    const EmbeddingClass c{u, l, beta};
    const EmbeddingClass r = apply_move(t, c, Move{make_vector({0, 0}), 0, 0});
    CHECK(r.u == c.u);
    CHECK(r.L == c.L);
    CHECK(r.beta == c.beta);
    CHECK(classes_equal(t, r, EmbeddingClass{u, l, make_vector({5, 3})}));
  }
  SUBCASE("l = 0 reduces beta in a finite fiber") {
    const EmbeddingClass c{{}, IntMatrix{{3}}, make_vector({4})};
    const EmbeddingClass r = apply_move(s1xs3, c, Move{make_vector({1}), 0, 5});
    CHECK(classes_equal(s1xs3, r, EmbeddingClass{{}, IntMatrix{{3}}, make_vector({3})}));
  }
  CHECK_THROWS_AS(apply_move(s1xs3, EmbeddingClass{{}, IntMatrix{{0}}, make_vector({0})},
                             Move{make_vector({1, 1}), 1, 0}),
                  Error);
}

TEST_CASE("property: apply_move matches the update formulas") {
  gen::Rng rng(71);
  for (int t = 0; t < 100; ++t) {
    const ManifoldData d = gen::manifold(rng);
    const auto us = enumerate_kappa(d, 2);
    if (us.empty()) continue;
    const KappaValue u = us[gen::size(rng, 0, us.size() - 1)];
    const IntMatrix l = base_lambda(d, u) + gen::symmetric(rng, d.b3, 5);
    const EmbeddingClass c{u, l, gen::vector(rng, d.b1, 5)};
    const Move m{gen::vector(rng, d.b1, 3), gen::integer(rng, -3, 3), gen::integer(rng, -5, 5)};
    const EmbeddingClass r = apply_move(d, c, m);
    CHECK(r.u == u);
    const IntVector ps = d.P * m.s;
    for (std::size_t j = 0; j < d.b3; ++j)
      for (std::size_t k = 0; k < d.b3; ++k) CHECK(r.L(j, k) == l(j, k) + m.l * ps[j] * ps[k]);
    CHECK(is_symmetric_pair(d, u, r.L));
    if (m.l == 0) {
      REQUIRE(r.beta_known());
      IntVector shifted = *c.beta;
      for (std::size_t i = 0; i < d.b1; ++i) shifted[i] += m.b * m.s[i];
      const auto k = k_group(d, u, l);
      CHECK(coset_normal_form(k.group, *r.beta) == coset_normal_form(k.group, shifted));
    } else {
      CHECK(!r.beta_known());
    }
  }
}

TEST_CASE("property: l = 0 moves commute and add") {
  gen::Rng rng(72);
  const auto t = builtin("t2xs2");
  for (int trial = 0; trial < 50; ++trial) {
    const EmbeddingClass c{make_vector({0, 0}), gen::symmetric(rng, 2, 4), gen::vector(rng, 2, 4)};
    const Move a{gen::vector(rng, 2, 3), 0, gen::integer(rng, -4, 4)};
    const Move b{gen::vector(rng, 2, 3), 0, gen::integer(rng, -4, 4)};
    const auto ab = apply_move(t, apply_move(t, c, a), b);
    const auto ba = apply_move(t, apply_move(t, c, b), a);
    CHECK(classes_equal(t, ab, ba));
    IntVector sum(2);
    for (std::size_t i = 0; i < 2; ++i) sum[i] = a.b * a.s[i] + b.b * b.s[i];
    const auto direct = apply_move(t, c, Move{sum, 0, 1});
    CHECK(classes_equal(t, ab, direct));
  }
}

TEST_CASE("decompose examples") {
  const auto t = builtin("t2xs2");
  CHECK(decompose_symmetric_form(t, IntMatrix(2, 2)).empty());
  const IntMatrix m{{2, 1}, {1, 0}};
  CHECK(net_lambda_effect(t, decompose_symmetric_form(t, m)) == m);
  const IntMatrix mp{{1, 1}, {1, 1}};
  CHECK(net_lambda_effect(t, decompose_symmetric_form(t, mp)) == mp);
  CHECK_THROWS_AS(decompose_symmetric_form(t, IntMatrix{{0, 1}, {0, 0}}), Error);
}

TEST_CASE("net lambda effect examples") {
  const auto s1xs3 = builtin("s1xs3");
  CHECK(net_lambda_effect(s1xs3, {}) == IntMatrix{{0}});
  CHECK(net_lambda_effect(s1xs3, {Move{make_vector({1}), 1, 0}}) == IntMatrix{{1}});
  CHECK_THROWS_AS(net_lambda_effect(s1xs3, {Move{make_vector({1, 0}), 1, 0}}), Error);
}

TEST_CASE("property: decompose round trip") {
  gen::Rng rng(73);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen::size(rng, 0, 4);
    ManifoldData d;
    d.b1 = d.b3 = n;
    d.P = gen::unimodular(rng, n);
    const IntMatrix m = gen::symmetric(rng, n, 5);
    const auto moves = decompose_symmetric_form(d, m);
    CHECK(net_lambda_effect(d, moves) == m);
    for (const auto& mv : moves) CHECK(mv.l != 0);
  }
}

TEST_CASE("tau normal form") {
  CHECK(tau_normal_form(3, 7) == std::pair<Int, Int>(3, 1));
  CHECK(tau_normal_form(0, -4) == std::pair<Int, Int>(0, -4));
  CHECK(tau_normal_form(-2, 5) == std::pair<Int, Int>(-2, 1));
  CHECK(tau_normal_form(2, -1) == std::pair<Int, Int>(2, 3));
}

TEST_CASE("tau equal") {
  CHECK(tau_equal(2, 1, 2, 5));
  CHECK(!tau_equal(2, 1, 2, 2));
  CHECK(tau_equal(0, 3, 0, 3));
  CHECK(!tau_equal(0, 3, 0, 4));
  CHECK(!tau_equal(1, 0, -1, 0));
}

TEST_CASE("tau compose") {
  CHECK(tau_compose(1, 0, 0, 1) == std::pair<Int, Int>(1, 1));
  CHECK(tau_compose(3, 7, 0, 0) == tau_normal_form(3, 7));
  CHECK(tau_compose(2, 3, -2, -3) == std::pair<Int, Int>(0, 0));
}

TEST_CASE("property: tau_equal is an equivalence with normal forms as representatives") {
  gen::Rng rng(74);
  for (int t = 0; t < 300; ++t) {
    const Int l = gen::integer(rng, -6, 6);
    const Int b = gen::integer(rng, -30, 30);
    const Int b2 = gen::integer(rng, -30, 30);
    const Int b3 = gen::integer(rng, -30, 30);
    const auto nf = tau_normal_form(l, b);
    CHECK(tau_normal_form(nf.first, nf.second) == nf);
    CHECK(tau_equal(l, b, nf.first, nf.second));
    CHECK(tau_equal(l, b, l, b));
    CHECK(tau_equal(l, b, l, b2) == tau_equal(l, b2, l, b));
    if (tau_equal(l, b, l, b2) && tau_equal(l, b2, l, b3)) CHECK(tau_equal(l, b, l, b3));
    CHECK(tau_equal(l, b, l, b2) == (tau_normal_form(l, b) == tau_normal_form(l, b2)));
  }
}

} // TEST_SUITE
