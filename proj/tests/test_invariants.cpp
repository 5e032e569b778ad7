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

#include <algorithm>

#include <doctest.h>

#include "emb7/error.hpp"
#include "emb7/invariants.hpp"
#include "generators.hpp"

using namespace emb7;

namespace {

ManifoldData with_p(const IntMatrix& p) {
  ManifoldData d;
  d.b1 = d.b3 = p.rows();
  d.P = p;
  return d;
}

} // namespace

TEST_SUITE("invariants") {

TEST_CASE("divisibility") {
  CHECK(divisibility(make_vector({0, 0})) == 0);
  CHECK(divisibility(make_vector({4, 6})) == 2);
  CHECK(divisibility(make_vector({3})) == 3);
  CHECK(divisibility(make_vector({-4, 0})) == 4);
  CHECK(divisibility({}) == 0);
}

TEST_CASE("kappa admissibility") {
  CHECK(is_kappa_admissible(builtin("s1xs3"), {}));
  const auto cp2 = builtin("cp2");
  CHECK(is_kappa_admissible(cp2, make_vector({1})));
  CHECK(is_kappa_admissible(cp2, make_vector({-1})));
  CHECK(!is_kappa_admissible(cp2, make_vector({3})));
  const auto s2xs2 = builtin("s2xs2");
  CHECK(is_kappa_admissible(s2xs2, make_vector({2, 0})));
  CHECK(!is_kappa_admissible(s2xs2, make_vector({1, 1})));
  CHECK_THROWS_AS(is_kappa_admissible(cp2, make_vector({1, 0})), Error);
}

TEST_CASE("kappa enumeration") {
  CHECK(enumerate_kappa(builtin("cp2"), 3) ==
        std::vector<KappaValue>{make_vector({-1}), make_vector({1})});
  CHECK(enumerate_kappa(builtin("s2xs2"), 2) ==
        std::vector<KappaValue>{make_vector({-2, 0}), make_vector({0, -2}), make_vector({0, 0}),
                                make_vector({0, 2}), make_vector({2, 0})});
  CHECK(enumerate_kappa(builtin("s1xs3"), 4) == std::vector<KappaValue>{KappaValue{}});
  CHECK_THROWS_AS(enumerate_kappa(builtin("s2xs2"), 10, 100), Error);
  CHECK_NOTHROW(enumerate_kappa(builtin("s2xs2"), 10, 441));
  CHECK_THROWS_AS(enumerate_kappa(builtin("cp2"), 0), Error);
}

TEST_CASE("symmetric pairs") {
  const auto t = builtin("t2xs2");
  const auto torus = make_vector({1, 0});
  CHECK(is_symmetric_pair(t, torus, IntMatrix{{0, 0}, {1, 0}}));
  CHECK(!is_symmetric_pair(t, torus, IntMatrix(2, 2)));
  CHECK(is_symmetric_pair(t, make_vector({0, 0}), IntMatrix{{1, 2}, {2, 5}}));
  CHECK(is_symmetric_pair(builtin("s1xs3"), {}, IntMatrix{{7}}));
  CHECK_THROWS_AS(is_symmetric_pair(t, torus, IntMatrix{{0}}), Error);
}

TEST_CASE("base lambda") {
  CHECK(base_lambda(builtin("s2xs2"), make_vector({2, 0})).is_zero());
  CHECK(base_lambda(builtin("t2xs2"), make_vector({1, 0})) == IntMatrix{{0, 0}, {1, 0}});
  CHECK(base_lambda(builtin("s1xs3"), {}) == IntMatrix{{0}});
}

TEST_CASE("lambda adjoint") {
  CHECK(lambda_adjoint(builtin("t2xs2"), IntMatrix{{1, 2}, {3, 4}}) == IntMatrix{{1, 2}, {3, 4}});
  CHECK(lambda_adjoint(builtin("s1xs3"), IntMatrix{{5}}) == IntMatrix{{5}});
  CHECK(lambda_adjoint(with_p(IntMatrix{{0, 1}, {1, 0}}), IntMatrix{{1, 2}, {3, 4}}) ==
        IntMatrix{{3, 4}, {1, 2}});
}

TEST_CASE("k group") {
  const auto s1xs3 = builtin("s1xs3");
  SUBCASE("L = 3") {
    const KGroup k = k_group(s1xs3, {}, IntMatrix{{3}});
    CHECK(k.d == 0);
    CHECK(k.group.relations == IntMatrix{{6, 0}});
    CHECK(k.group.invariant_factors == make_vector({6}));
  }
  SUBCASE("L = 0") {
    const KGroup k = k_group(s1xs3, {}, IntMatrix{{0}});
    CHECK(k.group.invariant_factors == make_vector({0}));
  }
  SUBCASE("adjoint diag(1,0), d = 3") {
    // only div u enters the relations, so u need not be admissible here
    ManifoldData d = with_p(IntMatrix::identity(2));
    d.b2 = 2;
    d.Q = IntMatrix{{0, 1}, {1, 0}};
    d.T = {IntMatrix(2, 2), IntMatrix(2, 2)};
    d.w2 = {0, 0};
    const KGroup k = k_group(d, make_vector({3, 0}), IntMatrix{{1, 0}, {0, 0}});
    CHECK(k.d == 3);
    CHECK(k.group.relations == IntMatrix{{2, 0, 3, 0}, {0, 0, 0, 3}});
    CHECK(k.group.nontrivial_factors() == make_vector({3}));
    CHECK(k.group.order() == Int(3));
  }
  SUBCASE("non-symmetric pair") {
    CHECK_THROWS_AS(k_group(builtin("t2xs2"), make_vector({1, 0}), IntMatrix(2, 2)), Error);
  }
}

TEST_CASE("whitney W") {
  CHECK(whitney_w(builtin("t2xs2"), IntMatrix{{2, 7}, {1, 4}}) == std::vector<int>{0, 0});
  CHECK(whitney_w(builtin("s1xs3"), IntMatrix{{3}}) == std::vector<int>{1});
  CHECK(whitney_w(builtin("t2xs2"), IntMatrix{{2, 0}, {0, 5}}) == std::vector<int>{0, 1});
  CHECK(whitney_w(builtin("s4"), IntMatrix(0, 0)).empty());
}

TEST_CASE("regular homotopy") {
  CHECK(regular_homotopy_equivalent(IntMatrix{{1, 2}, {3, 4}}, IntMatrix{{1, 2}, {3, 4}}));
  CHECK(regular_homotopy_equivalent(IntMatrix{{1}}, IntMatrix{{3}}));
  CHECK(!regular_homotopy_equivalent(IntMatrix{{0}}, IntMatrix{{1}}));
  CHECK(!regular_homotopy_equivalent(IntMatrix{{0, 1}, {0, 0}}, IntMatrix(2, 2)));
  CHECK(regular_homotopy_equivalent(IntMatrix{{0, 1}, {1, 0}}, IntMatrix(2, 2)));
  CHECK_THROWS_AS(regular_homotopy_equivalent(IntMatrix{{0}}, IntMatrix(2, 2)), Error);
}

TEST_CASE("compression necessary condition") {
  CHECK(compression_obstruction(make_vector({0}), IntMatrix{{0}}));
  CHECK(!compression_obstruction(make_vector({0}), IntMatrix{{1}}));
  CHECK(!compression_obstruction(make_vector({1}), IntMatrix(0, 0)));
  CHECK(compression_obstruction({}, IntMatrix(0, 0)));
}

TEST_CASE("property: symmetric pairs are base_lambda plus symmetric forms") {
  gen::Rng rng(61);
  const auto t = builtin("t2xs2");
  for (int trial = 0; trial < 100; ++trial) {
    const KappaValue u = make_vector({2 * gen::integer(rng, -3, 3), 2 * gen::integer(rng, -3, 3)});
    const IntMatrix base = base_lambda(t, u);
    CHECK(is_symmetric_pair(t, u, base + gen::symmetric(rng, 2, 9)));
    IntMatrix broken = base + gen::symmetric(rng, 2, 9);
    broken(0, 1) += gen::integer(rng, 1, 4);
    CHECK(!is_symmetric_pair(t, u, broken));
    // every symmetric-pair form differs from base by a symmetric matrix
    IntMatrix l = gen::matrix(rng, 2, 2, 6);
    if (is_symmetric_pair(t, u, l)) CHECK((l - base).is_symmetric());
  }
}

TEST_CASE("property: lambda adjoint reproduces L") {
  gen::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen::size(rng, 0, 4);
    const ManifoldData d = with_p(gen::unimodular(rng, n));
    const IntMatrix l = gen::matrix(rng, n, n, 9);
    CHECK(d.P * lambda_adjoint(d, l) == l);
  }
}

TEST_CASE("property: k group invariant under basis change") {
  gen::Rng rng(63);
  for (int t = 0; t < 60; ++t) {
    const ManifoldData d = gen::manifold(rng);
    const auto us = enumerate_kappa(d, 2);
    if (us.empty()) continue;
    const KappaValue u = us[gen::size(rng, 0, us.size() - 1)];
    const IntMatrix l = base_lambda(d, u) + gen::symmetric(rng, d.b3, 5);
    const IntMatrix h2 = gen::unimodular(rng, d.b2);
    const IntMatrix h3 = gen::unimodular(rng, d.b3);
    const IntMatrix h1 = gen::unimodular(rng, d.b1);
    const ManifoldData e = change_basis(d, h2, h3, h1);
    const KappaValue u2 = unimodular_inverse(h2) * u;
    const IntMatrix l2 = h3.transpose() * l * h3;
    REQUIRE(is_symmetric_pair(e, u2, l2));
    CHECK(is_kappa_admissible(e, u2));
    CHECK(k_group(d, u, l).group.invariant_factors == k_group(e, u2, l2).group.invariant_factors);
  }
}

TEST_CASE("property: whitney W depends only on diagonal parity") {
  gen::Rng rng(64);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = gen::size(rng, 1, 4);
    const ManifoldData d = with_p(gen::unimodular(rng, n));
    const IntMatrix l = gen::matrix(rng, n, n, 9);
    const IntMatrix m = gen::matrix(rng, n, n, 9);
    const IntMatrix a = gen::antisymmetric(rng, n, 9);
    const auto w = whitney_w(d, l);
    CHECK(w == whitney_w(d, l + Int(2) * m + a));
    // defining identity on basis vectors: L(x_j, x_j) = (P W)_j mod 2
    IntVector wv(n);
    for (std::size_t i = 0; i < n; ++i) wv[i] = w[i];
    const IntVector pw = d.P * wv;
    for (std::size_t j = 0; j < n; ++j) CHECK(floor_mod(l(j, j) - pw[j], Int(2)) == 0);
  }
}

TEST_CASE("property: admissibility is sign symmetric") {
  gen::Rng rng(65);
  for (int t = 0; t < 40; ++t) {
    const ManifoldData d = gen::manifold(rng);
    for (const auto& u : enumerate_kappa(d, 2)) {
      KappaValue neg = u;
      for (auto& x : neg) x = -x;
      CHECK(is_kappa_admissible(d, neg));
    }
  }
}

} // TEST_SUITE
