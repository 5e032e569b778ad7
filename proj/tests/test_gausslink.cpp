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
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "emb7/error.hpp"
#include "emb7/gausslink.hpp"
#include "generators.hpp"

using namespace emb7::gauss;

namespace {

constexpr double kPi = std::numbers::pi;

ParamCycle round_sphere(const Vec7& center, double radius) {
  return ParamCycle([=](const Quaternion& q) {
    Vec7 p = center;
    p[0] += radius * q.w;
    p[1] += radius * q.x;
    p[2] += radius * q.y;
    p[3] += radius * q.z;
    return p;
  });
}

// Unit sphere in span(e0, e4, e5, e6) centred at e0; links round_sphere(0, 1).
ParamCycle hopf_partner() {
  return ParamCycle([](const Quaternion& q) { return Vec7{1 + q.w, 0, 0, 0, q.x, q.y, q.z}; });
}

double det7(std::array<std::array<double, 7>, 7> a) {
  double d = 1;
  for (int c = 0; c < 7; ++c) {
    int p = c;
    for (int r = c + 1; r < 7; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < 7; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 7; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// Independent degree integral: midpoint rule in Hopf coordinates and a
// direct 7x7 determinant per node pair.
double oracle_degree(const ParamCycle& x, const ParamCycle& y, int n) {
  struct Node {
    Vec7 p;
    Tangent3 t;
    double w;
  };
  auto sample = [&](const ParamCycle& c) {
    std::vector<Node> v;
    const double h_eta = kPi / 2 / n, h_xi = kPi / n;
    for (int a = 0; a < n; ++a) {
      const double eta = (a + 0.5) * h_eta;
      for (int b = 0; b < 2 * n; ++b)
        for (int e = 0; e < 2 * n; ++e) {
          const Quaternion q = hopf_point(eta, b * h_xi, e * h_xi);
          v.push_back({c(q), c.tangent(q),
                       std::sin(eta) * std::cos(eta) * h_eta * h_xi * h_xi * c.orientation()});
        }
    }
    return v;
  };
  const auto xs = sample(x), ys = sample(y);
  double sum = 0;
  for (const auto& a : xs)
    for (const auto& b : ys) {
      std::array<std::array<double, 7>, 7> m{};
      double r2 = 0;
      for (int i = 0; i < 7; ++i) {
        const double d = a.p[i] - b.p[i];
        r2 += d * d;
        m[i][0] = d;
        for (int k = 0; k < 3; ++k) {
          m[i][1 + k] = a.t[k][i];
          m[i][4 + k] = -b.t[k][i];
        }
      }
      sum += det7(m) / std::pow(r2, 3.5) * a.w * b.w;
    }
  return sum / (16 * std::pow(kPi, 3) / 15);
}

std::array<Vec7, 7> random_rotation(gen::Rng& rng) {
  std::normal_distribution<double> g;
  std::array<Vec7, 7> r{};
  for (int i = 0; i < 7; ++i) {
    for (auto& v : r[i]) v = g(rng);
    for (int j = 0; j < i; ++j) {
      double dot = 0;
      for (int k = 0; k < 7; ++k) dot += r[i][k] * r[j][k];
      for (int k = 0; k < 7; ++k) r[i][k] -= dot * r[j][k];
    }
    double n = 0;
    for (double v : r[i]) n += v * v;
    for (auto& v : r[i]) v /= std::sqrt(n);
  }
  return r;
}

double norm8(const Vec8& p) {
  double s = 0;
  for (double v : p) s += v * v;
  return std::sqrt(s);
}

} // namespace

TEST_SUITE("gausslink") {

TEST_CASE("quaternion algebra") {
  const Quaternion i = Quaternion::unit_i(), j = Quaternion::unit_j(), k = Quaternion::unit_k();
  const Quaternion ij = i * j;
  CHECK(ij.w == 0);
  CHECK(ij.z == 1);
  const Quaternion q = hopf_point(0.3, 1.1, -2.0);
  CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-14));
  const Quaternion qq = q * q.conj();
  CHECK(qq.w == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((k * k).w == -1);
}

TEST_CASE("split spheres do not link") {
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const auto y = round_sphere({5, 0, 0, 0, 0, 0, 0}, 1);
  const LinkResult r = linking_number(x, y, LinkOptions{6});
  CHECK(r.value == 0);
  CHECK(std::fabs(r.estimate) < 1e-12);
  CHECK(r.certified_separation > 0);
}

TEST_CASE("hopf-type pair links once") {
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const LinkResult r = linking_number(x, hopf_partner(), LinkOptions{8});
  CHECK(std::abs(r.value) == 1);
  CHECK(r.residual < 1e-3);
}

TEST_CASE("linking is symmetric for 3-cycles in R^7") {
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const auto y = hopf_partner();
  const LinkResult a = linking_integral(x, y, 6);
  const LinkResult b = linking_integral(y, x, 6);
  CHECK(std::fabs(a.estimate - b.estimate) <= 2 * std::max(a.residual, b.residual));
  const TauEmbedding t(-1, 0);
  const LinkResult c = linking_integral(t.fiber(0), t.fiber(kPi), 6);
  const LinkResult d = linking_integral(t.fiber(kPi), t.fiber(0), 6);
  CHECK(std::fabs(c.estimate - d.estimate) <= 2 * std::max(c.residual, d.residual));
}

TEST_CASE("orientation reversal negates") {
  const TauEmbedding t(1, 0);
  const LinkResult a = linking_integral(t.fiber(0), t.fiber(kPi), 6);
  const LinkResult b = linking_integral(t.fiber(0).reversed(), t.fiber(kPi), 6);
  const LinkResult c = linking_integral(t.fiber(0), t.fiber(kPi).reversed(), 6);
  CHECK(b.estimate == doctest::Approx(-a.estimate).epsilon(1e-12));
  CHECK(c.estimate == doctest::Approx(-a.estimate).epsilon(1e-12));
  CHECK(t.fiber(0).reversed().reversed().orientation() == 1);
}

TEST_CASE("rigid motions preserve the estimate") {
  gen::Rng rng(91);
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const auto y = hopf_partner();
  const double base = linking_integral(x, y, 6).estimate;
  for (int t = 0; t < 3; ++t) {
    const auto rot = random_rotation(rng);
    Vec7 shift;
    for (auto& v : shift) v = std::uniform_real_distribution<double>(-3, 3)(rng);
    // a proper rotation keeps the sign; make det = +1 by flipping a row if needed
    std::array<std::array<double, 7>, 7> m{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) m[i][j] = rot[i][j];
    auto r = rot;
    const double det = det7(m);
    if (det < 0)
      for (auto& v : r[0]) v = -v;
    const double moved =
        linking_integral(x.transformed(r, shift), y.transformed(r, shift), 6).estimate;
    CHECK(moved == doctest::Approx(base).epsilon(1e-9));
    if (det < 0) {
      const double mirrored =
          linking_integral(x.transformed(rot, shift), y.transformed(rot, shift), 6).estimate;
      CHECK(mirrored == doctest::Approx(-base).epsilon(1e-9));
    }
  }
}

TEST_CASE("independent determinant oracle agrees up to one global sign") {
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const auto y = hopf_partner();
  const TauEmbedding p(1, 0), m(-1, 0);
  const std::vector<std::pair<ParamCycle, ParamCycle>> cases{
      {x, y}, {p.fiber(0), p.fiber(kPi)}, {m.fiber(0), m.fiber(kPi)}};
  double sign = 0;
  for (const auto& [a, b] : cases) {
    const double lib = linking_integral(a, b, 6).estimate;
    const double oracle = oracle_degree(a, b, 6);
    CHECK(std::fabs(std::fabs(lib) - std::fabs(oracle)) < 0.05);
    const double s = lib * oracle > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    CHECK(s == sign);
  }
}

TEST_CASE("richardson: doubling the resolution shrinks the residual") {
  for (long l : {-1L, 1L}) {
    const TauEmbedding t(l, 0);
    for (int n : {3, 4}) {
      const double coarse = linking_integral(t.fiber(0), t.fiber(kPi), n).residual;
      const double fine = linking_integral(t.fiber(0), t.fiber(kPi), 2 * n).residual;
      CAPTURE(l);
      CAPTURE(n);
      CHECK(fine < coarse);
    }
  }
}

TEST_CASE("tau lies on the unit sphere and is injective on a sample grid") {
  for (auto [l, b] : {std::pair{0L, 0L}, std::pair{1L, 0L}, std::pair{-2L, 1L}, std::pair{2L, -1L}}) {
    const TauEmbedding t(l, b);
    std::vector<Vec8> pts;
    for (int a = 0; a < 6; ++a)
      for (int e = 0; e < 3; ++e)
        for (int x1 = 0; x1 < 4; ++x1)
          for (int x2 = 0; x2 < 4; ++x2) {
            const Quaternion q = hopf_point((e + 0.5) * kPi / 6, x1 * kPi / 2, x2 * kPi / 2);
            const Vec8 p = t(a * kPi / 3, q);
            CHECK(norm8(p) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(p[7] < 0.75);
            pts.push_back(p);
          }
    double min_dist = 1e9;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        double s = 0;
        for (int k = 0; k < 8; ++k) s += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
        min_dist = std::min(min_dist, std::sqrt(s));
      }
    CHECK(min_dist > 1e-3);
  }
}

TEST_CASE("tau(0,0) has a constant frame") {
  const TauEmbedding t(0, 0);
  const Quaternion q = hopf_point(0.4, 0.2, 1.3);
  const Vec8 p = t(0.7, q);
  const double c = std::cos(0.7) / std::sqrt(2.0), s = std::sin(0.7) / std::sqrt(2.0);
  CHECK(p[4] == doctest::Approx(c));
  CHECK(p[5] == doctest::Approx(s));
  CHECK(p[6] == doctest::Approx(0).epsilon(1e-15));
  CHECK(p[7] == doctest::Approx(0).epsilon(1e-15));
}

TEST_CASE("finite differences match the analytic jacobian") {
  gen::Rng rng(92);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (auto [l, b] : {std::pair{1L, 0L}, std::pair{-2L, 1L}, std::pair{2L, 3L}}) {
    const TauEmbedding t(l, b);
    for (double theta : {0.0, kPi, 1.0}) {
      const ParamCycle analytic = t.fiber(theta);
      const ParamCycle numeric([&analytic](const Quaternion& q) { return analytic(q); });
      for (int k = 0; k < 10; ++k) {
        const Quaternion q = hopf_point(u(rng) / 4, u(rng), u(rng));
        const Tangent3 a = analytic.tangent(q), n = numeric.tangent(q);
        for (int d = 0; d < 3; ++d)
          for (int i = 0; i < 7; ++i) CHECK(std::fabs(a[d][i] - n[d][i]) < 1e-6);
      }
    }
  }
}

TEST_CASE("alternative models agree with tau") {
  const LinkResult t1 = linking_number(t1_fiber(0), t1_fiber(kPi), LinkOptions{8});
  CHECK(t1.value == 1);
  const TauEmbedding tau10(1, 0);
  CHECK(t1.estimate == doctest::Approx(
                           linking_integral(tau10.fiber(0), tau10.fiber(kPi), 8).estimate)
                           .epsilon(1e-6));
  const LinkResult t2 = linking_integral(t2_fiber(0), t2_fiber(kPi), 8);
  CHECK(t2.value == 0);
  CHECK(std::fabs(t2.estimate) < 1e-9);
  for (double theta : {0.3, 2.0}) {
    const Quaternion q = hopf_point(0.5, 0.1, 0.9);
    CHECK(norm8(t1_model(theta, q)) == doctest::Approx(1.0));
    CHECK(norm8(t2_model(theta, q)) == doctest::Approx(1.0));
  }
}

TEST_CASE("verify_lambda_tau at low resolution") {
  const LinkOptions opt{8};
  for (long b : {-1L, 0L, 1L}) {
    const TauReport r = verify_lambda_tau(1, b, opt);
    CHECK(r.pass);
    CHECK(r.link.value == 1);
  }
  const TauReport zero = verify_lambda_tau(0, 0, LinkOptions{6});
  CHECK(zero.pass);
  CHECK(zero.link.value == 0);
  const TauReport neg = verify_lambda_tau(-1, 0, opt);
  CHECK(neg.link.value == -1);
  CHECK(verify_lambda_tau(1, 5, opt).link.estimate == verify_lambda_tau(1, 0, opt).link.estimate);
  CHECK(max_supported_l(12) == 2);
  CHECK_THROWS_AS(verify_lambda_tau(2, 0, opt), emb7::Error);
}

TEST_CASE("linking_number refuses bad input") {
  const auto x = round_sphere({0, 0, 0, 0, 0, 0, 0}, 1);
  const auto near = round_sphere({0, 0, 0, 0, 1e-4, 0, 0}, 1);
  try {
    linking_number(x, near, LinkOptions{4});
    FAIL("expected a separation error");
  } catch (const emb7::Error& e) {
    CHECK(e.kind() == emb7::ErrorKind::SeparationTooSmall);
  }
  LinkOptions strict{4};
  strict.min_separation = -1e9;
  strict.max_residual = 1e-12;
  try {
    linking_number(x, hopf_partner(), strict);
    FAIL("expected a convergence error");
  } catch (const emb7::Error& e) {
    CHECK(e.kind() == emb7::ErrorKind::Unconverged);
  }
}

TEST_CASE("linking integral is deterministic") {
  const TauEmbedding t(1, 1);
  const LinkResult a = linking_integral(t.fiber(0), t.fiber(kPi), 6);
  const LinkResult b = linking_integral(t.fiber(0), t.fiber(kPi), 6);
  CHECK(a.estimate == b.estimate);
  CHECK(a.certified_separation == b.certified_separation);
}

} // TEST_SUITE
