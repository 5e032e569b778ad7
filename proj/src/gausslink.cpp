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
#include "emb7/gausslink.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "emb7/error.hpp"

namespace emb7::gauss {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752440;
// Orientation convention: flips the raw degree so that the fibers of
// tau(1, 0) over (1, 0) and (-1, 0) link +1. Calibrated once, then frozen.
constexpr double kOrientationSign = -1.0;

Quaternion tangent_direction(const Quaternion& x, int a) {
  switch (a) {
  case 0: return x * Quaternion::unit_i();
  case 1: return x * Quaternion::unit_j();
  default: return x * Quaternion::unit_k();
  }
}

// Value and derivative along v of x -> x^n (n < 0 means conj(x)^|n|,
// which equals x^n on the unit sphere).
std::pair<Quaternion, Quaternion> power_with_derivative(const Quaternion& x, const Quaternion& v,
                                                         long n) {
  Quaternion base = x;
  Quaternion dir = v;
  if (n < 0) {
    base = x.conj();
    dir = v.conj();
    n = -n;
  }
  Quaternion value{1, 0, 0, 0};
  Quaternion deriv{0, 0, 0, 0};
  for (long k = 0; k < n; ++k) {
    // (value * base)' = value' * base + value * dir
    deriv = deriv * base + value * dir;
    value = value * base;
  }
  return {value, deriv};
}

Quaternion power(const Quaternion& x, long n) {
  return power_with_derivative(x, Quaternion{}, n).first;
}

Vec8 join(const Quaternion& a, const Quaternion& b) {
  return {a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z};
}

// Derivative of the stereographic projection at p applied to v.
Vec7 stereographic_push(const Vec8& p, const Vec8& v) {
  const double s = 1.0 / (1.0 - p[7]);
  Vec7 out{};
  for (int i = 0; i < 7; ++i) out[i] = v[i] * s + p[i] * v[7] * s * s;
  return out;
}

// Builds a cycle in R^7 from a map S^3 -> S^7 given with its derivative.
ParamCycle project_cycle(std::function<Vec8(const Quaternion&)> map,
                         std::function<Vec8(const Quaternion&, const Quaternion&)> derivative) {
  auto value = [map](const Quaternion& x) { return stereographic(map(x)); };
  auto jac = [map, derivative](const Quaternion& x) {
    const Vec8 p = map(x);
    Tangent3 t{};
    for (int a = 0; a < 3; ++a) t[a] = stereographic_push(p, derivative(x, tangent_direction(x, a)));
    return t;
  };
  return ParamCycle(value, jac);
}

Vec7 sub(const Vec7& a, const Vec7& b) {
  Vec7 r{};
  for (int i = 0; i < 7; ++i) r[i] = a[i] - b[i];
  return r;
}

} // namespace

double Quaternion::norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

ParamCycle::ParamCycle(Map map, int orientation)
    : map_(std::move(map)), orientation_(orientation) {}

ParamCycle::ParamCycle(Map map, Jacobian jacobian, int orientation)
    : map_(std::move(map)), jacobian_(std::move(jacobian)), orientation_(orientation) {}

Tangent3 ParamCycle::tangent(const Quaternion& x) const {
  if (jacobian_) return jacobian_(x);
  const double h = kFiniteDifferenceStep;
  Tangent3 t{};
  for (int a = 0; a < 3; ++a) {
    // great circle through x with unit velocity x e_a
    const Quaternion v = tangent_direction(x, a);
    const Vec7 plus = map_(std::cos(h) * x + std::sin(h) * v);
    const Vec7 minus = map_(std::cos(h) * x - std::sin(h) * v);
    for (int i = 0; i < 7; ++i) t[a][i] = (plus[i] - minus[i]) / (2 * h);
  }
  return t;
}

ParamCycle ParamCycle::reversed() const {
  ParamCycle c = *this;
  c.orientation_ = -orientation_;
  return c;
}

ParamCycle ParamCycle::transformed(const std::array<Vec7, 7>& rotation, const Vec7& translation) const {
  auto apply = [rotation](const Vec7& v) {
    Vec7 r{};
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < 7; ++j) r[i] += rotation[i][j] * v[j];
    return r;
  };
  const ParamCycle base = *this;
  auto value = [base, apply, translation](const Quaternion& x) {
    Vec7 r = apply(base(x));
    for (int i = 0; i < 7; ++i) r[i] += translation[i];
    return r;
  };
  auto jac = [base, apply](const Quaternion& x) {
    Tangent3 t = base.tangent(x);
    for (auto& col : t) col = apply(col);
    return t;
  };
  return ParamCycle(value, jac, orientation_);
}

Vec7 stereographic(const Vec8& p) {
  const double s = 1.0 / (1.0 - p[7]);
  Vec7 out{};
  for (int i = 0; i < 7; ++i) out[i] = p[i] * s;
  return out;
}

Quaternion hopf_point(double eta, double xi1, double xi2) {
  const double c = std::cos(eta);
  const double s = std::sin(eta);
  return {c * std::cos(xi1), c * std::sin(xi1), s * std::cos(xi2), s * std::sin(xi2)};
}

TauEmbedding::TauEmbedding(long l, long b) : l_(l), b_(b) {}

Vec8 TauEmbedding::operator()(double theta, const Quaternion& x) const {
  const Quaternion first = power(x, l_);
  const Quaternion xb = power(x, b_);
  const Quaternion second = first * (xb * Quaternion::unit_i() * xb.conj());
  const Quaternion abar = std::cos(theta) * first + std::sin(theta) * second;
  return join(kInvSqrt2 * x, kInvSqrt2 * abar);
}

ParamCycle TauEmbedding::fiber(double theta) const {
  const long l = l_;
  const long b = b_;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const TauEmbedding self = *this;
  auto map = [self, theta](const Quaternion& x) { return self(theta, x); };
  auto derivative = [l, b, c, s](const Quaternion& x, const Quaternion& v) {
    const auto [xl, dxl] = power_with_derivative(x, v, l);
    const auto [xb, dxb] = power_with_derivative(x, v, b);
    const Quaternion i = Quaternion::unit_i();
    const Quaternion q = xb * i * xb.conj();
    const Quaternion dq = dxb * i * xb.conj() + xb * i * dxb.conj();
    const Quaternion dabar = c * dxl + s * (dxl * q + xl * dq);
    return join(kInvSqrt2 * v, kInvSqrt2 * dabar);
  };
  return project_cycle(map, derivative);
}

Vec8 t1_model(double theta, const Quaternion& y) {
  const Quaternion s{std::cos(theta), std::sin(theta), 0, 0};
  return join(kInvSqrt2 * (s * y), kInvSqrt2 * y);
}

Vec8 t2_model(double theta, const Quaternion& y) {
  const Quaternion eta = y * Quaternion::unit_i() * y.conj();
  const Quaternion t = std::cos(theta) * eta + Quaternion{std::sin(theta), 0, 0, 0};
  return join(kInvSqrt2 * t, kInvSqrt2 * y);
}

ParamCycle t1_fiber(double theta) {
  const Quaternion s{std::cos(theta), std::sin(theta), 0, 0};
  return project_cycle([theta](const Quaternion& y) { return t1_model(theta, y); },
                       [s](const Quaternion&, const Quaternion& v) {
                         return join(kInvSqrt2 * (s * v), kInvSqrt2 * v);
                       });
}

ParamCycle t2_fiber(double theta) {
  const double c = std::cos(theta);
  return project_cycle([theta](const Quaternion& y) { return t2_model(theta, y); },
                       [c](const Quaternion& y, const Quaternion& v) {
                         const Quaternion i = Quaternion::unit_i();
                         const Quaternion deta = v * i * y.conj() + y * i * v.conj();
                         return join(kInvSqrt2 * (c * deta), kInvSqrt2 * v);
                       });
}

namespace {

struct Rule {
  std::vector<Quaternion> points;
  std::vector<double> weights;
  double covering_radius = 0;
};

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1, p1 = 0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[i] = z;
    weights[i] = 2.0 / ((1 - z * z) * dp * dp);
  }
}

Rule sphere_rule(int n) {
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(n, gl_nodes, gl_weights);
  const int m = 2 * n;
  const double dxi = 2 * kPi / m;

  std::vector<double> etas(n), eta_w(n);
  for (int i = 0; i < n; ++i) {
    etas[i] = 0.25 * kPi * (gl_nodes[i] + 1);
    // volume element sin(eta) cos(eta) d eta d xi1 d xi2
    eta_w[i] = 0.25 * kPi * gl_weights[i] * std::sin(etas[i]) * std::cos(etas[i]);
  }
  std::vector<double> sorted = etas;
  std::sort(sorted.begin(), sorted.end());
  double gap = 2 * std::max(sorted.front(), 0.5 * kPi - sorted.back());
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, sorted[i] - sorted[i - 1]);

  Rule r;
  r.covering_radius = 0.5 * std::sqrt(gap * gap + dxi * dxi);
  r.points.reserve(static_cast<std::size_t>(n) * m * m);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        r.points.push_back(hopf_point(etas[i], a * dxi, b * dxi));
        r.weights.push_back(eta_w[i] * dxi * dxi);
      }
  return r;
}

constexpr int kTriples = 35;

struct CofactorTerm {
  int a;
  int b;
  double sign;
};

// det[d, X1, X2, X3, Y1, Y2, Y3] = sum_k d_k sum_terms sign A[a] B[b], where
// A, B are the 3x3 minors of [X1 X2 X3] and [Y1 Y2 Y3] indexed by row triple.
struct CofactorTable {
  std::array<std::array<int, 3>, kTriples> triples{};
  std::array<std::array<CofactorTerm, 20>, 7> terms{};

  CofactorTable() {
    std::array<std::array<std::array<int, 7>, 7>, 7> index{};
    int t = 0;
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j)
        for (int k = j + 1; k < 7; ++k) {
          triples[t] = {i, j, k};
          index[i][j][k] = t++;
        }
    for (int k = 0; k < 7; ++k) {
      std::array<int, 6> rest{};
      int r = 0;
      for (int i = 0; i < 7; ++i)
        if (i != k) rest[r++] = i;
      int e = 0;
      for (int p = 0; p < 6; ++p)
        for (int q = p + 1; q < 6; ++q)
          for (int s = q + 1; s < 6; ++s) {
            std::array<int, 3> comp{};
            int c = 0;
            for (int x = 0; x < 6; ++x)
              if (x != p && x != q && x != s) comp[c++] = rest[x];
            // Laplace expansion along the first three columns of the 6x6
            // block, then along column 0 of the 7x7 matrix.
            const int parity = (p + q + s + 1) + k;
            terms[k][e++] = CofactorTerm{index[rest[p]][rest[q]][rest[s]],
                                         index[comp[0]][comp[1]][comp[2]],
                                         parity % 2 == 0 ? 1.0 : -1.0};
          }
    }
  }
};

const CofactorTable& cofactor_table() {
  static const CofactorTable table;
  return table;
}

struct Samples {
  std::vector<Vec7> position;
  std::vector<std::array<double, kTriples>> minors; // weighted and oriented
  std::vector<double> slope;                        // Frobenius norm of the Jacobian
};

Samples sample_cycle(const ParamCycle& c, const Rule& rule) {
  const auto& table = cofactor_table();
  Samples s;
  const std::size_t n = rule.points.size();
  s.position.resize(n);
  s.minors.resize(n);
  s.slope.resize(n);
  for (std::size_t p = 0; p < n; ++p) {
    const Quaternion& x = rule.points[p];
    s.position[p] = c(x);
    const Tangent3 t = c.tangent(x);
    double fro = 0;
    for (const auto& col : t)
      for (double v : col) fro += v * v;
    s.slope[p] = std::sqrt(fro);
    const double w = rule.weights[p] * c.orientation();
    for (int m = 0; m < kTriples; ++m) {
      const auto [i, j, k] = table.triples[m];
      const double det = t[0][i] * (t[1][j] * t[2][k] - t[1][k] * t[2][j]) -
                         t[0][j] * (t[1][i] * t[2][k] - t[1][k] * t[2][i]) +
                         t[0][k] * (t[1][i] * t[2][j] - t[1][j] * t[2][i]);
      s.minors[p][m] = w * det;
    }
  }
  return s;
}

struct PartialSum {
  double integral = 0;
  double min_distance = std::numeric_limits<double>::infinity();
  double min_certified = std::numeric_limits<double>::infinity();
};

PartialSum integrate_block(const Samples& x, const Samples& y, std::size_t begin, std::size_t end,
                           double radius) {
  const auto& table = cofactor_table();
  PartialSum out;
  for (std::size_t p = begin; p < end; ++p) {
    const Vec7& px = x.position[p];
    const auto& ax = x.minors[p];
    double row = 0;
    for (std::size_t q = 0; q < y.position.size(); ++q) {
      const Vec7 d = sub(px, y.position[q]);
      double r2 = 0;
      for (double v : d) r2 += v * v;
      const double r = std::sqrt(r2);
      out.min_distance = std::min(out.min_distance, r);
      out.min_certified = std::min(out.min_certified, r - (x.slope[p] + y.slope[q]) * radius);
      const auto& by = y.minors[q];
      double det = 0;
      for (int k = 0; k < 7; ++k) {
        double cof = 0;
        for (const auto& term : table.terms[k]) cof += term.sign * ax[term.a] * by[term.b];
        det += d[k] * cof;
      }
      row += det / (r2 * r2 * r2 * r);
    }
    out.integral += row;
  }
  return out;
}

} // namespace

LinkResult linking_integral(const ParamCycle& a, const ParamCycle& b, int resolution) {
  if (resolution < 2) fail(ErrorKind::InvalidArgument, "resolution must be at least 2");
  const Rule rule = sphere_rule(resolution);
  const Samples sa = sample_cycle(a, rule);
  const Samples sb = sample_cycle(b, rule);

  // Fixed block partition; partial sums are combined in block order so the
  // result does not depend on the thread count.
  constexpr std::size_t kBlocks = 32;
  const std::size_t n = sa.position.size();
  std::vector<PartialSum> parts(kBlocks);
  auto run = [&](std::size_t blk) {
    const std::size_t lo = n * blk / kBlocks;
    const std::size_t hi = n * (blk + 1) / kBlocks;
    parts[blk] = integrate_block(sa, sb, lo, hi, rule.covering_radius);
  };
  const std::size_t workers =
      std::min<std::size_t>(kBlocks, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t blk = 0; blk < kBlocks; ++blk) run(blk);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t blk = w; blk < kBlocks; blk += workers) run(blk);
      });
    for (auto& t : pool) t.join();
  }

  PartialSum total;
  for (const auto& p : parts) {
    total.integral += p.integral;
    total.min_distance = std::min(total.min_distance, p.min_distance);
    total.min_certified = std::min(total.min_certified, p.min_certified);
  }
  // vol S^6 = 16 pi^3 / 15; the pulled-back volume form of (X - Y)/|X - Y|
  // is -det[d, X', Y'] / |d|^7.
  const double volume_s6 = 16.0 * kPi * kPi * kPi / 15.0;
  LinkResult res;
  res.estimate = kOrientationSign * -total.integral / volume_s6;
  res.value = std::lround(res.estimate);
  res.residual = std::abs(res.estimate - static_cast<double>(res.value));
  res.sampled_distance = total.min_distance;
  res.certified_separation = total.min_certified;
  return res;
}

LinkResult linking_number(const ParamCycle& a, const ParamCycle& b, const LinkOptions& options) {
  LinkResult res = linking_integral(a, b, options.resolution);
  if (!(res.certified_separation > options.min_separation))
    fail(ErrorKind::SeparationTooSmall,
         "cycles are not certified disjoint: sampled distance " +
             std::to_string(res.sampled_distance) + ", certified separation " +
             std::to_string(res.certified_separation) + "; raise the resolution");
  if (!(res.residual <= options.max_residual))
    fail(ErrorKind::Unconverged, "linking integral unconverged: estimate " +
                                     std::to_string(res.estimate) + ", residual " +
                                     std::to_string(res.residual) + "; raise the resolution");
  return res;
}

long max_supported_l(int resolution) { return std::max(0, resolution / 6); }

TauReport verify_lambda_tau(long l, long b, const LinkOptions& options) {
  if (std::abs(l) > max_supported_l(options.resolution))
    fail(ErrorKind::InvalidArgument,
         "|l| = " + std::to_string(std::abs(l)) + " needs resolution of at least " +
             std::to_string(6 * std::abs(l)));
  const TauEmbedding tau(l, b);
  TauReport report;
  report.l = l;
  report.b = b;
  report.link = linking_number(tau.fiber(0.0), tau.fiber(kPi), options);
  report.pass = report.link.value == l && report.link.residual < 0.1;
  return report;
}

} // namespace emb7::gauss
