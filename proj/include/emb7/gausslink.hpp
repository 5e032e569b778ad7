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
#ifndef EMB7_GAUSSLINK_HPP
#define EMB7_GAUSSLINK_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <optional>

namespace emb7::gauss {

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  static Quaternion unit_i() { return {0, 1, 0, 0}; }
  static Quaternion unit_j() { return {0, 0, 1, 0}; }
  static Quaternion unit_k() { return {0, 0, 0, 1}; }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
};

using Vec7 = std::array<double, 7>;
using Vec8 = std::array<double, 8>;
/// Derivatives along the tangent frame (x i, x j, x k) of S^3 at x; this
/// frame is orthonormal and positively oriented for S^3 = boundary of D^4.
using Tangent3 = std::array<Vec7, 3>;

/// A smooth oriented 3-cycle S^3 -> R^7.
class ParamCycle {
public:
  using Map = std::function<Vec7(const Quaternion&)>;
  using Jacobian = std::function<Tangent3(const Quaternion&)>;

  static constexpr double kFiniteDifferenceStep = 1e-5;

  /// Derivatives by central differences along great circles.
  explicit ParamCycle(Map map, int orientation = 1);
  ParamCycle(Map map, Jacobian jacobian, int orientation = 1);

  Vec7 operator()(const Quaternion& x) const { return map_(x); }
  Tangent3 tangent(const Quaternion& x) const;
  int orientation() const noexcept { return orientation_; }

  ParamCycle reversed() const;
  /// x -> R x + t, R a 7x7 matrix (rows).
  ParamCycle transformed(const std::array<Vec7, 7>& rotation, const Vec7& translation) const;

private:
  Map map_;
  Jacobian jacobian_;
  int orientation_;
};

/// tau(l, b): S^1 x S^3 -> S^7 in R^8, (theta, x) -> (x, abar(theta, x)) / sqrt 2
/// with frame alpha(x) = (x^l, x^l * x^b i conj(x)^b).
class TauEmbedding {
public:
  TauEmbedding(long l, long b);

  long l() const noexcept { return l_; }
  long b() const noexcept { return b_; }

  Vec8 operator()(double theta, const Quaternion& x) const;
  /// The 3-sphere theta x S^3 pushed to R^7 by stereographic projection.
  ParamCycle fiber(double theta) const;

private:
  long l_;
  long b_;
};

/// Alternative models of tau(1, 0) and tau(0, 1): (s, y) -> (T(s, y), y) / sqrt 2
/// with T^1(s, y) = s y and T^2(e^{i theta}, y) = eta(y) cos theta + sin theta,
/// eta the Hopf map y -> y i conj(y).
Vec8 t1_model(double theta, const Quaternion& y);
Vec8 t2_model(double theta, const Quaternion& y);
ParamCycle t1_fiber(double theta);
ParamCycle t2_fiber(double theta);

/// Projection of S^7 minus (0, ..., 0, 1) onto R^7.
Vec7 stereographic(const Vec8& p);

/// Point of S^3 in Hopf coordinates: (cos eta e^{i xi1}, sin eta e^{i xi2}).
Quaternion hopf_point(double eta, double xi1, double xi2);

struct LinkOptions {
  /// Gauss-Legendre nodes in eta; 2n trapezoid nodes in each of xi1, xi2.
  int resolution = 12;
  /// Reject pairs whose certified separation is not above this.
  double min_separation = 1e-3;
  /// Reject estimates further than this from the nearest integer.
  double max_residual = 0.25;
};

struct LinkResult {
  double estimate = 0;
  long value = 0;
  double residual = 0;
  /// Sampled minimum distance between the cycles.
  double sampled_distance = 0;
  /// Sampled distance minus local derivative bound times covering radius.
  double certified_separation = 0;
};

/// Degree of (X - Y)/|X - Y| over S^3 x S^3 by tensor quadrature, with the
/// sign fixed so that the tau(1, 0) fibers link +1. No checks are applied.
LinkResult linking_integral(const ParamCycle& a, const ParamCycle& b, int resolution);

/// linking_integral plus the separation and convergence checks.
LinkResult linking_number(const ParamCycle& a, const ParamCycle& b, const LinkOptions& options = {});

struct TauReport {
  long l = 0;
  long b = 0;
  LinkResult link;
  bool pass = false;
};

/// Largest |l| accepted by verify_lambda_tau at a given resolution.
long max_supported_l(int resolution);

/// lk of the fibers over (1, 0) and (-1, 0) of tau(l, b); passes when it
/// rounds to l with residual < 0.1.
TauReport verify_lambda_tau(long l, long b, const LinkOptions& options = {});

} // namespace emb7::gauss

#endif
