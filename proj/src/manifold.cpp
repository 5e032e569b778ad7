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
#include "emb7/manifold.hpp"

#include <algorithm>
#include <sstream>

#include "emb7/error.hpp"

namespace emb7 {

bool ValidationReport::has(const std::string& code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.code == code; });
}

long signature(const IntMatrix& symmetric) {
  require_dims(symmetric.rows() == symmetric.cols(), "signature of a non-square matrix");
  const std::size_t n = symmetric.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(symmetric(i, j));

  auto swap_index = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  // Congruence e_k <- e_k + e_j.
  auto add_index = [&](std::size_t k, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) a[k][c] += a[j][c];
    for (std::size_t r = 0; r < n; ++r) a[r][k] += a[r][j];
  };

  long sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a[k][j] == 0) ++j;
        if (j == n) continue; // null direction
        add_index(k, j);
      }
    }
    const mpq_class pivot = a[k][k];
    sig += pivot > 0 ? 1 : -1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const mpq_class f = a[i][k] / pivot;
      for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
      for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
    }
  }
  return sig;
}

namespace {

std::string shape(const IntMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

} // namespace

ValidationReport validate(const ManifoldData& d) {
  ValidationReport report;
  auto add = [&](std::string code, std::string msg, std::vector<std::size_t> idx = {}) {
    report.violations.push_back({std::move(code), std::move(msg), std::move(idx)});
  };

  if (d.b3 != d.b1)
    add("betti_duality", "b3 = " + std::to_string(d.b3) + " differs from b1 = " +
                             std::to_string(d.b1));

  const bool q_ok = d.Q.rows() == d.b2 && d.Q.cols() == d.b2;
  const bool p_ok = d.P.rows() == d.b3 && d.P.cols() == d.b1;
  bool t_ok = d.T.size() == d.b2;
  for (const auto& slice : d.T) t_ok = t_ok && slice.rows() == d.b3 && slice.cols() == d.b3;
  const bool w_ok = d.w2.size() == d.b2;

  if (!q_ok) add("shape_Q", "Q has shape " + shape(d.Q) + ", expected b2 x b2");
  if (!p_ok) add("shape_P", "P has shape " + shape(d.P) + ", expected b3 x b1");
  if (!t_ok) add("shape_T", "T must have b2 slices of shape b3 x b3");
  if (!w_ok) add("shape_w2", "w2 must have b2 entries");
  for (std::size_t i = 0; i < d.w2.size(); ++i)
    if (d.w2[i] != 0 && d.w2[i] != 1) add("w2_bit", "w2 entries must be 0 or 1", {i});

  if (q_ok) {
    bool symmetric = true;
    for (std::size_t i = 0; i < d.b2; ++i)
      for (std::size_t j = i + 1; j < d.b2; ++j)
        if (d.Q(i, j) != d.Q(j, i)) {
          symmetric = false;
          add("Q_symmetric", "Q is not symmetric", {i, j});
        }
    if (symmetric) {
      Int det = determinant(d.Q);
      if (det != 1 && det != -1)
        add("Q_unimodular", "det Q = " + det.get_str() + ", expected +-1");
      long sig = signature(d.Q);
      if (Int(sig) != d.sigma)
        add("signature", "signature of Q is " + std::to_string(sig) + " but sigma = " +
                             d.sigma.get_str());
    }
  }

  if (p_ok && d.b1 > 0 && d.b1 == d.b3 && !is_unimodular(d.P))
    add("P_unimodular", "duality pairing P is not unimodular");

  if (t_ok) {
    for (std::size_t i = 0; i < d.b2; ++i)
      for (std::size_t j = 0; j < d.b3; ++j)
        for (std::size_t k = j; k < d.b3; ++k)
          if (d.T[i](j, k) != -d.T[i](k, j))
            add("T_antisymmetric", "T[i][j][k] != -T[i][k][j]", {i, j, k});
  }

  if (q_ok && w_ok) {
    for (std::size_t i = 0; i < d.b2; ++i) {
      Int pairing = 0;
      for (std::size_t j = 0; j < d.b2; ++j) pairing += d.Q(i, j) * d.w2[j];
      if (floor_mod(Int(d.Q(i, i) - pairing), Int(2)) != 0)
        add("wu", "Q(x,x) and x.w2 differ mod 2 for basis vector", {i});
    }
  }
  return report;
}

void require_valid(const ManifoldData& data) {
  ValidationReport r = validate(data);
  if (r.ok()) return;
  std::ostringstream os;
  os << "invalid manifold data:";
  for (const auto& v : r.violations) os << ' ' << v.code << " (" << v.message << ')';
  fail(ErrorKind::InvalidManifold, os.str());
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"s4", "s1xs3", "cp2", "s2xs2", "t2xs2"};
  return names;
}

ManifoldData builtin(const std::string& name) {
  ManifoldData d;
  d.name = name;
  if (name == "s4") {
    // all groups vanish
  } else if (name == "s1xs3") {
    d.b1 = d.b3 = 1;
    d.P = IntMatrix{{1}};
  } else if (name == "cp2") {
    d.b2 = 1;
    d.Q = IntMatrix{{1}};
    d.w2 = {1};
    d.sigma = 1;
  } else if (name == "s2xs2") {
    d.b2 = 2;
    d.Q = IntMatrix{{0, 1}, {1, 0}};
    d.w2 = {0, 0};
  } else if (name == "t2xs2") {
    // H_2 = <[T^2 x pt], [pt x S^2]>, H_3 = <a x S^2, b x S^2>, H_1 = <b, a>
    // (H_1 ordered so that P is the identity). (a x S^2).(b x S^2) =
    // (a.b)[pt x S^2] = [pt x S^2], which meets the torus class once and
    // the sphere class not at all.
    d.b1 = d.b3 = 2;
    d.b2 = 2;
    d.Q = IntMatrix{{0, 1}, {1, 0}};
    d.P = IntMatrix::identity(2);
    d.T = {IntMatrix{{0, 1}, {-1, 0}}, IntMatrix(2, 2)};
    d.w2 = {0, 0};
  } else {
    fail(ErrorKind::UnknownName, "unknown builtin manifold '" + name + "'");
  }
  if (d.Q.rows() != d.b2) d.Q = IntMatrix(d.b2, d.b2);
  if (d.P.rows() != d.b3) d.P = IntMatrix(d.b3, d.b1);
  if (d.T.size() != d.b2) d.T.assign(d.b2, IntMatrix(d.b3, d.b3));
  if (d.w2.size() != d.b2) d.w2.assign(d.b2, 0);
  return d;
}

ManifoldData change_basis(const ManifoldData& d, const IntMatrix& h2, const IntMatrix& h3,
                          const IntMatrix& h1) {
  require_dims(h2.rows() == d.b2 && h2.cols() == d.b2, "H_2 basis change has wrong shape");
  require_dims(h3.rows() == d.b3 && h3.cols() == d.b3, "H_3 basis change has wrong shape");
  require_dims(h1.rows() == d.b1 && h1.cols() == d.b1, "H_1 basis change has wrong shape");

  ManifoldData out = d;
  out.Q = h2.transpose() * d.Q * h2;
  out.P = h3.transpose() * d.P * h1;

  out.T.assign(d.b2, IntMatrix(d.b3, d.b3));
  std::vector<IntMatrix> rotated(d.b2);
  for (std::size_t a = 0; a < d.b2; ++a) rotated[a] = h3.transpose() * d.T[a] * h3;
  for (std::size_t i = 0; i < d.b2; ++i)
    for (std::size_t a = 0; a < d.b2; ++a)
      if (h2(a, i) != 0) out.T[i] = out.T[i] + h2(a, i) * rotated[a];

  IntVector w(d.b2);
  for (std::size_t i = 0; i < d.b2; ++i) w[i] = d.w2[i];
  IntVector w_new = unimodular_inverse(h2) * w;
  for (std::size_t i = 0; i < d.b2; ++i) out.w2[i] = static_cast<int>(floor_mod(w_new[i], 2).get_si());
  return out;
}

} // namespace emb7
