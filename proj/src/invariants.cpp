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
#include "emb7/invariants.hpp"

#include "emb7/error.hpp"

namespace emb7 {

namespace {

void check_u(const ManifoldData& data, const KappaValue& u) {
  require_dims(u.size() == data.b2, "kappa value must have b2 = " + std::to_string(data.b2) +
                                        " coordinates, got " + std::to_string(u.size()));
}

void check_l(const ManifoldData& data, const LambdaForm& l) {
  require_dims(l.rows() == data.b3 && l.cols() == data.b3,
               "lambda form must be b3 x b3 = " + std::to_string(data.b3) + "x" +
                   std::to_string(data.b3));
}

} // namespace

Int divisibility(const KappaValue& u) {
  Int g = 0;
  for (const auto& x : u) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_kappa_admissible(const ManifoldData& data, const KappaValue& u) {
  check_u(data, u);
  for (std::size_t i = 0; i < u.size(); ++i)
    if (floor_mod(u[i], 2) != data.w2[i]) return false;
  Int square = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) square += u[i] * data.Q(i, j) * u[j];
  return square == data.sigma;
}

std::vector<KappaValue> enumerate_kappa(const ManifoldData& data, long bound, std::uint64_t cap) {
  if (bound < 1) fail(ErrorKind::InvalidArgument, "enumeration bound must be positive");
  Int points;
  mpz_ui_pow_ui(points.get_mpz_t(), static_cast<unsigned long>(2 * bound + 1), data.b2);
  if (points > Int(static_cast<unsigned long>(cap)))
    fail(ErrorKind::EnumerationTooLarge,
         "box [-" + std::to_string(bound) + ", " + std::to_string(bound) + "]^" +
             std::to_string(data.b2) + " holds " + points.get_str() +
             " points, above the cap of " + std::to_string(cap));

  std::vector<KappaValue> out;
  KappaValue u(data.b2, Int(-bound));
  for (;;) {
    if (is_kappa_admissible(data, u)) out.push_back(u);
    // odometer, last coordinate fastest: visits the box in lexicographic order
    std::size_t pos = u.size();
    while (pos > 0 && u[pos - 1] == bound) {
      u[pos - 1] = -bound;
      --pos;
    }
    if (pos == 0) break;
    ++u[pos - 1];
  }
  return out;
}

bool is_symmetric_pair(const ManifoldData& data, const KappaValue& u, const LambdaForm& l) {
  check_u(data, u);
  check_l(data, l);
  for (std::size_t j = 0; j < data.b3; ++j)
    for (std::size_t k = 0; k < data.b3; ++k) {
      Int triple = 0;
      for (std::size_t i = 0; i < data.b2; ++i) triple += u[i] * data.T[i](j, k);
      if (l(k, j) - l(j, k) != triple) return false;
    }
  return true;
}

LambdaForm base_lambda(const ManifoldData& data, const KappaValue& u) {
  check_u(data, u);
  LambdaForm l(data.b3, data.b3);
  for (std::size_t j = 0; j < data.b3; ++j)
    for (std::size_t k = 0; k < j; ++k)
      for (std::size_t i = 0; i < data.b2; ++i) l(j, k) += u[i] * data.T[i](k, j);
  return l;
}

IntMatrix lambda_adjoint(const ManifoldData& data, const LambdaForm& l) {
  check_l(data, l);
  return unimodular_inverse(data.P) * l;
}

KGroup k_group(const ManifoldData& data, const KappaValue& u, const LambdaForm& l) {
  if (!is_symmetric_pair(data, u, l))
    fail(ErrorKind::NotSymmetric, "(u, L) is not a symmetric pair");
  const Int d = divisibility(u);
  const IntMatrix adj = lambda_adjoint(data, l);
  IntMatrix rel(data.b1, data.b3 + data.b1);
  for (std::size_t i = 0; i < data.b1; ++i) {
    for (std::size_t j = 0; j < data.b3; ++j) rel(i, j) = 2 * adj(i, j);
    rel(i, data.b3 + i) = d;
  }
  return KGroup{cokernel(data.b1, rel), d};
}

std::vector<int> whitney_w(const ManifoldData& data, const LambdaForm& l) {
  check_l(data, l);
  IntVector diag(data.b3);
  for (std::size_t j = 0; j < data.b3; ++j) diag[j] = l(j, j);
  auto sol = solve_linear(data.P, diag, Int(2));
  // P is unimodular, so the system has exactly one solution mod 2.
  if (!sol) fail(ErrorKind::InvalidArgument, "duality pairing is not invertible mod 2");
  std::vector<int> w(data.b1);
  for (std::size_t i = 0; i < data.b1; ++i) w[i] = static_cast<int>(sol->particular[i].get_si());
  return w;
}

bool regular_homotopy_equivalent(const LambdaForm& l0, const LambdaForm& l1) {
  require_dims(l0.rows() == l1.rows() && l0.cols() == l1.cols() && l0.rows() == l0.cols(),
               "regular homotopy check needs two square forms of equal size");
  const IntMatrix diff = l0 - l1;
  const std::size_t n = diff.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (floor_mod(diff(j, j), 2) != 0) return false;
    for (std::size_t k = j + 1; k < n; ++k)
      if (floor_mod(Int(diff(j, k) + diff(k, j)), 2) != 0) return false;
  }
  return true;
}

bool compression_obstruction(const KappaValue& u, const LambdaForm& l) {
  for (const auto& x : u)
    if (x != 0) return false;
  return l.is_zero();
}

} // namespace emb7
