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
#ifndef EMB7_MANIFOLD_HPP
#define EMB7_MANIFOLD_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "emb7/exactlinalg.hpp"

namespace emb7 {

/// Homological data of a closed connected orientable 4-manifold N with
/// torsion-free H_1, in chosen bases of H_1, H_2 and H_3.
///
///   Q[i][j]    = e_i . e_j          intersection form on H_2
///   P[j][m]    = x_j . p_m          duality pairing H_3 x H_1 -> Z
///   T[i](j, k) = e_i . x_j . x_k    triple intersections H_2 x H_3 x H_3
///   w2         = coordinates of the dual of w_2(N) in H_2 (x) Z_2
struct ManifoldData {
  std::optional<std::string> name;
  std::size_t b1 = 0;
  std::size_t b2 = 0;
  std::size_t b3 = 0;
  IntMatrix Q;
  IntMatrix P;
  std::vector<IntMatrix> T;
  std::vector<int> w2;
  Int sigma = 0;
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::size_t> indices;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& code) const;
};

/// Signature of a symmetric integer matrix, computed exactly over Q.
long signature(const IntMatrix& symmetric);

ValidationReport validate(const ManifoldData& data);

/// Throws InvalidManifold listing every violation when validation fails.
void require_valid(const ManifoldData& data);

const std::vector<std::string>& builtin_names();

/// One of "s4", "s1xs3", "cp2", "s2xs2", "t2xs2".
ManifoldData builtin(const std::string& name);

/// Re-express data in new bases. Columns of h2, h3 and h1 are the new basis
/// vectors written in the old coordinates; all three must be unimodular.
ManifoldData change_basis(const ManifoldData& data, const IntMatrix& h2, const IntMatrix& h3,
                          const IntMatrix& h1);

} // namespace emb7

#endif
