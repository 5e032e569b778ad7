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
#ifndef EMB7_INVARIANTS_HPP
#define EMB7_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "emb7/exactlinalg.hpp"
#include "emb7/manifold.hpp"

namespace emb7 {

/// Coordinates of the Boechat-Haefliger class u in H_2.
using KappaValue = IntVector;

/// Seifert form on H_3 in the chosen basis: L(j, k) = lambda(x_j, x_k).
using LambdaForm = IntMatrix;

/// Value group H_1 / (2 adj(L)(H_3) + d H_1) for the beta invariant.
struct KGroup {
  AbelianGroupPresentation group;
  Int d;
};

/// 0 for the zero vector, otherwise the gcd of the coordinates.
Int divisibility(const KappaValue& u);

/// u reduces to w2 mod 2 and u.u = sigma.
bool is_kappa_admissible(const ManifoldData& data, const KappaValue& u);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Every admissible u in the box [-bound, bound]^b2, lexicographic order.
/// Rejects boxes holding more than `cap` points.
std::vector<KappaValue> enumerate_kappa(const ManifoldData& data, long bound,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// L(k, j) - L(j, k) = sum_i u_i T[i](j, k) for all j, k.
bool is_symmetric_pair(const ManifoldData& data, const KappaValue& u, const LambdaForm& l);

/// Strictly lower-triangular basepoint of the u-symmetric forms.
LambdaForm base_lambda(const ManifoldData& data, const KappaValue& u);

/// The b1 x b3 matrix A with L = P * A.
IntMatrix lambda_adjoint(const ManifoldData& data, const LambdaForm& l);

/// Presentation of Z^b1 / columns of [2A | d I], d = div u. Requires a
/// symmetric pair.
KGroup k_group(const ManifoldData& data, const KappaValue& u, const LambdaForm& l);

/// The class W in H_1(N; Z_2) with L(x, x) = W . x mod 2, entries 0/1.
std::vector<int> whitney_w(const ManifoldData& data, const LambdaForm& l);

/// (L0 - L1)(x, x) is even for every x in H_3.
bool regular_homotopy_equivalent(const LambdaForm& l0, const LambdaForm& l1);

/// u = 0 and L = 0. This is necessary for compressing an embedding into
/// S^6 but not sufficient: two such embeddings can still differ in beta.
bool compression_obstruction(const KappaValue& u, const LambdaForm& l);

} // namespace emb7

#endif
