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
#include "emb7/moves.hpp"

#include <map>

#include "emb7/error.hpp"

namespace emb7 {

namespace {

// Column vector P s, i.e. the values x_j . s on the H_3 basis.
IntVector pairing_values(const ManifoldData& data, const IntVector& s) {
  require_dims(s.size() == data.b1, "move direction must have b1 = " + std::to_string(data.b1) +
                                        " coordinates");
  return data.P * s;
}

} // namespace

EmbeddingClass apply_move(const ManifoldData& data, const EmbeddingClass& cls, const Move& move) {
  require_dims(cls.u.size() == data.b2, "class u has the wrong length");
  require_dims(cls.L.rows() == data.b3 && cls.L.cols() == data.b3, "class L has the wrong shape");
  const IntVector ps = pairing_values(data, move.s);

  EmbeddingClass out = cls;
  if (move.l != 0) {
    for (std::size_t j = 0; j < data.b3; ++j)
      for (std::size_t k = 0; k < data.b3; ++k) out.L(j, k) += move.l * ps[j] * ps[k];
    out.beta.reset();
    return out;
  }
  if (cls.beta) {
    require_dims(cls.beta->size() == data.b1, "beta must have b1 entries");
    IntVector shifted = *cls.beta;
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += move.b * move.s[i];
    out.beta = canonical_representative(k_group(data, cls.u, cls.L).group, shifted);
  }
  return out;
}

std::vector<Move> decompose_symmetric_form(const ManifoldData& data, const IntMatrix& m) {
  require_dims(m.rows() == data.b3 && m.cols() == data.b3, "form must be b3 x b3");
  if (!m.is_symmetric()) fail(ErrorKind::NotSymmetric, "form to decompose is not symmetric");

  // Directions dual to the H_3 basis: P * dual[i] = e_i, so the basic form
  // of dual[i] is E_ii and that of dual[i] + dual[j] is E_ii + E_jj + E_ij + E_ji.
  const IntMatrix inverse = unimodular_inverse(data.P);
  std::map<IntVector, Int> coefficient;
  const std::size_t n = data.b3;
  for (std::size_t i = 0; i < n; ++i) {
    const IntVector di = inverse.column(i);
    coefficient[di] += m(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (m(i, j) == 0) continue;
      const IntVector dj = inverse.column(j);
      IntVector dij = di;
      for (std::size_t k = 0; k < dij.size(); ++k) dij[k] += dj[k];
      coefficient[dij] += m(i, j);
      coefficient[di] -= m(i, j);
      coefficient[dj] -= m(i, j);
    }
  }
  std::vector<Move> moves;
  for (auto& [s, l] : coefficient)
    if (l != 0) moves.push_back(Move{s, l, 0});
  return moves;
}

IntMatrix net_lambda_effect(const ManifoldData& data, const std::vector<Move>& moves) {
  IntMatrix total(data.b3, data.b3);
  for (const auto& mv : moves) {
    const IntVector ps = pairing_values(data, mv.s);
    for (std::size_t j = 0; j < data.b3; ++j)
      for (std::size_t k = 0; k < data.b3; ++k) total(j, k) += mv.l * ps[j] * ps[k];
  }
  return total;
}

std::pair<Int, Int> tau_normal_form(const Int& l, const Int& b) {
  if (l == 0) return {l, b};
  return {l, floor_mod(b, Int(2 * abs(l)))};
}

bool tau_equal(const Int& l, const Int& b, const Int& l2, const Int& b2) {
  if (l != l2) return false;
  if (l == 0) return b == b2;
  return mpz_divisible_p(Int(b - b2).get_mpz_t(), Int(2 * l).get_mpz_t()) != 0;
}

std::pair<Int, Int> tau_compose(const Int& l, const Int& b, const Int& l2, const Int& b2) {
  return tau_normal_form(l + l2, b + b2);
}

} // namespace emb7
