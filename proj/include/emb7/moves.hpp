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
#ifndef EMB7_MOVES_HPP
#define EMB7_MOVES_HPP

#include <utility>
#include <vector>

#include "emb7/classifier.hpp"

namespace emb7 {

/// Parametric connected sum with tau(l, b) along a circle of class s in H_1.
struct Move {
  IntVector s;
  Int l = 0;
  Int b = 0;
};

/// kappa is unchanged; L gains l (P s)(P s)^T. For l = 0 a known beta is
/// translated by b s inside the fiber; for l != 0 beta becomes unknown, since
/// there is no transport of beta between fibers.
EmbeddingClass apply_move(const ManifoldData& data, const EmbeddingClass& cls, const Move& move);

/// Moves (with b = 0) whose combined lambda change is the symmetric form m.
/// Equal directions are merged and zero coefficients dropped.
std::vector<Move> decompose_symmetric_form(const ManifoldData& data, const IntMatrix& m);

/// sum_i l_i (P s_i)(P s_i)^T; the b components are ignored.
IntMatrix net_lambda_effect(const ManifoldData& data, const std::vector<Move>& moves);

// Knotted tori S^1 x S^3 -> S^7: tau(l, b) = tau(l', b') modulo knots iff
// l = l' and b = b' mod 2l. Negative l reduces with modulus 2|l|.
std::pair<Int, Int> tau_normal_form(const Int& l, const Int& b);
bool tau_equal(const Int& l, const Int& b, const Int& l2, const Int& b2);
/// Representative of tau(l, b) +_s tau(l2, b2) along the S^1 factor; the
/// geometric operation itself can be multi-valued.
std::pair<Int, Int> tau_compose(const Int& l, const Int& b, const Int& l2, const Int& b2);

} // namespace emb7

#endif
