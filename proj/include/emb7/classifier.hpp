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
#ifndef EMB7_CLASSIFIER_HPP
#define EMB7_CLASSIFIER_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "emb7/invariants.hpp"

namespace emb7 {

/// An isotopy class modulo knots: (kappa, lambda, beta). beta is a coset
/// representative in H_1 coordinates, measured from an unspecified basepoint
/// embedding of the (u, L) fiber; it is absent when no longer known.
struct EmbeddingClass {
  KappaValue u;
  LambdaForm L;
  std::optional<IntVector> beta;

  bool beta_known() const noexcept { return beta.has_value(); }
};

/// Throws unless u is admissible, (u, L) is symmetric and beta has b1 entries.
void require_valid_class(const ManifoldData& data, const EmbeddingClass& cls);

/// Both classes must carry beta.
bool classes_equal(const ManifoldData& data, const EmbeddingClass& a, const EmbeddingClass& b);

KGroup fiber_group(const ManifoldData& data, const KappaValue& u, const LambdaForm& l);

/// Number of classes over (u, L); std::nullopt when infinite.
std::optional<Int> fiber_size(const ManifoldData& data, const KappaValue& u, const LambdaForm& l);

struct FiberEnumeration {
  std::vector<IntVector> representatives;
  bool truncated = false;
};

/// Walks the canonical representatives of a group one at a time. Finite
/// factors vary in odometer order; free factors are walked in shells of
/// growing max-norm, so the walk over an infinite group never ends.
class FiberCursor {
public:
  explicit FiberCursor(const AbelianGroupPresentation& group);

  std::optional<IntVector> next();

private:
  bool advance();
  void step_free();
  bool on_shell() const;

  IntMatrix lift_;
  std::size_t rank_ = 0;
  std::vector<std::size_t> finite_idx_;
  std::vector<std::size_t> free_idx_;
  IntVector limits_;
  IntVector finite_;
  IntVector free_;
  long radius_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` with each canonical representative until it returns false.
void for_each_element(const AbelianGroupPresentation& group,
                      const std::function<bool(const IntVector&)>& visit);

/// All canonical representatives, or the first `cap` of them. An infinite
/// fiber requires a cap.
FiberEnumeration enumerate_fiber(const ManifoldData& data, const KappaValue& u,
                                 const LambdaForm& l, std::optional<std::size_t> cap);

} // namespace emb7

#endif
