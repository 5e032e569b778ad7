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
#include "emb7/classifier.hpp"

#include <algorithm>

#include "emb7/error.hpp"

namespace emb7 {

void require_valid_class(const ManifoldData& data, const EmbeddingClass& cls) {
  if (!is_kappa_admissible(data, cls.u))
    fail(ErrorKind::Inadmissible, "u = " + to_string(cls.u) + " is not an admissible kappa value");
  if (!is_symmetric_pair(data, cls.u, cls.L))
    fail(ErrorKind::NotSymmetric, "(u, L) is not a symmetric pair");
  if (cls.beta) require_dims(cls.beta->size() == data.b1, "beta must have b1 entries");
}

bool classes_equal(const ManifoldData& data, const EmbeddingClass& a, const EmbeddingClass& b) {
  require_valid_class(data, a);
  require_valid_class(data, b);
  if (!a.beta || !b.beta)
    fail(ErrorKind::BetaUnknown, "cannot compare classes whose beta invariant is unknown");
  if (a.u != b.u || !(a.L == b.L)) return false;
  const KGroup k = k_group(data, a.u, a.L);
  return coset_normal_form(k.group, *a.beta) == coset_normal_form(k.group, *b.beta);
}

KGroup fiber_group(const ManifoldData& data, const KappaValue& u, const LambdaForm& l) {
  if (!is_kappa_admissible(data, u))
    fail(ErrorKind::Inadmissible, "u = " + to_string(u) + " is not an admissible kappa value");
  return k_group(data, u, l);
}

std::optional<Int> fiber_size(const ManifoldData& data, const KappaValue& u, const LambdaForm& l) {
  return fiber_group(data, u, l).group.order();
}

namespace {

// Advances `v` through the box prod [0, limit_i); false once it wraps.
bool odometer_step(IntVector& v, const IntVector& limits) {
  for (std::size_t pos = v.size(); pos > 0; --pos) {
    if (++v[pos - 1] < limits[pos - 1]) return true;
    v[pos - 1] = 0;
  }
  return false;
}

} // namespace

FiberCursor::FiberCursor(const AbelianGroupPresentation& group)
    : lift_(unimodular_inverse(group.projection)), rank_(group.ambient_rank) {
  for (std::size_t i = 0; i < group.invariant_factors.size(); ++i) {
    const Int& d = group.invariant_factors[i];
    if (d == 0) {
      free_idx_.push_back(i);
    } else if (d > 1) {
      finite_idx_.push_back(i);
      limits_.push_back(d);
    }
  }
  finite_.assign(finite_idx_.size(), Int(0));
  free_.assign(free_idx_.size(), Int(0));
}

std::optional<IntVector> FiberCursor::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  IntVector coords(rank_, Int(0));
  for (std::size_t k = 0; k < finite_idx_.size(); ++k) coords[finite_idx_[k]] = finite_[k];
  for (std::size_t k = 0; k < free_idx_.size(); ++k) coords[free_idx_[k]] = free_[k];
  return lift_ * coords;
}

bool FiberCursor::advance() {
  if (odometer_step(finite_, limits_)) return true;
  if (free_idx_.empty()) return false;
  do {
    step_free();
  } while (!on_shell());
  return true;
}

void FiberCursor::step_free() {
  std::size_t pos = free_.size();
  while (pos > 0 && free_[pos - 1] == radius_) {
    free_[pos - 1] = -radius_;
    --pos;
  }
  if (pos == 0) {
    ++radius_;
    std::fill(free_.begin(), free_.end(), Int(-radius_));
    return;
  }
  ++free_[pos - 1];
}

bool FiberCursor::on_shell() const {
  return std::any_of(free_.begin(), free_.end(),
                     [&](const Int& x) { return abs(x) == radius_; });
}

void for_each_element(const AbelianGroupPresentation& group,
                      const std::function<bool(const IntVector&)>& visit) {
  FiberCursor cursor(group);
  while (auto rep = cursor.next())
    if (!visit(*rep)) return;
}

FiberEnumeration enumerate_fiber(const ManifoldData& data, const KappaValue& u,
                                 const LambdaForm& l, std::optional<std::size_t> cap) {
  const KGroup k = fiber_group(data, u, l);
  const std::optional<Int> order = k.group.order();
  if (!order && !cap)
    fail(ErrorKind::InfiniteFiber, "the fiber is infinite; an enumeration cap is required");

  FiberEnumeration out;
  if (cap && *cap == 0) {
    out.truncated = true;
    return out;
  }
  for_each_element(k.group, [&](const IntVector& rep) {
    if (cap && out.representatives.size() == *cap) {
      out.truncated = true;
      return false;
    }
    out.representatives.push_back(rep);
    return true;
  });
  return out;
}

} // namespace emb7
