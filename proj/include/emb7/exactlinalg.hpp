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
#ifndef EMB7_EXACTLINALG_HPP
#define EMB7_EXACTLINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace emb7 {

using Int = mpz_class;
using IntVector = std::vector<Int>;

/// Dense integer matrix with arbitrary-precision entries, row-major.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  // Elementary operations; `factor` multiplies the source before adding.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& s, const IntMatrix& a);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntVector make_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);

/// Non-negative remainder; `m` must be positive.
Int floor_mod(const Int& a, const Int& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);
bool is_unimodular(const IntMatrix& a);

/// Inverse of a unimodular matrix; throws InvalidArgument otherwise.
IntMatrix unimodular_inverse(const IntMatrix& a);

struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries d_1 | d_2 | ... of D, length min(rows, cols).
  IntVector diagonal() const;
};

/// Smith normal form U*A*V = D. Pivot is the nonzero entry of least absolute
/// value in the active block, ties to the lowest (row, col).
SNFResult smith_normal_form(const IntMatrix& a);

/// A finitely generated abelian group Z^n / span(relations).
///
/// `invariant_factors` has one entry per ambient coordinate: a divisibility
/// chain of positive values followed by zeros, one per free Z factor. Entries
/// equal to 1 are trivial factors and are kept so that `projection` stays
/// square. `projection` is the unimodular row transform of the Smith form; the
/// coordinates of v in the factor decomposition are projection * v, read modulo
/// the corresponding invariant factor.
struct AbelianGroupPresentation {
  std::size_t ambient_rank = 0;
  IntMatrix relations;
  IntVector invariant_factors;
  IntMatrix projection;

  bool is_finite() const;
  /// Product of the invariant factors; std::nullopt when some factor is 0.
  std::optional<Int> order() const;
  /// Invariant factors other than 1.
  IntVector nontrivial_factors() const;
};

AbelianGroupPresentation cokernel(std::size_t ambient_rank, const IntMatrix& relations);

/// Factor coordinates of v, reduced into [0, d) for each nonzero factor d.
IntVector coset_normal_form(const AbelianGroupPresentation& group, const IntVector& v);

/// The ambient vector projection^{-1} * coset_normal_form(v). Equal for two
/// vectors iff they lie in the same coset.
IntVector canonical_representative(const AbelianGroupPresentation& group, const IntVector& v);

/// Lift factor coordinates back to ambient coordinates.
IntVector lift_factor_coordinates(const AbelianGroupPresentation& group, const IntVector& coords);

struct LinearSolution {
  IntVector particular;
  std::vector<IntVector> kernel;
};

/// Solve A*x = b over Z, or over Z/modulus when given. Solutions and kernel
/// generators are reduced into [0, modulus) in the modular case; the kernel
/// list then generates the solution module rather than forming a basis.
std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVector& b,
                                           std::optional<Int> modulus = std::nullopt);

} // namespace emb7

#endif
