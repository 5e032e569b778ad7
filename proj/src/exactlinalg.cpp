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
#include "emb7/exactlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "emb7/error.hpp"

namespace emb7 {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require_dims(r.size() == cols_, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_dims(rows[i].size() == cols, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require_dims(cols[j].size() == rows, "column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& v) { return v == 0; });
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require_dims(a.cols_ == b.rows_, "matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum: shapes differ");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  require_dims(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference: shapes differ");
  IntMatrix c = a;
  for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
  return c;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& v : c.data_) v *= s;
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  require_dims(a.cols_ == v.size(), "matrix-vector product: length mismatch");
  IntVector r(a.rows_, Int(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << emb7::to_string(row(i));
  }
  os << ']';
  return os.str();
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ']';
  return os.str();
}

Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int determinant(const IntMatrix& a) {
  require_dims(a.rows() == a.cols(), "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& a) {
  if (a.rows() != a.cols()) return false;
  Int d = determinant(a);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (!is_unimodular(a)) fail(ErrorKind::InvalidArgument, "matrix is not unimodular");
  // U*A*V = I with positive diagonal, so A^{-1} = V*U.
  SNFResult s = smith_normal_form(a);
  return s.V * s.U;
}

IntVector SNFResult::diagonal() const {
  const std::size_t r = std::min(D.rows(), D.cols());
  IntVector d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = D(i, i);
  return d;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> smallest_entry(const IntMatrix& m, std::size_t t) {
  std::optional<Pivot> best;
  Int best_abs;
  for (std::size_t i = t; i < m.rows(); ++i)
    for (std::size_t j = t; j < m.cols(); ++j) {
      const Int& v = m(i, j);
      if (v == 0) continue;
      Int av = abs(v);
      if (!best || av < best_abs) {
        best = Pivot{i, j};
        best_abs = av;
      }
    }
  return best;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& D = r.D;
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    for (;;) {
      auto p = smallest_entry(D, t);
      if (!p) {
        exhausted = true;
        break;
      }
      D.swap_rows(t, p->row);
      r.U.swap_rows(t, p->row);
      D.swap_cols(t, p->col);
      r.V.swap_cols(t, p->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = -floor_div(D(i, t), D(t, t));
        D.add_row_multiple(i, t, q);
        r.U.add_row_multiple(i, t, q);
        if (D(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = -floor_div(D(t, j), D(t, t));
        D.add_col_multiple(j, t, q);
        r.V.add_col_multiple(j, t, q);
        if (D(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // Row and column are clear; enforce d_t | every remaining entry.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < m && !offending; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending) break;
      D.add_row_multiple(t, *offending, Int(1));
      r.U.add_row_multiple(t, *offending, Int(1));
    }
    if (exhausted) break;
    if (D(t, t) < 0) {
      D.negate_col(t);
      r.V.negate_col(t);
    }
  }
  return r;
}

bool AbelianGroupPresentation::is_finite() const {
  return std::none_of(invariant_factors.begin(), invariant_factors.end(),
                      [](const Int& d) { return d == 0; });
}

std::optional<Int> AbelianGroupPresentation::order() const {
  if (!is_finite()) return std::nullopt;
  Int p = 1;
  for (const auto& d : invariant_factors) p *= d;
  return p;
}

IntVector AbelianGroupPresentation::nontrivial_factors() const {
  IntVector out;
  for (const auto& d : invariant_factors)
    if (d != 1) out.push_back(d);
  return out;
}

AbelianGroupPresentation cokernel(std::size_t ambient_rank, const IntMatrix& relations) {
  require_dims(relations.rows() == ambient_rank,
               "cokernel: relation matrix must have ambient_rank rows");
  SNFResult s = smith_normal_form(relations);
  AbelianGroupPresentation g;
  g.ambient_rank = ambient_rank;
  g.relations = relations;
  g.invariant_factors.assign(ambient_rank, Int(0));
  IntVector diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) g.invariant_factors[i] = diag[i];
  g.projection = std::move(s.U);
  return g;
}

IntVector coset_normal_form(const AbelianGroupPresentation& group, const IntVector& v) {
  require_dims(v.size() == group.ambient_rank,
               "coset_normal_form: vector length differs from ambient rank");
  IntVector y = group.projection * v;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (group.invariant_factors[i] != 0) y[i] = floor_mod(y[i], group.invariant_factors[i]);
  return y;
}

IntVector lift_factor_coordinates(const AbelianGroupPresentation& group, const IntVector& coords) {
  require_dims(coords.size() == group.ambient_rank, "lift: coordinate length mismatch");
  return unimodular_inverse(group.projection) * coords;
}

IntVector canonical_representative(const AbelianGroupPresentation& group, const IntVector& v) {
  return lift_factor_coordinates(group, coset_normal_form(group, v));
}

namespace {

bool all_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

} // namespace

std::optional<LinearSolution> solve_linear(const IntMatrix& a, const IntVector& b,
                                           std::optional<Int> modulus) {
  require_dims(b.size() == a.rows(), "solve_linear: right-hand side length mismatch");
  if (modulus && *modulus <= 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  SNFResult s = smith_normal_form(a);
  IntVector c = s.U * b;
  IntVector diag = s.diagonal();
  std::size_t rank = 0;
  while (rank < diag.size() && diag[rank] != 0) ++rank;

  IntVector y(n, Int(0));
  std::vector<IntVector> kernel;

  if (!modulus) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), diag[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), diag[i].get_mpz_t());
    }
    for (std::size_t i = rank; i < m; ++i)
      if (c[i] != 0) return std::nullopt;
    for (std::size_t j = rank; j < n; ++j) kernel.push_back(s.V.column(j));
    return LinearSolution{s.V * y, std::move(kernel)};
  }

  const Int& mod = *modulus;
  for (std::size_t i = 0; i < rank; ++i) {
    Int g;
    mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), mod.get_mpz_t());
    if (!mpz_divisible_p(c[i].get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    Int reduced_mod = mod / g;
    Int unit = floor_mod(Int(diag[i] / g), reduced_mod);
    Int inv = 0;
    if (reduced_mod > 1) mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), reduced_mod.get_mpz_t());
    y[i] = floor_mod(Int(Int(c[i] / g) * inv), reduced_mod);
    if (g != 1) {
      IntVector k = s.V.column(i);
      for (auto& x : k) x = floor_mod(Int(x * reduced_mod), mod);
      if (!all_zero(k)) kernel.push_back(std::move(k));
    }
  }
  for (std::size_t i = rank; i < m; ++i)
    if (floor_mod(c[i], mod) != 0) return std::nullopt;
  for (std::size_t j = rank; j < n; ++j) {
    IntVector k = s.V.column(j);
    for (auto& x : k) x = floor_mod(x, mod);
    if (!all_zero(k)) kernel.push_back(std::move(k));
  }
  IntVector x = s.V * y;
  for (auto& v : x) v = floor_mod(v, mod);
  return LinearSolution{std::move(x), std::move(kernel)};
}

} // namespace emb7
