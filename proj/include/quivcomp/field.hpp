/*
 * Copyright 2026 The quivcomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file    field.hpp
 * @brief   Exact arithmetic and dense linear algebra over a finite field F_q.
 *
 * Matrices act on column vectors: an r x c matrix is a map F_p^c -> F_p^r.
 * Subspaces are stored by a basis in canonical reduced row-echelon form, so
 * two subspaces are equal exactly when their stored bases are identical.
 */

#ifndef QUIVCOMP_FIELD_HPP
#define QUIVCOMP_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace quivcomp {

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

bool is_prime(std::uint64_t n);

struct ExtensionTables;

/// The finite field F_q, q = p^k. Elements are integers in [0, q): the
/// base-p digits a_0 + a_1 p + ... are the coefficients in F_p[x]/(f) for a
/// fixed primitive f. F_p sits inside as 0..p-1, so a matrix over F_p is a
/// matrix over any F_{p^k} unchanged. Cheap to copy.
class FiniteField {
 public:
  /// F_p; throws std::invalid_argument unless p is a prime below 2^31.
  explicit FiniteField(std::uint32_t p);
  /// F_{p^k}; p^k is capped at 2^22 (arithmetic is table driven for k > 1).
  FiniteField(std::uint32_t p, unsigned k);

  /// Characteristic.
  std::uint32_t p() const { return p_; }
  unsigned degree() const { return k_; }
  /// q = p^k.
  std::uint32_t order() const { return q_; }
  FiniteField prime_subfield() const { return FiniteField(p_); }
  /// "F_101" or "F_101^2".
  std::string name() const {
    return "F_" + std::to_string(p_) + (k_ == 1 ? "" : "^" + std::to_string(k_));
  }

  /// Image of an integer in the prime subfield.
  Scalar reduce(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const {
    if (k_ != 1) return ext_add(a, b);
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const {
    if (k_ != 1) return ext_add(a, neg(b));
    return a >= b ? a - b : a + p_ - b;
  }
  Scalar neg(Scalar a) const {
    if (k_ != 1) return ext_neg(a);
    return a == 0 ? 0 : p_ - a;
  }
  Scalar mul(Scalar a, Scalar b) const {
    if (k_ != 1) return ext_mul(a, b);
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv(Scalar a) const;

  bool operator==(const FiniteField& o) const { return p_ == o.p_ && k_ == o.k_; }

 private:
  Scalar ext_add(Scalar a, Scalar b) const;
  Scalar ext_neg(Scalar a) const;
  Scalar ext_mul(Scalar a, Scalar b) const;

  std::uint32_t p_;
  unsigned k_ = 1;
  std::uint32_t q_;
  std::shared_ptr<const ExtensionTables> ext_;
};

class Matrix {
 public:
  Matrix(FiniteField field, std::size_t rows, std::size_t cols);
  /// Entries given row-major; integers are reduced mod p.
  Matrix(FiniteField field, std::size_t rows, std::size_t cols,
         const std::vector<std::int64_t>& entries);

  static Matrix identity(FiniteField field, std::size_t n);
  /// Stacks equal-length rows; `cols` is needed when rows is empty.
  static Matrix from_rows(FiniteField field, std::size_t cols,
                          const std::vector<Vec>& rows);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vec row_vec(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const;
  Vec apply(std::span<const Scalar> x) const;

  bool operator==(const Matrix&) const = default;

 private:
  FiniteField field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// The same entries over a field containing m's field (same characteristic,
/// m over the prime field).
Matrix extend_scalars(const Matrix& m, const FiniteField& ext);
/// Rows of `a` followed by rows of `b`.
Matrix vstack(const Matrix& a, const Matrix& b);

/// Canonical reduced row-echelon form (zero rows kept at the bottom).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Incremental echelon basis. Inserting a vector reduces it against the
/// current rows; it is kept only if independent of them.
class EchelonBasis {
 public:
  EchelonBasis(FiniteField field, std::size_t dim);
  bool insert(Vec v);
  bool in_span(Vec v) const;
  std::size_t size() const { return rows_.size(); }
  /// Canonical RREF of the span.
  Matrix canonical() const;

 private:
  void reduce(Vec& v) const;

  FiniteField field_;
  std::size_t dim_;
  std::vector<Vec> rows_;            // each row has a leading 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

class Subspace {
 public:
  /// Zero subspace of F_p^ambient_dim.
  Subspace(FiniteField field, std::size_t ambient_dim);
  /// Span of the rows of `spanning` (any rank).
  static Subspace span(const Matrix& spanning);
  static Subspace span(FiniteField field, std::size_t ambient_dim,
                       const std::vector<Vec>& vectors);
  static Subspace full(FiniteField field, std::size_t ambient_dim);

  const FiniteField& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  /// Basis rows in canonical RREF.
  const Matrix& basis() const { return basis_; }
  bool contains_vector(std::span<const Scalar> v) const;

  bool operator==(const Subspace&) const = default;

 private:
  explicit Subspace(Matrix canonical_basis) : basis_(std::move(canonical_basis)) {}
  Matrix basis_;
};

/// Column space of m, inside F_p^rows.
Subspace image(const Matrix& m);
/// Null space of m, inside F_p^cols.
Subspace kernel(const Matrix& m);
/// Image of a subspace under a linear map.
Subspace map_subspace(const Matrix& m, const Subspace& s);
/// Preimage {x : m x in target}.
Subspace preimage(const Matrix& m, const Subspace& target);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {y : <y, x> = 0 for all x in s}.
Subspace annihilator(const Subspace& s);
/// True iff b is a subspace of a.
bool contains(const Subspace& a, const Subspace& b);
/// Rows of `outer`'s basis that extend a basis of `inner` to one of
/// `outer`, as a subspace (a complement of inner in outer).
Subspace complement_in(const Subspace& inner, const Subspace& outer);

/// Gaussian binomial [n choose k]_q, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

class EnumerationBudgetError : public std::runtime_error {
 public:
  EnumerationBudgetError(std::uint64_t count, std::uint64_t budget);
  std::uint64_t count() const { return count_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t count_;
  std::uint64_t budget_;
};

/// Visits every dim-dimensional subspace of `ambient` once, in canonical
/// echelon order of coordinates relative to ambient's basis. The visitor
/// returns false to stop early; the function returns false iff stopped.
/// Throws EnumerationBudgetError when the count exceeds `budget`.
bool for_each_subspace(const Subspace& ambient, std::size_t dim,
                       const std::function<bool(const Subspace&)>& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<Subspace> enumerate_subspaces(
    const Subspace& ambient, std::size_t dim,
    std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace quivcomp

#endif  // QUIVCOMP_FIELD_HPP
