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

#include "quivcomp/field.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace quivcomp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p) : p_(p), q_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a prime below 2^31");
  }
}

// log/exp tables for F_{p^k} relative to a primitive element x
struct ExtensionTables {
  std::vector<Scalar> log;  // indexed by element; log[0] unused
  std::vector<Scalar> exp;  // exp[i] = x^i, i < q-1
  std::vector<Scalar> pow;  // p^j
};

namespace {

// x * e in F_p[x]/(x^k + c_{k-1} x^{k-1} + ... + c_0), e as base-p digits
Scalar times_x(Scalar e, const std::vector<Scalar>& c, const std::vector<Scalar>& pw,
               std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(c.size());
  const Scalar top = e / pw[k - 1];
  Scalar out = 0;
  for (unsigned j = k; j-- > 0;) {
    Scalar d = j == 0 ? 0 : (e / pw[j - 1]) % p;
    // subtract top * c_j
    Scalar t = static_cast<Scalar>(static_cast<std::uint64_t>(top) * c[j] % p);
    d = d >= t ? d - t : d + p - t;
    out += d * pw[j];
  }
  return out;
}

std::shared_ptr<const ExtensionTables> build_tables(std::uint32_t p, unsigned k) {
  auto t = std::make_shared<ExtensionTables>();
  t->pow.resize(k + 1);
  t->pow[0] = 1;
  for (unsigned j = 1; j <= k; ++j) t->pow[j] = t->pow[j - 1] * p;
  const std::uint32_t q = t->pow[k];
  t->log.assign(q, 0);
  t->exp.assign(q - 1, 0);
  // try monic polynomials in order until x has order q-1
  for (std::uint32_t code = 1; code < q; ++code) {
    std::vector<Scalar> c(k);
    for (unsigned j = 0; j < k; ++j) c[j] = (code / t->pow[j]) % p;
    if (c[0] == 0) continue;
    Scalar e = 1;
    std::uint32_t i = 0;
    bool ok = true;
    for (; i < q - 1; ++i) {
      if (i > 0 && e == 1) {
        ok = false;
        break;
      }
      t->exp[i] = e;
      t->log[e] = i;
      e = times_x(e, c, t->pow, p);
    }
    if (ok && e == 1) return t;
  }
  throw std::logic_error("no primitive polynomial found");
}

std::shared_ptr<const ExtensionTables> cached_tables(std::uint32_t p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const ExtensionTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot = build_tables(p, k);
  return slot;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned k) : FiniteField(p) {
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned j = 0; j < k; ++j) {
    q *= p;
    if (q > (1u << 22)) {
      throw std::invalid_argument("field of order " + std::to_string(p) + "^" +
                                  std::to_string(k) + " is too large (limit 2^22)");
    }
  }
  k_ = k;
  q_ = static_cast<std::uint32_t>(q);
  if (k > 1) ext_ = cached_tables(p, k);
}

Scalar FiniteField::ext_add(Scalar a, Scalar b) const {
  Scalar out = 0;
  for (unsigned j = 0; j < k_; ++j) {
    Scalar s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * ext_->pow[j];
    a /= p_;
    b /= p_;
  }
  return out;
}

Scalar FiniteField::ext_neg(Scalar a) const {
  Scalar out = 0;
  for (unsigned j = 0; j < k_; ++j) {
    Scalar d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * ext_->pow[j];
    a /= p_;
  }
  return out;
}

Scalar FiniteField::ext_mul(Scalar a, Scalar b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = ext_->log[a] + ext_->log[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return ext_->exp[s];
}

Scalar FiniteField::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("inverse of zero in F_q");
  if (k_ != 1) return ext_->exp[(q_ - 1 - ext_->log[a]) % (q_ - 1)];
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return reduce(t);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(FiniteField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(FiniteField field, std::size_t rows, std::size_t cols,
               const std::vector<std::int64_t>& entries)
    : Matrix(field, rows, cols) {
  if (entries.size() != rows * cols) {
    throw std::invalid_argument("matrix expects " + std::to_string(rows * cols) +
                                " entries, got " + std::to_string(entries.size()));
  }
  for (std::size_t k = 0; k < entries.size(); ++k) data_[k] = field.reduce(entries[k]);
}

Matrix Matrix::identity(FiniteField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(FiniteField field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows in from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Vec Matrix::row_vec(std::size_t r) const {
  auto s = row(r);
  return Vec(s.begin(), s.end());
}

Vec Matrix::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
}

Vec Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("apply: vector length " + std::to_string(x.size()) +
                                " vs " + std::to_string(cols_) + " columns");
  }
  Vec y(rows_, 0);
  if (field_.degree() != 1) {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) y[r] = field_.add(y[r], field_.mul((*this)(r, c), x[c]));
    return y;
  }
  const std::uint64_t p = field_.p();
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc = (acc + static_cast<std::uint64_t>((*this)(r, c)) * x[c]) % p;
    }
    y[r] = static_cast<Scalar>(acc);
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw std::invalid_argument("matrix product over different fields");
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix c(a.field(), a.rows(), b.cols());
  const FiniteField& f = a.field();
  if (f.degree() != 1) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        const Scalar x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
      }
    return c;
  }
  const std::uint64_t p = f.p();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = (acc + static_cast<std::uint64_t>(a(i, k)) * b(k, j)) % p;
      }
      c(i, j) = static_cast<Scalar>(acc);
    }
  }
  return c;
}

Matrix extend_scalars(const Matrix& m, const FiniteField& ext) {
  if (m.field().p() != ext.p() || m.field().degree() != 1) {
    throw std::invalid_argument("extend_scalars: F_" + std::to_string(ext.p()) + "^" +
                                std::to_string(ext.degree()) + " does not contain the matrix field");
  }
  Matrix out(ext, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("vstack: " + std::to_string(a.cols()) + " vs " +
                                std::to_string(b.cols()) + " columns");
  }
  Matrix c(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a(r, k);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t k = 0; k < b.cols(); ++k) c(a.rows() + r, k) = b(r, k);
  return c;
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const FiniteField& f = m.field();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(piv, k), a(lead, k));
    }
    Scalar s = f.inv(a(lead, col));
    for (std::size_t k = col; k < a.cols(); ++k) a(lead, k) = f.mul(a(lead, k), s);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col) == 0) continue;
      Scalar factor = a(r, col);
      for (std::size_t k = col; k < a.cols(); ++k) {
        a(r, k) = f.sub(a(r, k), f.mul(factor, a(lead, k)));
      }
    }
    ++lead;
  }
  return a;
}

std::size_t rank(const Matrix& m) {
  EchelonBasis e(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vec(r));
  return e.size();
}

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(FiniteField field, std::size_t dim) : field_(field), dim_(dim) {}

void EchelonBasis::reduce(Vec& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = v[pivots_[k]];
    if (c == 0) continue;
    const Vec& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < dim_; ++j) {
      if (row[j] != 0) v[j] = field_.sub(v[j], field_.mul(c, row[j]));
    }
  }
}

bool EchelonBasis::in_span(Vec v) const {
  if (v.size() != dim_) throw std::invalid_argument("in_span: dimension mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Scalar x) { return x == 0; });
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != dim_) {
    throw std::invalid_argument("insert: vector length " + std::to_string(v.size()) +
                                " vs dimension " + std::to_string(dim_));
  }
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Scalar x) { return x != 0; });
  if (it == v.end()) return false;
  std::size_t piv = static_cast<std::size_t>(it - v.begin());
  Scalar s = field_.inv(v[piv]);
  for (std::size_t j = piv; j < dim_; ++j) v[j] = field_.mul(v[j], s);
  // keep earlier rows reduced at the new pivot
  for (auto& row : rows_) {
    Scalar c = row[piv];
    if (c == 0) continue;
    for (std::size_t j = piv; j < dim_; ++j) row[j] = field_.sub(row[j], field_.mul(c, v[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

Matrix EchelonBasis::canonical() const { return Matrix::from_rows(field_, dim_, rows_); }

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FiniteField field, std::size_t ambient_dim) : basis_(field, 0, ambient_dim) {}

Subspace Subspace::span(const Matrix& spanning) {
  EchelonBasis e(spanning.field(), spanning.cols());
  for (std::size_t r = 0; r < spanning.rows(); ++r) e.insert(spanning.row_vec(r));
  return Subspace(e.canonical());
}

Subspace Subspace::span(FiniteField field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  EchelonBasis e(field, ambient_dim);
  for (const auto& v : vectors) e.insert(v);
  return Subspace(e.canonical());
}

Subspace Subspace::full(FiniteField field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

bool Subspace::contains_vector(std::span<const Scalar> v) const {
  EchelonBasis e(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) e.insert(basis_.row_vec(r));
  return e.in_span(Vec(v.begin(), v.end()));
}

static void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument(std::string(op) + ": ambient dimensions " +
                                std::to_string(a.ambient_dim()) + " and " +
                                std::to_string(b.ambient_dim()) + " differ");
  }
  if (a.field() != b.field()) throw std::invalid_argument(std::string(op) + ": fields differ");
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace kernel(const Matrix& m) {
  const FiniteField& f = m.field();
  Matrix r = rref(m);
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t row = 0; row < r.rows(); ++row) {
    for (std::size_t c = 0; c < r.cols(); ++c) {
      if (r(row, c) != 0) {
        pivot_cols.push_back(c);
        is_pivot[c] = true;
        break;
      }
    }
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t row = 0; row < pivot_cols.size(); ++row) {
      x[pivot_cols[row]] = f.neg(r(row, free));
    }
    basis.push_back(std::move(x));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace map_subspace(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) {
    throw std::invalid_argument("map_subspace: map has " + std::to_string(m.cols()) +
                                " columns, subspace lives in dimension " +
                                std::to_string(s.ambient_dim()));
  }
  return Subspace::span(s.basis() * m.transpose());
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) {
    throw std::invalid_argument("preimage: map has " + std::to_string(m.rows()) +
                                " rows, target lives in dimension " +
                                std::to_string(target.ambient_dim()));
  }
  Subspace ann = annihilator(target);
  return kernel(ann.basis() * m);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  return annihilator(sum(annihilator(a), annihilator(b)));
}

bool contains(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "contains");
  if (b.dim() > a.dim()) return false;
  EchelonBasis e(a.field(), a.ambient_dim());
  for (std::size_t r = 0; r < a.dim(); ++r) e.insert(a.basis().row_vec(r));
  for (std::size_t r = 0; r < b.dim(); ++r) {
    if (!e.in_span(b.basis().row_vec(r))) return false;
  }
  return true;
}

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
  require_same_ambient(inner, outer, "complement_in");
  EchelonBasis e(inner.field(), inner.ambient_dim());
  for (std::size_t r = 0; r < inner.dim(); ++r) e.insert(inner.basis().row_vec(r));
  std::vector<Vec> chosen;
  for (std::size_t r = 0; r < outer.dim(); ++r) {
    Vec v = outer.basis().row_vec(r);
    if (e.insert(v)) chosen.push_back(std::move(v));
  }
  if (e.size() != outer.dim()) {
    throw std::invalid_argument("complement_in: inner is not contained in outer");
  }
  return Subspace::span(outer.field(), outer.ambient_dim(), chosen);
}

// ---------------------------------------------------------------------------
// Enumeration

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], saturating.
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return std::uint64_t{0};
    return a > kMax / b ? kMax : a * b;
  };
  std::vector<std::vector<std::uint64_t>> g(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    g[m][0] = 1;
    std::uint64_t qj = 1;
    for (std::size_t j = 1; j <= std::min(m, k); ++j) {
      qj = sat_mul(qj, q);
      g[m][j] = sat_add(g[m - 1][j - 1], j <= m - 1 ? sat_mul(qj, g[m - 1][j]) : 0);
    }
  }
  return g[n][k];
}

EnumerationBudgetError::EnumerationBudgetError(std::uint64_t count, std::uint64_t budget)
    : std::runtime_error("subspace enumeration of " + std::to_string(count) +
                         " subspaces exceeds budget " + std::to_string(budget)),
      count_(count),
      budget_(budget) {}

bool for_each_subspace(const Subspace& ambient, std::size_t dim,
                       const std::function<bool(const Subspace&)>& visit, std::uint64_t budget) {
  const std::size_t m = ambient.dim();
  if (dim > m) {
    throw std::invalid_argument("for_each_subspace: dim " + std::to_string(dim) +
                                " exceeds ambient dimension " + std::to_string(m));
  }
  const FiniteField f = ambient.field();
  const std::uint64_t count = gaussian_binomial(m, dim, f.order());
  if (count > budget) throw EnumerationBudgetError(count, budget);

  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    // free positions of an RREF with these pivot columns
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r) {
      std::size_t next_pivot = 0;
      for (std::size_t c = pivots[r] + 1; c < m; ++c) {
        while (next_pivot < dim && pivots[next_pivot] < c) ++next_pivot;
        if (next_pivot < dim && pivots[next_pivot] == c) continue;
        free.emplace_back(r, c);
      }
    }
    Matrix coords(f, dim, m);
    for (std::size_t r = 0; r < dim; ++r) coords(r, pivots[r]) = 1;
    std::vector<Scalar> digits(free.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free.size(); ++k) coords(free[k].first, free[k].second) = digits[k];
      if (!visit(Subspace::span(coords * ambient.basis()))) return false;
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == f.order()) digits[k++] = 0;
      if (k == digits.size()) break;
    }
    // next pivot combination in lexicographic order
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == m - dim + (i - 1)) --i;
    if (i == 0) break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return true;
}

std::vector<Subspace> enumerate_subspaces(const Subspace& ambient, std::size_t dim, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(
      ambient, dim,
      [&](const Subspace& s) {
        out.push_back(s);
        return true;
      },
      budget);
  return out;
}

}  // namespace quivcomp
