#include "mhs/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>

#include "mhs/error.hpp"

namespace mhs {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows,
                                  const std::vector<RatVector>& cols) {
  RatMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::row(std::size_t r) const {
  return RatVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<RatVector> RatMatrix::columns() const {
  std::vector<RatVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void RatMatrix::set_column(std::size_t c, const RatVector& v) {
  assert(v.size() == rows_);
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const Rational& x) { return x == 0; });
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool RatMatrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  assert(a.cols_ == b.rows_);
  RatMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

RatVector operator*(const RatMatrix& a, const RatVector& v) {
  assert(a.cols_ == v.size());
  RatVector out(a.rows_, Rational(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (a(i, k) != 0 && v[k] != 0) out[i] += a(i, k) * v[k];
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

RatMatrix matrix_power(const RatMatrix& m, std::size_t e) {
  assert(m.is_square());
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
  assert(a.rows() == b.rows() || a.cols() == 0 || b.cols() == 0);
  std::size_t rows = std::max(a.rows(), b.rows());
  RatMatrix m(rows, a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  return m;
}

Rational dot(const RatVector& a, const RatVector& b) {
  assert(a.size() == b.size());
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

RatMatrix rref(const RatMatrix& input, std::vector<std::size_t>* pivots) {
  RatMatrix m = input;
  if (pivots) pivots->clear();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= factor * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

namespace {

// Rows scaled to integers; the scaling does not change rank or the sign of
// the determinant, and `scale` accumulates the product of row multipliers.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m,
                                               Rational* scale) {
  std::vector<std::vector<Integer>> rows(m.rows(),
                                         std::vector<Integer>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rational v = m(r, c) * Rational(l);
      rows[r][c] = v.get_num();
    }
    if (scale) *scale *= Rational(l);
  }
  return rows;
}

// Bareiss elimination in place; returns rank and the sign of the row
// permutation. Every division is exact.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, int* sign) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Integer prev = 1;
  std::size_t r = 0;
  int s = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      s = -s;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = v;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (sign) *sign = s;
  return r;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto rows = integer_rows(m, nullptr);
  return bareiss(rows, nullptr);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  if (m.rows() == 0) return 1;
  Rational scale;
  auto rows = integer_rows(m, &scale);
  int sign = 1;
  if (bareiss(rows, &sign) < m.rows()) return 0;
  return Rational(rows.back().back()) * sign / scale;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix red = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square())
    throw Error(ErrorCode::Singular, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix red = rref(hstack(m, RatMatrix::identity(n)));
  for (std::size_t i = 0; i < n; ++i)
    if (red(i, i) != 1) throw Error(ErrorCode::Singular, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

bool solve(const RatMatrix& m, const RatVector& b, RatVector* x) {
  RatMatrix aug = hstack(m, RatMatrix::from_columns(m.rows(), {b}));
  std::vector<std::size_t> pivots;
  RatMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == m.cols()) return false;
  if (x) {
    x->assign(m.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      (*x)[pivots[i]] = red(i, m.cols());
  }
  return true;
}

RatMatrix column_space(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix red = rref(m.transpose(), &pivots);
  RatMatrix out(m.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, i) = red(i, r);
  return out;
}

RatMatrix intersect(const RatMatrix& a, const RatMatrix& b) {
  const std::size_t n = std::max(a.rows(), b.rows());
  if (a.cols() == 0 || b.cols() == 0) return RatMatrix(n, 0);
  RatMatrix joint = hstack(a, Rational(-1) * b);
  std::vector<RatVector> vecs;
  for (const auto& k : kernel_basis(joint)) {
    RatVector xa(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.cols()));
    vecs.push_back(a * xa);
  }
  return column_space(RatMatrix::from_columns(n, vecs));
}

RatMatrix span_sum(const RatMatrix& a, const RatMatrix& b) {
  return column_space(hstack(a, b));
}

bool contained_in(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() == 0) return true;
  if (b.cols() == 0) return a.is_zero();
  return rank(hstack(b, a)) == rank(b);
}

RatMatrix extend_basis(const RatMatrix& base, const RatMatrix& candidates) {
  const std::size_t n = std::max(base.rows(), candidates.rows());
  RatMatrix current = base.cols() ? base : RatMatrix(n, 0);
  std::size_t current_rank = rank(current);
  std::vector<RatVector> added;
  for (std::size_t c = 0; c < candidates.cols(); ++c) {
    RatVector v = candidates.column(c);
    RatMatrix trial = hstack(current, RatMatrix::from_columns(n, {v}));
    std::size_t r = rank(trial);
    if (r > current_rank) {
      current = std::move(trial);
      current_rank = r;
      added.push_back(std::move(v));
    }
  }
  return RatMatrix::from_columns(n, added);
}

// ---- Jordan partitions -----------------------------------------------------

std::size_t JordanPartition::dimension() const {
  return std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
}

std::size_t JordanPartition::count(std::size_t size) const {
  return static_cast<std::size_t>(std::count(blocks.begin(), blocks.end(), size));
}

JordanPartition jordan_partition_nilpotent(const RatMatrix& n) {
  if (!n.is_square())
    throw Error(ErrorCode::InvalidArgument, "operator must be square");
  const std::size_t dim = n.rows();
  std::vector<std::size_t> ranks{dim};
  RatMatrix power = RatMatrix::identity(dim);
  while (ranks.back() > 0) {
    if (ranks.size() > dim)
      throw Error(ErrorCode::NotNilpotent, "operator is not nilpotent");
    power = power * n;
    std::size_t r = rank(power);
    if (r == ranks.back())
      throw Error(ErrorCode::NotNilpotent, "operator is not nilpotent");
    ranks.push_back(r);
  }
  // at_least[k] = #blocks of size >= k = ranks[k-1] - ranks[k].
  JordanPartition p;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t i = 0; i < at_least - longer; ++i) p.blocks.push_back(k);
  }
  return p;
}

RatMatrix nilpotent_from_partition(const JordanPartition& p) {
  RatMatrix m(p.dimension(), p.dimension());
  std::size_t offset = 0;
  for (auto size : p.blocks) {
    for (std::size_t i = 0; i + 1 < size; ++i) m(offset + i + 1, offset + i) = 1;
    offset += size;
  }
  return m;
}

// ---- inertia ---------------------------------------------------------------

namespace {

void symmetric_swap(RatMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(i, k), a(j, k));
  for (std::size_t k = 0; k < a.rows(); ++k) std::swap(a(k, i), a(k, j));
}

}  // namespace

Inertia symmetric_signature(const RatMatrix& s) {
  if (!s.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "form is not symmetric");
  RatMatrix a = s;
  const std::size_t n = a.rows();
  Inertia in;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv < n) {
      symmetric_swap(a, k, piv);
      const Rational d = a(k, k);
      (d > 0 ? in.positive : in.negative) += 1;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a(i, k) == 0) continue;
        Rational factor = a(i, k) / d;
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(k, j) != 0) a(i, j) -= factor * a(k, j);
      }
      ++k;
      continue;
    }
    // Zero diagonal: look for a hyperbolic pair.
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n && pi == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == n) {
      in.zero += n - k;
      break;
    }
    symmetric_swap(a, k, pi);
    symmetric_swap(a, k + 1, pj);
    const Rational h = a(k, k + 1);
    // Schur complement against [[0, h], [h, 0]], whose inverse is
    // [[0, 1/h], [1/h, 0]].
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j) {
        Rational t = a(i, k) * a(k + 1, j) + a(i, k + 1) * a(k, j);
        if (t != 0) a(i, j) -= t / h;
      }
    in.positive += 1;
    in.negative += 1;
    k += 2;
  }
  return in;
}

Inertia hermitian_signature(const RatMatrix& re, const RatMatrix& im) {
  if (!re.is_symmetric() || !im.is_antisymmetric() || re.rows() != im.rows())
    throw Error(ErrorCode::NotHermitian, "form is not Hermitian");
  const std::size_t n = re.rows();
  RatMatrix real(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      real(i, j) = re(i, j);
      real(n + i, n + j) = re(i, j);
      real(i, n + j) = -im(i, j);
      real(n + i, j) = im(i, j);
    }
  Inertia twice = symmetric_signature(real);
  return {twice.positive / 2, twice.negative / 2, twice.zero / 2};
}

}  // namespace mhs
