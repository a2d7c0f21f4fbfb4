#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mhs/rational.hpp"

namespace mhs {

using RatVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const RatVector& d);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(std::size_t rows,
                                const std::vector<RatVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVector column(std::size_t c) const;
  RatVector row(std::size_t r) const;
  std::vector<RatVector> columns() const;
  void set_column(std::size_t c, const RatVector& v);

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& v);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix matrix_power(const RatMatrix& m, std::size_t e);
/// [a | b], same row count.
RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
Rational dot(const RatVector& a, const RatVector& b);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Fraction-free (Bareiss) rank after clearing denominators row by row.
std::size_t rank(const RatMatrix& m);
/// Fraction-free determinant.
Rational determinant(const RatMatrix& m);
/// Basis of the right null space, one vector per free column of the RREF.
std::vector<RatVector> kernel_basis(const RatMatrix& m);
/// Throws Error(Singular) for a rank-deficient or non-square input.
RatMatrix inverse(const RatMatrix& m);
/// Some x with m x = b, or nothing when inconsistent.
bool solve(const RatMatrix& m, const RatVector& b, RatVector* x);

/// Canonical basis (columns) of the column space: transpose of the RREF of
/// the transpose. Equal subspaces give equal matrices.
RatMatrix column_space(const RatMatrix& m);
/// Column basis of span(a) ∩ span(b).
RatMatrix intersect(const RatMatrix& a, const RatMatrix& b);
/// Column basis of span(a) + span(b).
RatMatrix span_sum(const RatMatrix& a, const RatMatrix& b);
/// True when every column of `a` lies in span(b).
bool contained_in(const RatMatrix& a, const RatMatrix& b);
/// Columns of `candidates` (in order) that extend span(base) greedily.
RatMatrix extend_basis(const RatMatrix& base, const RatMatrix& candidates);

/// Block sizes of a nilpotent operator, sorted descending.
struct JordanPartition {
  std::vector<std::size_t> blocks;

  std::size_t dimension() const;
  /// Number of blocks of size exactly s.
  std::size_t count(std::size_t size) const;
  friend bool operator==(const JordanPartition&, const JordanPartition&) = default;
};

/// From ranks r_k of N^k: #blocks of size >= k is r_{k-1} - r_k.
/// Throws Error(NotNilpotent) when N^dim != 0.
JordanPartition jordan_partition_nilpotent(const RatMatrix& n);
/// A nilpotent matrix in Jordan form with the given block sizes.
RatMatrix nilpotent_from_partition(const JordanPartition& p);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  long long signature() const {
    return static_cast<long long>(positive) - static_cast<long long>(negative);
  }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia by symmetric congruence diagonalization. A 2x2 hyperbolic pivot
/// is used when every remaining diagonal entry vanishes. Throws
/// Error(NotSymmetric).
Inertia symmetric_signature(const RatMatrix& s);

/// Inertia of the Hermitian form re + i*im: half the inertia of the real
/// symmetric realification [[re, -im], [im, re]]. Throws Error(NotHermitian).
Inertia hermitian_signature(const RatMatrix& re, const RatMatrix& im);

}  // namespace mhs
