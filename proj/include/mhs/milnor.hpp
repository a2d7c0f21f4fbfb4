#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mhs/groebner.hpp"
#include "mhs/linalg.hpp"
#include "mhs/polynomial.hpp"

namespace mhs {

/// Quasi-homogeneous weights: every monomial of f has weighted degree 1.
struct QhWeights {
  std::optional<std::vector<Rational>> weights;
  /// Set when the linear system has a positive-dimensional solution set.
  bool ambiguous = false;

  bool has_value() const { return weights.has_value(); }
};

/// Generated by all partial derivatives. Throws Error(ZeroGerm) for constant f.
Ideal jacobian_ideal(const Polynomial& f);

/// Solves sum_i w_i a_i = 1 over the monomials of f (constant term ignored).
/// Weights are returned only for a unique, strictly positive solution.
QhWeights detect_qh_weights(const Polynomial& f);

/// Milnor algebra Q[x]/(∂f) of a germ with an isolated critical point at the
/// origin. When the Jacobian ideal has other zeros the quotient is replaced
/// by its component at the origin, Q[x]/((∂f) + m^K) for stable K.
/// Basis monomials are ordered by ascending level sum_i w_i (a_i + 1) when
/// f is quasi-homogeneous, with grevlex breaking ties; otherwise by grevlex.
class MilnorAlgebra {
 public:
  /// Throws Error(ZeroGerm) or Error(NotIsolatedAtOrigin). The constant term
  /// of f is dropped so that f(0) = 0.
  MilnorAlgebra(const Polynomial& f, std::vector<std::string> variables,
                MonomialOrder order = {});

  const Polynomial& germ() const { return germ_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  /// Complex dimension n of the Milnor fiber.
  std::size_t fiber_dimension() const { return variables_.size() - 1; }
  const MonomialOrder& order() const { return gb_.order(); }
  const GroebnerBasis& groebner() const { return gb_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t mu() const { return basis_.size(); }
  const QhWeights& qh() const { return qh_; }
  /// True when critical points away from 0 forced the local component.
  bool localized() const { return localized_; }
  bool is_quasi_homogeneous() const { return qh_.has_value(); }
  const std::vector<Rational>& weights() const;

  /// Level sum_i w_i (a_i + 1) of basis element a (qh germs only).
  Rational level(std::size_t a) const;
  std::optional<std::size_t> index_of(const Monomial& m) const;
  /// Position of the basis element 1.
  std::size_t unit_index() const;

  Polynomial normal_form(const Polynomial& p) const;
  /// Basis coordinates of NF(p).
  RatVector coordinates(const Polynomial& p) const;
  Polynomial element(const RatVector& coords) const;
  /// Unit vector of basis element a.
  RatVector unit_vector(std::size_t a) const;

  /// Cached matrix of multiplication by variable i.
  const RatMatrix& variable_matrix(std::size_t i) const { return var_matrices_[i]; }
  RatMatrix multiplication_matrix(const Polynomial& g) const;
  /// Multiplication by the germ, the operator written f-bar.
  const RatMatrix& germ_matrix() const { return germ_matrix_; }

  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& p) const;

 private:
  Polynomial germ_;
  std::vector<std::string> variables_;
  GroebnerBasis gb_;
  QhWeights qh_;
  std::vector<Monomial> basis_;
  std::vector<RatMatrix> var_matrices_;
  RatMatrix germ_matrix_;
  bool localized_ = false;
};

}  // namespace mhs
