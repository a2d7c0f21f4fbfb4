#pragma once

#include <vector>

#include "mhs/linalg.hpp"
#include "mhs/polynomial.hpp"

namespace mhs {

struct Ideal {
  std::size_t nvars = 0;
  std::vector<Polynomial> generators;  // zero generators are dropped
};

/// Reduced Gröbner basis: monic, sorted by increasing leading monomial, and
/// no term of any element is divisible by another element's leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order,
                std::vector<Polynomial> polys);

  std::size_t nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  const std::vector<Monomial>& leading_monomials() const { return leading_; }
  bool is_unit_ideal() const;

 private:
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> leading_;
};

/// Buchberger's algorithm with the coprime and chain criteria. S-pairs are
/// taken in order of (total degree of the lcm, first index, second index),
/// so the output depends only on the order and the generator sequence.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order);

/// Fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Standard monomials, ascending in the basis order. Throws
/// Error(NotZeroDimensional) when the staircase is infinite.
std::vector<Monomial> quotient_basis(const GroebnerBasis& g);

/// Coordinates of a normal form in a standard-monomial basis. Throws
/// Error(InvalidArgument) if a term is not in the basis.
RatVector coordinates(const Polynomial& normal, const std::vector<Monomial>& basis);

/// Matrix of v -> NF(p * v) on the quotient; column a is the image of basis[a].
RatMatrix multiplication_matrix(const GroebnerBasis& g,
                                const std::vector<Monomial>& basis,
                                const Polynomial& p);

/// True iff multiplication by each variable is nilpotent on the quotient,
/// i.e. the zero set of the ideal is the origin alone.
bool variable_nilpotency_check(const GroebnerBasis& g);

}  // namespace mhs
