#pragma once

// Grothendieck residue pairing on the Milnor algebra, computed exactly from
// the Bezoutian of the partials, plus a floating-point Morse-sum oracle.

#include <complex>
#include <cstdint>
#include <vector>

#include "mhs/linalg.hpp"
#include "mhs/milnor.hpp"

namespace mhs {

/// Finite-difference determinant of the partials g_i = ∂_i f in 2N
/// variables, x block first and y block second:
///   B_ij = (g_i(y_<j, x_>=j) - g_i(y_<=j, x_>j)) / (x_j - y_j).
Polynomial bezoutian_polynomial(const Polynomial& f);

enum class ReductionOrder { y_then_x, x_then_y };

struct Bezoutian {
  Polynomial delta;
  /// C_ab: coefficient of e_a(x) e_b(y) in the reduction of delta.
  RatMatrix reduced;
};

Bezoutian bezoutian(const MilnorAlgebra& a, ReductionOrder order = ReductionOrder::y_then_x);

/// res(e_a, e_b) and the functional l(v) = res(v, 1).
struct ResidueForm {
  RatMatrix gram;
  RatVector functional;
  RatMatrix bezout;

  std::size_t dimension() const { return gram.rows(); }
};

/// G = C^{-1}. Throws Error(SingularBezoutian) if C is singular.
ResidueForm gram_matrix(const MilnorAlgebra& a);

/// u^T G v for coordinate vectors.
Rational residue_pair(const ResidueForm& r, const RatVector& u, const RatVector& v);

/// l(NF(Hess f)); throws Error(NormalizationFailure) unless it equals mu.
Rational hessian_residue_check(const MilnorAlgebra& a, const ResidueForm& r);

struct MorseSum {
  /// sum_r e_a(s_r) e_b(s_r) / Hess f(s_r), real parts.
  std::vector<std::vector<double>> matrix;
  /// Largest imaginary part seen in the sums; should be roundoff.
  double max_imaginary = 0;
  std::vector<std::vector<std::complex<double>>> points;
};

/// Rational perturbation with entries scale * (1/2 .. 3/2), deterministic in seed.
std::vector<Rational> random_perturbation(std::size_t nvars, const Rational& scale,
                                          std::uint64_t seed);

/// Morse sum for f_s = f + sum_i s_i x_i. Critical points are the joint
/// eigenvalues of the perturbed multiplication matrices; only the mu points
/// nearest the origin are kept. Throws Error(NotMorse) when the perturbed
/// points collide or a Hessian vanishes, Error(NoConvergence) when the
/// eigen-solve or Newton polishing fails.
MorseSum morse_oracle(const MilnorAlgebra& a, const std::vector<Rational>& s);

/// Largest entrywise |oracle - G|.
double max_deviation(const MorseSum& m, const RatMatrix& gram);

}  // namespace mhs
