#pragma once

// Spectrum and Hodge bigrading of a
// quasi-homogeneous Milnor algebra. Everything is indexed by the algebra's
// basis order, which for qh germs is already ascending in level.

#include <map>
#include <utility>
#include <vector>

#include "mhs/milnor.hpp"
#include "mhs/residue.hpp"

namespace mhs {

struct SpectrumRow {
  Monomial monomial;
  Rational level;
  /// Spectral number level - 1.
  Rational beta;
  /// level mod 1; the eigenvalue is exp(-2 pi i level).
  Rational eigen_residue;
  bool unipotent = false;
};

struct SpectrumTable {
  std::size_t n = 0;  // fiber dimension
  std::vector<SpectrumRow> rows;

  std::size_t size() const { return rows.size(); }
};

/// Throws Error(NotQuasiHomogeneous).
SpectrumTable spectrum(const MilnorAlgebra& a);

struct HodgeIndex {
  int p = 0, q = 0;
  int weight() const { return p + q; }
  friend bool operator==(const HodgeIndex&, const HodgeIndex&) = default;
};

struct HodgeGrading {
  std::size_t n = 0;
  std::vector<HodgeIndex> index;

  std::map<std::pair<int, int>, std::size_t> dimensions() const;
  /// Basis positions in J^{p,q}, ascending.
  std::vector<std::size_t> block(int p, int q) const;
};

/// Non-integer beta: p = ceil(beta), q = n - p (weight n).
/// Integer beta: p = n - beta, q = n + 1 - p (weight n + 1).
HodgeGrading hodge_bigrading(const SpectrumTable& s);

/// Powers of i are kept as exponents mod 4.
inline int ipow_mod4(int e) { return ((e % 4) + 4) % 4; }

/// conj(e_a) = i^{exponent[a]} e_{kappa[a]}.
struct Conjugation {
  std::vector<std::size_t> kappa;
  std::vector<int> exponent;
  /// Orbits whose sign was flipped by the normalization below.
  std::size_t flipped_orbits = 0;
};

/// kappa reverses the basis order, except that inside a pair of
/// complementary level blocks whose residue pairing is monomial each class
/// goes to its residue partner (the two agree for Brieskorn-Pham germs).
/// The phase of each coefficient is forced by the weight (real on even
/// weight, +-i on odd weight); its sign on each kappa-orbit is normalized so
/// the orbit's Weil value has the sign of the orbit of 1.
/// Throws Error(AsymmetricSpectrum) unless l(a) + l(kappa a) = n + 1.
Conjugation conjugation_map(const SpectrumTable& s, const HodgeGrading& h,
                            const ResidueForm& r);

struct WeilSigns {
  /// (-1)^p per basis element.
  std::vector<int> ctilde;
  /// (p - q) mod 4.
  std::vector<int> weil_exponent;

  RatMatrix ctilde_matrix() const;
};

WeilSigns weil_signs(const HodgeGrading& h);

/// F^p + U_{p-1} = everything and F^p ∩ U_{p-1} = 0 for every p, where F^p
/// spans classes with index >= p and U_q those with index <= q.
bool opposite_filtration_check(const HodgeGrading& h);

/// Complex rational matrix kept as a (real, imaginary) pair.
struct GaussianMatrix {
  RatMatrix re, im;
};

/// The Weil form W(a, b) = i^{p_a - q_a} res(e_a, C~ conj(e_b)) on the given
/// basis positions.
GaussianMatrix weil_form(const ResidueForm& r, const HodgeGrading& h, const Conjugation& k,
                         const std::vector<std::size_t>& positions);

}  // namespace mhs
