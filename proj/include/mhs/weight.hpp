#pragma once

// Jacobson-Morosov weight filtration of a nilpotent operator and the
// polarization checks built on its primitive parts.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhs/hodge.hpp"
#include "mhs/linalg.hpp"
#include "mhs/residue.hpp"

namespace mhs {

struct WeightFiltration {
  int center = 0;
  std::size_t dimension = 0;
  /// Column bases of W_l for lowest - 1 <= l <= highest.
  std::map<int, RatMatrix> steps;
  /// Representatives of Gr_l: columns extending W_{l-1} to W_l.
  std::map<int, RatMatrix> graded;
  int lowest = 0, highest = -1;

  /// W_l for any l; zero below the range, everything above it.
  RatMatrix step(int l) const;
  std::map<int, std::size_t> graded_dimensions() const;
};

/// W_l = sum_{i >= max(0, -l)} ker N^{l+1+i} ∩ im N^i, shifted by center.
/// Throws Error(NotNilpotent).
WeightFiltration nilpotent_weight_filtration(const RatMatrix& n, int center = 0);

struct PrimitiveDecomposition {
  /// Representatives of P_l = ker(N^{l+1} : Gr_l -> Gr_{-l-2}), l >= 0.
  std::map<int, RatMatrix> primitive;

  std::map<int, std::size_t> dimensions() const;
};

PrimitiveDecomposition primitive_parts(const WeightFiltration& w, const RatMatrix& n);

/// #blocks of size s equals dim P_{s-1}, and dim Gr_l = sum_r dim P_{|l|+2r}.
bool lefschetz_consistent(const WeightFiltration& w, const PrimitiveDecomposition& p,
                          const JordanPartition& partition);

/// True iff N W_l ⊆ W_{l-2} and N^l : Gr_l -> Gr_{-l} is bijective for all l >= 0.
bool jacobson_morosov_axioms(const WeightFiltration& w, const RatMatrix& n);

struct LevelForm {
  /// res(u_i, C~ N^l u_j) on the P_l representatives.
  std::map<int, RatMatrix> matrices;
  /// False when C~ was unavailable and the identity was used.
  bool twisted = false;
};

/// `ctilde` is empty for germs without a Hodge grading. Throws
/// Error(DegenerateLevelForm) when some level matrix is singular.
LevelForm level_form(const ResidueForm& r, const RatMatrix& n, const PrimitiveDecomposition& p,
                     const std::optional<RatMatrix>& ctilde);

struct BilinearReport {
  bool orthogonal = true;     // P_r ⊥ P_s for r != s
  bool well_defined = true;   // res(W_l, W_{-l-1}) = 0
  bool self_adjoint = true;   // res(N u, v) = res(u, N v)
  bool nondegenerate = true;
  std::optional<bool> definite;           // qh only
  /// t with i^t (-1)^{n(n+1)/2} W positive definite.
  std::optional<int> global_exponent;
  std::vector<std::string> findings;

  bool ok() const {
    return orthogonal && well_defined && self_adjoint && nondegenerate && definite.value_or(true);
  }
};

struct HodgeData {
  const HodgeGrading* grading;
  const Conjugation* conjugation;
};

BilinearReport bilinear_relation_check(const ResidueForm& r, const RatMatrix& n,
                                       const WeightFiltration& w,
                                       const PrimitiveDecomposition& p,
                                       std::optional<HodgeData> hodge);

/// Hermitian matrix i^{p_a-q_a} res(u_a, C~ N^l conj(u_b)) on the classes of
/// P_l, for qh germs (then N = 0 and only l = 0 occurs).
GaussianMatrix hermitian_level_form(const ResidueForm& r, const HodgeGrading& h,
                                    const Conjugation& k, bool with_weil);

}  // namespace mhs
