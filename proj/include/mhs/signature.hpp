#pragma once

// Polarization signature of a quasi-homogeneous germ, computed from Hodge
// numbers and directly from the Hermitian level forms.

#include <map>
#include <utility>

#include "mhs/hodge.hpp"
#include "mhs/residue.hpp"

namespace mhs {

struct HodgeNumberTable {
  std::size_t n = 0;
  /// Classes of weight n + 1 (integer spectral number).
  std::map<std::pair<int, int>, std::size_t> unipotent;
  std::map<std::pair<int, int>, std::size_t> other;

  std::size_t total() const;
};

HodgeNumberTable hodge_number_table(const HodgeGrading& h);

/// sum_{p+q=n+2} (-1)^q h_1 + 2 sum_{p+q>=n+3} (-1)^q h_1 + sum (-1)^q h_{!=1};
/// zero for odd n.
long long signature_formula(const HodgeNumberTable& t);

struct DirectSignature {
  /// Signature before calibration.
  long long raw = 0;
  int calibration_sign = 1;
  long long value() const { return calibration_sign * raw; }
};

/// Inertia of the Hermitian part of res(e_a, C~ conj(e_b)), summed over the
/// classes outside the radical of the intersection form (unipotent classes
/// of weight n + 1 are left out). The calibration sign makes x^2+y^2+z^2
/// come out as its formula value; it is computed once and shared by every
/// germ. Throws Error(CalibrationFailure) if the anchor cannot be matched.
DirectSignature signature_direct(const ResidueForm& r, const HodgeGrading& h,
                                 const Conjugation& k);

/// The uncalibrated inertia alone.
long long signature_direct_raw(const ResidueForm& r, const HodgeGrading& h,
                               const Conjugation& k);

/// Global calibration sign, fixed on x^2 + y^2 + z^2.
int calibration_sign();

struct SignatureComparison {
  long long formula = 0;
  DirectSignature direct;
  bool agree() const { return formula == direct.value(); }
};

/// Both pipelines on a qh germ. Throws Error(NotQuasiHomogeneous).
SignatureComparison compare_signatures(const MilnorAlgebra& a);

}  // namespace mhs
