#include "mhs/signature.hpp"

#include "mhs/error.hpp"
#include "mhs/weight.hpp"

namespace mhs {

std::size_t HodgeNumberTable::total() const {
  std::size_t s = 0;
  for (const auto& [pq, d] : unipotent) s += d;
  for (const auto& [pq, d] : other) s += d;
  return s;
}

HodgeNumberTable hodge_number_table(const HodgeGrading& h) {
  HodgeNumberTable t;
  t.n = h.n;
  const int unipotent_weight = static_cast<int>(h.n) + 1;
  for (const auto& i : h.index)
    ++(i.weight() == unipotent_weight ? t.unipotent : t.other)[{i.p, i.q}];
  return t;
}

long long signature_formula(const HodgeNumberTable& t) {
  if (t.n % 2 != 0) return 0;
  const int n = static_cast<int>(t.n);
  auto sgn = [](int q) { return q % 2 == 0 ? 1LL : -1LL; };
  long long s = 0;
  for (const auto& [pq, d] : t.unipotent) {
    const auto [p, q] = pq;
    const long long h = static_cast<long long>(d);
    if (p + q == n + 2) s += sgn(q) * h;
    else if (p + q >= n + 3) s += 2 * sgn(q) * h;
  }
  for (const auto& [pq, d] : t.other) s += sgn(pq.second) * static_cast<long long>(d);
  return s;
}

long long signature_direct_raw(const ResidueForm& r, const HodgeGrading& h,
                               const Conjugation& k) {
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < h.index.size(); ++a)
    if (h.index[a].weight() != static_cast<int>(h.n) + 1) keep.push_back(a);
  if (keep.empty()) return 0;
  GaussianMatrix full = hermitian_level_form(r, h, k, false);
  const std::size_t d = keep.size();
  RatMatrix re(d, d), im(d, d);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t a = keep[i], b = keep[j];
      re(i, j) = half * (full.re(a, b) + full.re(b, a));
      im(i, j) = half * (full.im(a, b) - full.im(b, a));
    }
  return hermitian_signature(re, im).signature();
}

int calibration_sign() {
  static const int sign = [] {
    const std::vector<std::string> vars{"x", "y", "z"};
    MilnorAlgebra a(parse_polynomial("x^2 + y^2 + z^2", vars), vars);
    auto s = spectrum(a);
    auto h = hodge_bigrading(s);
    auto r = gram_matrix(a);
    auto k = conjugation_map(s, h, r);
    const long long formula = signature_formula(hodge_number_table(h));
    const long long raw = signature_direct_raw(r, h, k);
    if (raw == formula) return 1;
    if (raw == -formula && raw != 0) return -1;
    throw Error(ErrorCode::CalibrationFailure,
                "anchor x^2+y^2+z^2: direct " + std::to_string(raw) + " vs formula " +
                    std::to_string(formula));
  }();
  return sign;
}

DirectSignature signature_direct(const ResidueForm& r, const HodgeGrading& h,
                                 const Conjugation& k) {
  DirectSignature d;
  d.raw = signature_direct_raw(r, h, k);
  d.calibration_sign = calibration_sign();
  return d;
}

SignatureComparison compare_signatures(const MilnorAlgebra& a) {
  auto s = spectrum(a);
  auto h = hodge_bigrading(s);
  auto r = gram_matrix(a);
  auto k = conjugation_map(s, h, r);
  SignatureComparison c;
  c.formula = signature_formula(hodge_number_table(h));
  c.direct = signature_direct(r, h, k);
  return c;
}

}  // namespace mhs
