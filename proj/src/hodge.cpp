#include "mhs/hodge.hpp"

#include <algorithm>

#include "mhs/error.hpp"

namespace mhs {

namespace {

// i^e * c as a (re, im) pair.
std::pair<Rational, Rational> times_ipow(int e, const Rational& c) {
  switch (ipow_mod4(e)) {
    case 0: return {c, 0};
    case 1: return {0, c};
    case 2: return {-c, 0};
    default: return {0, -c};
  }
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

SpectrumTable spectrum(const MilnorAlgebra& a) {
  SpectrumTable s;
  s.n = a.fiber_dimension();
  for (std::size_t i = 0; i < a.mu(); ++i) {
    SpectrumRow row;
    row.monomial = a.basis()[i];
    row.level = a.level(i);  // throws for non-qh germs
    row.beta = row.level - 1;
    row.eigen_residue = fractional_part(row.level);
    row.unipotent = is_integer(row.beta);
    s.rows.push_back(std::move(row));
  }
  return s;
}

std::map<std::pair<int, int>, std::size_t> HodgeGrading::dimensions() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& i : index) ++out[{i.p, i.q}];
  return out;
}

std::vector<std::size_t> HodgeGrading::block(int p, int q) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < index.size(); ++a)
    if (index[a].p == p && index[a].q == q) out.push_back(a);
  return out;
}

HodgeGrading hodge_bigrading(const SpectrumTable& s) {
  HodgeGrading h;
  h.n = s.n;
  const int n = static_cast<int>(s.n);
  for (const auto& row : s.rows) {
    HodgeIndex idx;
    if (row.unipotent) {
      idx.p = n - static_cast<int>(row.beta.get_num().get_si());
      idx.q = n + 1 - idx.p;
    } else {
      idx.p = static_cast<int>(ceil(row.beta).get_si());
      idx.q = n - idx.p;
    }
    h.index.push_back(idx);
  }
  return h;
}

Conjugation conjugation_map(const SpectrumTable& s, const HodgeGrading& h,
                            const ResidueForm& r) {
  const std::size_t mu = s.size();
  const Rational socle(static_cast<long>(s.n + 1));
  Conjugation k;
  k.kappa.resize(mu);
  for (std::size_t a = 0; a < mu; ++a) {
    const std::size_t b = mu - 1 - a;
    if (s.rows[a].level + s.rows[b].level != socle)
      throw Error(ErrorCode::AsymmetricSpectrum,
                  "levels at positions " + std::to_string(a) + " and " + std::to_string(b) +
                      " do not sum to n + 1");
    k.kappa[a] = b;
  }
  // Inside a pair of complementary level blocks, prefer the residue partner
  // when the block pairing is monomial; reversal is the fallback.
  for (std::size_t lo = 0; lo < mu;) {
    std::size_t hi = lo;
    while (hi < mu && s.rows[hi].level == s.rows[lo].level) ++hi;
    const std::size_t plo = mu - hi, phi = mu - lo;  // complementary block
    std::vector<std::size_t> partner;
    for (std::size_t a = lo; a < hi; ++a) {
      std::size_t count = 0, found = 0;
      for (std::size_t b = plo; b < phi; ++b)
        if (r.gram(a, b) != 0) {
          ++count;
          found = b;
        }
      if (count != 1) break;
      partner.push_back(found);
    }
    std::vector<std::size_t> sorted = partner;
    std::sort(sorted.begin(), sorted.end());
    if (partner.size() == hi - lo &&
        std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end())
      for (std::size_t a = lo; a < hi; ++a) k.kappa[a] = partner[a - lo];
    lo = hi;
  }
  for (std::size_t a = 0; a < mu; ++a) {
    const bool odd = h.index[a].weight() % 2 != 0;
    k.exponent.push_back(odd ? (s.n % 2 != 0 ? 1 : 3) : 0);
  }
  // Sign of the diagonal Weil value i^{p-q} c_a (-1)^{p(kappa a)} res(e_a, e_kappa a).
  auto orbit_sign = [&](std::size_t a) {
    const std::size_t b = k.kappa[a];
    const int e = h.index[a].p - h.index[a].q + k.exponent[a] + 2 * h.index[b].p;
    auto [re, im] = times_ipow(e, r.gram(a, b));
    return sign_of(re);
  };
  // conj(1) is a positive multiple (up to its phase) of the Hessian class,
  // which pairs positively with 1 since l(Hess) = mu. So the reference sign
  // uses |res(1, kappa 1)|; 1 is the first basis element in level order.
  const int reference = [&] {
    const std::size_t b = k.kappa[0];
    const int e = h.index[0].p - h.index[0].q + k.exponent[0] + 2 * h.index[b].p;
    return sign_of(times_ipow(e, abs(r.gram(0, b))).first);
  }();
  if (orbit_sign(0) != reference) {
    const std::size_t b = k.kappa[0];
    k.exponent[0] = ipow_mod4(k.exponent[0] + 2);
    if (b != 0) k.exponent[b] = ipow_mod4(k.exponent[b] + 2);
  }
  for (std::size_t a = 0; a < mu; ++a) {
    const std::size_t b = k.kappa[a];
    if (b < a) continue;
    const int sign = orbit_sign(a);
    if (sign != 0 && sign != reference) {
      k.exponent[a] = ipow_mod4(k.exponent[a] + 2);
      if (b != a) k.exponent[b] = ipow_mod4(k.exponent[b] + 2);
      ++k.flipped_orbits;
    }
  }
  return k;
}

RatMatrix WeilSigns::ctilde_matrix() const {
  RatMatrix m(ctilde.size(), ctilde.size());
  for (std::size_t a = 0; a < ctilde.size(); ++a) m(a, a) = ctilde[a];
  return m;
}

WeilSigns weil_signs(const HodgeGrading& h) {
  WeilSigns w;
  for (const auto& i : h.index) {
    w.ctilde.push_back(i.p % 2 == 0 ? 1 : -1);
    w.weil_exponent.push_back(ipow_mod4(i.p - i.q));
  }
  return w;
}

bool opposite_filtration_check(const HodgeGrading& h) {
  const std::size_t mu = h.index.size();
  if (mu == 0) return true;
  int lo = h.index[0].p, hi = lo;
  for (const auto& i : h.index) {
    lo = std::min(lo, i.p);
    hi = std::max(hi, i.p);
  }
  for (int p = lo - 1; p <= hi + 1; ++p) {
    std::vector<RatVector> f, u;
    for (std::size_t a = 0; a < mu; ++a) {
      RatVector e(mu, Rational(0));
      e[a] = 1;
      (h.index[a].p >= p ? f : u).push_back(std::move(e));
    }
    RatMatrix fm = RatMatrix::from_columns(mu, f), um = RatMatrix::from_columns(mu, u);
    const std::size_t df = f.empty() ? 0 : rank(fm), du = u.empty() ? 0 : rank(um);
    if (df + du != mu) return false;
    if (rank(hstack(fm, um)) != mu) return false;  // trivial intersection
  }
  return true;
}

GaussianMatrix weil_form(const ResidueForm& r, const HodgeGrading& h, const Conjugation& k,
                         const std::vector<std::size_t>& positions) {
  const std::size_t d = positions.size();
  GaussianMatrix w{RatMatrix(d, d), RatMatrix(d, d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t a = positions[i], b = positions[j], kb = k.kappa[b];
      const int e = h.index[a].p - h.index[a].q + k.exponent[b] + 2 * h.index[kb].p;
      auto [re, im] = times_ipow(e, r.gram(a, kb));
      w.re(i, j) = re;
      w.im(i, j) = im;
    }
  return w;
}

}  // namespace mhs
