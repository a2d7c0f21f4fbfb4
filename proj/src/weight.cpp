#include "mhs/weight.hpp"

#include <algorithm>

#include "mhs/error.hpp"

namespace mhs {

namespace {

std::size_t nilpotency_index(const RatMatrix& n) {
  const std::size_t d = n.rows();
  RatMatrix p = RatMatrix::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    if (p.is_zero()) return k;
    p = p * n;
  }
  throw Error(ErrorCode::NotNilpotent, "operator is not nilpotent");
}

RatMatrix kernel_matrix(const RatMatrix& m) {
  return RatMatrix::from_columns(m.cols(), kernel_basis(m));
}

// {B c : M B c ∈ span(target)} as a column basis.
RatMatrix preimage_within(const RatMatrix& b, const RatMatrix& m, const RatMatrix& target) {
  if (b.cols() == 0) return b;
  RatMatrix image = m * b;
  RatMatrix joint = target.cols() ? hstack(image, Rational(-1) * target) : image;
  std::vector<RatVector> vecs;
  for (const auto& k : kernel_basis(joint)) {
    RatVector c(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(b.cols()));
    vecs.push_back(b * c);
  }
  return column_space(RatMatrix::from_columns(b.rows(), vecs));
}

std::pair<Rational, Rational> times_ipow(int e, const Rational& c) {
  switch (ipow_mod4(e)) {
    case 0: return {c, 0};
    case 1: return {0, c};
    case 2: return {-c, 0};
    default: return {0, -c};
  }
}

GaussianMatrix rotate(const GaussianMatrix& m, int t) {
  switch (ipow_mod4(t)) {
    case 0: return m;
    case 1: return {Rational(-1) * m.im, m.re};
    case 2: return {Rational(-1) * m.re, Rational(-1) * m.im};
    default: return {m.im, Rational(-1) * m.re};
  }
}

}  // namespace

RatMatrix WeightFiltration::step(int l) const {
  if (l < lowest) return RatMatrix(dimension, 0);
  if (l >= highest) return RatMatrix::identity(dimension);
  return steps.at(l);
}

std::map<int, std::size_t> WeightFiltration::graded_dimensions() const {
  std::map<int, std::size_t> out;
  for (const auto& [l, g] : graded) out[l] = g.cols();
  return out;
}

WeightFiltration nilpotent_weight_filtration(const RatMatrix& n, int center) {
  const std::size_t d = n.rows();
  const int m = static_cast<int>(nilpotency_index(n));  // largest block size
  WeightFiltration w;
  w.center = center;
  w.dimension = d;
  if (d == 0) return w;

  std::vector<RatMatrix> power{RatMatrix::identity(d)};
  for (int k = 1; k <= 2 * m + 1; ++k) power.push_back(power.back() * n);
  auto ker = [&](int k) { return kernel_matrix(power[std::min(k, 2 * m + 1)]); };
  auto im = [&](int k) { return column_space(power[std::min(k, 2 * m + 1)]); };

  // Unshifted weights lie in [-(m-1), m-1].
  const int top = m - 1;
  w.lowest = -top + center;
  w.highest = top + center;
  for (int l = -top - 1; l <= top; ++l) {
    RatMatrix acc(d, 0);
    for (int i = std::max(0, -l); i <= m; ++i) {
      if (l + 1 + i < 0) continue;
      acc = span_sum(acc, intersect(ker(l + 1 + i), im(i)));
    }
    w.steps[l + center] = column_space(acc);
  }
  for (int l = w.lowest; l <= w.highest; ++l)
    w.graded[l] = extend_basis(w.step(l - 1), w.step(l));
  return w;
}

std::map<int, std::size_t> PrimitiveDecomposition::dimensions() const {
  std::map<int, std::size_t> out;
  for (const auto& [l, p] : primitive) out[l] = p.cols();
  return out;
}

PrimitiveDecomposition primitive_parts(const WeightFiltration& w, const RatMatrix& n) {
  PrimitiveDecomposition out;
  const int c = w.center;
  for (int l = 0; l + c <= w.highest; ++l) {
    RatMatrix nl = RatMatrix::identity(w.dimension);
    for (int k = 0; k <= l; ++k) nl = nl * n;
    RatMatrix s = preimage_within(w.step(l + c), nl, w.step(-l - 3 + c));
    RatMatrix reps = extend_basis(w.step(l - 1 + c), s);
    if (reps.cols()) out.primitive[l] = reps;
  }
  return out;
}

bool lefschetz_consistent(const WeightFiltration& w, const PrimitiveDecomposition& p,
                          const JordanPartition& partition) {
  auto pd = p.dimensions();
  auto dim_p = [&](int l) { return pd.count(l) ? pd.at(l) : std::size_t{0}; };
  std::map<std::size_t, std::size_t> blocks;
  for (auto s : partition.blocks) ++blocks[s];
  for (const auto& [s, count] : blocks)
    if (dim_p(static_cast<int>(s) - 1) != count) return false;
  for (const auto& [l, d] : pd)
    if (!blocks.count(static_cast<std::size_t>(l) + 1)) return false;
  auto gd = w.graded_dimensions();
  for (int l = w.lowest; l <= w.highest; ++l) {
    const int a = std::abs(l - w.center);
    std::size_t expect = 0;
    for (int k = a; k <= w.highest - w.center; k += 2) expect += dim_p(k);
    if (gd[l] != expect) return false;
  }
  return true;
}

bool jacobson_morosov_axioms(const WeightFiltration& w, const RatMatrix& n) {
  const int c = w.center;
  for (int l = w.lowest - 1; l <= w.highest + 1; ++l)
    if (!contained_in(n * w.step(l), w.step(l - 2))) return false;
  RatMatrix nl = RatMatrix::identity(w.dimension);
  for (int l = 0; l + c <= w.highest; ++l) {
    // N^l Gr_l -> Gr_{-l}: images of representatives stay independent
    // modulo W_{-l-1} and fill Gr_{-l}.
    const RatMatrix& reps = w.graded.at(l + c);
    const RatMatrix& target = w.graded.at(-l + c);
    if (reps.cols() != target.cols()) return false;
    RatMatrix low = w.step(-l - 1 + c);
    if (reps.cols()) {
      RatMatrix image = nl * reps;
      if (!contained_in(image, w.step(-l + c))) return false;
      if (rank(hstack(low, image)) != low.cols() + reps.cols()) return false;
    }
    nl = nl * n;
  }
  return true;
}

LevelForm level_form(const ResidueForm& r, const RatMatrix& n, const PrimitiveDecomposition& p,
                     const std::optional<RatMatrix>& ctilde) {
  LevelForm out;
  out.twisted = ctilde.has_value();
  const std::size_t d = n.rows();
  const RatMatrix twist = ctilde ? *ctilde : RatMatrix::identity(d);
  for (const auto& [l, reps] : p.primitive) {
    RatMatrix nl = RatMatrix::identity(d);
    for (int k = 0; k < l; ++k) nl = nl * n;
    RatMatrix m = reps.transpose() * r.gram * twist * nl * reps;
    if (determinant(m) == 0)
      throw Error(ErrorCode::DegenerateLevelForm,
                  "level form on P_" + std::to_string(l) + " is singular");
    out.matrices[l] = std::move(m);
  }
  return out;
}

GaussianMatrix hermitian_level_form(const ResidueForm& r, const HodgeGrading& h,
                                    const Conjugation& k, bool with_weil) {
  const std::size_t mu = h.index.size();
  GaussianMatrix out{RatMatrix(mu, mu), RatMatrix(mu, mu)};
  for (std::size_t a = 0; a < mu; ++a)
    for (std::size_t b = 0; b < mu; ++b) {
      const std::size_t kb = k.kappa[b];
      int e = k.exponent[b] + 2 * h.index[kb].p;
      if (with_weil) e += h.index[a].p - h.index[a].q;
      auto [re, im] = times_ipow(e, r.gram(a, kb));
      out.re(a, b) = re;
      out.im(a, b) = im;
    }
  return out;
}

BilinearReport bilinear_relation_check(const ResidueForm& r, const RatMatrix& n,
                                       const WeightFiltration& w,
                                       const PrimitiveDecomposition& p,
                                       std::optional<HodgeData> hodge) {
  BilinearReport rep;
  const std::size_t d = n.rows();
  const RatMatrix& g = r.gram;
  RatMatrix twist = RatMatrix::identity(d);
  if (hodge) twist = weil_signs(*hodge->grading).ctilde_matrix();

  if (!(n.transpose() * g == g * n)) {
    rep.self_adjoint = false;
    rep.findings.push_back("multiplication by f is not residue self-adjoint");
  }
  for (int l = w.lowest - 1; l <= w.highest; ++l) {
    RatMatrix a = w.step(l), b = w.step(-l - 1 + 2 * w.center);
    if (a.cols() && b.cols() && !(a.transpose() * g * b).is_zero()) {
      rep.well_defined = false;
      rep.findings.push_back("W_" + std::to_string(l) + " is not orthogonal to W_" +
                             std::to_string(-l - 1 + 2 * w.center));
    }
  }
  auto npow = [&](int l) {
    RatMatrix m = RatMatrix::identity(d);
    for (int k = 0; k < l; ++k) m = m * n;
    return m;
  };
  for (const auto& [rl, ur] : p.primitive)
    for (const auto& [sl, us] : p.primitive) {
      if (rl == sl) {
        RatMatrix m = ur.transpose() * g * twist * npow(rl) * ur;
        if (determinant(m) == 0) {
          rep.nondegenerate = false;
          rep.findings.push_back("level form on P_" + std::to_string(rl) + " is degenerate");
        }
        continue;
      }
      const int l = std::max(rl, sl);
      if (!(ur.transpose() * g * twist * npow(l) * us).is_zero()) {
        rep.orthogonal = false;
        rep.findings.push_back("P_" + std::to_string(rl) + " and P_" + std::to_string(sl) +
                               " are not orthogonal");
      }
    }

  if (hodge) {
    // N = 0 for qh germs, so the only level is P_0 = everything. The sign
    // (-1)^{n(n+1)/2} of the residue normalization constant is part of the form.
    GaussianMatrix h = hermitian_level_form(r, *hodge->grading, *hodge->conjugation, true);
    const std::size_t fn = hodge->grading->n;
    if ((fn * (fn + 1) / 2) % 2 != 0) h = rotate(h, 2);
    rep.definite = false;
    for (int t = 0; t < 4; ++t) {
      GaussianMatrix m = rotate(h, t);
      if (!m.re.is_symmetric() || !m.im.is_antisymmetric()) continue;
      if (hermitian_signature(m.re, m.im).positive == d) {
        rep.definite = true;
        rep.global_exponent = t;
        break;
      }
    }
    if (!*rep.definite)
      rep.findings.push_back("no single global constant makes the Hermitian level forms definite");
  }
  return rep;
}

}  // namespace mhs
