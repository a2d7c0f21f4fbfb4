#include "mhs/milnor.hpp"

#include <algorithm>

#include "mhs/error.hpp"

namespace mhs {

namespace {

Polynomial without_constant(const Polynomial& f) {
  Polynomial g = f;
  g.add_term(Monomial(f.nvars()), -f.constant_term());
  return g;
}

GroebnerBasis jacobian_basis(const Polynomial& germ, const MonomialOrder& order) {
  return buchberger(jacobian_ideal(germ), order);
}

// The origin component of V(I) is isolated iff dim Q[x]/(I + m^K) stops
// growing; once dim_K = dim_{K+1}, Nakayama gives m^K = 0 in the local ring,
// so I + m^K is exactly the m-primary component of I.
GroebnerBasis local_component(const Ideal& ideal, const MonomialOrder& order) {
  constexpr std::uint32_t kMaxPower = 40;
  const std::size_t n = ideal.nvars;
  auto truncated = [&](std::uint32_t k) {
    Ideal cut = ideal;
    Monomial m(n);
    auto visit = [&](auto&& self, std::size_t var, std::uint32_t budget) -> void {
      if (var + 1 == n) {
        m[var] = budget;
        cut.generators.push_back(Polynomial::term(m, Rational(1)));
        return;
      }
      for (std::uint32_t e = 0; e <= budget; ++e) {
        m[var] = e;
        self(self, var + 1, budget - e);
      }
    };
    visit(visit, 0, k);
    return buchberger(cut, order);
  };
  GroebnerBasis prev = truncated(1);
  std::size_t prev_dim = quotient_basis(prev).size();
  for (std::uint32_t k = 2; k <= kMaxPower; ++k) {
    GroebnerBasis next = truncated(k);
    const std::size_t dim = quotient_basis(next).size();
    if (dim == prev_dim) return prev;
    prev = std::move(next);
    prev_dim = dim;
  }
  throw Error(ErrorCode::NotIsolatedAtOrigin,
              "critical locus is not isolated at the origin (local dimension keeps growing)");
}

}  // namespace

Ideal jacobian_ideal(const Polynomial& f) {
  if (f.is_constant())
    throw Error(ErrorCode::ZeroGerm, "germ is constant");
  Ideal ideal{f.nvars(), {}};
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    Polynomial d = partial_derivative(f, i);
    if (!d.is_zero()) ideal.generators.push_back(std::move(d));
  }
  return ideal;
}

QhWeights detect_qh_weights(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<RatVector> rows;
  for (const auto& [m, c] : f.terms()) {
    if (m.is_one()) continue;
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i) row[i] = m[i];
    row[n] = 1;
    rows.push_back(std::move(row));
  }
  QhWeights out;
  if (rows.empty()) return out;
  RatMatrix aug(rows.size(), n + 1);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c <= n; ++c) aug(r, c) = rows[r][c];
  std::vector<std::size_t> pivots;
  RatMatrix red = rref(aug, &pivots);
  if (!pivots.empty() && pivots.back() == n) return out;  // inconsistent
  if (pivots.size() < n) {
    out.ambiguous = true;
    return out;
  }
  std::vector<Rational> w(n);
  for (std::size_t i = 0; i < n; ++i) w[pivots[i]] = red(i, n);
  if (std::any_of(w.begin(), w.end(), [](const Rational& x) { return x <= 0; }))
    return out;
  out.weights = std::move(w);
  return out;
}

MilnorAlgebra::MilnorAlgebra(const Polynomial& f, std::vector<std::string> variables,
                             MonomialOrder order)
    : germ_(without_constant(f)),
      variables_(std::move(variables)),
      gb_(jacobian_basis(germ_, order)),
      qh_(detect_qh_weights(germ_)) {
  if (variables_.size() != germ_.nvars())
    throw Error(ErrorCode::InvalidArgument, "variable list does not match the ring");
  std::optional<std::vector<Monomial>> global;
  try {
    global = quotient_basis(gb_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotZeroDimensional) throw;
  }
  if (global && variable_nilpotency_check(gb_)) {
    basis_ = std::move(*global);
  } else {
    // Other critical points (or a non-isolated locus away from 0) pollute the
    // global quotient; cut out the component at the origin instead.
    gb_ = local_component(jacobian_ideal(germ_), gb_.order());
    basis_ = quotient_basis(gb_);
    localized_ = true;
  }
  if (basis_.empty())
    throw Error(ErrorCode::NotIsolatedAtOrigin, "the origin is not a critical point");

  const MonomialOrder grevlex{OrderKind::grevlex};
  if (qh_.has_value()) {
    const auto& w = *qh_.weights;
    std::stable_sort(basis_.begin(), basis_.end(), [&](const Monomial& a, const Monomial& b) {
      Rational la = weighted_degree(a, w), lb = weighted_degree(b, w);
      if (la != lb) return la < lb;
      return grevlex.less(a, b);
    });
  } else {
    std::sort(basis_.begin(), basis_.end(),
              [&](const Monomial& a, const Monomial& b) { return grevlex.less(a, b); });
  }

  for (std::size_t i = 0; i < nvars(); ++i)
    var_matrices_.push_back(
        mhs::multiplication_matrix(gb_, basis_, Polynomial::variable(nvars(), i)));
  germ_matrix_ = mhs::multiplication_matrix(gb_, basis_, germ_);
}

const std::vector<Rational>& MilnorAlgebra::weights() const {
  if (!qh_.has_value())
    throw Error(ErrorCode::NotQuasiHomogeneous, "germ is not quasi-homogeneous");
  return *qh_.weights;
}

Rational MilnorAlgebra::level(std::size_t a) const {
  const auto& w = weights();
  Rational l(0);
  for (std::size_t i = 0; i < nvars(); ++i) l += w[i] * (basis_[a][i] + 1);
  return l;
}

std::optional<std::size_t> MilnorAlgebra::index_of(const Monomial& m) const {
  auto it = std::find(basis_.begin(), basis_.end(), m);
  if (it == basis_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

std::size_t MilnorAlgebra::unit_index() const {
  // 1 is standard whenever the quotient is nonzero.
  return *index_of(Monomial(nvars()));
}

Polynomial MilnorAlgebra::normal_form(const Polynomial& p) const {
  return mhs::normal_form(p, gb_);
}

RatVector MilnorAlgebra::coordinates(const Polynomial& p) const {
  return mhs::coordinates(normal_form(p), basis_);
}

Polynomial MilnorAlgebra::element(const RatVector& coords) const {
  Polynomial p(nvars());
  for (std::size_t a = 0; a < basis_.size(); ++a) p.add_term(basis_[a], coords[a]);
  return p;
}

RatVector MilnorAlgebra::unit_vector(std::size_t a) const {
  RatVector v(mu(), Rational(0));
  v[a] = 1;
  return v;
}

RatMatrix MilnorAlgebra::multiplication_matrix(const Polynomial& g) const {
  return mhs::multiplication_matrix(gb_, basis_, g);
}

std::string MilnorAlgebra::format(const Monomial& m) const {
  return to_string(m, variables_);
}

std::string MilnorAlgebra::format(const Polynomial& p) const {
  return to_string(p, variables_, order());
}

}  // namespace mhs
