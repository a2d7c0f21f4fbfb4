#include "mhs/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mhs/error.hpp"

namespace mhs {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return order->compare(a, b) > 0;
  }
};

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return p;
  Rational lc = p.leading_term(order).coefficient;
  return p * (1 / lc);
}

// Reduces p by a list of monic polynomials with known leading monomials.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors,
                  const std::vector<Monomial>& leads,
                  const MonomialOrder& order) {
  std::map<Monomial, Rational, Descending> work(Descending{&order});
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  Polynomial remainder(p.nvars());
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    std::size_t k = 0;
    while (k < leads.size() && !leads[k].divides(m)) ++k;
    if (k == leads.size()) {
      remainder.add_term(m, c);
      work.erase(top);
      continue;
    }
    const Monomial shift = m / leads[k];
    for (const auto& [gm, gc] : divisors[k].terms()) {
      Monomial key = gm * shift;
      Rational delta = -c * gc;
      auto [it, inserted] = work.try_emplace(key, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& a, const Monomial& la,
                        const Polynomial& b, const Monomial& lb) {
  Monomial l = lcm(la, lb);
  return a.times_term(l / la, Rational(1)) - b.times_term(l / lb, Rational(1));
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, MonomialOrder order,
                             std::vector<Polynomial> polys)
    : nvars_(nvars), order_(order), polys_(std::move(polys)) {
  leading_.reserve(polys_.size());
  for (const auto& p : polys_) leading_.push_back(p.leading_term(order_).monomial);
}

bool GroebnerBasis::is_unit_ideal() const {
  return std::any_of(leading_.begin(), leading_.end(),
                     [](const Monomial& m) { return m.is_one(); });
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  std::vector<Polynomial> g;
  std::vector<Monomial> leads;
  for (const auto& p : ideal.generators) {
    if (p.is_zero()) continue;
    g.push_back(monic(p, order));
    leads.push_back(g.back().leading_term(order).monomial);
  }

  // Pending pairs keyed by (degree of lcm, i, j); `treated` holds pairs that
  // are no longer pending, for the chain criterion.
  using Key = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<Key> pending;
  std::set<std::pair<std::size_t, std::size_t>> is_pending;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    pending.emplace(lcm(leads[i], leads[j]).degree(), i, j);
    is_pending.emplace(i, j);
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

  auto still_pending = [&](std::size_t a, std::size_t b) {
    return is_pending.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  while (!pending.empty()) {
    auto [deg, i, j] = *pending.begin();
    pending.erase(pending.begin());
    is_pending.erase({i, j});
    if (coprime(leads[i], leads[j])) continue;
    const Monomial l = lcm(leads[i], leads[j]);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = leads[k].divides(l) && !still_pending(i, k) && !still_pending(j, k);
    }
    if (chain) continue;
    Polynomial h = reduce(s_polynomial(g[i], leads[i], g[j], leads[j]), g, leads, order);
    if (h.is_zero()) continue;
    g.push_back(monic(h, order));
    leads.push_back(g.back().leading_term(order).monomial);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) add_pair(k, g.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is divisible by another
  // (earlier one wins on ties).
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !leads[k].divides(leads[i])) continue;
      redundant = leads[k] != leads[i] || k < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (auto i : keep) {
    minimal.push_back(g[i]);
    minimal_leads.push_back(leads[i]);
  }

  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_leads;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k == i) continue;
      others.push_back(minimal[k]);
      other_leads.push_back(minimal_leads[k]);
    }
    Polynomial tail = minimal[i];
    tail.add_term(minimal_leads[i], Rational(-1));
    Polynomial r = reduce(tail, others, other_leads, order);
    r.add_term(minimal_leads[i], Rational(1));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_term(order).monomial, b.leading_term(order).monomial);
  });
  return GroebnerBasis(ideal.nvars, order, std::move(reduced));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  return reduce(p, g.polynomials(), g.leading_monomials(), g.order());
}

std::vector<Monomial> quotient_basis(const GroebnerBasis& g) {
  const std::size_t n = g.nvars();
  if (g.is_unit_ideal()) return {};
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& lm : g.leading_monomials()) {
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm[i] != 0) {
        ++support;
        var = i;
      }
    if (support == 1 && (bound[var] == 0 || lm[var] < bound[var]))
      bound[var] = lm[var];
  }
  for (std::size_t i = 0; i < n; ++i)
    if (bound[i] == 0)
      throw Error(ErrorCode::NotZeroDimensional,
                  "quotient is infinite-dimensional (no pure power of variable " +
                      std::to_string(i) + " among leading monomials)");

  std::vector<Monomial> out;
  Monomial cur(n);
  auto visit = [&](auto&& self, std::size_t var) -> void {
    if (var == n) {
      for (const auto& lm : g.leading_monomials())
        if (lm.divides(cur)) return;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      cur[var] = e;
      self(self, var + 1);
    }
    cur[var] = 0;
  };
  visit(visit, 0);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return g.order().less(a, b); });
  return out;
}

RatVector coordinates(const Polynomial& normal, const std::vector<Monomial>& basis) {
  RatVector v(basis.size(), Rational(0));
  for (const auto& [m, c] : normal.terms()) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end())
      throw Error(ErrorCode::InvalidArgument, "term outside the standard basis");
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

RatMatrix multiplication_matrix(const GroebnerBasis& g,
                                const std::vector<Monomial>& basis,
                                const Polynomial& p) {
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Polynomial image = normal_form(p.times_term(basis[a], Rational(1)), g);
    m.set_column(a, coordinates(image, basis));
  }
  return m;
}

namespace {

// Exact one-sided test: true only if m is certainly not nilpotent. Works
// modulo a prime, where M^d v != 0 already rules out nilpotency over Q.
bool surely_not_nilpotent(const RatMatrix& m) {
  constexpr std::uint64_t p = 2147483647;  // 2^31 - 1
  const std::size_t d = m.rows();
  auto power = [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::vector<std::uint64_t> mm(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& x = m(i, j);
      if (x == 0) continue;
      const Integer num = x.get_num() % Integer(static_cast<unsigned long>(p));
      const Integer den = x.get_den() % Integer(static_cast<unsigned long>(p));
      if (den == 0) return false;  // denominator not invertible; no verdict
      std::uint64_t a = (num < 0 ? num + Integer(static_cast<unsigned long>(p)) : num).get_ui();
      mm[i * d + j] = a * power(den.get_ui(), p - 2) % p;
    }
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    std::vector<std::uint64_t> v(d), w(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = (seed * 7919 * (i + 1) + i * i) % p;
    for (std::size_t step = 0; step < d; ++step) {
      for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < d; ++j)
          if (mm[i * d + j]) acc = (acc + mm[i * d + j] * v[j]) % p;
        w[i] = acc;
      }
      v.swap(w);
    }
    if (std::any_of(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; })) return true;
  }
  return false;
}

}  // namespace

bool variable_nilpotency_check(const GroebnerBasis& g) {
  const auto basis = quotient_basis(g);
  if (basis.empty()) return true;
  std::vector<RatMatrix> ms;
  for (std::size_t i = 0; i < g.nvars(); ++i) {
    ms.push_back(multiplication_matrix(g, basis, Polynomial::variable(g.nvars(), i)));
    if (surely_not_nilpotent(ms.back())) return false;
  }
  for (const auto& m : ms)
    if (!matrix_power(m, basis.size()).is_zero()) return false;
  return true;
}

}  // namespace mhs
