#include "doctest.h"
#include "mhs/error.hpp"
#include "mhs/groebner.hpp"
#include "mhs/milnor.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mhs;
using mhs::testing::names;

namespace {

Polynomial P(const std::string& text, std::size_t n = 2) {
  auto vars = names(n);
  return parse_polynomial(text, vars);
}

GroebnerBasis gb(std::vector<std::string> gens, std::size_t n = 2,
                 OrderKind kind = OrderKind::grevlex) {
  Ideal ideal{n, {}};
  for (const auto& g : gens) ideal.generators.push_back(P(g, n));
  return buchberger(ideal, MonomialOrder{kind});
}

std::vector<std::string> printed(const std::vector<Monomial>& ms, std::size_t n = 2) {
  std::vector<std::string> out;
  auto vars = names(n);
  for (const auto& m : ms) out.push_back(to_string(m, vars));
  return out;
}

const char* const kTGerm = "x^2*y^2 + x^5 + y^5";

}  // namespace

TEST_CASE("buchberger examples") {
  auto g1 = gb({"2*x"});
  REQUIRE(g1.polynomials().size() == 1);
  CHECK(g1.polynomials()[0] == P("x"));

  auto g2 = gb({"3*x^2", "4*y^3"});
  CHECK(g2.polynomials() == std::vector<Polynomial>{P("x^2"), P("y^3")});

  auto g3 = gb({"x - y", "y^2"});
  CHECK(g3.polynomials() == std::vector<Polynomial>{P("x - y"), P("y^2")});
}

TEST_CASE("reduced basis is reduced and deterministic") {
  auto g = gb({"2*x*y^2 + 5*x^4", "2*x^2*y + 5*y^4"});
  const auto& polys = g.polynomials();
  const auto& leads = g.leading_monomials();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    CHECK(polys[i].leading_term(g.order()).coefficient == 1);
    for (const auto& [m, c] : polys[i].terms())
      for (std::size_t k = 0; k < leads.size(); ++k)
        if (k != i) CHECK_FALSE(leads[k].divides(m));
  }
  CHECK(gb({"2*x*y^2 + 5*x^4", "2*x^2*y + 5*y^4"}).polynomials() == polys);
  // Generator order does not change the reduced basis.
  CHECK(gb({"2*x^2*y + 5*y^4", "2*x*y^2 + 5*x^4"}).polynomials() == polys);
}

TEST_CASE("normal form examples") {
  auto g = gb({"3*x^2", "4*y^3"});
  CHECK(normal_form(P("x^2"), g).is_zero());
  CHECK(normal_form(P("x*y^2"), g) == P("x*y^2"));
  CHECK(normal_form(P("y^3 + y"), g) == P("y"));
}

TEST_CASE("quotient basis examples") {
  CHECK(printed(quotient_basis(gb({"3*x^2", "4*y^3"}))) ==
        std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x*y^2"});
  CHECK(printed(quotient_basis(gb({"2*x", "2*y"}))) == std::vector<std::string>{"1"});
  CHECK_THROWS_AS(quotient_basis(gb({"2*x*y^2", "2*x^2*y"})), Error);
}

TEST_CASE("T-germ: the global quotient also sees five critical points off the origin") {
  Polynomial f = P(kTGerm);
  auto ideal = jacobian_ideal(f);
  auto g = buchberger(ideal, MonomialOrder{});
  auto basis = quotient_basis(g);
  // Off the origin both x, y are nonzero and x^5 = -32/3125: five points.
  CHECK(basis.size() == 16);
  // The truncated oracle sees only the origin: dim Q[x]/(I + m^K) stabilizes.
  const std::size_t local = testing::truncated_quotient_dimension(ideal.generators, 2, 9);
  CHECK(local == testing::truncated_quotient_dimension(ideal.generators, 2, 11));
  CHECK(local == 11);
  CHECK(basis.size() - local == 5);
}

TEST_CASE("variable nilpotency check") {
  CHECK(variable_nilpotency_check(gb({"3*x^2", "4*y^3"})));
  std::vector<std::string> x{"x"};
  Ideal idempotent{1, {parse_polynomial("2*x - 1", x) * parse_polynomial("x", x)}};
  // J(x^2 - x) = (2x - 1): the critical point is x = 1/2.
  Ideal shifted{1, {parse_polynomial("2*x - 1", x)}};
  auto g_shift = buchberger(shifted, MonomialOrder{});
  CHECK(g_shift.is_unit_ideal() == false);
  CHECK_FALSE(variable_nilpotency_check(g_shift));
  CHECK_FALSE(variable_nilpotency_check(buchberger(idempotent, MonomialOrder{})));
  // Not nilpotent globally: x acts invertibly on the five off-origin points.
  CHECK_FALSE(variable_nilpotency_check(buchberger(jacobian_ideal(P(kTGerm)), MonomialOrder{})));
}

TEST_CASE("normal form is canonical: multiplicative, linear, idempotent") {
  std::mt19937 rng(2024);
  const std::vector<std::string> germs{"x^3 + y^4", kTGerm, "x^3 + x*y^3"};
  for (const auto& germ : germs) {
    auto g = buchberger(jacobian_ideal(P(germ)), MonomialOrder{});
    for (int trial = 0; trial < 15; ++trial) {
      auto p = testing::random_polynomial(rng, 2, 4, 4);
      auto q = testing::random_polynomial(rng, 2, 4, 4);
      Rational s = testing::random_rational(rng);
      auto np = normal_form(p, g), nq = normal_form(q, g);
      CHECK(normal_form(p * q, g) == normal_form(np * nq, g));
      CHECK(normal_form(p + s * q, g) == np + s * nq);
      CHECK(normal_form(np, g) == np);
      for (const auto& [m, c] : np.terms())
        for (const auto& lm : g.leading_monomials()) CHECK_FALSE(lm.divides(m));
    }
  }
}

TEST_CASE("quotient dimension does not depend on the monomial order") {
  const std::vector<std::pair<std::string, std::size_t>> germs{
      {"x^3 + y^4", 2}, {kTGerm, 2}, {"x^3 + x*y^3", 2}, {"x^3 + y^3 + z^3", 3},
      {"x^2*y + y^4 + z^2", 3}};
  for (const auto& [germ, n] : germs) {
    auto ideal = jacobian_ideal(P(germ, n));
    auto a = quotient_basis(buchberger(ideal, MonomialOrder{OrderKind::grevlex}));
    auto b = quotient_basis(buchberger(ideal, MonomialOrder{OrderKind::lex}));
    CHECK(a.size() == b.size());
  }
}
