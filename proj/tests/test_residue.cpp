#include <cmath>

#include "doctest.h"
#include "mhs/error.hpp"
#include "mhs/residue.hpp"
#include "support.hpp"

using namespace mhs;
using mhs::testing::names;

namespace {

MilnorAlgebra A(const std::string& text, std::size_t n) {
  auto vars = names(n);
  return MilnorAlgebra(parse_polynomial(text, vars), vars);
}

// Brieskorn-Pham oracle: the residue factorizes over variables and
// res(x^a dx / (d x^{d-1})) = 1/d exactly when a = d - 2.
Rational brieskorn_pham_residue(const Monomial& m, const std::vector<std::uint32_t>& d) {
  Rational r(1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (m[i] != d[i] - 2) return 0;
    r /= d[i];
  }
  return r;
}

const std::vector<std::pair<std::string, std::size_t>> kCorpus{
    {"x^2", 1},           {"x^3", 1},
    {"x^5", 1},           {"x^2 + y^2", 2},
    {"x^3 + y^4", 2},     {"x^3 + x*y^3", 2},
    {"x^2*y^2 + x^5 + y^5", 2}, {"x^5 + y^5", 2},
    {"x^3 + y^3 + z^3", 3}, {"x^2 + y^2 + z^2", 3},
    {"x^2*y + y^4 + z^2", 3}};

}  // namespace

TEST_CASE("bezoutian polynomial examples") {
  std::vector<std::string> xy{"x", "y"};
  std::vector<std::string> x1{"x"};
  CHECK(bezoutian_polynomial(parse_polynomial("x^2", x1)) == parse_polynomial("2", xy));
  CHECK(bezoutian_polynomial(parse_polynomial("x^3", x1)) == parse_polynomial("3*x + 3*y", xy));
  auto four = names(4);
  CHECK(bezoutian_polynomial(parse_polynomial("x^2+y^2", names(2))) ==
        parse_polynomial("4", four));
}

TEST_CASE("bezoutian on the diagonal is the Hessian determinant") {
  for (const auto& [germ, n] : kCorpus) {
    CAPTURE(germ);
    auto vars = names(n);
    Polynomial f = parse_polynomial(germ, vars);
    Polynomial delta = bezoutian_polynomial(f);
    Polynomial diag(n);
    for (const auto& [m, c] : delta.terms()) {
      Monomial folded(n);
      for (std::size_t v = 0; v < n; ++v) folded[v] = m[v] + m[n + v];
      diag.add_term(folded, c);
    }
    CHECK(diag == hessian_determinant(f));
  }
}

TEST_CASE("gram matrix examples") {
  auto a2 = A("x^2", 1);
  CHECK(gram_matrix(a2).gram == RatMatrix{{Rational(1, 2)}});
  auto a3 = A("x^3", 1);
  auto r3 = gram_matrix(a3);
  CHECK(r3.bezout == RatMatrix{{0, 3}, {3, 0}});
  CHECK(r3.gram == RatMatrix{{0, Rational(1, 3)}, {Rational(1, 3), 0}});
  CHECK(residue_pair(r3, {1, 0}, {0, 1}) == Rational(1, 3));

  auto e6 = A("x^3 + y^4", 2);
  auto r6 = gram_matrix(e6);
  auto x = *e6.index_of(Monomial{1, 0}), xy = *e6.index_of(Monomial{1, 1});
  auto xy2 = *e6.index_of(Monomial{1, 2});
  CHECK(residue_pair(r6, e6.unit_vector(x), e6.unit_vector(xy)) == 0);
  CHECK(r6.functional[xy2] == Rational(1, 12));

  CHECK(gram_matrix(A("x^2 + y^2 + z^2", 3)).gram == RatMatrix{{Rational(1, 8)}});
}

TEST_CASE("Brieskorn-Pham germs match the factorized residue") {
  const std::vector<std::tuple<std::string, std::size_t, std::vector<std::uint32_t>>> bp{
      {"x^3 + y^4", 2, {3, 4}},
      {"x^5 + y^5", 2, {5, 5}},
      {"x^3 + y^3 + z^3", 3, {3, 3, 3}},
      {"x^2 + y^3 + z^4", 3, {2, 3, 4}}};
  for (const auto& [germ, n, d] : bp) {
    CAPTURE(germ);
    auto a = A(germ, n);
    auto r = gram_matrix(a);
    for (std::size_t i = 0; i < a.mu(); ++i)
      for (std::size_t j = 0; j < a.mu(); ++j)
        CHECK(r.gram(i, j) == brieskorn_pham_residue(a.basis()[i] * a.basis()[j], d));
  }
}

TEST_CASE("residue form invariants on the corpus") {
  std::mt19937 rng(31);
  for (const auto& [germ, n] : kCorpus) {
    CAPTURE(germ);
    auto a = A(germ, n);
    auto r = gram_matrix(a);
    CHECK(r.gram.is_symmetric());
    CHECK(determinant(r.gram) != 0);
    CHECK(r.gram * r.bezout == RatMatrix::identity(a.mu()));
    CHECK(hessian_residue_check(a, r) == Rational(static_cast<long>(a.mu())));
    CHECK(bezoutian(a, ReductionOrder::x_then_y).reduced == r.bezout);
    // G_ab = l(NF(e_a e_b)).
    for (std::size_t i = 0; i < a.mu(); ++i)
      for (std::size_t j = 0; j < a.mu(); ++j) {
        Polynomial prod = Polynomial::term(a.basis()[i] * a.basis()[j], 1);
        CHECK(dot(a.coordinates(prod), r.functional) == r.gram(i, j));
      }
    // l kills the Jacobian ideal.
    for (int trial = 0; trial < 4; ++trial) {
      Polynomial h = testing::random_polynomial(rng, n, 3, 3);
      for (std::size_t i = 0; i < n; ++i)
        CHECK(dot(a.coordinates(partial_derivative(a.germ(), i) * h), r.functional) == 0);
    }
    // Multiplication operators are self-adjoint.
    for (std::size_t i = 0; i < n; ++i) {
      const RatMatrix& m = a.variable_matrix(i);
      CHECK(m.transpose() * r.gram == r.gram * m);
    }
    if (a.is_quasi_homogeneous()) {
      const Rational socle(static_cast<long>(n));
      for (std::size_t i = 0; i < a.mu(); ++i)
        for (std::size_t j = 0; j < a.mu(); ++j)
          if (r.gram(i, j) != 0) CHECK(a.level(i) + a.level(j) == socle);
    }
  }
}

TEST_CASE("morse oracle examples") {
  auto a2 = A("x^2", 1);
  auto m2 = morse_oracle(a2, {Rational(0)});
  CHECK(m2.matrix[0][0] == doctest::Approx(0.5).epsilon(1e-12));

  auto a3 = A("x^3", 1);
  auto m3 = morse_oracle(a3, {Rational(1, 1000)});
  CHECK(std::abs(m3.matrix[0][0]) < 1e-9);
  CHECK(max_deviation(m3, gram_matrix(a3).gram) < 1e-6);

  auto e6 = A("x^3 + y^4", 2);
  auto r6 = gram_matrix(e6);
  auto m6 = morse_oracle(e6, random_perturbation(2, Rational(1, 1000), 7));
  CHECK(m6.points.size() == 6);
  CHECK(m6.max_imaginary < 1e-6);
  CHECK(max_deviation(m6, r6.gram) < 1e-6);
}

TEST_CASE("morse oracle converges on a germ with distant critical points") {
  // The T-germ has five further critical points; the oracle keeps the
  // eleven that tend to the origin and the sum approaches G.
  auto t = A("x^2*y^2 + x^5 + y^5", 2);
  auto r = gram_matrix(t);
  auto error = [&](long denominator) {
    return max_deviation(morse_oracle(t, random_perturbation(2, Rational(1, denominator), 3)),
                         r.gram);
  };
  const double e3 = error(1000), e4 = error(10000), e5 = error(100000);
  CAPTURE(e3);
  CAPTURE(e4);
  CAPTURE(e5);
  // Linear rate: each tenfold reduction of s cuts the error about tenfold.
  CHECK(e3 / e4 > 5);
  CHECK(e4 / e5 > 5);
  CHECK(e5 < 2e-3);
}

TEST_CASE("non-isolated input never reaches the residue") {
  CHECK_THROWS_AS(A("x^2*y^2", 2), Error);
}
