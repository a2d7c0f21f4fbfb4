#include "doctest.h"
#include "mhs/error.hpp"
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

MilnorAlgebra A(const std::string& text, std::size_t n = 2) {
  return MilnorAlgebra(P(text, n), names(n));
}

std::vector<std::string> basis_text(const MilnorAlgebra& a) {
  std::vector<std::string> out;
  for (const auto& m : a.basis()) out.push_back(a.format(m));
  return out;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("jacobian ideal examples") {
  CHECK(jacobian_ideal(P("x^3+y^4")).generators ==
        std::vector<Polynomial>{P("3*x^2"), P("4*y^3")});
  std::vector<std::string> x{"x"};
  CHECK(jacobian_ideal(parse_polynomial("x^2", x)).generators ==
        std::vector<Polynomial>{parse_polynomial("2*x", x)});
  CHECK(jacobian_ideal(P("x^2*y^2+x^5+y^5")).generators ==
        std::vector<Polynomial>{P("2*x*y^2+5*x^4"), P("2*x^2*y+5*y^4")});
  CHECK(code_of([] { jacobian_ideal(P("7")); }) == ErrorCode::ZeroGerm);
}

TEST_CASE("milnor algebra examples") {
  auto e6 = A("x^3 + y^4");
  CHECK(e6.mu() == 6);
  CHECK(basis_text(e6) == std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x*y^2"});
  CHECK(A("x^2 + y^2").mu() == 1);
  CHECK(basis_text(A("x^2 + y^2")) == std::vector<std::string>{"1"});
}

TEST_CASE("D-type germ: mu from the Gröbner staircase matches the truncation oracle") {
  auto d = A("x^3 + x*y^3");
  auto gens = jacobian_ideal(d.germ()).generators;
  const std::size_t oracle = testing::truncated_quotient_dimension(gens, 2, 10);
  CHECK(oracle == testing::truncated_quotient_dimension(gens, 2, 12));
  CHECK(d.mu() == oracle);
  CHECK(d.mu() == 7);
  REQUIRE(d.is_quasi_homogeneous());
  CHECK(d.weights() == std::vector<Rational>{Rational(1, 3), Rational(2, 9)});
}

TEST_CASE("non-isolated germs are rejected") {
  CHECK(code_of([] { A("x^2*y^2"); }) == ErrorCode::NotIsolatedAtOrigin);
  // Critical point away from the origin.
  std::vector<std::string> x{"x"};
  CHECK(code_of([&] { MilnorAlgebra(parse_polynomial("x^2 - x", x), x); }) ==
        ErrorCode::NotIsolatedAtOrigin);
  // Smooth point: the origin is not critical.
  CHECK(code_of([] { A("x + y^2"); }) == ErrorCode::NotIsolatedAtOrigin);
  // Variable missing from f.
  CHECK(code_of([] { A("x^3"); }) == ErrorCode::NotIsolatedAtOrigin);
  CHECK(code_of([] { A("0"); }) == ErrorCode::ZeroGerm);
}

TEST_CASE("extra critical points are cut away") {
  std::vector<std::string> x{"x"};
  // Critical points at 0 and 2/3; the origin is an A1 point.
  MilnorAlgebra a(parse_polynomial("x^3 - x^2", x), x);
  CHECK(a.localized());
  CHECK(a.mu() == 1);

  auto t = A("x^2*y^2 + x^5 + y^5");
  CHECK(t.localized());
  auto gens = jacobian_ideal(t.germ()).generators;
  CHECK(t.mu() == testing::truncated_quotient_dimension(gens, 2, 10));
  CHECK(t.mu() == 11);
  CHECK(variable_nilpotency_check(t.groebner()));
  CHECK(basis_text(t) == std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x^2", "y^3",
                                                  "x*y^2", "x^2*y", "x^3", "x^2*y^2"});
  // The basis monomials stay independent modulo the truncated ideal.
  const std::uint32_t k = 10;
  RatMatrix truncated = testing::truncated_ideal(gens, 2, k);
  auto monos = testing::monomials_below(2, k);
  std::vector<RatVector> cols;
  for (const auto& m : t.basis())
    cols.push_back(testing::truncated_vector(Polynomial::term(m, 1), monos, k));
  CHECK(rank(hstack(truncated, RatMatrix::from_columns(monos.size(), cols))) ==
        rank(truncated) + t.mu());
  CHECK_FALSE(A("x^3 + y^4").localized());
}

TEST_CASE("multiplication matrices") {
  auto e6 = A("x^3 + y^4");
  CHECK(e6.germ_matrix().is_zero());
  CHECK(e6.multiplication_matrix(P("1")) == RatMatrix::identity(6));
  auto t = A("x^2*y^2 + x^5 + y^5");
  const RatMatrix& fbar = t.germ_matrix();
  CHECK_FALSE(fbar.is_zero());
  CHECK(matrix_power(fbar, t.mu()).is_zero());
}

TEST_CASE("quasi-homogeneous weight detection") {
  auto w = detect_qh_weights(P("x^3+y^4"));
  REQUIRE(w.has_value());
  CHECK(*w.weights == std::vector<Rational>{Rational(1, 3), Rational(1, 4)});
  CHECK_FALSE(detect_qh_weights(P("x^2*y^2+x^5+y^5")).has_value());
  std::vector<std::string> x{"x"};
  auto w1 = detect_qh_weights(parse_polynomial("x^2", x));
  REQUIRE(w1.has_value());
  CHECK(*w1.weights == std::vector<Rational>{Rational(1, 2)});
  auto amb = detect_qh_weights(P("x*y"));
  CHECK_FALSE(amb.has_value());
  CHECK(amb.ambiguous);
  // Negative weight solution is rejected.
  CHECK_FALSE(detect_qh_weights(P("x^2*y^3 + x^3*y^2 + x^4")).has_value());
}

TEST_CASE("algebra invariants on the corpus germs") {
  const std::vector<std::pair<std::string, std::size_t>> germs{
      {"x^3 + y^4", 2},       {"x^2*y^2 + x^5 + y^5", 2}, {"x^3 + x*y^3", 2},
      {"x^3 + y^3 + z^3", 3}, {"x^2 + y^2 + z^2", 3},     {"x^2*y + y^4 + z^2", 3},
      {"x^5 + y^5", 2}};
  for (const auto& [germ, n] : germs) {
    CAPTURE(germ);
    auto a = A(germ, n);
    // Variable multiplications commute.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(a.variable_matrix(i) * a.variable_matrix(j) ==
              a.variable_matrix(j) * a.variable_matrix(i));
    // mu is order independent.
    CHECK(MilnorAlgebra(a.germ(), names(n), MonomialOrder{OrderKind::lex}).mu() == a.mu());
    if (a.is_quasi_homogeneous()) {
      // Euler relation puts f in the Jacobian ideal.
      CHECK(a.germ_matrix().is_zero());
      // Milnor-Orlik count.
      Rational product(1);
      for (const auto& w : a.weights()) product *= 1 / w - 1;
      CHECK(product == Rational(static_cast<long>(a.mu())));
      // Levels ascend along the basis.
      for (std::size_t i = 1; i < a.mu(); ++i) CHECK(a.level(i - 1) <= a.level(i));
    }
  }
}

TEST_CASE("constant term of the germ is dropped") {
  auto a = A("x^3 + y^4 + 5");
  CHECK(a.germ() == P("x^3 + y^4"));
  CHECK(a.is_quasi_homogeneous());
}
