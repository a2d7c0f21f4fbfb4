#include "doctest.h"
#include "mhs/error.hpp"
#include "mhs/signature.hpp"
#include "support.hpp"

using namespace mhs;
using mhs::testing::names;

namespace {

MilnorAlgebra A(const std::string& text, std::size_t n) {
  auto vars = names(n);
  return MilnorAlgebra(parse_polynomial(text, vars), vars);
}

HodgeNumberTable table(const std::string& text, std::size_t n) {
  return hodge_number_table(hodge_bigrading(spectrum(A(text, n))));
}

using Counts = std::map<std::pair<int, int>, std::size_t>;

const std::vector<std::pair<std::string, std::size_t>> kQh{
    {"x^2", 1},          {"x^3", 1},           {"x^2 + y^2", 2},
    {"x^3 + y^4", 2},    {"x^3 + x*y^3", 2},   {"x^5 + y^5", 2},
    {"x^4 + y^4", 2},    {"x^3 + y^3 + z^3", 3}, {"x^2 + y^2 + z^2", 3},
    {"x^2*y + y^4 + z^2", 3}, {"x^2 + y^3 + z^4", 3},
    {"x^2*y^2 + x^4 + y^4 + z^2", 3}, {"x*y*z + x^3 + y^3 + z^3", 3},
    {"x^2 + y^2 + z^2 + w^2", 4}, {"x^3 + y^3 + z^3 + w^3", 4},
    {"x^2 + y^2 + z^2 + w^2 + u^2", 5}, {"x^2 + y^2 + z^2 + w^2 + u^3", 5}};

}  // namespace

TEST_CASE("hodge number table examples") {
  auto e6 = table("x^3 + y^4", 2);
  CHECK(e6.other == Counts{{{0, 1}, 3}, {{1, 0}, 3}});
  CHECK(e6.unipotent.empty());
  CHECK(table("x^2 + y^2", 2).unipotent == Counts{{{1, 1}, 1}});
  auto f3 = table("x^3 + y^3 + z^3", 3);
  CHECK(f3.other == Counts{{{1, 1}, 6}});
  CHECK(f3.unipotent == Counts{{{1, 2}, 1}, {{2, 1}, 1}});
  CHECK(f3.total() == 8);
}

TEST_CASE("signature formula examples") {
  CHECK(signature_formula(table("x^3 + y^4", 2)) == 0);
  CHECK(signature_formula(table("x^3 + y^3 + z^3", 3)) == -6);
  CHECK(signature_formula(table("x^2 + y^2 + z^2", 3)) == -1);

  // The unipotent terms only count from weight n + 2 on.
  HodgeNumberTable t;
  t.n = 2;
  t.unipotent = {{{2, 2}, 1}, {{3, 2}, 1}, {{2, 1}, 5}};  // (2,1) has weight n + 1
  CHECK(signature_formula(t) == 1 + 2);
  t.n = 3;
  CHECK(signature_formula(t) == 0);
}

TEST_CASE("signature direct examples") {
  CHECK(calibration_sign() == 1);
  auto anchor = compare_signatures(A("x^2 + y^2 + z^2", 3));
  CHECK(anchor.direct.value() == -1);
  CHECK(anchor.agree());
  auto f3 = compare_signatures(A("x^3 + y^3 + z^3", 3));
  CHECK(f3.direct.value() == -6);
  CHECK(f3.formula == -6);
  CHECK(compare_signatures(A("x^3 + y^4", 2)).direct.value() == 0);
  CHECK(compare_signatures(A("x^2 + y^2 + z^2 + w^2 + u^3", 5)).direct.value() == 2);
  CHECK_THROWS_AS(compare_signatures(A("x^2*y^2 + x^5 + y^5", 2)), Error);
}

TEST_CASE("pipelines agree on the qh corpus") {
  for (const auto& [germ, nvars] : kQh) {
    CAPTURE(germ);
    auto c = compare_signatures(A(germ, nvars));
    CHECK(c.agree());
    if (nvars % 2 == 0) {  // odd fiber dimension
      CHECK(c.formula == 0);
      CHECK(c.direct.raw == 0);
    }
  }
}

TEST_CASE("signature is invariant under permuting variables") {
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"x^3 + y^4", "y^3 + x^4"},
      {"x^2*y + y^4 + z^2", "y^2*x + x^4 + z^2"},
      {"x^2*y + y^4 + z^2", "z^2*y + y^4 + x^2"},
      {"x^2 + y^3 + z^4", "z^2 + x^3 + y^4"},
      {"x^2*y^2 + x^4 + y^4 + z^2", "x^2*z^2 + x^4 + z^4 + y^2"}};
  for (const auto& [f, g] : pairs) {
    CAPTURE(f);
    const std::size_t n = f.find('z') == std::string::npos ? 2 : 3;
    auto a = compare_signatures(A(f, n)), b = compare_signatures(A(g, n));
    CHECK(a.formula == b.formula);
    CHECK(a.direct.value() == b.direct.value());
  }
}
