#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhs/rational.hpp"

namespace mhs {

/// Dense exponent vector, one slot per ambient variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  /// Plain lexicographic comparison of exponent vectors; storage order only,
  /// not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

enum class OrderKind { grevlex, lex };

/// Term order. Variable 0 has the highest priority in both kinds.
struct MonomialOrder {
  OrderKind kind = OrderKind::grevlex;

  /// Sign of the comparison: negative when a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

std::string_view to_string(OrderKind kind);
/// "grevlex" or "lex"; throws Error(InvalidArgument).
OrderKind parse_order_kind(std::string_view text);

struct Term {
  Monomial monomial;
  Rational coefficient;
};

/// Exact multivariate polynomial over Q. No zero coefficients are ever
/// stored, so equality is equality of the term maps.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  std::uint64_t total_degree() const;

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rational& c);

  /// Largest term under `order`; requires a nonzero polynomial.
  Term leading_term(const MonomialOrder& order) const;
  /// Terms sorted in decreasing `order`.
  std::vector<Term> sorted_terms(const MonomialOrder& order) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& c) {
    return a *= c;
  }
  friend Polynomial operator*(const Rational& c, Polynomial a) {
    return a *= c;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Multiplication by c*m.
  Polynomial times_term(const Monomial& m, const Rational& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

Polynomial pow(const Polynomial& p, unsigned e);

/// Formal derivative with respect to variable `index`.
Polynomial partial_derivative(const Polynomial& p, std::size_t index);

/// Sum of weights[i] * exponent[i].
Rational weighted_degree(const Monomial& m, std::span<const Rational> weights);

/// Determinant of a square matrix of polynomials (cofactor expansion).
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

/// det of the matrix of second partials.
Polynomial hessian_determinant(const Polynomial& f);

/// Re-homes p into a ring with `nvars` variables, moving variable i to
/// slot offset + i.
Polynomial shift_variables(const Polynomial& p, std::size_t nvars,
                           std::size_t offset);

std::complex<double> evaluate(const Polynomial& p,
                              std::span<const std::complex<double>> point);

/// Canonical text: decreasing `order`, unit coefficients elided, e.g.
/// "y^4 + x^3" under grevlex, "2*x*y - 1/3".
std::string to_string(const Polynomial& p, std::span<const std::string> names,
                      const MonomialOrder& order = {});
std::string to_string(const Monomial& m, std::span<const std::string> names);

/// Grammar: sums and differences of products of factors. A factor is a
/// literal (integer or a/b), a declared variable or a parenthesized
/// expression, optionally raised to a nonnegative integer power.
/// Whitespace is ignored. Throws ParseError or Error(UnknownVariable).
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variables);

/// Identifiers appearing in `text`, sorted and deduplicated.
std::vector<std::string> infer_variables(std::string_view text);

}  // namespace mhs
