#pragma once

// Seeded generators shared by the property tests.

#include <random>
#include <string>
#include <vector>

#include "mhs/linalg.hpp"
#include "mhs/polynomial.hpp"

namespace mhs::testing {

inline std::vector<std::string> names(std::size_t n) {
  static const char* base[] = {"x", "y", "z", "w", "u", "v"};
  return {base, base + n};
}

inline Rational random_rational(std::mt19937& rng, int bound = 5) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Polynomial random_polynomial(std::mt19937& rng, std::size_t nvars,
                                    int terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> e(0, max_exp);
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m[i] = static_cast<std::uint32_t>(e(rng));
    p.add_term(m, random_rational(rng));
  }
  return p;
}

inline RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                               int bound = 4) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, bound);
  return m;
}

/// Unit lower-triangular times unit upper-triangular: determinant 1.
inline RatMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-2, 2);
  RatMatrix lower = RatMatrix::identity(n), upper = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = d(rng);
      upper(j, i) = d(rng);
    }
  return lower * upper;
}

}  // namespace mhs::testing
