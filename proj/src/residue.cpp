#include "mhs/residue.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "mhs/error.hpp"

namespace mhs {

namespace {

using cd = std::complex<double>;

// (x_j^a - y_j^a)/(x_j - y_j) times the frozen variables, for one term.
void add_difference_quotient(Polynomial& out, const Monomial& m, const Rational& c,
                             std::size_t j, std::size_t n) {
  const std::uint32_t a = m[j];
  if (a == 0) return;
  Monomial base(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    if (v < j) base[n + v] = m[v];
    if (v > j) base[v] = m[v];
  }
  for (std::uint32_t t = 0; t < a; ++t) {
    Monomial piece = base;
    piece[j] = t;
    piece[n + j] = a - 1 - t;
    out.add_term(piece, c);
  }
}

GroebnerBasis embedded(const GroebnerBasis& g, std::size_t offset) {
  const std::size_t n = g.nvars();
  std::vector<Polynomial> shifted;
  for (const auto& p : g.polynomials()) shifted.push_back(shift_variables(p, 2 * n, offset));
  return GroebnerBasis(2 * n, g.order(), std::move(shifted));
}

Eigen::MatrixXd to_double(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

double norm(const std::vector<cd>& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

Polynomial bezoutian_polynomial(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<Polynomial>> b(n, std::vector<Polynomial>(n, Polynomial(2 * n)));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial g = partial_derivative(f, i);
    for (const auto& [m, c] : g.terms())
      for (std::size_t j = 0; j < n; ++j) add_difference_quotient(b[i][j], m, c, j, n);
  }
  return determinant(b);
}

Bezoutian bezoutian(const MilnorAlgebra& a, ReductionOrder order) {
  const std::size_t n = a.nvars();
  Bezoutian out{bezoutian_polynomial(a.germ()), RatMatrix(a.mu(), a.mu())};
  GroebnerBasis gx = embedded(a.groebner(), 0), gy = embedded(a.groebner(), n);
  Polynomial r = order == ReductionOrder::y_then_x ? normal_form(normal_form(out.delta, gy), gx)
                                                   : normal_form(normal_form(out.delta, gx), gy);
  for (const auto& [m, c] : r.terms()) {
    Monomial mx(n), my(n);
    for (std::size_t v = 0; v < n; ++v) {
      mx[v] = m[v];
      my[v] = m[n + v];
    }
    auto ia = a.index_of(mx), ib = a.index_of(my);
    if (!ia || !ib)
      throw Error(ErrorCode::InvalidArgument, "reduced Bezoutian has a non-standard term");
    out.reduced(*ia, *ib) += c;
  }
  return out;
}

ResidueForm gram_matrix(const MilnorAlgebra& a) {
  ResidueForm r;
  r.bezout = bezoutian(a).reduced;
  try {
    r.gram = inverse(r.bezout);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Singular) throw;
    throw Error(ErrorCode::SingularBezoutian, "reduced Bezoutian is singular");
  }
  r.functional = r.gram.column(a.unit_index());
  return r;
}

Rational residue_pair(const ResidueForm& r, const RatVector& u, const RatVector& v) {
  return dot(u, r.gram * v);
}

Rational hessian_residue_check(const MilnorAlgebra& a, const ResidueForm& r) {
  Rational value = dot(a.coordinates(hessian_determinant(a.germ())), r.functional);
  if (value != Rational(static_cast<long>(a.mu())))
    throw Error(ErrorCode::NormalizationFailure,
                "l(Hess f) = " + to_string(value) + " but mu = " + std::to_string(a.mu()));
  return value;
}

std::vector<Rational> random_perturbation(std::size_t nvars, const Rational& scale,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> s;
  for (std::size_t i = 0; i < nvars; ++i) {
    Rational r = scale * Rational(8 + static_cast<long>(rng() % 17), 16);
    r.canonicalize();
    s.push_back(r);
  }
  return s;
}

MorseSum morse_oracle(const MilnorAlgebra& a, const std::vector<Rational>& s) {
  const std::size_t n = a.nvars(), mu = a.mu();
  if (s.size() != n) throw Error(ErrorCode::InvalidArgument, "perturbation size mismatch");
  Polynomial fs = a.germ();
  for (std::size_t i = 0; i < n; ++i) fs += s[i] * Polynomial::variable(n, i);

  GroebnerBasis g = buchberger(jacobian_ideal(fs), a.order());
  std::vector<Monomial> basis;
  try {
    basis = quotient_basis(g);
  } catch (const Error&) {
    throw Error(ErrorCode::NotMorse, "perturbed critical locus is not finite");
  }
  const std::size_t total = basis.size();
  if (total < mu) throw Error(ErrorCode::NotMorse, "perturbation lost critical points");

  // Transposed multiplication matrices have the evaluation vectors
  // (e_b(p))_b as joint eigenvectors.
  std::vector<Eigen::MatrixXd> mt;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> coef(1.0, 2.0);
  Eigen::MatrixXd combo = Eigen::MatrixXd::Zero(total, total);
  for (std::size_t i = 0; i < n; ++i) {
    mt.push_back(to_double(multiplication_matrix(g, basis, Polynomial::variable(n, i)))
                     .transpose());
    combo += coef(rng) * mt.back();
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo.cast<cd>());
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::NoConvergence, "eigen-solve of the multiplication matrices failed");

  std::vector<Polynomial> grad;
  std::vector<std::vector<Polynomial>> hess(n);
  for (std::size_t i = 0; i < n; ++i) {
    grad.push_back(partial_derivative(fs, i));
    for (std::size_t j = 0; j < n; ++j) hess[i].push_back(partial_derivative(grad[i], j));
  }

  std::vector<std::vector<cd>> points;
  for (std::size_t k = 0; k < total; ++k) {
    Eigen::VectorXcd v = solver.eigenvectors().col(k);
    const cd vv = v.squaredNorm();
    std::vector<cd> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = v.dot(mt[i].cast<cd>() * v) / vv;
    // Newton polish on the gradient.
    bool converged = false;
    for (int it = 0; it < 50 && !converged; ++it) {
      Eigen::VectorXcd rhs(n);
      Eigen::MatrixXcd jac(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        rhs(i) = -evaluate(grad[i], p);
        for (std::size_t j = 0; j < n; ++j) jac(i, j) = evaluate(hess[i][j], p);
      }
      Eigen::VectorXcd step = jac.fullPivLu().solve(rhs);
      if (!step.allFinite()) break;
      for (std::size_t i = 0; i < n; ++i) p[i] += step(i);
      converged = step.norm() <= 1e-15 * (1.0 + norm(p));
    }
    if (!converged) {
      // Roundoff can stall the last step; accept a small residual.
      double res = 0;
      for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(evaluate(grad[i], p)));
      if (!(res < 1e-12)) throw Error(ErrorCode::NoConvergence, "Newton polishing diverged");
    }
    points.push_back(std::move(p));
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& l, const auto& r) { return norm(l) < norm(r); });
  points.resize(mu);

  double scale = 0;
  for (const auto& p : points) scale = std::max(scale, norm(p));
  for (std::size_t r = 0; r < mu; ++r)
    for (std::size_t t = r + 1; t < mu; ++t) {
      std::vector<cd> d(n);
      for (std::size_t i = 0; i < n; ++i) d[i] = points[r][i] - points[t][i];
      if (norm(d) <= 1e-9 * std::max(scale, 1e-300))
        throw Error(ErrorCode::NotMorse, "perturbed critical points collide");
    }

  const Polynomial h = hessian_determinant(fs);
  MorseSum out;
  out.matrix.assign(mu, std::vector<double>(mu, 0.0));
  std::vector<std::vector<cd>> sums(mu, std::vector<cd>(mu, 0.0));
  for (const auto& p : points) {
    const cd hv = evaluate(h, p);
    if (std::abs(hv) == 0) throw Error(ErrorCode::NotMorse, "Hessian vanishes at a critical point");
    std::vector<cd> e(mu);
    for (std::size_t b = 0; b < mu; ++b) e[b] = evaluate(Polynomial::term(a.basis()[b], 1), p);
    for (std::size_t x = 0; x < mu; ++x)
      for (std::size_t y = 0; y < mu; ++y) sums[x][y] += e[x] * e[y] / hv;
  }
  for (std::size_t x = 0; x < mu; ++x)
    for (std::size_t y = 0; y < mu; ++y) {
      out.matrix[x][y] = sums[x][y].real();
      out.max_imaginary = std::max(out.max_imaginary, std::abs(sums[x][y].imag()));
    }
  out.points = std::move(points);
  return out;
}

double max_deviation(const MorseSum& m, const RatMatrix& gram) {
  double worst = 0;
  for (std::size_t a = 0; a < gram.rows(); ++a)
    for (std::size_t b = 0; b < gram.cols(); ++b)
      worst = std::max(worst, std::abs(m.matrix[a][b] - gram(a, b).get_d()));
  return worst;
}

}  // namespace mhs
