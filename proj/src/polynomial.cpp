#include "mhs/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "mhs/error.hpp"

namespace mhs {

// ---- Monomial ------------------------------------------------------------

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars);
  m.exps_[index] = 1;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  assert(b.divides(a));
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i)
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
  return h;
}

// ---- orders --------------------------------------------------------------

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  if (kind == OrderKind::lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
  }
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

std::string_view to_string(OrderKind kind) {
  return kind == OrderKind::lex ? "lex" : "grevlex";
}

OrderKind parse_order_kind(std::string_view text) {
  if (text == "grevlex") return OrderKind::grevlex;
  if (text == "lex") return OrderKind::lex;
  throw Error(ErrorCode::InvalidArgument,
              "unknown monomial order '" + std::string(text) + "'");
}

// ---- Polynomial ----------------------------------------------------------

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return term(Monomial::variable(nvars, index), Rational(1));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
  return coefficient(Monomial(nvars_));
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Term Polynomial::leading_term(const MonomialOrder& order) const {
  assert(!terms_.empty());
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return {best->first, best->second};
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.monomial, b.monomial) > 0;
  });
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  Polynomial r(nvars_);
  if (c == 0) return r;
  for (const auto& [mm, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), mm * m, v * c);
  return r;
}

Polynomial pow(const Polynomial& p, unsigned e) {
  Polynomial result = Polynomial::constant(p.nvars(), Rational(1));
  Polynomial base = p;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  assert(index < p.nvars());
  Polynomial r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    r.add_term(d, c * m[index]);
  }
  return r;
}

Rational weighted_degree(const Monomial& m, std::span<const Rational> weights) {
  assert(weights.size() == m.size());
  Rational d(0);
  for (std::size_t i = 0; i < m.size(); ++i) d += weights[i] * m[i];
  return d;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial();
  const std::size_t nvars = m[0][0].nvars();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Polynomial det(nvars);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * determinant(minor);
    if (col % 2) det -= term;
    else det += term;
  }
  return det;
}

Polynomial hessian_determinant(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> grad;
  for (std::size_t i = 0; i < n; ++i) grad.push_back(partial_derivative(f, i));
  std::vector<std::vector<Polynomial>> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i].push_back(partial_derivative(grad[i], j));
  return determinant(h);
}

Polynomial shift_variables(const Polynomial& p, std::size_t nvars,
                           std::size_t offset) {
  assert(offset + p.nvars() <= nvars);
  Polynomial r(nvars);
  for (const auto& [m, c] : p.terms()) {
    Monomial s(nvars);
    for (std::size_t i = 0; i < m.size(); ++i) s[offset + i] = m[i];
    r.add_term(s, c);
  }
  return r;
}

std::complex<double> evaluate(const Polynomial& p,
                              std::span<const std::complex<double>> point) {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

// ---- printing ------------------------------------------------------------

std::string to_string(const Monomial& m, std::span<const std::string> names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names,
                      const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms(order)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else {
      if (mag != 1) out += to_string(mag) + '*';
      out += to_string(m, names);
    }
  }
  return out;
}

// ---- parsing -------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError(pos_, "empty expression");
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;

  std::size_t nvars() const { return vars_.size(); }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // expression := ['+'|'-'] product (('+'|'-') product)*
  Polynomial expression() {
    Polynomial acc(nvars());
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = product();
    acc = negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += product();
      else if (accept('-')) acc -= product();
      else return acc;
    }
  }

  // product := power ('*' power)*
  Polynomial product() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  // power := ('+'|'-') power | primary ('^' integer)?
  Polynomial power() {
    if (accept('-')) return -power();
    if (accept('+')) return power();
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      Integer e = digits();
      if (!e.fits_uint_p() || e > 4096)
        throw ParseError(start, "exponent too large");
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Integer digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) throw ParseError(start, "expected integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(digits());
      if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError(at, "zero denominator");
        value /= Rational(den);
      }
      return Polynomial::constant(nvars(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(nvars(), i);
      throw Error(ErrorCode::UnknownVariable,
                  "unknown variable '" + std::string(name) + "' at position " +
                      std::to_string(start));
    }
    throw ParseError(pos_, std::string("unexpected '") + c + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variables) {
  if (variables.empty())
    throw Error(ErrorCode::InvalidArgument, "empty variable list");
  return Parser(text, variables).parse();
}

std::vector<std::string> infer_variables(std::string_view text) {
  std::set<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isalpha(c) || c == '_') {
      std::size_t start = i;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) ||
              text[i] == '_'))
        ++i;
      names.emplace(text.substr(start, i - start));
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace mhs
