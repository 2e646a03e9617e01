#include "posate/polynomial.hpp"

#include "posate/errors.hpp"
#include "posate/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <optional>

namespace posate {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t dim, std::size_t index, unsigned power) {
  Monomial m(dim);
  m.exponents_.at(index) = power;
  return m;
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (dim() != other.dim()) throw DimensionMismatch("monomial product across dimensions");
  Monomial out(*this);
  for (std::size_t i = 0; i < dim(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  // Same degree: the monomial with the smaller leading exponent sorts first,
  // so x1 > x2 > ... in descending order.
  return a.exponents() < b.exponents();
}

namespace {

void append_monomials(std::size_t dim, unsigned degree, std::size_t pos, std::vector<unsigned>& exps,
                      std::vector<Monomial>& out) {
  if (pos + 1 == dim) {
    exps[pos] = degree;
    out.emplace_back(exps);
    return;
  }
  for (unsigned e = 0; e <= degree; ++e) {
    exps[pos] = e;
    append_monomials(dim, degree - e, pos + 1, exps, out);
  }
  exps[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t dim, unsigned max_degree) {
  std::vector<Monomial> out;
  if (dim == 0) {
    out.emplace_back(0);
    return out;
  }
  std::vector<unsigned> exps(dim, 0);
  for (unsigned d = 0; d <= max_degree; ++d) append_monomials(dim, d, 0, exps, out);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Monomial(dim), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("variable index out of range");
  Polynomial p(dim);
  p.add_term(Monomial::variable(dim, index), 1);
  return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p(m.dim());
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

int Polynomial::degree() const noexcept {
  if (terms_.empty()) return kZeroDegree;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(dim_)); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.dim() != dim_) throw DimensionMismatch("term dimension does not match polynomial");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_dim(const Polynomial& other) const {
  if (dim_ != other.dim_) {
    throw DimensionMismatch("polynomials in " + std::to_string(dim_) + " and " + std::to_string(other.dim_) +
                            " variables");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_dim(b);
  Polynomial out(a.dim_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  return out *= Rational(-1);
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.dim(), 1);
  Polynomial base = p;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

void require_dim(const Polynomial& p, std::size_t dim, const char* what) {
  if (p.dim() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(dim) + " variables, got " +
                            std::to_string(p.dim()));
  }
}

void require_dim(const Vector& v, std::size_t dim, const char* what) {
  if (v.size() != dim) {
    throw DimensionMismatch(std::string(what) + ": expected length " + std::to_string(dim) + ", got " +
                            std::to_string(v.size()));
  }
}

Rational evaluate(const Polynomial& p, const Point& z) {
  require_dim(z, p.dim(), "evaluate");
  // Cache powers per variable; monomial degrees are small at desk scale.
  std::vector<std::vector<Rational>> powers(p.dim());
  auto pw = [&](std::size_t i, unsigned e) -> const Rational& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * z[i]);
    return cache[e];
  };
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (m[i]) t *= pw(i, m[i]);
    }
    sum += t;
  }
  return sum;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t index) {
  if (index >= p.dim()) throw DimensionMismatch("partial derivative index out of range");
  Polynomial out(p.dim());
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[index];
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[index] = e - 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Vector gradient(const Polynomial& p, const Point& z) {
  require_dim(z, p.dim(), "gradient");
  Vector g(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) g[i] = evaluate(partial_derivative(p, i), z);
  return g;
}

Matrix hessian(const Polynomial& p, const Point& z) {
  require_dim(z, p.dim(), "hessian");
  const std::size_t n = p.dim();
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial di = partial_derivative(p, i);
    for (std::size_t j = i; j < n; ++j) {
      h(i, j) = evaluate(partial_derivative(di, j), z);
      h(j, i) = h(i, j);
    }
  }
  return h;
}

Rational directional_derivative(const Polynomial& p, const Point& z, const Vector& v) {
  require_dim(v, p.dim(), "directional derivative direction");
  return dot(gradient(p, z), v);
}

Rational hessian_form(const Polynomial& p, const Point& z, const Vector& v) {
  require_dim(v, p.dim(), "hessian form direction");
  const Matrix h = hessian(p, z);
  return bilinear(h, v, v);
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.dim()) throw DimensionMismatch("compose: one image per variable required");
  const std::size_t target_dim = images.empty() ? 0 : images.front().dim();
  for (const auto& img : images) require_dim(img, target_dim, "compose image");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto pw = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_dim, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial out(target_dim);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target_dim, c);
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (m[i]) t *= pw(i, m[i]);
    }
    out += t;
  }
  return out;
}

Polynomial restrict_to_line(const Polynomial& p, const Point& z, const Vector& v) {
  require_dim(z, p.dim(), "restrict_to_line point");
  require_dim(v, p.dim(), "restrict_to_line direction");
  std::vector<Polynomial> images;
  images.reserve(p.dim());
  const Polynomial t = Polynomial::variable(1, 0);
  for (std::size_t i = 0; i < p.dim(); ++i) images.push_back(Polynomial::constant(1, z[i]) + t * v[i]);
  return compose(p, images);
}

Polynomial affine(const Vector& linear, const Rational& constant) {
  Polynomial p = Polynomial::constant(linear.size(), constant);
  for (std::size_t i = 0; i < linear.size(); ++i) p.add_term(Monomial::variable(linear.size(), i), linear[i]);
  return p;
}

Vector linear_part(const Polynomial& p) {
  if (!p.is_affine()) throw PreconditionError("expected an affine-linear polynomial, got degree " +
                                              std::to_string(p.degree()));
  Vector a(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) a[i] = p.coefficient(Monomial::variable(p.dim(), i));
  return a;
}

// ---------------------------------------------------------------------------
// Text format

std::vector<std::string> default_variable_names(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

std::string format(const Polynomial& p, const std::vector<std::string>& names_in) {
  const std::vector<std::string> names = names_in.empty() ? default_variable_names(p.dim()) : names_in;
  if (names.size() != p.dim()) throw DimensionMismatch("format: variable name count does not match dimension");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (!m[i]) continue;
      if (!factors.empty()) factors += " ";
      factors += names[i];
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + " " + factors;
    }
  }
  return out;
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      toks.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      toks.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
    toks.push_back({kind, std::string(1, c), start});
    ++i;
  }
  toks.push_back({Tok::End, "", s.size()});
  return toks;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names)
      : toks_(tokenize(text)), names_(names), dim_(names.size()) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at offset " + std::to_string(peek().pos));
  }

  bool starts_factor() const {
    const Tok k = peek().kind;
    return k == Tok::Number || k == Tok::Ident || k == Tok::LParen;
  }

  Polynomial expr() {
    Polynomial acc(dim_);
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) negate = next().kind == Tok::Minus;
    Polynomial t = term();
    acc += negate ? -t : t;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negate = next().kind == Tok::Minus;
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        acc *= factor();
      } else if (peek().kind == Tok::Slash) {
        next();
        if (peek().kind != Tok::Number) fail("division is only allowed by a rational constant");
        const Rational d = parse_rational(next().text);
        if (d == 0) fail("division by zero");
        acc *= Rational(1 / d);
      } else if (starts_factor()) {
        acc *= factor();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) fail("exponent must be a nonnegative integer");
      const unsigned long e = std::stoul(next().text);
      base = pow(base, static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return Polynomial::constant(dim_, parse_rational(t.text));
      case Tok::Ident: {
        next();
        auto it = std::find(names_.begin(), names_.end(), t.text);
        if (it == names_.end()) {
          throw ParseError("undeclared variable '" + t.text + "' at offset " + std::to_string(t.pos));
        }
        return Polynomial::variable(dim_, static_cast<std::size_t>(it - names_.begin()));
      }
      case Tok::LParen: {
        next();
        Polynomial inner = expr();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  const std::vector<std::string>& names_;
  std::size_t dim_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

Polynomial parse_polynomial(std::string_view text, std::size_t dim) {
  const auto names = default_variable_names(dim);
  return Parser(text, names).parse();
}

}  // namespace posate
