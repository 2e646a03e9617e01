#include "posate/certificate.hpp"

#include "posate/errors.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace posate {

void Certificate::canonicalize() {
  auto key = [](const CertificateTerm& t) {
    return std::make_tuple(t.alpha, t.module, t.square ? format(*t.square) : std::string());
  };
  std::sort(terms.begin(), terms.end(),
            [&](const CertificateTerm& a, const CertificateTerm& b) { return key(a) < key(b); });
}

namespace {

void check_indices(const CertificateTerm& t, const GeneratorSet& gens) {
  if (t.alpha.size() != gens.generators.size()) {
    throw PreconditionError("certificate alpha has " + std::to_string(t.alpha.size()) + " entries, expected " +
                            std::to_string(gens.generators.size()));
  }
  if (t.module > gens.module_generators.size()) {
    throw PreconditionError("certificate module index " + std::to_string(t.module) + " out of range");
  }
  if (t.square) require_dim(*t.square, gens.dim(), "certificate square");
  unsigned total = 0;
  unsigned largest = 0;
  for (unsigned e : t.alpha) {
    total += e;
    largest = std::max(largest, e);
  }
  switch (gens.kind) {
    case ConeKind::Preordering:
      if (largest > 1) throw PreconditionError("preordering certificates use squarefree products only");
      break;
    case ConeKind::QuadraticModule:
      if (total > 1) throw PreconditionError("quadratic-module certificates use single generators only");
      break;
    case ConeKind::Semiring:
    case ConeKind::SemiringModule:
      if (t.square) throw PreconditionError("semiring certificates carry no square multipliers");
      break;
  }
}

}  // namespace

Polynomial expand(const CertificateTerm& t, const GeneratorSet& gens) {
  check_indices(t, gens);
  const std::size_t n = gens.dim();
  Polynomial p = Polynomial::constant(n, t.coeff);
  for (std::size_t i = 0; i < t.alpha.size(); ++i) {
    if (t.alpha[i]) p *= pow(gens.generators[i], t.alpha[i]);
  }
  if (t.module > 0) p *= gens.module_generators[t.module - 1];
  if (t.square) p *= *t.square * *t.square;
  return p;
}

Polynomial expand(const Certificate& cert, const GeneratorSet& gens) {
  Polynomial sum(gens.dim());
  for (const auto& t : cert.terms) sum += expand(t, gens);
  return sum;
}

bool verify_certificate(const Polynomial& f, const Certificate& cert, const GeneratorSet& gens) {
  gens.validate();
  require_dim(f, gens.dim(), "certified polynomial");
  for (const auto& t : cert.terms) {
    check_indices(t, gens);
    if (t.coeff <= 0) return false;
  }
  return expand(cert, gens) == f;
}

std::string serialize(const Certificate& cert, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "# degree=" << cert.degree << '\n';
  for (const auto& t : cert.terms) {
    out << "alpha=(";
    for (std::size_t i = 0; i < t.alpha.size(); ++i) out << (i ? "," : "") << t.alpha[i];
    out << ") coeff=" << to_string(t.coeff);
    if (t.module) out << " module=" << t.module;
    if (t.square) out << " square=" << format(*t.square, names);
    out << '\n';
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Certificate parse_certificate(std::string_view text, std::size_t dim, const std::vector<std::string>& names_in) {
  const std::vector<std::string> names = names_in.empty() ? default_variable_names(dim) : names_in;
  Certificate cert;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '#') {
      line.remove_prefix(1);
      line = trim(line);
      if (line.rfind("degree=", 0) == 0) {
        try {
          cert.degree = std::stoi(std::string(line.substr(7)));
        } catch (const std::exception&) {
          throw ParseError("malformed degree header", line_no);
        }
      }
      continue;
    }
    CertificateTerm term;
    bool have_alpha = false, have_coeff = false;
    try {
      while (!line.empty()) {
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value", line_no);
        const std::string_view key = trim(line.substr(0, eq));
        line.remove_prefix(eq + 1);
        if (key == "square") {
          term.square = parse_polynomial(line, names);
          line = {};
          break;
        }
        std::string_view value;
        if (key == "alpha") {
          const std::size_t close = line.find(')');
          if (line.empty() || line.front() != '(' || close == std::string_view::npos) {
            throw ParseError("alpha must be a parenthesised tuple", line_no);
          }
          value = line.substr(1, close - 1);
          line.remove_prefix(close + 1);
          std::size_t p = 0;
          while (p < value.size()) {
            const std::size_t comma = std::min(value.find(',', p), value.size());
            const std::string entry(trim(value.substr(p, comma - p)));
            if (entry.empty() || entry.find_first_not_of("0123456789") != std::string::npos) {
              throw ParseError("alpha entries must be nonnegative integers", line_no);
            }
            term.alpha.push_back(static_cast<unsigned>(std::stoul(entry)));
            p = comma + 1;
          }
          have_alpha = true;
        } else {
          const std::size_t sp = std::min(line.find(' '), line.size());
          value = line.substr(0, sp);
          line.remove_prefix(sp);
          if (key == "coeff") {
            term.coeff = parse_rational(value);
            have_coeff = true;
          } else if (key == "module") {
            term.module = static_cast<std::size_t>(std::stoul(std::string(value)));
          } else {
            throw ParseError("unknown certificate field '" + std::string(key) + "'", line_no);
          }
        }
        line = trim(line);
      }
    } catch (const ParseError& e) {
      if (e.line() > 0) throw;
      throw ParseError(e.what(), line_no);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!have_alpha || !have_coeff) throw ParseError("certificate term needs alpha and coeff", line_no);
    cert.terms.push_back(std::move(term));
  }
  return cert;
}

}  // namespace posate
