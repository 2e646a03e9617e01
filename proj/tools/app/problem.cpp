#include "problem.hpp"

#include "posate/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace posate::app {

const Polynomial& Problem::require_target() const {
  if (!target) throw UsageError("problem has no [target] section");
  return *target;
}

namespace {

struct Line {
  int number = 0;
  std::string text;
};

struct Section {
  int header_line = 0;
  std::vector<Line> lines;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t' || c == '(' || c == ')') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

template <class F>
auto at_line(int line, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError& e) {
    if (e.line() > 0) throw;
    throw ParseError(e.what(), line);
  } catch (const DimensionMismatch& e) {
    throw ParseError(e.what(), line);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), line);
  }
}

Rational rational_at(const std::string& s, int line) {
  return at_line(line, [&] { return parse_rational(s); });
}

long integer_at(const std::string& s, int line, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be an integer, got '" + s + "'", line);
  }
}

bool boolean_at(const std::string& s, int line) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ParseError("expected true or false, got '" + s + "'", line);
}

Point point_at(const std::string& text, std::size_t dim, int line) {
  Point p;
  for (const auto& f : split_fields(text)) p.push_back(rational_at(f, line));
  if (p.size() != dim) {
    throw ParseError("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(dim), line);
  }
  return p;
}

std::vector<std::size_t> indices_at(const Section& s, std::size_t count) {
  std::vector<std::size_t> out;
  for (const auto& line : s.lines) {
    for (const auto& f : split_fields(line.text)) {
      const long k = integer_at(f, line.number, "generator index");
      if (k < 1 || static_cast<std::size_t>(k) > count) {
        throw ParseError("generator index " + f + " out of range 1.." + std::to_string(count), line.number);
      }
      out.push_back(static_cast<std::size_t>(k - 1));
    }
  }
  return out;
}

const std::vector<std::string_view> kSections = {"variables", "kind",     "generators",    "module",  "target", "ideal",
                                                 "face",      "variety",  "samples", "decomposition", "options"};

}  // namespace

Problem parse_problem(std::string_view text, std::string source) {
  std::map<std::string, Section> sections;
  Section* current = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("malformed section header", number);
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (std::find(kSections.begin(), kSections.end(), name) == kSections.end()) {
        throw ParseError("unknown section [" + name + "]", number);
      }
      if (sections.count(name)) throw ParseError("duplicate section [" + name + "]", number);
      current = &sections[name];
      current->header_line = number;
      continue;
    }
    if (!current) throw ParseError("content before the first section header", number);
    current->lines.push_back({number, line});
  }

  Problem p;
  p.source = std::move(source);
  auto find = [&](const char* name) -> const Section* {
    auto it = sections.find(name);
    return it == sections.end() ? nullptr : &it->second;
  };

  const Section* vars = find("variables");
  if (!vars) throw ParseError("missing [variables] section");
  for (const auto& line : vars->lines) {
    for (const auto& name : split_fields(line.text)) {
      if (!is_identifier(name)) throw ParseError("invalid variable name '" + name + "'", line.number);
      if (std::find(p.names.begin(), p.names.end(), name) != p.names.end()) {
        throw ParseError("variable '" + name + "' declared twice", line.number);
      }
      p.names.push_back(name);
    }
  }
  if (p.names.empty()) throw ParseError("[variables] declares no variables", vars->header_line);
  const std::size_t n = p.dim();
  auto poly = [&](const Line& line) { return at_line(line.number, [&] { return parse_polynomial(line.text, p.names); }); };

  if (const Section* s = find("kind")) {
    if (s->lines.size() != 1) throw ParseError("[kind] takes exactly one line", s->header_line);
    p.cone.kind = at_line(s->lines[0].number, [&] { return parse_cone_kind(s->lines[0].text); });
  }
  if (const Section* s = find("generators")) {
    for (const auto& line : s->lines) p.cone.generators.push_back(poly(line));
  }
  if (const Section* s = find("module")) {
    if (p.cone.kind != ConeKind::SemiringModule) {
      throw ParseError("[module] is only valid for kind semiring-module", s->header_line);
    }
    for (const auto& line : s->lines) p.cone.module_generators.push_back(poly(line));
  }
  if (p.cone.generators.empty()) throw ParseError("missing or empty [generators] section");

  if (const Section* s = find("target")) {
    if (s->lines.size() != 1) throw ParseError("[target] takes exactly one polynomial", s->header_line);
    p.target = poly(s->lines[0]);
  }
  if (const Section* s = find("ideal")) p.ideal = indices_at(*s, p.cone.generators.size());
  if (const Section* s = find("face")) {
    for (std::size_t i : indices_at(*s, p.cone.generators.size())) p.face.insert(i);
  }
  if (const Section* s = find("variety")) {
    IdealBasis v;
    v.role = IdealRole::Variety;
    for (const auto& line : s->lines) {
      const auto eq = line.text.find('=');
      if (eq != std::string::npos && trim(line.text.substr(0, eq)) == "dim") {
        const long d = integer_at(trim(line.text.substr(eq + 1)), line.number, "dim");
        if (d < 0 || static_cast<std::size_t>(d) > n) throw ParseError("dim out of range 0.." + std::to_string(n), line.number);
        p.variety_dim = static_cast<std::size_t>(d);
      } else {
        v.generators.push_back(poly(line));
      }
    }
    if (v.generators.empty()) throw ParseError("[variety] needs at least one generator", s->header_line);
    if (!p.variety_dim) throw ParseError("[variety] needs a 'dim = k' line", s->header_line);
    p.variety = std::move(v);
  }
  if (const Section* s = find("samples")) {
    for (const auto& line : s->lines) p.samples.push_back(point_at(line.text, n, line.number));
  }
  if (const Section* s = find("decomposition")) {
    for (const auto& line : s->lines) {
      const auto bar = line.text.find('|');
      if (bar == std::string::npos) throw ParseError("decomposition lines read 'b | s'", line.number);
      SumbitiTerm term;
      term.b = poly({line.number, trim(line.text.substr(0, bar))});
      term.s = poly({line.number, trim(line.text.substr(bar + 1))});
      p.decomposition.push_back(std::move(term));
    }
  }
  if (const Section* s = find("options")) {
    for (const auto& line : s->lines) {
      const auto eq = line.text.find('=');
      if (eq == std::string::npos) throw ParseError("options read 'key = value'", line.number);
      const std::string key = trim(line.text.substr(0, eq));
      const std::string value = trim(line.text.substr(eq + 1));
      ProblemOptions& o = p.options;
      auto nonneg = [&](const char* what) {
        const long v = integer_at(value, line.number, what);
        if (v < 0) throw ParseError(std::string(what) + " must be nonnegative", line.number);
        return v;
      };
      if (key == "max-degree") {
        o.max_degree = static_cast<int>(nonneg("max-degree"));
      } else if (key == "start-degree") {
        o.start_degree = static_cast<int>(nonneg("start-degree"));
      } else if (key == "basis-cap") {
        o.basis_cap = static_cast<std::size_t>(nonneg("basis-cap"));
      } else if (key == "grid-density") {
        o.grid_density = static_cast<unsigned>(nonneg("grid-density"));
      } else if (key == "degree") {
        o.degree = static_cast<int>(nonneg("degree"));
      } else if (key == "epsilon") {
        o.epsilon = rational_at(value, line.number);
        if (*o.epsilon <= 0) throw ParseError("epsilon must be positive", line.number);
      } else if (key == "quotient-hypotheses") {
        o.quotient_hypotheses = boolean_at(value, line.number);
      } else if (key == "lci") {
        o.lci = boolean_at(value, line.number);
      } else if (key == "quotient-generator") {
        const auto idx = indices_at(Section{line.number, {{line.number, value}}}, p.cone.generators.size());
        if (idx.size() != 1) throw ParseError("quotient-generator takes one index", line.number);
        o.quotient_generator = idx.front();
      } else if (key == "quotient-point") {
        o.quotient_point = point_at(value, n, line.number);
      } else if (key == "theorem") {
        if (value != "sumbiti" && value != "boundary" && value != "polytope-face" && value != "interior") {
          throw ParseError("unknown theorem '" + value + "'", line.number);
        }
        o.theorem = value;
      } else {
        throw ParseError("unknown option '" + key + "'", line.number);
      }
    }
  }
  return p;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), path);
}

std::string write_problem(const Problem& p) {
  std::ostringstream out;
  auto poly = [&](const Polynomial& q) { return format(q, p.names); };
  auto point = [](const Point& z) {
    std::string s;
    for (std::size_t i = 0; i < z.size(); ++i) s += (i ? " " : "") + to_string(z[i]);
    return s;
  };
  out << "[variables]\n";
  for (std::size_t i = 0; i < p.names.size(); ++i) out << (i ? " " : "") << p.names[i];
  out << "\n[kind]\n" << to_string(p.cone.kind) << "\n[generators]\n";
  for (const auto& g : p.cone.generators) out << poly(g) << '\n';
  if (!p.cone.module_generators.empty()) {
    out << "[module]\n";
    for (const auto& h : p.cone.module_generators) out << poly(h) << '\n';
  }
  if (p.target) out << "[target]\n" << poly(*p.target) << '\n';
  auto indices = [&](const char* name, auto const& idx) {
    if (idx.empty()) return;
    out << '[' << name << "]\n";
    bool first = true;
    for (std::size_t i : idx) {
      out << (first ? "" : " ") << i + 1;
      first = false;
    }
    out << '\n';
  };
  indices("ideal", p.ideal);
  indices("face", p.face);
  if (p.variety) {
    out << "[variety]\n";
    for (const auto& g : p.variety->generators) out << poly(g) << '\n';
    out << "dim = " << *p.variety_dim << '\n';
  }
  if (!p.samples.empty()) {
    out << "[samples]\n";
    for (const auto& z : p.samples) out << point(z) << '\n';
  }
  if (!p.decomposition.empty()) {
    out << "[decomposition]\n";
    for (const auto& t : p.decomposition) out << poly(t.b) << " | " << poly(t.s) << '\n';
  }
  const ProblemOptions& o = p.options;
  const ProblemOptions defaults;
  std::ostringstream opts;
  if (o.max_degree != defaults.max_degree) opts << "max-degree = " << o.max_degree << '\n';
  if (o.start_degree) opts << "start-degree = " << *o.start_degree << '\n';
  if (o.basis_cap) opts << "basis-cap = " << *o.basis_cap << '\n';
  if (o.grid_density != defaults.grid_density) opts << "grid-density = " << o.grid_density << '\n';
  if (o.degree != defaults.degree) opts << "degree = " << o.degree << '\n';
  if (o.epsilon) opts << "epsilon = " << to_string(*o.epsilon) << '\n';
  if (o.quotient_hypotheses) opts << "quotient-hypotheses = true\n";
  if (o.lci) opts << "lci = true\n";
  if (o.quotient_generator) opts << "quotient-generator = " << *o.quotient_generator + 1 << '\n';
  if (o.quotient_point) opts << "quotient-point = " << point(*o.quotient_point) << '\n';
  if (o.theorem) opts << "theorem = " << *o.theorem << '\n';
  if (!opts.str().empty()) out << "[options]\n" << opts.str();
  return out.str();
}

}  // namespace posate::app
