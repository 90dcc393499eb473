#include "nullcert/io.hpp"

#include <cctype>
#include <fstream>
#include <set>

namespace nullcert {

namespace {

std::int64_t json_to_int(const json& j, const std::string& field) {
  if (!j.is_number_integer())
    throw ParseError("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

LatticePoint exponent_from_json(const json& j, int dim) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw ParseError("field 'exp' must be an array of " + std::to_string(dim) + " integers");
  LatticePoint e;
  for (const auto& c : j) e.push_back(json_to_int(c, "exp"));
  return e;
}

}  // namespace

json poly_to_json(const SparsePolynomial& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) {
    terms.push_back({{"coeff", rational_to_string(c)}, {"exp", e}});
  }
  return {{"dim", f.dim()}, {"terms", terms}};
}

SparsePolynomial poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    throw ParseError("polynomial must be an object with 'dim' and 'terms'");
  const int dim = static_cast<int>(json_to_int(j.at("dim"), "dim"));
  if (dim < 1) throw ParseError("polynomial 'dim' must be positive");
  SparsePolynomial f(dim);
  if (!j.at("terms").is_array()) throw ParseError("'terms' must be an array");
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exp"))
      throw ParseError("each term needs 'coeff' and 'exp'");
    if (!t.at("coeff").is_string()) throw ParseError("'coeff' must be a string like \"p/q\"");
    const Rational c = rational_from_string(t.at("coeff").get<std::string>());
    const LatticePoint e = exponent_from_json(t.at("exp"), dim);
    for (auto v : e) {
      if (v < 0) throw ParseError("exponents must be nonnegative");
    }
    f.add_term(e, c);  // duplicates sum
  }
  return f;
}

json polytope_to_json(const Polytope& p) {
  json vertices = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) {
      if (is_integral(c))
        row.push_back(to_int64(c.get_num()));
      else
        row.push_back(rational_to_string(c));
    }
    vertices.push_back(row);
  }
  return {{"dim", p.ambient_dim()}, {"vertices", vertices}};
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope must be an object with 'dim' and 'vertices'");
  const int dim = static_cast<int>(json_to_int(j.at("dim"), "dim"));
  if (dim < 1) throw ParseError("polytope 'dim' must be positive");
  if (!j.at("vertices").is_array() || j.at("vertices").empty())
    throw ParseError("'vertices' must be a nonempty array");
  std::vector<RationalPoint> points;
  for (const auto& row : j.at("vertices")) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("each vertex must list " + std::to_string(dim) + " coordinates");
    RationalPoint p;
    for (const auto& c : row) {
      if (c.is_number_integer())
        p.emplace_back(Integer(c.get<std::int64_t>()));
      else if (c.is_string())
        p.push_back(rational_from_string(c.get<std::string>()));
      else
        throw ParseError("vertex coordinates must be integers or \"p/q\" strings");
    }
    points.push_back(std::move(p));
  }
  return Polytope::hull(points);
}

json certificate_to_json(const Certificate& cert) {
  json cofactors = json::array();
  for (const auto& g : cert.cofactors) cofactors.push_back(poly_to_json(g));
  return {{"theorem", theorem_tag_name(cert.tag)},
          {"power", cert.power},
          {"bound", polytope_to_json(cert.bound)},
          {"cofactors", cofactors}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("theorem") || !j.contains("power") ||
      !j.contains("bound") || !j.contains("cofactors"))
    throw ParseError("certificate must carry 'theorem', 'power', 'bound' and 'cofactors'");
  Certificate cert;
  if (!j.at("theorem").is_string()) throw ParseError("'theorem' must be a string");
  cert.tag = theorem_tag_from_name(j.at("theorem").get<std::string>());
  cert.power = json_to_int(j.at("power"), "power");
  if (cert.power < 1) throw ParseError("certificate 'power' must be positive");
  cert.bound = polytope_from_json(j.at("bound"));
  if (!j.at("cofactors").is_array()) throw ParseError("'cofactors' must be an array");
  for (const auto& g : j.at("cofactors")) cert.cofactors.push_back(poly_from_json(g));
  return cert;
}

json plan_to_json(const TheoremPlan& plan) {
  json hypotheses = json::array();
  for (const auto& h : plan.hypotheses) {
    json entry = {{"name", h.name}, {"pass", h.status == HypothesisStatus::pass}};
    if (h.status == HypothesisStatus::unverifiable) entry["status"] = "unverifiable";
    if (!h.witness.empty()) entry["witness"] = h.witness;
    hypotheses.push_back(entry);
  }
  json out = {{"theorem", theorem_tag_name(plan.tag)},
              {"power", plan.power},
              {"e", plan.e},
              {"hypotheses", hypotheses}};
  out["bound"] = plan.bound ? polytope_to_json(*plan.bound) : json(nullptr);
  if (plan.escalation)
    out["escalation"] = {{"c_start", plan.escalation->first}, {"c_max", plan.escalation->second}};
  return out;
}

json verdict_to_json(const InfinityVerdict& verdict) {
  json out = {{"ok", verdict.ok}};
  if (!verdict.ok) {
    json vertices = json::array();
    for (const auto& v : verdict.witness_face_vertices) {
      json row = json::array();
      for (const auto& c : v) {
        if (is_integral(c))
          row.push_back(to_int64(c.get_num()));
        else
          row.push_back(rational_to_string(c));
      }
      vertices.push_back(row);
    }
    json face = {{"vertices", vertices}};
    if (verdict.witness_face) face["tight_facets"] = verdict.witness_face->tight_facets;
    out["witness_face"] = face;
    json system = json::array();
    for (const auto& f : verdict.witness_system) system.push_back(poly_to_json(f));
    out["witness_system"] = system;
  }
  return out;
}

SystemFile system_from_json(const json& j, bool parse_infix) {
  if (!j.is_object() || !j.contains("variables") || !j.contains("generators"))
    throw ParseError("system file must carry 'variables' and 'generators'");
  SystemFile sys;
  if (!j.at("variables").is_array() || j.at("variables").empty())
    throw ParseError("'variables' must be a nonempty array of names");
  std::set<std::string> seen;
  for (const auto& v : j.at("variables")) {
    if (!v.is_string()) throw ParseError("variable names must be strings");
    const auto name = v.get<std::string>();
    if (!seen.insert(name).second)
      throw ParseError("duplicate variable name '" + name + "'");
    sys.variables.push_back(name);
  }
  const int dim = sys.dim();

  auto read_poly = [&](const json& pj, const std::string& what) {
    SparsePolynomial f = pj.is_string()
                             ? (parse_infix
                                    ? parse_infix_polynomial(pj.get<std::string>(), sys.variables)
                                    : throw ParseError(what +
                                                       " is a string; pass --parse-infix to "
                                                       "accept infix polynomials"))
                             : poly_from_json(pj);
    if (f.dim() != dim)
      throw ParseError(what + " has dim " + std::to_string(f.dim()) + " but the file declares " +
                       std::to_string(dim) + " variables");
    return f;
  };

  if (!j.at("generators").is_array() || j.at("generators").empty())
    throw ParseError("'generators' must be a nonempty array");
  int index = 1;
  for (const auto& g : j.at("generators")) {
    sys.generators.push_back(read_poly(g, "generator " + std::to_string(index)));
    ++index;
  }
  if (j.contains("target") && !j.at("target").is_null())
    sys.target = read_poly(j.at("target"), "target");
  if (j.contains("polytopes")) {
    if (!j.at("polytopes").is_object()) throw ParseError("'polytopes' must be an object");
    for (const auto& [name, pj] : j.at("polytopes").items()) {
      Polytope p = polytope_from_json(pj);
      if (p.ambient_dim() != dim)
        throw ParseError("polytope '" + name + "' has dim " + std::to_string(p.ambient_dim()) +
                         " but the file declares " + std::to_string(dim) + " variables");
      sys.polytopes.emplace(name, std::move(p));
    }
  }
  return sys;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError("JSON error in '" + path + "': " + err.what());
  }
}

SystemFile load_system_file(const std::string& path, bool parse_infix) {
  return system_from_json(load_json_file(path), parse_infix);
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Infix parser

namespace {

struct Token {
  enum Kind { number, name, plus, minus, star, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t pos = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      // Allow "p/q" rationals; '/' is only legal between two integer literals.
      if (j < text.size() && text[j] == '/') {
        std::size_t k = j + 1;
        while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
        if (k == j + 1) throw ParseError("expected digits after '/' at position " +
                                         std::to_string(j));
        out.push_back({Token::number, text.substr(i, k - i), i});
        i = k;
      } else {
        out.push_back({Token::number, text.substr(i, j - i), i});
        i = j;
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_'))
        ++j;
      out.push_back({Token::name, text.substr(i, j - i), i});
      i = j;
      continue;
    }
    switch (c) {
      case '+': out.push_back({Token::plus, "+", i}); break;
      case '-': out.push_back({Token::minus, "-", i}); break;
      case '*': out.push_back({Token::star, "*", i}); break;
      case '^': out.push_back({Token::caret, "^", i}); break;
      case '(': out.push_back({Token::lparen, "(", i}); break;
      case ')': out.push_back({Token::rparen, ")", i}); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                         std::to_string(i));
    }
    ++i;
  }
  out.push_back({Token::end, "", text.size()});
  return out;
}

class InfixParser {
public:
  InfixParser(const std::string& text, const std::vector<std::string>& variables)
      : tokens_(tokenize(text)), variables_(variables) {}

  SparsePolynomial parse() {
    auto f = parse_sum();
    expect(Token::end, "end of input");
    return f;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }
  void expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind)
      throw ParseError("expected " + what + " at position " + std::to_string(peek().pos));
    ++pos_;
  }

  SparsePolynomial parse_sum() {
    bool negate = false;
    if (peek().kind == Token::minus) {
      take();
      negate = true;
    } else if (peek().kind == Token::plus) {
      take();
    }
    SparsePolynomial acc = parse_product();
    if (negate) acc = -acc;
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      const bool minus = take().kind == Token::minus;
      const SparsePolynomial term = parse_product();
      if (minus)
        acc -= term;
      else
        acc += term;
    }
    return acc;
  }

  SparsePolynomial parse_product() {
    SparsePolynomial acc = parse_power();
    while (peek().kind == Token::star) {
      take();
      acc = acc * parse_power();
    }
    return acc;
  }

  SparsePolynomial parse_power() {
    SparsePolynomial base = parse_atom();
    if (peek().kind == Token::caret) {
      take();
      if (peek().kind != Token::number || peek().text.find('/') != std::string::npos)
        throw ParseError("exponent must be a nonnegative integer at position " +
                         std::to_string(peek().pos));
      const auto k = std::stoll(take().text);
      return pow(base, k);
    }
    return base;
  }

  SparsePolynomial parse_atom() {
    const int dim = static_cast<int>(variables_.size());
    const Token tok = peek();
    if (tok.kind == Token::number) {
      take();
      return SparsePolynomial::constant(dim, rational_from_string(tok.text));
    }
    if (tok.kind == Token::name) {
      take();
      for (int i = 0; i < dim; ++i) {
        if (variables_[i] == tok.text) return SparsePolynomial::variable(dim, i);
      }
      throw ParseError("unknown variable '" + tok.text + "' at position " +
                       std::to_string(tok.pos));
    }
    if (tok.kind == Token::lparen) {
      take();
      auto inner = parse_sum();
      expect(Token::rparen, "')'");
      return inner;
    }
    if (tok.kind == Token::minus) {
      take();
      return -parse_atom();
    }
    throw ParseError("expected a number, variable or '(' at position " +
                     std::to_string(tok.pos));
  }

  std::vector<Token> tokens_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_infix_polynomial(const std::string& text,
                                        const std::vector<std::string>& variables) {
  if (variables.empty()) throw ParseError("infix parsing needs at least one variable");
  return InfixParser(text, variables).parse();
}

}  // namespace nullcert
