#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nullcert/bounds.hpp"
#include "nullcert/infinity.hpp"
#include "nullcert/solver.hpp"

namespace nullcert {

using json = nlohmann::json;

// Polynomials: {"dim": n, "terms": [{"coeff": "p/q", "exp": [ints]}, ...]},
// terms sorted by exponent; duplicate exponents in input are summed.
json poly_to_json(const SparsePolynomial& f);
SparsePolynomial poly_from_json(const json& j);

// Polytopes: {"dim": n, "vertices": [[ints], ...]}; facets are recomputed on
// load. Writing accepts rational vertices and emits "p/q" strings for
// non-integral coordinates (Minkowski differences can produce them).
json polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const json& j);

// Certificates: {"theorem", "power", "bound", "cofactors"}.
json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json plan_to_json(const TheoremPlan& plan);
json verdict_to_json(const InfinityVerdict& verdict);

/// Input description of a polynomial system: variable names, generators, an
/// optional target, and optional named polytopes.
struct SystemFile {
  std::vector<std::string> variables;
  std::vector<SparsePolynomial> generators;
  std::optional<SparsePolynomial> target;
  std::map<std::string, Polytope> polytopes;

  int dim() const { return static_cast<int>(variables.size()); }
};

SystemFile system_from_json(const json& j, bool parse_infix);
SystemFile load_system_file(const std::string& path, bool parse_infix);

json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

/// Tiny infix grammar for --parse-infix: integers, rationals "p/q",
/// variable names, +, -, *, ^ and parentheses.
SparsePolynomial parse_infix_polynomial(const std::string& text,
                                        const std::vector<std::string>& variables);

}  // namespace nullcert
