#include "nullcert/solver.hpp"

#include <algorithm>
#include <map>

#include "nullcert/linalg.hpp"

namespace nullcert {

std::string theorem_tag_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::macaulay: return "macaulay";
    case TheoremTag::noether: return "noether";
    case TheoremTag::briancon_skoda: return "briancon-skoda";
    case TheoremTag::tuitman: return "tuitman";
    case TheoremTag::custom: return "custom";
  }
  throw ContractError("unknown theorem tag");
}

TheoremTag theorem_tag_from_name(const std::string& name) {
  if (name == "macaulay") return TheoremTag::macaulay;
  if (name == "noether") return TheoremTag::noether;
  if (name == "briancon-skoda" || name == "briancon_skoda") return TheoremTag::briancon_skoda;
  if (name == "tuitman") return TheoremTag::tuitman;
  if (name == "custom") return TheoremTag::custom;
  throw ParseError("unknown theorem '" + name + "'");
}

std::vector<LatticePoint> allowed_exponents(const SparsePolynomial& f, const Polytope& bound) {
  if (f.is_zero()) throw DegenerateInputError("allowed_exponents: zero generator");
  if (f.dim() != bound.ambient_dim())
    throw ContractError("allowed_exponents: dimension mismatch");
  const auto erosion = minkowski_diff(bound, newton_polytope(f));
  if (!erosion) return {};
  std::vector<LatticePoint> out;
  for (const auto& beta : lattice_points(*erosion)) {
    // Cofactors are polynomials, so shifts with negative coordinates are out.
    if (!std::all_of(beta.begin(), beta.end(), [](std::int64_t c) { return c >= 0; })) continue;
    bool fits = true;
    for (const auto& alpha : f.support()) {
      LatticePoint shifted(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) shifted[i] = beta[i] + alpha[i];
      if (!bound.contains(shifted)) {
        fits = false;
        break;
      }
    }
    if (fits) out.push_back(beta);
  }
  return out;
}

SupportConstraint support_constraint(const std::vector<SparsePolynomial>& fs,
                                     const Polytope& bound) {
  SupportConstraint constraint;
  constraint.bound = bound;
  constraint.per_generator_exponents.reserve(fs.size());
  for (const auto& f : fs) {
    // Zero generators contribute nothing; their cofactors stay zero.
    constraint.per_generator_exponents.push_back(
        f.is_zero() ? std::vector<LatticePoint>{} : allowed_exponents(f, bound));
  }
  return constraint;
}

std::optional<Certificate> solve_membership(const std::vector<SparsePolynomial>& fs,
                                            const SparsePolynomial& phi, std::int64_t nu,
                                            const Polytope& bound, TheoremTag tag) {
  if (fs.empty()) throw ContractError("solve_membership: empty generator list");
  const int n = bound.ambient_dim();
  for (const auto& f : fs) {
    if (f.dim() != n) throw ContractError("solve_membership: dimension mismatch");
  }
  const SparsePolynomial target = pow(phi, nu);
  if (!support_in(target, bound))
    throw HypothesisError("target support is not contained in the bound polytope");

  const auto rows_points = lattice_points(bound);
  std::map<LatticePoint, int> row_of;
  for (std::size_t r = 0; r < rows_points.size(); ++r)
    row_of.emplace(rows_points[r], static_cast<int>(r));

  struct Column {
    std::size_t generator;
    LatticePoint shift;
  };
  const auto constraint = support_constraint(fs, bound);
  std::vector<Column> columns;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (const auto& beta : constraint.per_generator_exponents[j]) columns.push_back({j, beta});
  }

  RationalMatrix a(static_cast<int>(rows_points.size()), static_cast<int>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& [j, beta] = columns[c];
    for (const auto& [alpha, coeff] : fs[j].terms()) {
      LatticePoint gamma(beta.size());
      for (std::size_t i = 0; i < beta.size(); ++i) gamma[i] = beta[i] + alpha[i];
      a.at(row_of.at(gamma), static_cast<int>(c)) += coeff;
    }
  }
  std::vector<Rational> rhs(rows_points.size(), Rational(0));
  for (const auto& [e, c] : target.terms()) rhs[static_cast<std::size_t>(row_of.at(e))] = c;

  const auto x = solve_exact(a, rhs);
  if (!x) return std::nullopt;

  Certificate cert;
  cert.power = nu;
  cert.bound = bound;
  cert.tag = tag;
  cert.cofactors.assign(fs.size(), SparsePolynomial::zero(n));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((*x)[c] != 0) cert.cofactors[columns[c].generator].add_term(columns[c].shift, (*x)[c]);
  }
  if (!verify_certificate(cert, fs, phi))
    throw ContractError("internal: solver produced a certificate that fails verification");
  return cert;
}

std::optional<EscalationResult> escalate_solve(const std::vector<SparsePolynomial>& fs,
                                               const SparsePolynomial& phi, std::int64_t nu,
                                               const Polytope& p, std::int64_t c_start,
                                               std::int64_t c_max, TheoremTag tag) {
  if (c_start < 1 || c_start > c_max)
    throw ContractError("escalate_solve: need 1 <= c_start <= c_max");
  const SparsePolynomial target = pow(phi, nu);
  for (std::int64_t c = c_start; c <= c_max; ++c) {
    const Polytope bound = dilate(p, c);
    if (!support_in(target, bound)) {
      if (c == c_start)
        throw HypothesisError("target support is not contained in the starting bound");
      continue;  // without the origin in P the dilations need not nest
    }
    auto cert = solve_membership(fs, phi, nu, bound, tag);
    if (cert) return EscalationResult{std::move(*cert), c};
  }
  return std::nullopt;
}

namespace {

std::string point_text(const LatticePoint& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

}  // namespace

VerificationResult verify_certificate(const Certificate& cert,
                                      const std::vector<SparsePolynomial>& fs,
                                      const SparsePolynomial& phi) {
  if (cert.cofactors.size() != fs.size())
    return {false, "cofactor count " + std::to_string(cert.cofactors.size()) +
                       " does not match generator count " + std::to_string(fs.size())};
  if (cert.power < 1) return {false, "certificate power must be at least 1"};
  const int n = cert.bound.ambient_dim();
  for (const auto& f : fs) {
    if (f.dim() != n) return {false, "generator dimension does not match the bound"};
  }
  if (phi.dim() != n) return {false, "target dimension does not match the bound"};

  SparsePolynomial total(n);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    const SparsePolynomial product = fs[j] * cert.cofactors[j];
    for (const auto& e : product.support()) {
      if (!cert.bound.contains(e))
        return {false, "support violation: generator " + std::to_string(j + 1) +
                           " product has exponent " + point_text(e) + " outside the bound"};
    }
    total += product;
  }
  const SparsePolynomial target = pow(phi, cert.power);
  if (!(total == target)) {
    // Locate the first mismatching exponent for the report.
    SparsePolynomial diff = total - target;
    const auto e = diff.support().front();
    return {false, "identity mismatch at exponent " + point_text(e)};
  }
  return {true, ""};
}

SystemShape membership_system_shape(const std::vector<SparsePolynomial>& fs,
                                    const Polytope& bound) {
  SystemShape shape;
  shape.rows = lattice_points(bound).size();
  for (const auto& exps : support_constraint(fs, bound).per_generator_exponents)
    shape.cols += exps.size();
  return shape;
}

}  // namespace nullcert
