#include "nullcert/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "nullcert/groebner.hpp"

namespace nullcert {

namespace {

std::string points_text(const std::vector<RationalPoint>& pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ", ";
    s += "(";
    for (std::size_t j = 0; j < pts[i].size(); ++j) {
      if (j) s += ",";
      s += rational_to_string(pts[i][j]);
    }
    s += ")";
  }
  return s + "}";
}

HypothesisCheck pass(const std::string& name) {
  return {name, HypothesisStatus::pass, ""};
}

HypothesisCheck fail(const std::string& name, const std::string& witness) {
  return {name, HypothesisStatus::fail, witness};
}

HypothesisCheck verdict_check(const std::string& name, const InfinityVerdict& verdict) {
  if (verdict.ok) return pass(name);
  return fail(name, "face with vertices " + points_text(verdict.witness_face_vertices) +
                        " carries a common torus zero of its facial system");
}

// Every plan needs nonzero generators and a nonzero target before any
// geometry makes sense.
void check_nonzero(const std::vector<SparsePolynomial>& fs, const SparsePolynomial& phi) {
  if (fs.empty()) throw DegenerateInputError("plan: empty generator list");
  if (std::all_of(fs.begin(), fs.end(), [](const auto& f) { return f.is_zero(); }))
    throw DegenerateInputError("plan: all generators are zero");
  if (phi.is_zero()) throw DegenerateInputError("plan: zero target polynomial");
}

std::optional<HypothesisCheck> dilation_check(const std::string& name, const Polytope& p,
                                              const SparsePolynomial& phi,
                                              std::optional<std::int64_t> e_override,
                                              std::int64_t& e_out) {
  const auto e = min_integer_dilation(p, phi.support());
  if (!e) {
    return fail(name, "no integer dilation of the polytope contains the target support");
  }
  e_out = *e;
  if (e_override) {
    if (*e_override < *e)
      return fail(name, "e override " + std::to_string(*e_override) +
                            " is below the minimal feasible e " + std::to_string(*e));
    e_out = *e_override;
  }
  return std::nullopt;
}

std::string non_smooth_witness(const Polytope& p) {
  const auto vertex = non_delzant_vertex(p);
  return vertex ? "vertex " + points_text({*vertex}) : "";
}

}  // namespace

bool TheoremPlan::ok() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const auto& h) { return h.status == HypothesisStatus::pass; });
}

const HypothesisCheck* TheoremPlan::first_failure() const {
  for (const auto& h : hypotheses) {
    if (h.status != HypothesisStatus::pass) return &h;
  }
  return nullptr;
}

std::int64_t default_c_max(std::int64_t n, std::int64_t e) { return std::max(n + 1, e) + 8; }

TheoremPlan plan_macaulay(const std::vector<SparsePolynomial>& fs, const SparsePolynomial& phi,
                          std::optional<std::int64_t> e_override) {
  check_nonzero(fs, phi);
  TheoremPlan plan;
  plan.tag = TheoremTag::macaulay;
  const Polytope np = newton_polytope(fs);
  const std::int64_t n = np.ambient_dim();

  if (!np.full_dimensional()) {
    plan.hypotheses.push_back(
        fail("no_zeros_even_at_infinity",
             "the Newton polytope is not full-dimensional (dim " + std::to_string(np.dim()) +
                 " in ambient " + std::to_string(n) + ")"));
    plan.hypotheses.push_back(fail("target_support_in_dilation",
                                   "not evaluated: the Newton polytope is degenerate"));
    return plan;
  }
  plan.hypotheses.push_back(
      verdict_check("no_zeros_even_at_infinity", no_zeros_anywhere(fs, np)));

  std::int64_t e = 0;
  if (auto bad = dilation_check("target_support_in_dilation", np, phi, e_override, e)) {
    plan.hypotheses.push_back(*bad);
    return plan;
  }
  plan.hypotheses.push_back(pass("target_support_in_dilation"));
  plan.e = e;
  if (!plan.ok()) return plan;
  plan.bound = dilate(np, std::max(n + 1, e));
  plan.power = 1;
  return plan;
}

TheoremPlan plan_noether(const std::vector<SparsePolynomial>& fs, const SparsePolynomial& phi,
                         const Polytope& p, std::optional<std::int64_t> e_override,
                         std::optional<std::int64_t> c_max_override) {
  check_nonzero(fs, phi);
  TheoremPlan plan;
  plan.tag = TheoremTag::noether;
  const std::int64_t n = p.ambient_dim();

  if (!p.full_dimensional()) {
    plan.hypotheses.push_back(fail("polytope_smooth", "the polytope is not full-dimensional"));
    return plan;
  }
  if (is_smooth(p)) {
    plan.hypotheses.push_back(pass("polytope_smooth"));
  } else {
    plan.hypotheses.push_back(fail("polytope_smooth", non_smooth_witness(p)));
  }

  const LatticePoint origin(n, 0);
  plan.hypotheses.push_back(p.contains(origin)
                                ? pass("contains_origin")
                                : fail("contains_origin", "the origin is not in the polytope"));

  bool supports_ok = true;
  std::string support_witness;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!fs[j].is_zero() && !support_in(fs[j], p)) {
      supports_ok = false;
      support_witness = "generator " + std::to_string(j + 1) + " has support outside P";
      break;
    }
  }
  plan.hypotheses.push_back(supports_ok ? pass("contains_supports")
                                        : fail("contains_supports", support_witness));

  bool coords_ok = true;
  std::string coord_witness;
  for (std::int64_t i = 0; i < n; ++i) {
    LatticePoint ei(n, 0);
    ei[i] = 1;
    if (!p.contains(ei)) {
      coords_ok = false;
      coord_witness = "coordinate point e_" + std::to_string(i + 1) + " is not in P";
      break;
    }
  }
  plan.hypotheses.push_back(coords_ok ? pass("contains_coordinates")
                                      : fail("contains_coordinates", coord_witness));

  // The face sweep needs the origin and the supports inside P; the other
  // hypotheses stay independently checkable.
  const bool sweep_possible = p.contains(origin) && supports_ok;
  if (sweep_possible) {
    plan.hypotheses.push_back(
        verdict_check("no_zeros_at_infinity", no_zeros_at_infinity(fs, p)));
  } else {
    plan.hypotheses.push_back(
        fail("no_zeros_at_infinity", "not evaluated: earlier hypothesis failed"));
  }

  std::vector<SparsePolynomial> nonzero;
  for (const auto& f : fs) {
    if (!f.is_zero()) nonzero.push_back(f);
  }
  plan.hypotheses.push_back(ideal_member(phi, nonzero)
                                ? pass("target_in_ideal")
                                : fail("target_in_ideal", "the target is not in the ideal"));

  std::int64_t e = 0;
  if (auto bad = dilation_check("target_support_in_dilation", p, phi, e_override, e)) {
    plan.hypotheses.push_back(*bad);
    return plan;
  }
  plan.hypotheses.push_back(pass("target_support_in_dilation"));
  plan.e = e;
  if (!plan.ok()) return plan;

  const std::int64_t c_start = std::max<std::int64_t>(e, 1);
  const std::int64_t c_max = c_max_override ? std::max(*c_max_override, c_start)
                                            : std::max(default_c_max(n, e), c_start);
  plan.escalation = {c_start, c_max};
  plan.bound = dilate(p, c_start);
  plan.power = 1;
  return plan;
}

TheoremPlan plan_briancon_skoda(const std::vector<SparsePolynomial>& fs,
                                const SparsePolynomial& phi, const Polytope& p,
                                bool integral_closure_asserted,
                                std::optional<std::int64_t> e_override) {
  check_nonzero(fs, phi);
  TheoremPlan plan;
  plan.tag = TheoremTag::briancon_skoda;
  const std::int64_t n = p.ambient_dim();

  if (!p.full_dimensional()) {
    plan.hypotheses.push_back(fail("contains_origin", "the polytope is not full-dimensional"));
    return plan;
  }
  const LatticePoint origin(n, 0);
  plan.hypotheses.push_back(p.contains(origin)
                                ? pass("contains_origin")
                                : fail("contains_origin", "the origin is not in the polytope"));

  bool supports_ok = true;
  std::string support_witness;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!fs[j].is_zero() && !support_in(fs[j], p)) {
      supports_ok = false;
      support_witness = "generator " + std::to_string(j + 1) + " has support outside P";
      break;
    }
  }
  plan.hypotheses.push_back(supports_ok ? pass("contains_supports")
                                        : fail("contains_supports", support_witness));

  if (p.contains(origin) && supports_ok) {
    plan.hypotheses.push_back(
        verdict_check("no_zeros_at_infinity", no_zeros_at_infinity(fs, p)));
  } else {
    plan.hypotheses.push_back(
        fail("no_zeros_at_infinity", "not evaluated: earlier hypothesis failed"));
  }

  std::vector<SparsePolynomial> nonzero;
  for (const auto& f : fs) {
    if (!f.is_zero()) nonzero.push_back(f);
  }
  if (!has_common_zero_affine(nonzero)) {
    // No affine zeros: every polynomial is in the integral closure.
    plan.hypotheses.push_back(pass("integral_closure"));
  } else if (integral_closure_asserted) {
    plan.hypotheses.push_back(pass("integral_closure"));
  } else {
    plan.hypotheses.push_back(
        {"integral_closure", HypothesisStatus::unverifiable,
         "the generators have affine common zeros; pass --assert-integral-closure to vouch for "
         "the hypothesis"});
  }

  std::int64_t e = 0;
  if (auto bad = dilation_check("target_support_in_dilation", p, phi, e_override, e)) {
    plan.hypotheses.push_back(*bad);
    return plan;
  }
  plan.hypotheses.push_back(pass("target_support_in_dilation"));
  plan.e = e;
  if (!plan.ok()) return plan;
  plan.bound = dilate(p, std::max(n + 1, n * e));
  plan.power = n;
  return plan;
}

TheoremPlan plan_tuitman(const std::vector<SparsePolynomial>& fs,
                         const std::vector<Polytope>& pj, const Polytope& p,
                         const SparsePolynomial& phi) {
  check_nonzero(fs, phi);
  if (fs.size() != pj.size())
    throw ContractError("plan_tuitman: one polytope per generator required");
  TheoremPlan plan;
  plan.tag = TheoremTag::tuitman;
  const std::int64_t n = p.ambient_dim();

  bool supports_ok = true;
  std::string support_witness;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!support_in(fs[j], pj[j])) {
      supports_ok = false;
      support_witness = "generator " + std::to_string(j + 1) + " has support outside P_" +
                        std::to_string(j + 1);
      break;
    }
  }
  plan.hypotheses.push_back(supports_ok
                                ? pass("generator_supports_in_polytopes")
                                : fail("generator_supports_in_polytopes", support_witness));

  plan.hypotheses.push_back(support_in(phi, p)
                                ? pass("target_support_in_bound")
                                : fail("target_support_in_bound",
                                       "the target has support outside the bound polytope"));

  if (supports_ok) {
    plan.hypotheses.push_back(
        verdict_check("no_zeros_even_at_infinity", no_zeros_anywhere_multi(fs, pj)));
  } else {
    plan.hypotheses.push_back(
        fail("no_zeros_even_at_infinity", "not evaluated: earlier hypothesis failed"));
  }

  const std::size_t m = pj.size();
  const std::size_t q_max = std::min<std::size_t>(m, static_cast<std::size_t>(n + 1));
  bool summand_ok = true;
  std::string summand_witness;
  for (std::size_t mask = 1; mask < (std::size_t{1} << m) && summand_ok; ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask & (std::size_t{1} << j)) subset.push_back(j);
    }
    if (subset.size() > q_max) continue;
    Polytope sum = pj[subset[0]];
    for (std::size_t k = 1; k < subset.size(); ++k) sum = minkowski_sum(sum, pj[subset[k]]);
    if (!is_summand(sum, p)) {
      summand_ok = false;
      std::ostringstream oss;
      oss << "P_J is not a summand of P for J = {";
      for (std::size_t k = 0; k < subset.size(); ++k) {
        if (k) oss << ",";
        oss << subset[k] + 1;
      }
      oss << "}";
      summand_witness = oss.str();
    }
  }
  plan.hypotheses.push_back(summand_ok ? pass("summand_condition")
                                       : fail("summand_condition", summand_witness));
  if (!plan.ok()) return plan;
  plan.bound = p;
  plan.power = 1;
  const auto e = min_integer_dilation(newton_polytope(fs), phi.support());
  plan.e = e ? *e : 0;  // informational here; the bound is P itself
  return plan;
}

ClassicalReference classical_reference(std::int64_t d, std::int64_t n, std::int64_t m,
                                       std::int64_t deg_phi) {
  if (d < 1 || n < 1 || m < 1 || deg_phi < 0)
    throw ContractError("classical_reference: degrees and counts must be positive");
  ClassicalReference ref;
  ref.d = d;
  ref.n = n;
  ref.m = m;
  ref.deg_phi = deg_phi;
  mpz_ui_pow_ui(ref.kollar_nu_bound.get_mpz_t(), static_cast<unsigned long>(d),
                static_cast<unsigned long>(std::min(m, n)));
  ref.kollar_degree = Integer(1 + deg_phi) * ref.kollar_nu_bound;
  ref.macaulay_degree = Integer((n + 1) * d - n);
  mpz_ui_pow_ui(ref.sombra_factor.get_mpz_t(), 2, static_cast<unsigned long>(n + 1));
  ref.sombra_applies = (d == 2 && m >= n + 1);
  ref.briancon_skoda_nu = std::min(m, n);
  ref.noether_degree = deg_phi;
  return ref;
}

}  // namespace nullcert
