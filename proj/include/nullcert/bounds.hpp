#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcert/infinity.hpp"
#include "nullcert/solver.hpp"

namespace nullcert {

enum class HypothesisStatus { pass, fail, unverifiable };

struct HypothesisCheck {
  std::string name;
  HypothesisStatus status = HypothesisStatus::fail;
  std::string witness;  // empty on pass
};

/// Outcome of checking one theorem's hypotheses against a system: either a
/// licensed bound polytope and power, or the failing hypothesis with its
/// witness. Escalating theorems carry a dilation search range instead of a
/// final bound.
struct TheoremPlan {
  TheoremTag tag = TheoremTag::custom;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<Polytope> bound;
  std::int64_t power = 1;
  std::int64_t e = 0;
  std::optional<std::pair<std::int64_t, std::int64_t>> escalation;  // c_start, c_max

  bool ok() const;
  const HypothesisCheck* first_failure() const;
};

/// Search ceiling for escalation; a default, not a mathematical bound.
std::int64_t default_c_max(std::int64_t n, std::int64_t e);

/// Bound max(n+1, e) * NP(F) for the target power 1; hypotheses: no common
/// zeros of the sections of the Newton polytope anywhere, and the target
/// support inside an integer dilation of NP.
TheoremPlan plan_macaulay(const std::vector<SparsePolynomial>& fs, const SparsePolynomial& phi,
                          std::optional<std::int64_t> e_override = std::nullopt);

/// Escalating plan over a smooth polytope P containing the origin, the
/// supports and the coordinate points, for a target already in the ideal.
TheoremPlan plan_noether(const std::vector<SparsePolynomial>& fs, const SparsePolynomial& phi,
                         const Polytope& p,
                         std::optional<std::int64_t> e_override = std::nullopt,
                         std::optional<std::int64_t> c_max_override = std::nullopt);

/// Bound max(n+1, n*e) * P for the target power n. The integral-closure
/// hypothesis is derived when the generators have no affine common zero,
/// otherwise it needs the caller's assertion.
TheoremPlan plan_briancon_skoda(const std::vector<SparsePolynomial>& fs,
                                const SparsePolynomial& phi, const Polytope& p,
                                bool integral_closure_asserted,
                                std::optional<std::int64_t> e_override = std::nullopt);

/// Bound P itself for power 1, licensed by the per-subset summand condition
/// and the absence of common zeros with each generator placed by its own
/// polytope.
TheoremPlan plan_tuitman(const std::vector<SparsePolynomial>& fs,
                         const std::vector<Polytope>& pj, const Polytope& p,
                         const SparsePolynomial& phi);

/// The classical degree-bound formulas, evaluated exactly.
struct ClassicalReference {
  std::int64_t d = 0, n = 0, m = 0, deg_phi = 0;
  Integer kollar_nu_bound;      // d^min(m,n)
  Integer kollar_degree;        // (1 + deg phi) * d^min(m,n)
  Integer macaulay_degree;      // (n+1)d - n
  Integer sombra_factor;        // 2^(n+1)
  bool sombra_applies = false;  // d == 2 and m >= n+1
  std::int64_t briancon_skoda_nu = 0;  // min(m,n)
  std::int64_t noether_degree = 0;     // deg phi
};

ClassicalReference classical_reference(std::int64_t d, std::int64_t n, std::int64_t m,
                                       std::int64_t deg_phi);

}  // namespace nullcert
