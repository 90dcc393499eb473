#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nullcert/polytope.hpp"
#include "nullcert/sparsepoly.hpp"

namespace nullcert {

enum class TheoremTag { macaulay, noether, briancon_skoda, tuitman, custom };

std::string theorem_tag_name(TheoremTag tag);
TheoremTag theorem_tag_from_name(const std::string& name);

/// Explicit division certificate: sum of F_j * G_j equals the target power,
/// with every product supported inside the bound polytope.
struct Certificate {
  std::vector<SparsePolynomial> cofactors;
  std::int64_t power = 1;
  Polytope bound;
  TheoremTag tag = TheoremTag::custom;
};

/// Lattice points beta with beta + supp(F) inside the bound: the monomials a
/// cofactor may use. Computed as the lattice points of bound - NP(F).
std::vector<LatticePoint> allowed_exponents(const SparsePolynomial& f, const Polytope& bound);

/// The support shape of one solve: the bound polytope together with the
/// allowed cofactor exponents per generator (empty for zero generators).
struct SupportConstraint {
  Polytope bound;
  std::vector<std::vector<LatticePoint>> per_generator_exponents;
};

SupportConstraint support_constraint(const std::vector<SparsePolynomial>& fs,
                                     const Polytope& bound);

/// Builds and solves the coefficient-matching linear system over the lattice
/// points of the bound. Returns a verified certificate or nullopt when no
/// cofactors with this support shape exist (which proves nothing about
/// membership itself). Deterministic.
std::optional<Certificate> solve_membership(const std::vector<SparsePolynomial>& fs,
                                            const SparsePolynomial& phi, std::int64_t nu,
                                            const Polytope& bound,
                                            TheoremTag tag = TheoremTag::custom);

struct EscalationResult {
  Certificate certificate;
  std::int64_t c = 0;  // successful dilation factor
};

/// Tries bound = c*P for c = c_start..c_max, first success wins.
std::optional<EscalationResult> escalate_solve(const std::vector<SparsePolynomial>& fs,
                                               const SparsePolynomial& phi, std::int64_t nu,
                                               const Polytope& p, std::int64_t c_start,
                                               std::int64_t c_max,
                                               TheoremTag tag = TheoremTag::custom);

struct VerificationResult {
  bool ok = false;
  std::string reason;  // empty on success, machine-readable on failure
  explicit operator bool() const { return ok; }
};

/// Recomputes sum F_j*G_j with plain polynomial arithmetic, compares it to
/// phi^power exactly, and checks the product supports against the bound.
VerificationResult verify_certificate(const Certificate& cert,
                                      const std::vector<SparsePolynomial>& fs,
                                      const SparsePolynomial& phi);

/// Row/column sizes of the linear system a solve would build; for reporting.
struct SystemShape {
  std::size_t rows = 0;
  std::size_t cols = 0;
};
SystemShape membership_system_shape(const std::vector<SparsePolynomial>& fs,
                                    const Polytope& bound);

}  // namespace nullcert
