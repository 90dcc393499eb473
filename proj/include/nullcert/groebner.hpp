#pragma once

#include <vector>

#include "nullcert/sparsepoly.hpp"

namespace nullcert {

/// Graded reverse lexicographic order with a fixed variable permutation;
/// perm[i] is the variable sitting at position i. Total degree decides first,
/// ties go to the monomial with the smaller exponent at the latest differing
/// position (scanned from the back).
struct MonomialOrder {
  int nvars = 0;
  std::vector<int> perm;

  static MonomialOrder grevlex(int nvars);
  static MonomialOrder grevlex_with_permutation(std::vector<int> perm);

  bool less(const LatticePoint& a, const LatticePoint& b) const;
};

struct GroebnerBasis {
  std::vector<SparsePolynomial> generators;  // reduced: monic, minimal, tails reduced
  MonomialOrder order;
};

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// coprimality and chain criteria. Oracle-grade, not F4-grade.
GroebnerBasis buchberger(const std::vector<SparsePolynomial>& gens, const MonomialOrder& order);

/// Remainder of multivariate division by the basis; zero iff F is in the ideal.
SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& gb);

bool ideal_member(const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens);

/// Common zero in affine space over the algebraic closure (weak
/// Nullstellensatz: zero exists iff 1 is not in the ideal).
bool has_common_zero_affine(const std::vector<SparsePolynomial>& gens);

/// Common zero with every coordinate nonzero, decided by adjoining
/// 1 - t*z_1*...*z_n. Zero generators are discarded first; if every
/// generator is zero the whole torus qualifies and the answer is true.
bool has_common_zero_torus(const std::vector<SparsePolynomial>& gens);

/// Whether F vanishes on the common zero set of the generators, decided by
/// 1 in <gens, 1 - t*F>.
bool radical_member(const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens);

}  // namespace nullcert
