#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nullcert/groebner.hpp"
#include "nullcert/polytope.hpp"
#include "nullcert/sparsepoly.hpp"

namespace nullcert {

struct InfinityVerdict {
  bool ok = false;
  std::optional<Face> witness_face;                 // first failing face in sweep order
  std::vector<RationalPoint> witness_face_vertices; // materialized for reporting
  std::vector<SparsePolynomial> witness_system;     // its facial system
};

/// True iff no face at infinity carries a common torus zero of the facial
/// system. Faces whose facial forms are all zero count as having one (the
/// sections vanish identically on that orbit). Requires a full-dimensional P
/// containing the origin, with every support inside P.
InfinityVerdict no_zeros_at_infinity(const std::vector<SparsePolynomial>& fs,
                                     const Polytope& p);

/// Same sweep over every face of P including P itself, covering all torus
/// orbits of the toric variety of P. No origin hypothesis.
InfinityVerdict no_zeros_anywhere(const std::vector<SparsePolynomial>& fs, const Polytope& p);

/// Multi-polytope variant: generator j is placed by its own polytope pj[j]
/// and the sweep runs over the faces of the Minkowski sum of the pj.
InfinityVerdict no_zeros_anywhere_multi(const std::vector<SparsePolynomial>& fs,
                                        const std::vector<Polytope>& pj);

/// Samples `count` polynomials with support equal to the lattice points of P
/// and nonzero integer coefficients in [-9, 9], deterministically from the
/// seed.
std::vector<SparsePolynomial> genericity_probe(const Polytope& p, int count,
                                               std::uint64_t seed);

}  // namespace nullcert
