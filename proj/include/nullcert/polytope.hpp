#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nullcert/linalg.hpp"
#include "nullcert/rational.hpp"

namespace nullcert {

using LatticePoint = std::vector<std::int64_t>;
using RationalPoint = std::vector<Rational>;

inline constexpr int kMaxAmbientDim = 6;

/// Inequality <normal, x> >= offset with a primitive integer inward normal.
struct HalfSpace {
  std::vector<std::int64_t> normal;
  Rational offset;
};

/// Equality <normal, x> == offset; used to pin down the affine hull of a
/// lower-dimensional polytope (conceptually a pair of opposite half-spaces).
struct AffineEquation {
  std::vector<std::int64_t> normal;
  Rational offset;
};

/// Convex polytope with exact rational vertices, canonical V- and
/// H-representations computed on construction, immutable afterwards.
/// Lattice polytopes are the ones whose vertices are all integral; Minkowski
/// erosion can legitimately produce non-integral vertices, so the kernel
/// carries rational coordinates throughout.
class Polytope {
public:
  /// Placeholder value; every real polytope comes out of hull(). Operations
  /// on a default-constructed polytope throw.
  Polytope() = default;

  /// Convex hull. Accepts any nonempty finite point set of equal dimension;
  /// the stored vertex set is exactly the extreme points.
  static Polytope hull(const std::vector<RationalPoint>& points);
  static Polytope hull(const std::vector<LatticePoint>& points);

  static Polytope point(const RationalPoint& p);
  static Polytope simplex(int n, std::int64_t d);   // d * standard simplex
  static Polytope hypercube(int n, std::int64_t side = 1);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  const std::vector<HalfSpace>& facets() const { return facets_; }
  const std::vector<AffineEquation>& equations() const { return equations_; }

  bool is_lattice() const;
  std::vector<LatticePoint> lattice_vertices() const;

  bool contains(const RationalPoint& x) const;
  bool contains(const LatticePoint& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

private:
  void build_from_points(std::vector<RationalPoint> points);

  int ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<RationalPoint> vertices_;     // lexicographically sorted
  std::vector<HalfSpace> facets_;           // canonically sorted, irredundant
  std::vector<AffineEquation> equations_;   // affine hull; empty when full-dim
};

/// Face of a polytope, identified by index sets into the parent's canonical
/// facet and vertex lists.
struct Face {
  std::vector<int> tight_facets;   // facets containing the face
  std::vector<int> vertex_indices; // vertices on the face, sorted
  int dim = -1;

  bool is_whole_polytope() const { return tight_facets.empty(); }
};

std::vector<LatticePoint> lattice_points(const Polytope& p);

Polytope dilate(const Polytope& p, std::int64_t k);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Erosion { x : x + Q subseteq P }; nullopt when empty.
std::optional<Polytope> minkowski_diff(const Polytope& p, const Polytope& q);

/// Whether P = Q + S for some polytope S, decided via Q + (P - Q) = P.
bool is_summand(const Polytope& q, const Polytope& p);

/// Delzant test: at every vertex the primitive inward facet normals must be
/// exactly n and form a lattice basis (determinant +-1). Requires full dim.
bool is_smooth(const Polytope& p);

/// First vertex violating the Delzant condition, or nullopt when smooth.
std::optional<RationalPoint> non_delzant_vertex(const Polytope& p);

/// All nonempty faces including the polytope itself, sorted by tight-facet
/// index set. Requires full dimension.
std::vector<Face> faces(const Polytope& p);

struct FacePartition {
  std::vector<Face> affine;
  std::vector<Face> infinity;
};

/// A face is "at infinity" when some tight-facet inward normal has a negative
/// coordinate, i.e. the face's normal cone leaves the first orthant. The
/// whole polytope counts as affine. Requires full dimension and origin in P.
FacePartition classify_faces_at_infinity(const Polytope& p);

/// Smallest integer e >= 1 with S subseteq e*P, or nullopt when no integer
/// dilation works. Requires full dimension.
std::optional<std::int64_t> min_integer_dilation(const Polytope& p,
                                                 const std::vector<LatticePoint>& s);

/// Canonical weight selecting the face: sum of its tight-facet inward
/// normals (zero vector for the whole polytope).
std::vector<std::int64_t> face_weight(const Polytope& p, const Face& face);

/// Min of <x, w> over P, attained at a vertex.
Rational support_minimum(const Polytope& p, const std::vector<std::int64_t>& w);

std::vector<RationalPoint> face_vertices(const Polytope& p, const Face& face);

}  // namespace nullcert
