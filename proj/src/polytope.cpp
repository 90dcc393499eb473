#include "nullcert/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace nullcert {

namespace {

RationalPoint to_rational_point(const LatticePoint& p) {
  RationalPoint out;
  out.reserve(p.size());
  for (auto c : p) out.emplace_back(make_rational(c));
  return out;
}

Rational dot(const std::vector<std::int64_t>& a, const RationalPoint& x) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc += Rational(Integer(a[i])) * x[i];
  }
  return acc;
}

Rational dot(const RationalPoint& a, const RationalPoint& x) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * x[i];
  return acc;
}

// Scales a rational vector to the primitive integer vector with the same
// direction. Sign is kept.
std::vector<std::int64_t> primitive_integer_vector(const RationalPoint& v) {
  Integer lcm_den(1);
  for (const auto& c : v) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    lcm_den = l;
  }
  std::vector<Integer> scaled;
  scaled.reserve(v.size());
  Integer g(0);
  for (const auto& c : v) {
    Integer z = c.get_num() * (lcm_den / c.get_den());
    Integer gg;
    mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    g = gg;
    scaled.push_back(std::move(z));
  }
  if (g == 0) throw ContractError("cannot normalize the zero vector");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (auto& z : scaled) out.push_back(to_int64(Integer(z / g)));
  return out;
}

bool first_nonzero_negative(const std::vector<std::int64_t>& v) {
  for (auto c : v) {
    if (c != 0) return c < 0;
  }
  return false;
}

RationalMatrix rows_to_matrix(const std::vector<RationalPoint>& rows, int cols) {
  RationalMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

int affine_rank(const std::vector<RationalPoint>& points) {
  if (points.empty()) return -1;
  std::vector<RationalPoint> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return rank_exact(rows_to_matrix(diffs, static_cast<int>(points[0].size())));
}

// Fraction-free determinant of a small integer matrix.
Integer integer_determinant(std::vector<std::vector<Integer>> m) {
  const int n = static_cast<int>(m.size());
  Integer prev(1);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r) {
      if (m[r][k] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == -1) return Integer(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) {
        Integer t = m[k][k] * m[r][c] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

// Iterates over all size-k index subsets of {0..n-1}.
template <typename F>
void for_each_subset(int n, int k, F&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polytope Polytope::hull(const std::vector<RationalPoint>& points) {
  Polytope p;
  p.build_from_points(points);
  return p;
}

Polytope Polytope::hull(const std::vector<LatticePoint>& points) {
  std::vector<RationalPoint> rp;
  rp.reserve(points.size());
  for (const auto& q : points) rp.push_back(to_rational_point(q));
  return hull(rp);
}

Polytope Polytope::point(const RationalPoint& p) { return hull(std::vector<RationalPoint>{p}); }

Polytope Polytope::simplex(int n, std::int64_t d) {
  if (d < 0) throw ContractError("simplex dilation must be nonnegative");
  std::vector<LatticePoint> pts;
  pts.push_back(LatticePoint(n, 0));
  for (int i = 0; i < n; ++i) {
    LatticePoint e(n, 0);
    e[i] = d;
    pts.push_back(std::move(e));
  }
  return hull(pts);
}

Polytope Polytope::hypercube(int n, std::int64_t side) {
  if (side < 0) throw ContractError("hypercube side must be nonnegative");
  std::vector<LatticePoint> pts;
  for (std::int64_t mask = 0; mask < (std::int64_t{1} << n); ++mask) {
    LatticePoint v(n, 0);
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1 ? side : 0;
    pts.push_back(std::move(v));
  }
  return hull(pts);
}

void Polytope::build_from_points(std::vector<RationalPoint> points) {
  if (points.empty()) throw ContractError("hull of an empty point set");
  const int n = static_cast<int>(points[0].size());
  if (n < 1) throw ContractError("ambient dimension must be at least 1");
  if (n > kMaxAmbientDim)
    throw UnsupportedDimensionError("ambient dimension " + std::to_string(n) +
                                    " exceeds the supported maximum " +
                                    std::to_string(kMaxAmbientDim));
  for (const auto& q : points) {
    if (static_cast<int>(q.size()) != n)
      throw ContractError("hull: points of mixed dimension");
  }
  ambient_dim_ = n;
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Affine hull: equations from the kernel of the difference matrix.
  const RationalPoint& base = points[0];
  std::vector<RationalPoint> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint d(n);
    for (int j = 0; j < n; ++j) d[j] = points[i][j] - base[j];
    diffs.push_back(std::move(d));
  }
  for (auto& ker : kernel_basis(rows_to_matrix(diffs, n))) {
    auto normal = primitive_integer_vector(ker);
    if (first_nonzero_negative(normal)) {
      for (auto& c : normal) c = -c;
    }
    equations_.push_back({normal, dot(normal, base)});
  }
  std::sort(equations_.begin(), equations_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  dim_ = n - static_cast<int>(equations_.size());

  if (dim_ == 0) {
    vertices_ = {base};
    return;
  }

  // Pick an affine-coordinate basis: dim_ independent difference vectors.
  std::vector<RationalPoint> basis;
  for (const auto& d : diffs) {
    auto trial = basis;
    trial.push_back(d);
    if (rank_exact(rows_to_matrix(trial, n)) == static_cast<int>(trial.size()))
      basis = std::move(trial);
    if (static_cast<int>(basis.size()) == dim_) break;
  }
  RationalMatrix basis_cols(n, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < n; ++i) basis_cols.at(i, j) = basis[j][i];

  std::vector<RationalPoint> coords;  // points in affine coordinates
  coords.reserve(points.size());
  for (const auto& q : points) {
    std::vector<Rational> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = q[i] - base[i];
    auto t = solve_exact(basis_cols, rhs);
    if (!t) throw ContractError("internal: point outside its own affine hull");
    coords.push_back(std::move(*t));
  }

  // Supporting-hyperplane sweep over dim_-subsets of the points. Every facet
  // contains dim_ affinely independent input points, so the sweep is
  // complete; the one-sidedness test makes it irredundant.
  const int npts = static_cast<int>(points.size());
  std::set<std::pair<std::vector<std::int64_t>, Rational>> seen;
  for_each_subset(npts, dim_, [&](const std::vector<int>& subset) {
    std::vector<RationalPoint> sub_diffs;
    for (int i = 1; i < dim_; ++i) {
      RationalPoint d(dim_);
      for (int j = 0; j < dim_; ++j) d[j] = coords[subset[i]][j] - coords[subset[0]][j];
      sub_diffs.push_back(std::move(d));
    }
    auto ker = kernel_basis(rows_to_matrix(sub_diffs, dim_));
    if (ker.size() != 1) return;  // subset does not span a hyperplane
    const RationalPoint& u = ker[0];
    const Rational level = dot(u, coords[subset[0]]);
    bool any_above = false, any_below = false;
    for (const auto& t : coords) {
      const Rational s = dot(u, t) - level;
      if (s > 0) any_above = true;
      if (s < 0) any_below = true;
      if (any_above && any_below) return;  // not supporting
    }
    RationalPoint u_in = u;
    if (any_below) {
      for (auto& c : u_in) c = -c;
    }
    // Lift the coordinate-space normal to an ambient covector inside the
    // hull's direction space: a = B (B^T B)^{-1} u.
    RationalMatrix gram(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) gram.at(i, j) = dot(basis[i], basis[j]);
    auto y = solve_exact(gram, u_in);
    if (!y) throw ContractError("internal: singular Gram matrix");
    RationalPoint ambient(n, Rational(0));
    for (int j = 0; j < dim_; ++j)
      for (int i = 0; i < n; ++i) ambient[i] += basis[j][i] * (*y)[j];
    auto normal = primitive_integer_vector(ambient);
    // Re-orient in ambient terms: inward means all points on the >= side.
    Rational offset = dot(normal, points[subset[0]]);
    bool flip = false;
    for (const auto& q : points) {
      const Rational s = dot(normal, q) - offset;
      if (s < 0) {
        flip = true;
        break;
      }
    }
    if (flip) {
      for (auto& c : normal) c = -c;
      offset = -offset;
    }
    seen.insert({std::move(normal), std::move(offset)});
  });
  for (const auto& [normal, offset] : seen) facets_.push_back({normal, offset});

  // A point is extreme exactly when its tight constraints span the
  // whole ambient space.
  for (int i = 0; i < npts; ++i) {
    std::vector<RationalPoint> tight;
    for (const auto& eq : equations_) tight.push_back(to_rational_point(eq.normal));
    for (const auto& f : facets_) {
      if (dot(f.normal, points[i]) == f.offset) tight.push_back(to_rational_point(f.normal));
    }
    if (rank_exact(rows_to_matrix(tight, n)) == n) vertices_.push_back(points[i]);
  }
  std::sort(vertices_.begin(), vertices_.end());

  // Cross-check the two representations.
  for (const auto& f : facets_) {
    int tight_count = 0;
    for (const auto& v : vertices_) {
      if (dot(f.normal, v) == f.offset) ++tight_count;
    }
    if (tight_count < dim_)
      throw ContractError("internal: facet tight at fewer vertices than the hull dimension");
  }
}

bool Polytope::is_lattice() const {
  for (const auto& v : vertices_)
    for (const auto& c : v)
      if (!is_integral(c)) return false;
  return true;
}

std::vector<LatticePoint> Polytope::lattice_vertices() const {
  std::vector<LatticePoint> out;
  out.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    LatticePoint p;
    p.reserve(v.size());
    for (const auto& c : v) p.push_back(rational_to_int64(c));
    out.push_back(std::move(p));
  }
  return out;
}

bool Polytope::contains(const RationalPoint& x) const {
  if (static_cast<int>(x.size()) != ambient_dim_)
    throw ContractError("contains: point dimension mismatch");
  for (const auto& eq : equations_) {
    if (dot(eq.normal, x) != eq.offset) return false;
  }
  for (const auto& f : facets_) {
    if (dot(f.normal, x) < f.offset) return false;
  }
  return true;
}

bool Polytope::contains(const LatticePoint& x) const { return contains(to_rational_point(x)); }

std::vector<LatticePoint> lattice_points(const Polytope& p) {
  const int n = p.ambient_dim();
  std::vector<std::int64_t> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = p.vertices()[0][i];
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = rational_to_int64(ceil_rational(mn));
    hi[i] = rational_to_int64(floor_rational(mx));
  }
  std::vector<LatticePoint> out;
  LatticePoint cur = lo;
  while (true) {
    bool in_box = true;
    for (int i = 0; i < n; ++i) in_box = in_box && cur[i] <= hi[i];
    if (in_box && p.contains(cur)) out.push_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] >= hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;  // odometer order is lexicographic
}

Polytope dilate(const Polytope& p, std::int64_t k) {
  if (k < 0) throw ContractError("dilation factor must be nonnegative");
  if (k == 0) return Polytope::point(RationalPoint(p.ambient_dim(), Rational(0)));
  std::vector<RationalPoint> scaled;
  scaled.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) {
    RationalPoint w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * Rational(Integer(k));
    scaled.push_back(std::move(w));
  }
  return Polytope::hull(scaled);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw ContractError("minkowski_sum: dimension mismatch");
  std::vector<RationalPoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      RationalPoint s(a.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return Polytope::hull(sums);
}

std::optional<Polytope> minkowski_diff(const Polytope& p, const Polytope& q) {
  const int n = p.ambient_dim();
  if (n != q.ambient_dim()) throw ContractError("minkowski_diff: dimension mismatch");

  // x + Q stays inside an affine-hull hyperplane of P only when the normal is
  // constant on Q; otherwise the erosion is empty.
  std::vector<AffineEquation> eqs;
  for (const auto& eq : p.equations()) {
    Rational mn = dot(eq.normal, q.vertices()[0]), mx = mn;
    for (const auto& v : q.vertices()) {
      const Rational s = dot(eq.normal, v);
      mn = std::min(mn, s);
      mx = std::max(mx, s);
    }
    if (mn != mx) return std::nullopt;
    eqs.push_back({eq.normal, eq.offset - mn});
  }
  // Facet offsets recede by the support of Q in the facet normal direction.
  std::vector<HalfSpace> shifted;
  for (const auto& f : p.facets()) {
    Rational mn = dot(f.normal, q.vertices()[0]);
    for (const auto& v : q.vertices()) mn = std::min(mn, dot(f.normal, v));
    shifted.push_back({f.normal, f.offset - mn});
  }

  const int d = p.dim();
  const int nfacets = static_cast<int>(shifted.size());
  auto feasible = [&](const RationalPoint& x) {
    for (const auto& eq : eqs) {
      if (dot(eq.normal, x) != eq.offset) return false;
    }
    for (const auto& h : shifted) {
      if (dot(h.normal, x) < h.offset) return false;
    }
    return true;
  };

  // Vertex candidates: unique solutions of the equations plus d of the
  // shifted facet hyperplanes.
  std::vector<RationalPoint> candidates;
  for_each_subset(nfacets, d, [&](const std::vector<int>& subset) {
    RationalMatrix a(static_cast<int>(eqs.size()) + d, n);
    std::vector<Rational> rhs;
    int row = 0;
    for (const auto& eq : eqs) {
      for (int j = 0; j < n; ++j) a.at(row, j) = Rational(Integer(eq.normal[j]));
      rhs.push_back(eq.offset);
      ++row;
    }
    for (int idx : subset) {
      for (int j = 0; j < n; ++j) a.at(row, j) = Rational(Integer(shifted[idx].normal[j]));
      rhs.push_back(shifted[idx].offset);
      ++row;
    }
    if (rank_exact(a) != n) return;
    auto x = solve_exact(a, rhs);
    if (x && feasible(*x)) candidates.push_back(std::move(*x));
  });
  if (candidates.empty()) return std::nullopt;
  return Polytope::hull(candidates);
}

bool is_summand(const Polytope& q, const Polytope& p) {
  if (p.ambient_dim() != q.ambient_dim()) throw ContractError("is_summand: dimension mismatch");
  auto erosion = minkowski_diff(p, q);
  if (!erosion) return false;
  return minkowski_sum(q, *erosion) == p;
}

std::optional<RationalPoint> non_delzant_vertex(const Polytope& p) {
  if (!p.full_dimensional())
    throw DegenerateInputError("the Delzant test requires a full-dimensional polytope");
  const int n = p.ambient_dim();
  for (const auto& v : p.vertices()) {
    std::vector<std::vector<Integer>> normals;
    for (const auto& f : p.facets()) {
      if (dot(f.normal, v) == f.offset) {
        std::vector<Integer> row;
        for (auto c : f.normal) row.emplace_back(c);
        normals.push_back(std::move(row));
      }
    }
    if (static_cast<int>(normals.size()) != n) return v;
    Integer det = integer_determinant(std::move(normals));
    if (det != 1 && det != -1) return v;
  }
  return std::nullopt;
}

bool is_smooth(const Polytope& p) { return !non_delzant_vertex(p).has_value(); }

std::vector<Face> faces(const Polytope& p) {
  if (!p.full_dimensional())
    throw DegenerateInputError("faces requires a full-dimensional polytope");
  const int nverts = static_cast<int>(p.vertices().size());
  const int nfacets = static_cast<int>(p.facets().size());

  std::vector<std::set<int>> facet_verts(nfacets);
  for (int f = 0; f < nfacets; ++f) {
    for (int v = 0; v < nverts; ++v) {
      if (dot(p.facets()[f].normal, p.vertices()[v]) == p.facets()[f].offset)
        facet_verts[f].insert(v);
    }
  }

  // Proper faces are intersections of facets; close the facet vertex sets
  // under pairwise intersection.
  std::set<std::set<int>> vertex_sets(facet_verts.begin(), facet_verts.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<int>> snapshot(vertex_sets.begin(), vertex_sets.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::set<int> inter;
        std::set_intersection(snapshot[i].begin(), snapshot[i].end(), snapshot[j].begin(),
                              snapshot[j].end(), std::inserter(inter, inter.begin()));
        if (!inter.empty() && !vertex_sets.count(inter)) {
          vertex_sets.insert(std::move(inter));
          grew = true;
        }
      }
    }
  }
  std::set<int> all;
  for (int v = 0; v < nverts; ++v) all.insert(v);
  vertex_sets.insert(all);

  std::vector<Face> out;
  for (const auto& vs : vertex_sets) {
    Face face;
    face.vertex_indices.assign(vs.begin(), vs.end());
    for (int f = 0; f < nfacets; ++f) {
      if (std::includes(facet_verts[f].begin(), facet_verts[f].end(), vs.begin(), vs.end()))
        face.tight_facets.push_back(f);
    }
    std::vector<RationalPoint> pts;
    for (int v : face.vertex_indices) pts.push_back(p.vertices()[v]);
    face.dim = affine_rank(pts);
    out.push_back(std::move(face));
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return std::tie(a.tight_facets, a.vertex_indices) <
           std::tie(b.tight_facets, b.vertex_indices);
  });
  return out;
}

FacePartition classify_faces_at_infinity(const Polytope& p) {
  if (!p.contains(LatticePoint(p.ambient_dim(), 0)))
    throw HypothesisError("face classification requires the origin inside the polytope");
  FacePartition part;
  for (auto& face : faces(p)) {
    bool at_infinity = false;
    for (int f : face.tight_facets) {
      for (auto c : p.facets()[f].normal) {
        if (c < 0) {
          at_infinity = true;
          break;
        }
      }
      if (at_infinity) break;
    }
    // The whole polytope has an empty tight set, hence counts as affine.
    if (at_infinity)
      part.infinity.push_back(std::move(face));
    else
      part.affine.push_back(std::move(face));
  }
  return part;
}

std::optional<std::int64_t> min_integer_dilation(const Polytope& p,
                                                 const std::vector<LatticePoint>& s) {
  if (!p.full_dimensional())
    throw DegenerateInputError("min_integer_dilation requires a full-dimensional polytope");
  if (s.empty()) return 1;
  Rational lo(1);
  std::optional<Rational> hi;
  for (const auto& f : p.facets()) {
    Rational m = dot(f.normal, to_rational_point(s[0]));
    for (const auto& pt : s) m = std::min(m, dot(f.normal, to_rational_point(pt)));
    // Need e * offset <= m for every point of S.
    if (f.offset > 0) {
      const Rational cap = floor_rational(m / f.offset);
      if (!hi || cap < *hi) hi = cap;
    } else if (f.offset < 0) {
      lo = std::max(lo, ceil_rational(m / f.offset));
    } else if (m < 0) {
      return std::nullopt;
    }
  }
  if (hi && *hi < lo) return std::nullopt;
  return rational_to_int64(lo);
}

std::vector<std::int64_t> face_weight(const Polytope& p, const Face& face) {
  std::vector<std::int64_t> w(p.ambient_dim(), 0);
  for (int f : face.tight_facets) {
    const auto& normal = p.facets()[f].normal;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += normal[i];
  }
  return w;
}

Rational support_minimum(const Polytope& p, const std::vector<std::int64_t>& w) {
  Rational best = dot(w, p.vertices()[0]);
  for (const auto& v : p.vertices()) best = std::min(best, dot(w, v));
  return best;
}

std::vector<RationalPoint> face_vertices(const Polytope& p, const Face& face) {
  std::vector<RationalPoint> out;
  out.reserve(face.vertex_indices.size());
  for (int v : face.vertex_indices) out.push_back(p.vertices()[v]);
  return out;
}

}  // namespace nullcert
