#include "nullcert/infinity.hpp"

#include <random>
#include <string>

namespace nullcert {

namespace {

void check_preconditions(const std::vector<SparsePolynomial>& fs, const Polytope& p,
                         bool require_origin) {
  if (!p.full_dimensional())
    throw DegenerateInputError("zero checks require a full-dimensional polytope");
  if (require_origin && !p.contains(LatticePoint(p.ambient_dim(), 0)))
    throw HypothesisError("the polytope must contain the origin");
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!support_in(fs[j], p))
      throw HypothesisError("generator " + std::to_string(j + 1) +
                            " has support outside the polytope");
  }
}

bool facial_system_has_torus_zero(const std::vector<SparsePolynomial>& system) {
  return has_common_zero_torus(system);
}

InfinityVerdict sweep(const std::vector<SparsePolynomial>& fs, const Polytope& driver,
                      const std::vector<Polytope>& levelers, bool infinity_only) {
  std::vector<Face> swept;
  if (infinity_only) {
    swept = classify_faces_at_infinity(driver).infinity;
  } else {
    swept = faces(driver);
  }
  // faces() is sorted by tight-facet index set, so the first failure is the
  // deterministic witness.
  for (auto& face : swept) {
    const auto system = facial_system_multi(fs, levelers, driver, face);
    if (facial_system_has_torus_zero(system)) {
      InfinityVerdict verdict;
      verdict.ok = false;
      verdict.witness_face_vertices = face_vertices(driver, face);
      verdict.witness_face = std::move(face);
      verdict.witness_system = system;
      return verdict;
    }
  }
  InfinityVerdict verdict;
  verdict.ok = true;
  return verdict;
}

}  // namespace

InfinityVerdict no_zeros_at_infinity(const std::vector<SparsePolynomial>& fs,
                                     const Polytope& p) {
  check_preconditions(fs, p, /*require_origin=*/true);
  return sweep(fs, p, std::vector<Polytope>(fs.size(), p), /*infinity_only=*/true);
}

InfinityVerdict no_zeros_anywhere(const std::vector<SparsePolynomial>& fs, const Polytope& p) {
  check_preconditions(fs, p, /*require_origin=*/false);
  return sweep(fs, p, std::vector<Polytope>(fs.size(), p), /*infinity_only=*/false);
}

InfinityVerdict no_zeros_anywhere_multi(const std::vector<SparsePolynomial>& fs,
                                        const std::vector<Polytope>& pj) {
  if (fs.size() != pj.size())
    throw ContractError("no_zeros_anywhere_multi: one polytope per generator required");
  if (fs.empty()) throw DegenerateInputError("no_zeros_anywhere_multi: empty system");
  Polytope driver = pj[0];
  for (std::size_t j = 1; j < pj.size(); ++j) driver = minkowski_sum(driver, pj[j]);
  if (!driver.full_dimensional())
    throw DegenerateInputError("the summed polytope is not full-dimensional");
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!support_in(fs[j], pj[j]))
      throw HypothesisError("generator " + std::to_string(j + 1) +
                            " has support outside its polytope");
  }
  return sweep(fs, driver, pj, /*infinity_only=*/false);
}

std::vector<SparsePolynomial> genericity_probe(const Polytope& p, int count,
                                               std::uint64_t seed) {
  if (!p.full_dimensional())
    throw DegenerateInputError("genericity_probe requires a full-dimensional polytope");
  if (count < 0) throw ContractError("genericity_probe: negative count");
  const auto support = lattice_points(p);
  std::mt19937_64 rng(seed);
  // Engine output is consumed directly so that the draw is identical on
  // every platform.
  auto draw_nonzero = [&rng]() {
    while (true) {
      const auto v = static_cast<std::int64_t>(rng() % 19) - 9;
      if (v != 0) return v;
    }
  };
  std::vector<SparsePolynomial> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    SparsePolynomial f(p.ambient_dim());
    for (const auto& e : support) f.add_term(e, Rational(Integer(draw_nonzero())));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace nullcert
