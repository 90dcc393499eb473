#pragma once

#include <map>
#include <vector>

#include "nullcert/polytope.hpp"
#include "nullcert/rational.hpp"

namespace nullcert {

/// Multivariate polynomial with exact rational coefficients, stored as a
/// sorted exponent-to-coefficient map. Exponents are componentwise
/// nonnegative; the zero polynomial is the empty map.
class SparsePolynomial {
public:
  explicit SparsePolynomial(int dim);

  static SparsePolynomial zero(int dim) { return SparsePolynomial(dim); }
  static SparsePolynomial constant(int dim, const Rational& c);
  static SparsePolynomial monomial(int dim, const LatticePoint& exponent, const Rational& c);
  static SparsePolynomial variable(int dim, int index);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<LatticePoint, Rational>& terms() const { return terms_; }

  /// Adds c * z^exponent, merging and dropping zeros.
  void add_term(const LatticePoint& exponent, const Rational& c);

  Rational coefficient(const LatticePoint& exponent) const;
  std::vector<LatticePoint> support() const;
  std::int64_t total_degree() const;  // 0 for the zero polynomial
  Rational evaluate(const std::vector<Rational>& x) const;

  SparsePolynomial& operator+=(const SparsePolynomial& g);
  SparsePolynomial& operator-=(const SparsePolynomial& g);
  friend SparsePolynomial operator+(SparsePolynomial f, const SparsePolynomial& g) {
    f += g;
    return f;
  }
  friend SparsePolynomial operator-(SparsePolynomial f, const SparsePolynomial& g) {
    f -= g;
    return f;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g);
  SparsePolynomial operator-() const;
  friend bool operator==(const SparsePolynomial& f, const SparsePolynomial& g) {
    return f.dim_ == g.dim_ && f.terms_ == g.terms_;
  }

  friend SparsePolynomial scale(const SparsePolynomial& f, const Rational& c);

private:
  int dim_;
  std::map<LatticePoint, Rational> terms_;
};

SparsePolynomial pow(const SparsePolynomial& f, std::int64_t k);

/// Convex hull of the union of the supports. Throws when all inputs are zero.
Polytope newton_polytope(const std::vector<SparsePolynomial>& fs);
Polytope newton_polytope(const SparsePolynomial& f);

/// Sum of the terms whose exponent minimizes <alpha, w> over supp F.
SparsePolynomial facial_form(const SparsePolynomial& f, const std::vector<std::int64_t>& w);

/// Restriction of each polynomial to a face of P: the terms whose exponents
/// realize min over P of <x, w> for the face's canonical weight w.
/// Polynomials whose support misses that level map to zero. Requires
/// supp F_j subseteq P.
std::vector<SparsePolynomial> facial_system(const std::vector<SparsePolynomial>& fs,
                                            const Polytope& p, const Face& face);

/// Face restriction in the multi-polytope setting: F_j's terms sit at the
/// level min over its own polytope P_j, while the face ranges over the
/// Minkowski sum of the P_j.
std::vector<SparsePolynomial> facial_system_multi(const std::vector<SparsePolynomial>& fs,
                                                  const std::vector<Polytope>& pj,
                                                  const Polytope& driver, const Face& face);

bool support_in(const SparsePolynomial& f, const Polytope& p);

}  // namespace nullcert
