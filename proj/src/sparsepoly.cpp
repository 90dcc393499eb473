#include "nullcert/sparsepoly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nullcert {

namespace {

void check_exponent(int dim, const LatticePoint& e) {
  if (static_cast<int>(e.size()) != dim)
    throw ContractError("exponent dimension mismatch");
  for (auto c : e) {
    if (c < 0) throw ContractError("negative exponent in a polynomial term");
  }
}

Rational weight_of(const LatticePoint& exponent, const std::vector<std::int64_t>& w) {
  Integer acc(0);
  for (std::size_t i = 0; i < w.size(); ++i) acc += Integer(w[i]) * Integer(exponent[i]);
  return Rational(acc);
}

}  // namespace

SparsePolynomial::SparsePolynomial(int dim) : dim_(dim) {
  if (dim < 1) throw ContractError("polynomial dimension must be at least 1");
}

SparsePolynomial SparsePolynomial::constant(int dim, const Rational& c) {
  SparsePolynomial f(dim);
  f.add_term(LatticePoint(dim, 0), c);
  return f;
}

SparsePolynomial SparsePolynomial::monomial(int dim, const LatticePoint& exponent,
                                            const Rational& c) {
  SparsePolynomial f(dim);
  f.add_term(exponent, c);
  return f;
}

SparsePolynomial SparsePolynomial::variable(int dim, int index) {
  if (index < 0 || index >= dim) throw ContractError("variable index out of range");
  LatticePoint e(dim, 0);
  e[index] = 1;
  return monomial(dim, e, Rational(1));
}

void SparsePolynomial::add_term(const LatticePoint& exponent, const Rational& c) {
  check_exponent(dim_, exponent);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SparsePolynomial::coefficient(const LatticePoint& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<LatticePoint> SparsePolynomial::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;  // map order is lexicographic
}

std::int64_t SparsePolynomial::total_degree() const {
  std::int64_t best = 0;
  for (const auto& [e, c] : terms_)
    best = std::max(best, std::accumulate(e.begin(), e.end(), std::int64_t{0}));
  return best;
}

Rational SparsePolynomial::evaluate(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw ContractError("evaluate: point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dim_; ++i) {
      for (std::int64_t k = 0; k < e[i]; ++k) term *= x[i];
    }
    acc += term;
  }
  return acc;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& g) {
  if (dim_ != g.dim_) throw ContractError("polynomial dimension mismatch");
  for (const auto& [e, c] : g.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& g) {
  if (dim_ != g.dim_) throw ContractError("polynomial dimension mismatch");
  for (const auto& [e, c] : g.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g) {
  if (f.dim_ != g.dim_) throw ContractError("polynomial dimension mismatch");
  SparsePolynomial out(f.dim_);
  for (const auto& [ef, cf] : f.terms_) {
    for (const auto& [eg, cg] : g.terms_) {
      LatticePoint e(f.dim_);
      for (int i = 0; i < f.dim_; ++i) e[i] = ef[i] + eg[i];
      out.add_term(e, cf * cg);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial out(dim_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

SparsePolynomial scale(const SparsePolynomial& f, const Rational& c) {
  SparsePolynomial out(f.dim_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : f.terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

SparsePolynomial pow(const SparsePolynomial& f, std::int64_t k) {
  if (k < 0) throw ContractError("polynomial power must be nonnegative");
  SparsePolynomial acc = SparsePolynomial::constant(f.dim(), Rational(1));
  for (std::int64_t i = 0; i < k; ++i) acc = acc * f;
  return acc;
}

Polytope newton_polytope(const std::vector<SparsePolynomial>& fs) {
  std::vector<LatticePoint> pts;
  for (const auto& f : fs) {
    for (const auto& e : f.support()) pts.push_back(e);
  }
  if (pts.empty())
    throw DegenerateInputError("newton polytope of an all-zero polynomial system");
  return Polytope::hull(pts);
}

Polytope newton_polytope(const SparsePolynomial& f) {
  return newton_polytope(std::vector<SparsePolynomial>{f});
}

SparsePolynomial facial_form(const SparsePolynomial& f, const std::vector<std::int64_t>& w) {
  if (f.is_zero()) throw DegenerateInputError("facial form of the zero polynomial");
  if (static_cast<int>(w.size()) != f.dim())
    throw ContractError("facial form: weight dimension mismatch");
  Rational level;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const Rational v = weight_of(e, w);
    if (first || v < level) level = v;
    first = false;
  }
  SparsePolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (weight_of(e, w) == level) out.add_term(e, c);
  }
  return out;
}

namespace {

SparsePolynomial restrict_to_level(const SparsePolynomial& f,
                                   const std::vector<std::int64_t>& w, const Rational& level) {
  SparsePolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (weight_of(e, w) == level) out.add_term(e, c);
  }
  return out;
}

}  // namespace

std::vector<SparsePolynomial> facial_system(const std::vector<SparsePolynomial>& fs,
                                            const Polytope& p, const Face& face) {
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!support_in(fs[j], p))
      throw HypothesisError("facial_system: generator " + std::to_string(j + 1) +
                            " has support outside the polytope");
  }
  const auto w = face_weight(p, face);
  const Rational level = support_minimum(p, w);
  std::vector<SparsePolynomial> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(restrict_to_level(f, w, level));
  return out;
}

std::vector<SparsePolynomial> facial_system_multi(const std::vector<SparsePolynomial>& fs,
                                                  const std::vector<Polytope>& pj,
                                                  const Polytope& driver, const Face& face) {
  if (fs.size() != pj.size())
    throw ContractError("facial_system_multi: one polytope per generator required");
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (!support_in(fs[j], pj[j]))
      throw HypothesisError("facial_system_multi: generator " + std::to_string(j + 1) +
                            " has support outside its polytope");
  }
  const auto w = face_weight(driver, face);
  std::vector<SparsePolynomial> out;
  out.reserve(fs.size());
  for (std::size_t j = 0; j < fs.size(); ++j)
    out.push_back(restrict_to_level(fs[j], w, support_minimum(pj[j], w)));
  return out;
}

bool support_in(const SparsePolynomial& f, const Polytope& p) {
  if (f.dim() != p.ambient_dim()) throw ContractError("support_in: dimension mismatch");
  for (const auto& [e, c] : f.terms()) {
    if (!p.contains(e)) return false;
  }
  return true;
}

}  // namespace nullcert
