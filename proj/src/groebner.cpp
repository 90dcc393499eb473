#include "nullcert/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace nullcert {

namespace {

std::int64_t total_degree_of(const LatticePoint& e) {
  return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

bool divides(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

LatticePoint lcm_exponent(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

bool coprime(const LatticePoint& a, const LatticePoint& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > 0 && b[i] > 0) return false;
  }
  return true;
}

LatticePoint leading_monomial(const SparsePolynomial& f, const MonomialOrder& order) {
  bool first = true;
  LatticePoint best;
  for (const auto& [e, c] : f.terms()) {
    if (first || order.less(best, e)) best = e;
    first = false;
  }
  return best;
}

// Divides out the content: scales so that coefficients become coprime
// integers with a positive leading coefficient. Keeps the blow-up of
// repeated reductions in check.
SparsePolynomial make_primitive(const SparsePolynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  Integer lcm_den(1), gcd_num(0);
  for (const auto& [e, c] : f.terms()) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    lcm_den = l;
  }
  for (const auto& [e, c] : f.terms()) {
    Integer z = c.get_num() * (lcm_den / c.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), gcd_num.get_mpz_t(), z.get_mpz_t());
    gcd_num = g;
  }
  Rational factor = make_rational(lcm_den, gcd_num);
  if (f.coefficient(leading_monomial(f, order)) < 0) factor = -factor;
  return scale(f, factor);
}

SparsePolynomial make_monic(const SparsePolynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  return scale(f, 1 / f.coefficient(leading_monomial(f, order)));
}

SparsePolynomial s_polynomial(const SparsePolynomial& f, const SparsePolynomial& g,
                              const MonomialOrder& order) {
  const auto lmf = leading_monomial(f, order);
  const auto lmg = leading_monomial(g, order);
  const auto l = lcm_exponent(lmf, lmg);
  LatticePoint ef(l.size()), eg(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    ef[i] = l[i] - lmf[i];
    eg[i] = l[i] - lmg[i];
  }
  const auto mf = SparsePolynomial::monomial(f.dim(), ef, 1 / f.coefficient(lmf));
  const auto mg = SparsePolynomial::monomial(g.dim(), eg, 1 / g.coefficient(lmg));
  return mf * f - mg * g;
}

SparsePolynomial reduce(const SparsePolynomial& f, const std::vector<SparsePolynomial>& basis,
                        const std::vector<LatticePoint>& leading, const MonomialOrder& order) {
  SparsePolynomial rem(f.dim());
  SparsePolynomial work = f;
  while (!work.is_zero()) {
    const auto lm = leading_monomial(work, order);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].is_zero() || !divides(leading[i], lm)) continue;
      LatticePoint shift(lm.size());
      for (std::size_t k = 0; k < lm.size(); ++k) shift[k] = lm[k] - leading[i][k];
      const Rational ratio =
          work.coefficient(lm) / basis[i].coefficient(leading[i]);
      work -= SparsePolynomial::monomial(work.dim(), shift, ratio) * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, work.coefficient(lm));
      work.add_term(lm, -work.coefficient(lm));
    }
  }
  return rem;
}

SparsePolynomial lift_append_variable(const SparsePolynomial& f) {
  SparsePolynomial out(f.dim() + 1);
  for (const auto& [e, c] : f.terms()) {
    LatticePoint le = e;
    le.push_back(0);
    out.add_term(le, c);
  }
  return out;
}

bool contains_nonzero_constant(const GroebnerBasis& gb) {
  for (const auto& g : gb.generators) {
    if (!g.is_zero() && g.total_degree() == 0) return true;
  }
  return false;
}

}  // namespace

MonomialOrder MonomialOrder::grevlex(int nvars) {
  MonomialOrder order;
  order.nvars = nvars;
  order.perm.resize(nvars);
  std::iota(order.perm.begin(), order.perm.end(), 0);
  return order;
}

MonomialOrder MonomialOrder::grevlex_with_permutation(std::vector<int> perm) {
  MonomialOrder order;
  order.nvars = static_cast<int>(perm.size());
  order.perm = std::move(perm);
  std::vector<bool> hit(order.nvars, false);
  for (int v : order.perm) {
    if (v < 0 || v >= order.nvars || hit[v])
      throw ContractError("monomial order permutation is not a permutation");
    hit[v] = true;
  }
  return order;
}

bool MonomialOrder::less(const LatticePoint& a, const LatticePoint& b) const {
  if (static_cast<int>(a.size()) != nvars || static_cast<int>(b.size()) != nvars)
    throw ContractError("monomial order: exponent dimension mismatch");
  const auto da = total_degree_of(a), db = total_degree_of(b);
  if (da != db) return da < db;
  for (int i = nvars - 1; i >= 0; --i) {
    const auto va = a[perm[i]], vb = b[perm[i]];
    if (va != vb) return va > vb;  // larger trailing exponent loses
  }
  return false;
}

GroebnerBasis buchberger(const std::vector<SparsePolynomial>& gens,
                         const MonomialOrder& order) {
  if (gens.empty()) throw DegenerateInputError("buchberger: empty generator list");
  std::vector<SparsePolynomial> basis;
  for (const auto& g : gens) {
    if (!g.is_zero()) basis.push_back(make_primitive(g, order));
  }
  if (basis.empty()) throw DegenerateInputError("buchberger: all generators are zero");

  std::vector<LatticePoint> leading;
  for (const auto& g : basis) leading.push_back(leading_monomial(g, order));

  struct Pair {
    std::size_t i, j;
    std::int64_t lcm_degree;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> processed;
  auto push_pairs_with = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pending.push_back({i, j, total_degree_of(lcm_exponent(leading[i], leading[j]))});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

  while (!pending.empty()) {
    // Normal strategy: smallest lcm degree first, index order breaks ties.
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      const auto& a = pending[k];
      const auto& b = pending[best];
      if (std::tie(a.lcm_degree, a.i, a.j) < std::tie(b.lcm_degree, b.i, b.j)) best = k;
    }
    const Pair pair = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    processed.insert({pair.i, pair.j});

    if (coprime(leading[pair.i], leading[pair.j])) continue;
    // Chain criterion: a third leading monomial dividing the lcm whose pairs
    // with both ends were already handled makes this pair redundant.
    const auto l = lcm_exponent(leading[pair.i], leading[pair.j]);
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == pair.i || k == pair.j || !divides(leading[k], l)) continue;
      const auto key_ik = std::minmax(pair.i, k);
      const auto key_jk = std::minmax(pair.j, k);
      if (processed.count({key_ik.first, key_ik.second}) &&
          processed.count({key_jk.first, key_jk.second}))
        redundant = true;
    }
    if (redundant) continue;

    auto rem = reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis, leading, order);
    if (rem.is_zero()) continue;
    basis.push_back(make_primitive(rem, order));
    leading.push_back(leading_monomial(basis.back(), order));
    push_pairs_with(basis.size() - 1);
  }

  // Reduce: drop generators whose leading monomial another one divides, then
  // reduce every tail against the rest and normalize to monic.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (divides(leading[j], leading[i]) && !(leading[i] == leading[j] && j > i)) keep[i] = false;
    }
  }
  std::vector<SparsePolynomial> minimal;
  std::vector<LatticePoint> minimal_leading;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (keep[i]) {
      minimal.push_back(basis[i]);
      minimal_leading.push_back(leading[i]);
    }
  }
  std::vector<SparsePolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SparsePolynomial> others;
    std::vector<LatticePoint> others_leading;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) {
        others.push_back(minimal[j]);
        others_leading.push_back(minimal_leading[j]);
      }
    }
    reduced.push_back(make_monic(reduce(minimal[i], others, others_leading, order), order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SparsePolynomial& a, const SparsePolynomial& b) {
              return order.less(leading_monomial(a, order), leading_monomial(b, order));
            });
  return GroebnerBasis{std::move(reduced), order};
}

SparsePolynomial normal_form(const SparsePolynomial& f, const GroebnerBasis& gb) {
  if (!gb.generators.empty() && f.dim() != gb.generators[0].dim())
    throw ContractError("normal_form: dimension mismatch");
  std::vector<LatticePoint> leading;
  for (const auto& g : gb.generators) leading.push_back(leading_monomial(g, gb.order));
  return reduce(f, gb.generators, leading, gb.order);
}

bool ideal_member(const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens) {
  const auto gb = buchberger(gens, MonomialOrder::grevlex(f.dim()));
  return normal_form(f, gb).is_zero();
}

bool has_common_zero_affine(const std::vector<SparsePolynomial>& gens) {
  const auto gb = buchberger(gens, MonomialOrder::grevlex(gens[0].dim()));
  return !contains_nonzero_constant(gb);
}

bool has_common_zero_torus(const std::vector<SparsePolynomial>& gens) {
  std::vector<SparsePolynomial> nonzero;
  int dim = gens.empty() ? 0 : gens[0].dim();
  for (const auto& g : gens) {
    dim = g.dim();
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return true;  // no constraint: the whole torus

  std::vector<SparsePolynomial> lifted;
  for (const auto& g : nonzero) lifted.push_back(lift_append_variable(g));
  SparsePolynomial rabinowitsch = SparsePolynomial::constant(dim + 1, 1);
  rabinowitsch.add_term(LatticePoint(dim + 1, 1), Rational(-1));  // 1 - t*z_1*...*z_n
  lifted.push_back(rabinowitsch);

  const auto gb = buchberger(lifted, MonomialOrder::grevlex(dim + 1));
  return !contains_nonzero_constant(gb);
}

bool radical_member(const SparsePolynomial& f, const std::vector<SparsePolynomial>& gens) {
  if (f.is_zero()) return true;
  std::vector<SparsePolynomial> lifted;
  for (const auto& g : gens) lifted.push_back(lift_append_variable(g));
  SparsePolynomial rabinowitsch = SparsePolynomial::constant(f.dim() + 1, 1);
  for (const auto& [e, c] : f.terms()) {
    LatticePoint le = e;
    le.push_back(1);
    rabinowitsch.add_term(le, -c);  // 1 - t*F
  }
  lifted.push_back(rabinowitsch);
  const auto gb = buchberger(lifted, MonomialOrder::grevlex(f.dim() + 1));
  return contains_nonzero_constant(gb);
}

}  // namespace nullcert
