#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nullcert/groebner.hpp"
#include "test_helpers.hpp"

using namespace nullcert;
using namespace nullcert::testing;

namespace {

SparsePolynomial make(int dim, std::initializer_list<std::pair<LatticePoint, std::int64_t>> ts) {
  SparsePolynomial f(dim);
  for (const auto& [e, c] : ts) f.add_term(e, Rational(Integer(c)));
  return f;
}

// Every S-polynomial of the returned basis must reduce to zero.
void assert_groebner(const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
      const auto& f = gb.generators[i];
      const auto& g = gb.generators[j];
      // Build the S-polynomial by hand.
      auto lead = [&](const SparsePolynomial& h) {
        LatticePoint best;
        bool first = true;
        for (const auto& [e, c] : h.terms()) {
          if (first || gb.order.less(best, e)) best = e;
          first = false;
        }
        return best;
      };
      const auto lf = lead(f), lg = lead(g);
      LatticePoint l(lf.size());
      for (std::size_t k = 0; k < l.size(); ++k) l[k] = std::max(lf[k], lg[k]);
      LatticePoint sf(l.size()), sg(l.size());
      for (std::size_t k = 0; k < l.size(); ++k) {
        sf[k] = l[k] - lf[k];
        sg[k] = l[k] - lg[k];
      }
      const auto spoly = SparsePolynomial::monomial(f.dim(), sf, 1 / f.coefficient(lf)) * f -
                         SparsePolynomial::monomial(g.dim(), sg, 1 / g.coefficient(lg)) * g;
      CHECK(normal_form(spoly, gb).is_zero());
    }
  }
}

}  // namespace

TEST_CASE("grevlex ordering basics") {
  const auto order = MonomialOrder::grevlex(2);
  CHECK(order.less(lp({0, 0}), lp({1, 0})));   // degree first
  CHECK(order.less(lp({0, 1}), lp({1, 0})));   // z1 beats z2 on ties
  CHECK(order.less(lp({1, 1}), lp({2, 0})));
  CHECK(!order.less(lp({1, 0}), lp({1, 0})));
   // With t last in the permutation, monomials containing t lose degree ties.
  const auto order3 = MonomialOrder::grevlex(3);
  CHECK(order3.less(lp({0, 0, 1}), lp({1, 0, 0})));
  CHECK(order3.less(lp({0, 0, 1}), lp({0, 1, 0})));
}

TEST_CASE("monomial order rejects non-permutations") {
  CHECK_THROWS_AS(MonomialOrder::grevlex_with_permutation({0, 0}), ContractError);
  CHECK_THROWS_AS(MonomialOrder::grevlex_with_permutation({0, 2}), ContractError);
}

TEST_CASE("buchberger on coordinate ideals") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto gb = buchberger({z1, z2}, MonomialOrder::grevlex(2));
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == z2);
  CHECK(gb.generators[1] == z1);
  assert_groebner(gb);
}

TEST_CASE("a unit ideal collapses to 1") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  const auto gb = buchberger({z1, z2, one - z1 - z2}, MonomialOrder::grevlex(2));
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators[0] == one);
}

TEST_CASE("reduced basis of the hyperbola-line ideal") {
  const auto f1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});  // z1*z2 - 1
  const auto f2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});  // z1 - z2
  const auto gb = buchberger({f1, f2}, MonomialOrder::grevlex(2));
  // S(f1, f2) = z2^2 - 1 and z1*z2 - 1 drops out of the reduced basis.
  REQUIRE(gb.generators.size() == 2);
  CHECK(gb.generators[0] == f2);
  CHECK(gb.generators[1] == make(2, {{{0, 2}, 1}, {{0, 0}, -1}}));  // z2^2 - 1
  assert_groebner(gb);
}

TEST_CASE("buchberger rejects degenerate input") {
  CHECK_THROWS_AS(buchberger({}, MonomialOrder::grevlex(2)), DegenerateInputError);
  CHECK_THROWS_AS(buchberger({SparsePolynomial::zero(2)}, MonomialOrder::grevlex(2)),
                  DegenerateInputError);
}

TEST_CASE("normal forms") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto gb = buchberger({z1, z2}, MonomialOrder::grevlex(2));
  const auto one = SparsePolynomial::constant(2, 1);
  CHECK(normal_form(one, gb) == one);

  Rng rng(1001);
  const auto candidates = lattice_points(Polytope::simplex(2, 2));
  for (int trial = 0; trial < 10; ++trial) {
    // Explicit combinations of the generators always reduce to zero.
    const auto h1 = random_poly(rng, 2, candidates);
    const auto h2 = random_poly(rng, 2, candidates);
    const auto f = h1 * z1 + h2 * z2;
    CHECK(normal_form(f, gb).is_zero());
    // Idempotence of the remainder.
    const auto g = random_poly(rng, 2, candidates);
    CHECK(normal_form(normal_form(g, gb), gb) == normal_form(g, gb));
  }
}

TEST_CASE("ideal membership") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  CHECK(ideal_member(z1 * z1 + z2 * z2, {z1, z2}));
  const auto sq1 = make(2, {{{2, 0}, 1}});
  const auto sq2 = make(2, {{{0, 2}, 1}});
  CHECK(!ideal_member(z1 * z2, {sq1, sq2}));
  CHECK(ideal_member(sq1 * sq2, {sq1, sq2}));

  const auto f1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  const auto f2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto target = make(2, {{{2, 2}, 1}, {{0, 0}, -1}});  // z1^2 z2^2 - 1
  CHECK(ideal_member(target, {f1, f2}));
  // Explicit cofactor: (z1*z2 + 1)(z1*z2 - 1) = z1^2 z2^2 - 1.
  const auto cof = make(2, {{{1, 1}, 1}, {{0, 0}, 1}});
  CHECK(cof * f1 == target);
}

TEST_CASE("random combinations are members, 1 is not when a common zero exists") {
  Rng rng(321);
  const auto candidates = lattice_points(Polytope::simplex(2, 2));
  for (int trial = 0; trial < 10; ++trial) {
    const auto g1 = random_nonzero_poly(rng, 2, candidates);
    const auto g2 = random_nonzero_poly(rng, 2, candidates);
    const auto h1 = random_poly(rng, 2, candidates);
    const auto h2 = random_poly(rng, 2, candidates);
    CHECK(ideal_member(g1 * h1 + g2 * h2, {g1, g2}));
  }
  // (1,1) is a common zero, so 1 cannot be a member.
  const auto a = make(2, {{{1, 0}, 1}, {{0, 0}, -1}});  // z1 - 1
  const auto b = make(2, {{{0, 1}, 1}, {{0, 0}, -1}});  // z2 - 1
  CHECK(!ideal_member(SparsePolynomial::constant(2, 1), {a, b}));
  CHECK(a.evaluate({make_rational(1), make_rational(1)}) == 0);
  CHECK(b.evaluate({make_rational(1), make_rational(1)}) == 0);
}

TEST_CASE("affine common zeros") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  CHECK(has_common_zero_affine({z1, z2}));
  CHECK(!has_common_zero_affine({z1, z2, one - z1 - z2}));
  const auto f1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  const auto f2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  CHECK(has_common_zero_affine({f1, f2}));  // (1,1) and (-1,-1)
}

TEST_CASE("torus common zeros") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto a = make(2, {{{1, 0}, 1}, {{0, 0}, -1}});
  const auto b = make(2, {{{0, 1}, 1}, {{0, 0}, -1}});
  CHECK(has_common_zero_torus({a, b}));  // (1,1)
  CHECK(!has_common_zero_torus({z1, z2}));
  CHECK(!has_common_zero_torus({z1 * z2, z1 - z2}));
  // Zero generators impose nothing; an all-zero system has the whole torus.
  CHECK(has_common_zero_torus({SparsePolynomial::zero(2), a, b}));
  CHECK(has_common_zero_torus({SparsePolynomial::zero(2)}));
  CHECK(!has_common_zero_torus({SparsePolynomial::constant(2, 1)}));
}

TEST_CASE("adding generators never creates a torus zero") {
  Rng rng(9876);
  const auto candidates = lattice_points(Polytope::simplex(2, 2));
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<SparsePolynomial> gens = {random_nonzero_poly(rng, 2, candidates),
                                          random_nonzero_poly(rng, 2, candidates)};
    const bool before = has_common_zero_torus(gens);
    gens.push_back(random_nonzero_poly(rng, 2, candidates));
    const bool after = has_common_zero_torus(gens);
    if (!before) CHECK(!after);
  }
}

TEST_CASE("three-variable stress: the cyclic system") {
  // x+y+z, xy+yz+zx, xyz-1: nine solutions, all on the torus.
  const auto s1 = make(3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});
  const auto s2 = make(3, {{{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}});
  const auto s3 = make(3, {{{1, 1, 1}, 1}, {{0, 0, 0}, -1}});
  const auto gb = buchberger({s1, s2, s3}, MonomialOrder::grevlex(3));
  assert_groebner(gb);
  CHECK(has_common_zero_affine({s1, s2, s3}));
  CHECK(has_common_zero_torus({s1, s2, s3}));
  CHECK(!ideal_member(SparsePolynomial::constant(3, 1), {s1, s2, s3}));
  // Elementary symmetric relations pin z^3 = 1 on the variety.
  const auto zcubed = make(3, {{{0, 0, 3}, 1}, {{0, 0, 0}, -1}});
  CHECK(radical_member(zcubed, {s1, s2, s3}));
  CHECK(ideal_member(s1 * s2 + s3, {s1, s2, s3}));
}

TEST_CASE("radical membership") {
  const auto z1sq = make(1, {{{2}, 1}});
  const auto z1 = SparsePolynomial::variable(1, 0);
  const auto one = SparsePolynomial::constant(1, 1);
  CHECK(radical_member(z1, {z1sq}));
  CHECK(!radical_member(z1 - one, {z1sq}));

  const auto f1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  const auto f2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto phi = make(2, {{{2, 0}, 1}, {{0, 0}, -1}});  // z1^2 - 1
  CHECK(radical_member(phi, {f1, f2}));
  // Spot check: phi vanishes at both common zeros (1,1) and (-1,-1).
  CHECK(phi.evaluate({make_rational(1), make_rational(1)}) == 0);
  CHECK(phi.evaluate({make_rational(-1), make_rational(-1)}) == 0);
}
