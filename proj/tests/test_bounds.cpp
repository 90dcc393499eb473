#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "nullcert/bounds.hpp"
#include "test_helpers.hpp"

using namespace nullcert;
using namespace nullcert::testing;

namespace {

SparsePolynomial make(int dim, std::initializer_list<std::pair<LatticePoint, std::int64_t>> ts) {
  SparsePolynomial f(dim);
  for (const auto& [e, c] : ts) f.add_term(e, Rational(Integer(c)));
  return f;
}

Polytope unit_square() {
  return Polytope::hull(std::vector<LatticePoint>{lp({0, 0}), lp({1, 0}), lp({0, 1}), lp({1, 1})});
}

const HypothesisCheck& entry(const TheoremPlan& plan, const std::string& name) {
  for (const auto& h : plan.hypotheses) {
    if (h.name == name) return h;
  }
  throw std::runtime_error("no hypothesis named " + name);
}

void check_names_unique(const TheoremPlan& plan) {
  std::set<std::string> seen;
  for (const auto& h : plan.hypotheses) CHECK(seen.insert(h.name).second);
}

}  // namespace

TEST_CASE("macaulay plan on the partition of unity") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  const std::vector<SparsePolynomial> fs = {z1, z2, one - z1 - z2};

  const auto plan = plan_macaulay(fs, one);
  CHECK(plan.ok());
  check_names_unique(plan);
  CHECK(plan.e == 1);
  CHECK(plan.power == 1);
  REQUIRE(plan.bound.has_value());
  CHECK(*plan.bound == Polytope::simplex(2, 3));

  const auto plan5 = plan_macaulay(fs, make(2, {{{5, 0}, 1}}));
  CHECK(plan5.ok());
  CHECK(plan5.e == 5);
  CHECK(*plan5.bound == Polytope::simplex(2, 5));
}

TEST_CASE("macaulay plan fails on systems with common zeros") {
  const auto one = SparsePolynomial::constant(2, 1);
  const auto a = make(2, {{{1, 0}, 1}, {{0, 0}, -1}});  // z1 - 1
  const auto b = make(2, {{{0, 1}, 1}, {{0, 0}, -1}});  // z2 - 1
  const auto plan = plan_macaulay({a, b, a * b}, one);
  CHECK(!plan.ok());
  const auto& h = entry(plan, "no_zeros_even_at_infinity");
  CHECK(h.status == HypothesisStatus::fail);
  CHECK(h.witness.find("face with vertices") != std::string::npos);
  CHECK(!plan.bound.has_value());

  // A degenerate Newton polytope is reported as such.
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto degenerate = plan_macaulay({z1, z2, z1 + z2}, one);
  CHECK(!degenerate.ok());
  CHECK(entry(degenerate, "no_zeros_even_at_infinity").witness.find("full-dimensional") !=
        std::string::npos);
}

TEST_CASE("macaulay plan respects an e override upward") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  const std::vector<SparsePolynomial> fs = {z1, z2, one - z1 - z2};
  const auto plan = plan_macaulay(fs, one, 5);
  CHECK(plan.ok());
  CHECK(plan.e == 5);
  CHECK(*plan.bound == Polytope::simplex(2, 5));
  const auto bad = plan_macaulay(fs, make(2, {{{5, 0}, 1}}), 2);
  CHECK(!bad.ok());
}

TEST_CASE("noether plan on the hyperbola-line system") {
  const auto f1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  const auto f2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto phi = make(2, {{{2, 2}, 1}, {{0, 0}, -1}});
  const auto plan = plan_noether({f1, f2}, phi, unit_square());
  CHECK(plan.ok());
  check_names_unique(plan);
  for (const auto* name : {"polytope_smooth", "contains_origin", "contains_supports",
                           "contains_coordinates", "no_zeros_at_infinity", "target_in_ideal"}) {
    CHECK(entry(plan, name).status == HypothesisStatus::pass);
  }
  CHECK(plan.e == 2);
  REQUIRE(plan.escalation.has_value());
  CHECK(plan.escalation->first == 2);
  CHECK(plan.escalation->second == 11);  // max(n+1, e) + 8
  REQUIRE(plan.bound.has_value());
  CHECK(*plan.bound == dilate(unit_square(), 2));
}

TEST_CASE("noether smoothness gate names the bad vertex") {
  const auto f = SparsePolynomial::variable(2, 0);
  const auto bad_p =
      Polytope::hull(std::vector<LatticePoint>{lp({0, 0}), lp({2, 0}), lp({0, 1})});
  const auto plan = plan_noether({f}, f, bad_p);
  CHECK(!plan.ok());
  const auto& h = entry(plan, "polytope_smooth");
  CHECK(h.status == HypothesisStatus::fail);
  CHECK(h.witness.find("(0,1)") != std::string::npos);
}

TEST_CASE("noether membership gate") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  // z2 is not in <z1>; everything else about the setup is fine.
  const auto plan = plan_noether({z1}, z2, unit_square());
  CHECK(!plan.ok());
  CHECK(entry(plan, "target_in_ideal").status == HypothesisStatus::fail);
}

TEST_CASE("briancon-skoda plan on the monomial pair") {
  const auto f1 = make(2, {{{2, 0}, 1}});
  const auto f2 = make(2, {{{0, 2}, 1}});
  const auto phi = make(2, {{{1, 1}, 1}});
  const auto p = Polytope::simplex(2, 2);
  const auto plan = plan_briancon_skoda({f1, f2}, phi, p, true);
  CHECK(plan.ok());
  check_names_unique(plan);
  CHECK(plan.e == 1);
  CHECK(plan.power == 2);  // nu = n
  REQUIRE(plan.bound.has_value());
  CHECK(*plan.bound == Polytope::simplex(2, 6));  // max(3, 2*1) * 2simplex
}

TEST_CASE("briancon-skoda derives integral closure when no affine zeros exist") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  const std::vector<SparsePolynomial> fs = {z1, z2, one - z1 - z2};
  const auto plan = plan_briancon_skoda(fs, one, Polytope::simplex(2, 1), false);
  CHECK(entry(plan, "integral_closure").status == HypothesisStatus::pass);
  CHECK(plan.ok());
}

TEST_CASE("briancon-skoda without the assertion is unverifiable, not violated") {
  const auto f1 = make(2, {{{2, 0}, 1}});
  const auto f2 = make(2, {{{0, 2}, 1}});
  const auto phi = make(2, {{{1, 1}, 1}});
  const auto plan = plan_briancon_skoda({f1, f2}, phi, Polytope::simplex(2, 2), false);
  CHECK(!plan.ok());
  CHECK(entry(plan, "integral_closure").status == HypothesisStatus::unverifiable);
  CHECK(!plan.bound.has_value());
}

TEST_CASE("briancon-skoda origin gate") {
  const auto f = make(2, {{{1, 1}, 1}});
  const auto shifted =
      Polytope::hull(std::vector<LatticePoint>{lp({1, 0}), lp({2, 0}), lp({1, 1}), lp({2, 1})});
  const auto plan = plan_briancon_skoda({f}, f, shifted, true);
  CHECK(!plan.ok());
  CHECK(entry(plan, "contains_origin").status == HypothesisStatus::fail);
  CHECK(entry(plan, "contains_origin").witness.find("origin") != std::string::npos);
}

TEST_CASE("dense specialization reads as the classical degree bound") {
  // With P = d*simplex the bound degree is max((n+1)d, n*deg phi).
  const auto f1 = make(2, {{{2, 0}, 1}, {{0, 0}, 1}});   // z1^2 + 1
  const auto f2 = make(2, {{{0, 2}, 1}, {{0, 0}, 1}});   // z2^2 + 1
  const auto f3 = make(2, {{{1, 1}, 1}, {{0, 0}, 3}});   // z1 z2 + 3
  const auto phi = make(2, {{{1, 0}, 1}});
  const auto p = Polytope::simplex(2, 2);
  const auto plan = plan_briancon_skoda({f1, f2, f3}, phi, p, true);
  CHECK(plan.ok());
  REQUIRE(plan.bound.has_value());
  // e = 1, so the bound is max(3, 2)*2*simplex = 6*simplex: degree 6 = (n+1)d.
  CHECK(*plan.bound == Polytope::simplex(2, 6));
}

TEST_CASE("tuitman plan with the sum polytope always passes the summand check") {
  Rng rng(161616);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<Polytope> pj;
    std::vector<SparsePolynomial> fs;
    const int m = 2 + static_cast<int>(rng.uniform(0, 1));
    for (int j = 0; j < m; ++j) {
      std::vector<LatticePoint> pts;
      const int k = 2 + static_cast<int>(rng.uniform(0, 2));
      for (int i = 0; i < k; ++i) pts.push_back(lp({rng.uniform(0, 2), rng.uniform(0, 2)}));
      pts.push_back(lp({0, 0}));
      pj.push_back(Polytope::hull(pts));
      fs.push_back(random_nonzero_poly(rng, 2, lattice_points(pj.back())));
    }
    Polytope p = pj[0];
    for (int j = 1; j < m; ++j) p = minkowski_sum(p, pj[j]);
    if (!p.full_dimensional()) continue;
    const auto phi = SparsePolynomial::constant(2, 1);
    const auto plan = plan_tuitman(fs, pj, p, phi);
    check_names_unique(plan);
    CHECK(entry(plan, "summand_condition").status == HypothesisStatus::pass);
  }
}

TEST_CASE("tuitman recovers the macaulay bound when every polytope is the newton polytope") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);
  const std::vector<SparsePolynomial> fs = {z1, z2, one - z1 - z2};
  const auto np = newton_polytope(fs);
  const auto macaulay = plan_macaulay(fs, one);
  REQUIRE(macaulay.ok());
  const std::vector<Polytope> pj(fs.size(), np);
  const auto plan = plan_tuitman(fs, pj, *macaulay.bound, one);
  CHECK(plan.ok());
  REQUIRE(plan.bound.has_value());
  CHECK(*plan.bound == *macaulay.bound);
}

TEST_CASE("tuitman summand failure names the subset") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  // P_1 = simplex, P = unit square: the simplex is not a summand of the square.
  const auto plan = plan_tuitman({z1 + z2, z1}, {Polytope::simplex(2, 1), unit_square()},
                                 unit_square(), SparsePolynomial::constant(2, 1));
  CHECK(!plan.ok());
  const auto& h = entry(plan, "summand_condition");
  CHECK(h.status == HypothesisStatus::fail);
  CHECK(h.witness.find("{1}") != std::string::npos);
}

TEST_CASE("plans that pass lead to certificates at the planned bound") {
  const auto z1 = SparsePolynomial::variable(2, 0);
  const auto z2 = SparsePolynomial::variable(2, 1);
  const auto one = SparsePolynomial::constant(2, 1);

  const std::vector<SparsePolynomial> macaulay_fs = {z1, z2, one - z1 - z2};
  const auto mp = plan_macaulay(macaulay_fs, one);
  REQUIRE(mp.ok());
  const auto mc = solve_membership(macaulay_fs, one, mp.power, *mp.bound, mp.tag);
  REQUIRE(mc.has_value());
  CHECK(verify_certificate(*mc, macaulay_fs, one).ok);

  const auto f1 = make(2, {{{2, 0}, 1}});
  const auto f2 = make(2, {{{0, 2}, 1}});
  const auto phi = make(2, {{{1, 1}, 1}});
  const auto bp = plan_briancon_skoda({f1, f2}, phi, Polytope::simplex(2, 2), true);
  REQUIRE(bp.ok());
  const auto bc = solve_membership({f1, f2}, phi, bp.power, *bp.bound, bp.tag);
  REQUIRE(bc.has_value());
  CHECK(verify_certificate(*bc, {f1, f2}, phi).ok);

  const auto g1 = make(2, {{{1, 1}, 1}, {{0, 0}, -1}});
  const auto g2 = make(2, {{{1, 0}, 1}, {{0, 1}, -1}});
  const auto target = make(2, {{{2, 2}, 1}, {{0, 0}, -1}});
  const auto np = plan_noether({g1, g2}, target, unit_square());
  REQUIRE(np.ok());
  const auto esc = escalate_solve({g1, g2}, target, np.power, unit_square(),
                                  np.escalation->first, np.escalation->second, np.tag);
  REQUIRE(esc.has_value());
  CHECK(esc->c == 2);
  CHECK(verify_certificate(esc->certificate, {g1, g2}, target).ok);
}

TEST_CASE("the macaulay pipeline works in three variables") {
  const auto z1 = SparsePolynomial::variable(3, 0);
  const auto z2 = SparsePolynomial::variable(3, 1);
  const auto z3 = SparsePolynomial::variable(3, 2);
  const auto one = SparsePolynomial::constant(3, 1);
  const std::vector<SparsePolynomial> fs = {z1, z2, z3, one - z1 - z2 - z3};
  const auto plan = plan_macaulay(fs, one);
  REQUIRE(plan.ok());
  CHECK(plan.e == 1);
  CHECK(*plan.bound == Polytope::simplex(3, 4));  // max(n+1, e) = 4
  const auto cert = solve_membership(fs, one, plan.power, *plan.bound, plan.tag);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(*cert, fs, one).ok);
  CHECK(ideal_member(one, fs));
}

TEST_CASE("classical reference numbers") {
  const auto a = classical_reference(2, 3, 3, 1);
  CHECK(a.kollar_nu_bound == 8);  // d^min(m,n) = 2^3
  CHECK(a.kollar_degree == 16);   // (1 + 1) * 8
  CHECK(!a.sombra_applies);       // m < n+1

  const auto b = classical_reference(3, 2, 2, 1);
  CHECK(b.macaulay_degree == 7);  // (n+1)d - n = 9 - 2

  const auto c = classical_reference(2, 2, 4, 1);
  CHECK(c.sombra_applies);
  CHECK(c.sombra_factor == 8);  // 2^(n+1)

  CHECK(classical_reference(2, 3, 5, 2).briancon_skoda_nu == 3);  // min(m,n)
  CHECK(classical_reference(2, 3, 5, 2).noether_degree == 2);
  CHECK_THROWS_AS(classical_reference(0, 1, 1, 1), ContractError);
}

TEST_CASE("sparse dense gap is exactly n when e stays small") {
  // Dense systems on d*simplex: bound degree max(n+1,e)*d, classical
  // (n+1)d - n; for e <= n+1 the gap is exactly n.
  for (std::int64_t n : {2, 3}) {
    for (std::int64_t d : {1, 2, 3}) {
      for (std::int64_t e : std::vector<std::int64_t>{1, n, n + 1}) {
        const auto sparse_degree = std::max(n + 1, e) * d;
        const auto classical = (n + 1) * d - n;
        CHECK(sparse_degree - classical == n);
      }
    }
  }
}

TEST_CASE("default escalation ceiling") {
  CHECK(default_c_max(2, 1) == 11);
  CHECK(default_c_max(2, 7) == 15);
}
