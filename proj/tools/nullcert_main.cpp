// Command-line front end: hypothesis checks, bound plans, certificate
// search and verification, oracle queries, and polytope utilities over
// JSON system files.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nullcert/bounds.hpp"
#include "nullcert/groebner.hpp"
#include "nullcert/io.hpp"

using namespace nullcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitNegative = 3;

std::string render_exponent(const LatticePoint& e, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string render_poly(const SparsePolynomial& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    const std::string mono = render_exponent(e, vars);
    std::string coeff = rational_to_string(c >= 0 ? c : Rational(-c));
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += mono;
    }
  }
  return out;
}

std::string render_vertices(const Polytope& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) {
    if (i) out += ", ";
    out += "(";
    const auto& v = p.vertices()[i];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j) out += ",";
      out += rational_to_string(v[j]);
    }
    out += ")";
  }
  return out + "]";
}

void print_hypotheses(const TheoremPlan& plan) {
  for (const auto& h : plan.hypotheses) {
    std::string status;
    switch (h.status) {
      case HypothesisStatus::pass: status = "pass"; break;
      case HypothesisStatus::fail: status = "FAIL"; break;
      case HypothesisStatus::unverifiable: status = "UNVERIFIABLE"; break;
    }
    std::cout << "  hypothesis " << h.name << ": " << status;
    if (!h.witness.empty()) std::cout << "  [" << h.witness << "]";
    std::cout << "\n";
  }
}

SparsePolynomial require_target(const SystemFile& sys) {
  if (!sys.target) throw ParseError("this command needs a 'target' polynomial in the file");
  return *sys.target;
}

Polytope named_polytope(const SystemFile& sys, const std::string& name) {
  const auto it = sys.polytopes.find(name);
  if (it == sys.polytopes.end())
    throw ParseError("no polytope named '" + name + "' in the system file");
  return it->second;
}

// Default placements when --polytope is not given: the Newton polytope, plus
// the origin for the escalating theorems, plus the coordinate points where
// the theorem asks for them.
Polytope default_polytope(const SystemFile& sys, TheoremTag tag) {
  std::vector<LatticePoint> pts;
  for (const auto& f : sys.generators) {
    for (const auto& e : f.support()) pts.push_back(e);
  }
  if (pts.empty()) throw DegenerateInputError("all generators are zero");
  const int n = sys.dim();
  if (tag == TheoremTag::noether || tag == TheoremTag::briancon_skoda) {
    pts.push_back(LatticePoint(n, 0));
  }
  if (tag == TheoremTag::noether) {
    for (int i = 0; i < n; ++i) {
      LatticePoint ei(n, 0);
      ei[i] = 1;
      pts.push_back(std::move(ei));
    }
  }
  return Polytope::hull(pts);
}

struct CheckOptions {
  std::string system_path;
  std::string mode = "anywhere";
  std::string polytope_name;
  std::string out_path;
  bool parse_infix = false;
};

int cmd_check(const CheckOptions& opt) {
  const auto sys = load_system_file(opt.system_path, opt.parse_infix);
  const Polytope p = opt.polytope_name.empty() ? newton_polytope(sys.generators)
                                               : named_polytope(sys, opt.polytope_name);
  InfinityVerdict verdict;
  if (opt.mode == "infinity") {
    verdict = no_zeros_at_infinity(sys.generators, p);
  } else if (opt.mode == "anywhere") {
    verdict = no_zeros_anywhere(sys.generators, p);
  } else {
    throw ParseError("mode must be 'infinity' or 'anywhere'");
  }
  if (!opt.out_path.empty()) write_json_file(opt.out_path, verdict_to_json(verdict));
  if (verdict.ok) {
    std::cout << "ok: no common zeros in the " << opt.mode << " sweep of "
              << render_vertices(p) << "\n";
    return kExitOk;
  }
  std::cout << "not ok: witness face with vertices [";
  for (std::size_t i = 0; i < verdict.witness_face_vertices.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << "(";
    for (std::size_t j = 0; j < verdict.witness_face_vertices[i].size(); ++j) {
      if (j) std::cout << ",";
      std::cout << rational_to_string(verdict.witness_face_vertices[i][j]);
    }
    std::cout << ")";
  }
  std::cout << "]\n";
  std::cout << "facial system:";
  for (const auto& g : verdict.witness_system)
    std::cout << "  " << render_poly(g, sys.variables);
  std::cout << "\n";
  return kExitNegative;
}

struct SolveOptions {
  std::string system_path;
  std::string theorem;
  std::string polytope_name;
  std::string out_path;
  std::int64_t e_override = -1;
  std::int64_t c_max = -1;
  std::int64_t nu = 1;
  bool assert_integral_closure = false;
  bool parse_infix = false;
};

int finish_solve(const SystemFile& sys, const std::vector<SparsePolynomial>& fs,
                 const SparsePolynomial& phi, const std::optional<Certificate>& cert,
                 std::optional<std::int64_t> c, const Polytope& attempted_bound,
                 const SolveOptions& opt,
                 std::chrono::steady_clock::time_point started) {
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  if (!cert) {
    std::cout << "no certificate found up to the bound " << render_vertices(attempted_bound)
              << " (" << elapsed << " ms)\n";
    std::cout << "absence at this bound proves nothing about membership itself\n";
    return kExitNegative;
  }
  const auto check = verify_certificate(*cert, fs, phi);
  if (!check.ok) throw ContractError("internal: certificate failed re-verification");
  const auto shape = membership_system_shape(fs, cert->bound);
  std::cout << "bound: " << render_vertices(cert->bound) << "\n";
  std::cout << "nu: " << cert->power << "\n";
  if (c) std::cout << "c: " << *c << "\n";
  std::cout << "matrix: " << shape.rows << " x " << shape.cols << "\n";
  std::cout << "time: " << elapsed << " ms\n";
  for (std::size_t j = 0; j < cert->cofactors.size(); ++j) {
    std::cout << "G" << (j + 1) << " = " << render_poly(cert->cofactors[j], sys.variables)
              << "\n";
  }
  if (!opt.out_path.empty()) {
    write_json_file(opt.out_path, certificate_to_json(*cert));
    std::cout << "certificate written to " << opt.out_path << "\n";
  }
  return kExitOk;
}

int cmd_solve(const SolveOptions& opt) {
  const auto started = std::chrono::steady_clock::now();
  const auto sys = load_system_file(opt.system_path, opt.parse_infix);
  const auto tag = theorem_tag_from_name(opt.theorem);
  const auto phi = require_target(sys);
  const auto& fs = sys.generators;
  std::optional<std::int64_t> e_override;
  if (opt.e_override >= 0) e_override = opt.e_override;

  if (tag == TheoremTag::custom) {
    if (opt.polytope_name.empty())
      throw ParseError("--theorem custom needs --polytope NAME for the bound shape");
    const auto p = named_polytope(sys, opt.polytope_name);
    const auto target = pow(phi, opt.nu);
    const auto c_start_opt = min_integer_dilation(p, target.support());
    if (!c_start_opt)
      throw HypothesisError("no integer dilation of the polytope contains the target support");
    const std::int64_t c_start = *c_start_opt;
    const std::int64_t c_max = opt.c_max > 0 ? opt.c_max : c_start + 8;
    if (c_max < c_start)
      throw ParseError("--cmax is below the smallest dilation containing the target");
    std::cout << "theorem: custom (no hypothesis gate; bounded search)\n";
    std::cout << "e: " << c_start << "\n";
    const auto result = escalate_solve(fs, phi, opt.nu, p, c_start, c_max, tag);
    if (!result) {
      return finish_solve(sys, fs, phi, std::nullopt, std::nullopt, dilate(p, c_max), opt,
                          started);
    }
    return finish_solve(sys, fs, phi, result->certificate, result->c, result->certificate.bound,
                        opt, started);
  }

  TheoremPlan plan;
  Polytope p;
  if (tag == TheoremTag::macaulay) {
    plan = plan_macaulay(fs, phi, e_override);
  } else if (tag == TheoremTag::noether) {
    p = opt.polytope_name.empty() ? default_polytope(sys, tag)
                                  : named_polytope(sys, opt.polytope_name);
    std::optional<std::int64_t> c_max;
    if (opt.c_max > 0) c_max = opt.c_max;
    plan = plan_noether(fs, phi, p, e_override, c_max);
  } else if (tag == TheoremTag::briancon_skoda) {
    p = opt.polytope_name.empty() ? default_polytope(sys, tag)
                                  : named_polytope(sys, opt.polytope_name);
    plan = plan_briancon_skoda(fs, phi, p, opt.assert_integral_closure, e_override);
  } else {  // tuitman
    std::vector<Polytope> pj;
    bool named = true;
    for (std::size_t j = 0; j < fs.size() && named; ++j)
      named = sys.polytopes.count("P" + std::to_string(j + 1)) > 0;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      pj.push_back(named ? named_polytope(sys, "P" + std::to_string(j + 1))
                         : newton_polytope(fs[j]));
    }
    if (opt.polytope_name.empty()) {
      p = pj[0];
      for (std::size_t j = 1; j < pj.size(); ++j) p = minkowski_sum(p, pj[j]);
    } else {
      p = named_polytope(sys, opt.polytope_name);
    }
    plan = plan_tuitman(fs, pj, p, phi);
  }

  std::cout << "theorem: " << theorem_tag_name(tag) << "\n";
  print_hypotheses(plan);
  if (!plan.ok()) {
    const auto* failed = plan.first_failure();
    std::cout << "hypotheses not satisfied: " << failed->name;
    if (!failed->witness.empty()) std::cout << " [" << failed->witness << "]";
    std::cout << "\n";
    if (!opt.out_path.empty()) write_json_file(opt.out_path, plan_to_json(plan));
    return kExitHypothesis;
  }
  std::cout << "e: " << plan.e << "\n";

  if (plan.escalation) {
    const auto [c_start, c_max] = *plan.escalation;
    std::cout << "escalation: c from " << c_start << " to " << c_max << "\n";
    const auto result = escalate_solve(fs, phi, plan.power, p, c_start, c_max, tag);
    if (!result) {
      return finish_solve(sys, fs, phi, std::nullopt, std::nullopt, dilate(p, c_max), opt,
                          started);
    }
    return finish_solve(sys, fs, phi, result->certificate, result->c, result->certificate.bound,
                        opt, started);
  }
  const auto cert = solve_membership(fs, phi, plan.power, *plan.bound, tag);
  return finish_solve(sys, fs, phi, cert, std::nullopt, *plan.bound, opt, started);
}

int cmd_verify(const std::string& system_path, const std::string& cert_path, bool parse_infix) {
  const auto sys = load_system_file(system_path, parse_infix);
  const auto cert = certificate_from_json(load_json_file(cert_path));
  const auto phi = require_target(sys);
  const auto result = verify_certificate(cert, sys.generators, phi);
  if (result.ok) {
    std::cout << "certificate verified: sum F_j G_j = target^" << cert.power
              << " with supports inside " << render_vertices(cert.bound) << "\n";
    return kExitOk;
  }
  std::cout << "certificate REJECTED: " << result.reason << "\n";
  return kExitNegative;
}

int cmd_compare(const std::string& system_path, bool parse_infix) {
  const auto sys = load_system_file(system_path, parse_infix);
  const auto phi = sys.target ? *sys.target : SparsePolynomial::constant(sys.dim(), Rational(1));
  const std::int64_t n = sys.dim();
  const std::int64_t m = static_cast<std::int64_t>(sys.generators.size());
  std::int64_t d = 1;
  for (const auto& f : sys.generators) d = std::max(d, f.total_degree());
  const std::int64_t deg_phi = phi.total_degree();

  const auto np = newton_polytope(sys.generators);
  if (!np.full_dimensional())
    throw HypothesisError("the Newton polytope is not full-dimensional; no sparse bound");
  const auto e = min_integer_dilation(np, phi.support());
  if (!e) throw HypothesisError("no integer dilation of the Newton polytope holds the target");

  const auto ref = classical_reference(d, n, m, deg_phi);
  const auto sparse_bound = dilate(np, std::max(n + 1, *e));
  const auto sparse_points = lattice_points(sparse_bound).size();
  const auto dense_simplex = Polytope::simplex(static_cast<int>(n), d);
  const auto e_dense = min_integer_dilation(dense_simplex, phi.support());
  const auto dense_bound = dilate(dense_simplex, std::max(n + 1, e_dense.value_or(1)));
  const auto dense_points = lattice_points(dense_bound).size();

  std::cout << "variables n:                  " << n << "\n";
  std::cout << "generators m:                 " << m << "\n";
  std::cout << "dense degree d:               " << d << "\n";
  std::cout << "deg target:                   " << deg_phi << "\n";
  std::cout << "Kollar nu bound d^min(m,n):   " << ref.kollar_nu_bound.get_str() << "\n";
  std::cout << "Kollar deg (1+degPhi)*d^min:  " << ref.kollar_degree.get_str() << "\n";
  std::cout << "Macaulay deg (n+1)d-n:        " << ref.macaulay_degree.get_str() << "\n";
  std::cout << "Sombra factor 2^(n+1):        " << ref.sombra_factor.get_str()
            << (ref.sombra_applies ? "  (applies: d = 2, m >= n+1)" : "  (not applicable)")
            << "\n";
  std::cout << "Briancon-Skoda nu min(m,n):   " << ref.briancon_skoda_nu << "\n";
  std::cout << "Max Noether deg:              " << ref.noether_degree << "\n";
  std::cout << "sparse bound max(n+1,e)*NP:   e = " << *e << ", vertices "
            << render_vertices(sparse_bound) << "\n";
  std::cout << "sparse bound lattice points:  " << sparse_points << "\n";
  std::cout << "dense bound lattice points:   " << dense_points << "\n";
  const Rational ratio = make_rational(static_cast<std::int64_t>(sparse_points),
                                       static_cast<std::int64_t>(dense_points));
  std::cout << "monomial-space ratio:         " << rational_to_string(ratio) << " ~ "
            << ratio.get_d() << "\n";
  return kExitOk;
}

int cmd_oracle(const std::string& system_path, const std::string& query, bool parse_infix) {
  const auto sys = load_system_file(system_path, parse_infix);
  std::vector<SparsePolynomial> gens;
  for (const auto& f : sys.generators) {
    if (!f.is_zero()) gens.push_back(f);
  }
  bool verdict = false;
  if (query == "member") {
    if (gens.empty()) throw DegenerateInputError("all generators are zero");
    verdict = ideal_member(require_target(sys), gens);
  } else if (query == "radical") {
    if (gens.empty()) throw DegenerateInputError("all generators are zero");
    verdict = radical_member(require_target(sys), gens);
  } else if (query == "torus") {
    verdict = has_common_zero_torus(sys.generators);
  } else if (query == "affine") {
    if (gens.empty()) throw DegenerateInputError("all generators are zero");
    verdict = has_common_zero_affine(gens);
  } else {
    throw ParseError("oracle query must be one of member|radical|torus|affine");
  }
  std::cout << query << ": " << (verdict ? "true" : "false") << "\n";
  return verdict ? kExitOk : kExitNegative;
}

int cmd_polytope(const std::string& op, const std::vector<std::string>& files,
                 const std::string& out_path) {
  auto load = [](const std::string& path) { return polytope_from_json(load_json_file(path)); };
  auto emit = [&](const Polytope& p) {
    std::cout << render_vertices(p) << "\n";
    if (!out_path.empty()) write_json_file(out_path, polytope_to_json(p));
    return kExitOk;
  };
  if (op == "hull" || op == "smooth" || op == "points") {
    if (files.size() != 1) throw ParseError("polytope " + op + " takes one file");
    const auto p = load(files[0]);
    if (op == "hull") return emit(p);
    if (op == "smooth") {
      const bool smooth = is_smooth(p);
      std::cout << (smooth ? "smooth" : "not smooth") << "\n";
      return smooth ? kExitOk : kExitNegative;
    }
    const auto pts = lattice_points(p);
    std::cout << pts.size() << " lattice points\n";
    if (!out_path.empty()) {
      json arr = json::array();
      for (const auto& q : pts) arr.push_back(q);
      write_json_file(out_path, arr);
    }
    return kExitOk;
  }
  if (files.size() != 2) throw ParseError("polytope " + op + " takes two files");
  const auto a = load(files[0]);
  const auto b = load(files[1]);
  if (op == "sum") return emit(minkowski_sum(a, b));
  if (op == "diff") {
    const auto erosion = minkowski_diff(a, b);
    if (!erosion) {
      std::cout << "empty\n";
      return kExitNegative;
    }
    return emit(*erosion);
  }
  if (op == "summand") {
    const bool yes = is_summand(a, b);
    std::cout << (yes ? "summand" : "not a summand") << "\n";
    return yes ? kExitOk : kExitNegative;
  }
  throw ParseError("polytope op must be one of hull|sum|diff|summand|smooth|points");
}

int cmd_probe(const std::string& polytope_path, int count, std::uint64_t seed,
              const std::string& out_path) {
  const auto p = polytope_from_json(load_json_file(polytope_path));
  const auto probes = genericity_probe(p, count, seed);
  std::vector<std::string> vars;
  for (int i = 0; i < p.ambient_dim(); ++i) vars.push_back("z" + std::to_string(i + 1));
  for (const auto& f : probes) std::cout << render_poly(f, vars) << "\n";
  if (!out_path.empty()) {
    json arr = json::array();
    for (const auto& f : probes) arr.push_back(poly_to_json(f));
    write_json_file(out_path, json{{"polynomials", arr}});
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact support-bounded ideal membership certificates"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check = app.add_subcommand("check", "run a common-zero sweep over a polytope's faces");
  check->add_option("system", check_opt.system_path, "system JSON file")->required();
  check->add_option("--mode", check_opt.mode, "infinity|anywhere")
      ->check(CLI::IsMember({"infinity", "anywhere"}));
  check->add_option("--polytope", check_opt.polytope_name, "named polytope (default: NP)");
  check->add_option("--out", check_opt.out_path, "write the verdict JSON here");
  check->add_flag("--parse-infix", check_opt.parse_infix, "accept infix polynomial strings");

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "plan a bound and search for a certificate");
  solve->add_option("system", solve_opt.system_path, "system JSON file")->required();
  solve
      ->add_option("--theorem", solve_opt.theorem,
                   "macaulay|noether|briancon-skoda|tuitman|custom")
      ->required()
      ->check(CLI::IsMember({"macaulay", "noether", "briancon-skoda", "tuitman", "custom"}));
  solve->add_option("--polytope", solve_opt.polytope_name, "named polytope for P");
  solve->add_option("--e-override", solve_opt.e_override, "raise e above the computed minimum");
  solve->add_option("--cmax", solve_opt.c_max, "escalation ceiling");
  solve->add_option("--nu", solve_opt.nu, "target power for custom mode (default 1)");
  solve->add_flag("--assert-integral-closure", solve_opt.assert_integral_closure,
                  "vouch for the integral-closure hypothesis");
  solve->add_option("--out", solve_opt.out_path, "write the certificate JSON here");
  solve->add_flag("--parse-infix", solve_opt.parse_infix, "accept infix polynomial strings");

  std::string verify_system, verify_cert;
  bool verify_infix = false;
  auto* verify = app.add_subcommand("verify", "re-check a certificate against a system");
  verify->add_option("system", verify_system, "system JSON file")->required();
  verify->add_option("certificate", verify_cert, "certificate JSON file")->required();
  verify->add_flag("--parse-infix", verify_infix, "accept infix polynomial strings");

  std::string compare_system;
  bool compare_infix = false;
  auto* compare = app.add_subcommand("compare", "classical versus sparse bound table");
  compare->add_option("system", compare_system, "system JSON file")->required();
  compare->add_flag("--parse-infix", compare_infix, "accept infix polynomial strings");

  std::string oracle_system, oracle_query;
  bool oracle_infix = false;
  auto* oracle = app.add_subcommand("oracle", "Groebner-basis ground truth queries");
  oracle->add_option("system", oracle_system, "system JSON file")->required();
  oracle->add_option("query", oracle_query, "member|radical|torus|affine")->required();
  oracle->add_flag("--parse-infix", oracle_infix, "accept infix polynomial strings");

  std::string polytope_op, polytope_out;
  std::vector<std::string> polytope_files;
  auto* polytope = app.add_subcommand("polytope", "polytope algebra on JSON files");
  polytope->add_option("op", polytope_op, "hull|sum|diff|summand|smooth|points")->required();
  polytope->add_option("files", polytope_files, "polytope JSON file(s)")->required();
  polytope->add_option("--out", polytope_out, "write the result JSON here");

  std::string probe_polytope, probe_out;
  int probe_count = 1;
  std::uint64_t probe_seed = 0;
  auto* probe = app.add_subcommand("probe", "sample dense systems on a polytope");
  probe->add_option("polytope", probe_polytope, "polytope JSON file")->required();
  probe->add_option("-m,--count", probe_count, "number of polynomials");
  probe->add_option("--seed", probe_seed, "sampling seed")->required();
  probe->add_option("--out", probe_out, "write the polynomials JSON here");

  try {
    app.parse(argc, argv);
    if (*check) return cmd_check(check_opt);
    if (*solve) return cmd_solve(solve_opt);
    if (*verify) return cmd_verify(verify_system, verify_cert, verify_infix);
    if (*compare) return cmd_compare(compare_system, compare_infix);
    if (*oracle) return cmd_oracle(oracle_system, oracle_query, oracle_infix);
    if (*polytope) return cmd_polytope(polytope_op, polytope_files, polytope_out);
    if (*probe) return cmd_probe(probe_polytope, probe_count, probe_seed, probe_out);
    return kExitParse;
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitParse;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kExitParse;
  } catch (const HypothesisError& err) {
    std::cerr << "hypothesis violation: " << err.what() << "\n";
    return kExitHypothesis;
  } catch (const DegenerateInputError& err) {
    std::cerr << "degenerate input: " << err.what() << "\n";
    return kExitHypothesis;
  } catch (const ContractError& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitParse;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitParse;
  }
}
