// compalg: command-line front end for the composition-algebra library.
//
// Exit codes: 0 success, 1 invalid input (error object on stderr),
// 2 a verification harness found a violated property.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "compalg/budget.hpp"
#include "compalg/clifford.hpp"
#include "compalg/crank.hpp"
#include "compalg/io.hpp"
#include "compalg/localization.hpp"
#include "compalg/poincare.hpp"
#include "compalg/weyl.hpp"

using namespace compalg;
using io::json;

namespace {

constexpr std::int64_t kDefaultBudgetMs = 120000;

struct Output {
  json payload;
  std::optional<std::string> text;
  std::optional<std::string> latex;
  bool violated = false;
};

struct Globals {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::optional<std::int64_t> budget_ms;

  [[nodiscard]] Budget budget() const {
    if (budget_ms) return *budget_ms > 0 ? Budget(std::chrono::milliseconds(*budget_ms))
                                         : Budget::unlimited();
    return Budget::from_env(kDefaultBudgetMs);
  }
};

/// Inline JSON when the argument starts with '{' or '[', otherwise a path.
json load_json(const std::string& arg) {
  std::size_t i = arg.find_first_not_of(" \t\n");
  try {
    if (i != std::string::npos && (arg[i] == '{' || arg[i] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    require(in.good(), Errc::ParseError, "cannot open '" + arg + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(Errc::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

struct AlgebraFlags {
  std::string field = "Q";
  std::string a = "-1";
  std::string b = "-1";
  bool split = false;
  std::string algebra_json;

  void attach(CLI::App* cmd) {
    cmd->add_option("--field", field, "Base field: Q or Fp:p");
    cmd->add_option("--a", a, "Parameter a");
    cmd->add_option("--b", b, "Parameter b");
    cmd->add_flag("--split", split, "Use the matrix algebra Mat(2,k)");
    cmd->add_option("--algebra", algebra_json, "Algebra as JSON");
  }

  [[nodiscard]] Algebra build() const {
    if (!algebra_json.empty()) return io::algebra_from_json(load_json(algebra_json));
    Field k = io::parse_field(field);
    if (split) return QuatAlgebra::split_matrix(k);
    return QuatAlgebra::make(k, io::scalar_from_json(a, k), io::scalar_from_json(b, k));
  }
};

Output poly_output(const UniPoly& p) {
  return {io::to_json(p), p.to_text(), p.to_latex()};
}

std::string latex_matrix(const FieldMatrix& m) {
  std::ostringstream os;
  os << "\\left[\\begin{array}{" << std::string(m.cols(), 'c') << "}\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " & " : "  ") << m(i, j).to_string();
    os << " \\\\\n";
  }
  os << "\\end{array}\\right]";
  return os.str();
}

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help,
               std::function<Output()>& slot, std::function<Output()> fn) {
  CLI::App* cmd = parent->add_subcommand(name, help);
  cmd->callback([&slot, fn = std::move(fn)] { slot = fn; });
  return cmd;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with composition algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output", g.format, "json, text or latex")
      ->check(CLI::IsMember({"json", "text", "latex"}));
  app.add_option("--seed", g.seed, "Seed for sampled harnesses");
  app.add_option("--budget-ms", g.budget_ms, "Wall-clock budget in ms (0 = unlimited)");

  std::function<Output()> run;

  // ---- quat -------------------------------------------------------------
  CLI::App* quat = app.add_subcommand("quat", "Quaternion algebra elements");
  quat->require_subcommand(1);
  static AlgebraFlags qa;
  static std::string qx = "[0,0,0,0]", qy = "[0,0,0,0]";
  auto quat_leaf = [&](const std::string& name, const std::string& help, bool two,
                       std::function<Output(const Algebra&, const QuaternionElement&,
                                            const QuaternionElement&)> fn) {
    CLI::App* c = leaf(quat, name, help, run, [fn] {
      Algebra alg = qa.build();
      QuaternionElement x = io::element_from_json(load_json(qx), alg);
      QuaternionElement y = io::element_from_json(load_json(qy), alg);
      return fn(alg, x, y);
    });
    qa.attach(c);
    c->add_option("--x", qx, "Element as a JSON array of 4 coefficients")->required();
    if (two) c->add_option("--y", qy, "Second element")->required();
  };
  quat_leaf("mul", "Product x*y with norms", true, [](auto&, auto& x, auto& y) {
    QuaternionElement p = x * y;
    json j{{"product", io::to_json(p)},
           {"norm_x", io::to_json(norm(x))},
           {"norm_y", io::to_json(norm(y))},
           {"norm_product", io::to_json(norm(p))}};
    return Output{j, p.to_string(), std::nullopt};
  });
  quat_leaf("norm", "Reduced norm", false, [](auto&, auto& x, auto&) {
    Scalar n = norm(x);
    return Output{{{"norm", io::to_json(n)}}, n.to_string(), std::nullopt};
  });
  quat_leaf("conj", "Conjugate", false, [](auto&, auto& x, auto&) {
    QuaternionElement c = conjugate(x);
    return Output{{{"conjugate", io::to_json(c)}}, c.to_string(), std::nullopt};
  });
  quat_leaf("inverse", "Inverse (NotInvertible for zero divisors)", false,
            [](auto&, auto& x, auto&) {
              QuaternionElement c = quat_inverse(x);
              return Output{{{"inverse", io::to_json(c)}}, c.to_string(), std::nullopt};
            });
  {
    CLI::App* c = leaf(quat, "split", "Decide splitness and give a zero divisor", run, [] {
      Algebra alg = qa.build();
      Splitness s = is_split(alg);
      auto zd = find_zero_divisor(alg);
      json j{{"algebra", io::to_json(alg)},
             {"splitness", to_string(s)},
             {"zero_divisor", zd ? io::to_json(*zd) : json()}};
      return Output{j, to_string(s), std::nullopt};
    });
    qa.attach(c);
  }

  // ---- mat --------------------------------------------------------------
  CLI::App* mat = app.add_subcommand("mat", "Matrices over a quaternion algebra");
  mat->require_subcommand(1);
  static std::string mat_input;
  auto mat_leaf = [&](const std::string& name, const std::string& help,
                      std::function<Output(const CompMatrix&)> fn) {
    CLI::App* c = leaf(mat, name, help, run, [fn] {
      json j = load_json(mat_input);
      // fixtures wrap the matrix together with its expected values
      if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
      return fn(io::comp_matrix_from_json(j));
    });
    c->add_option("--input", mat_input, "Matrix JSON (path or inline)")->required();
  };
  mat_leaf("rank", "C-rank (largest invertible square submatrix)", [](const CompMatrix& z) {
    std::size_t r = c_rank(z);
    return Output{{{"c_rank", r}}, std::to_string(r), std::nullopt};
  });
  mat_leaf("sigma", "Symplectic representation over k(sqrt a)", [](const CompMatrix& z) {
    FieldMatrix s = symplectic_rep(z);
    return Output{io::to_json(s), s.to_string(), latex_matrix(s)};
  });
  mat_leaf("flatten", "Block substitution into Mat(2m x 2n, k)", [](const CompMatrix& z) {
    FieldMatrix s = flatten_split(z);
    return Output{io::to_json(s), s.to_string(), latex_matrix(s)};
  });
  mat_leaf("sdet", "Study determinant", [](const CompMatrix& z) {
    Scalar d = study_det(z);
    return Output{{{"study_det", io::to_json(d)}}, d.to_string(), std::nullopt};
  });
  mat_leaf("invertible", "Invertibility by every applicable route", [](const CompMatrix& z) {
    InvertibilityRoutes r = invertibility_routes(z);
    json j{{"invertible", is_invertible(z)},
           {"study", r.study ? json(*r.study) : json()},
           {"flattened", r.flattened ? json(*r.flattened) : json()}};
    return Output{j, is_invertible(z) ? "true" : "false", std::nullopt};
  });

  // ---- span -------------------------------------------------------------
  CLI::App* span = app.add_subcommand("span", "Spans of low C-rank");
  span->require_subcommand(1);
  static AlgebraFlags sa;
  static std::size_t sm = 1, sn = 1, sd = 1, strials = 10;
  static long sbox = 3;
  {
    CLI::App* c = leaf(span, "m0", "Threshold M0 for an algebra", run, [] {
      std::size_t m0 = m_zero(sa.build(), sm, sd);
      return Output{{{"m0", m0}, {"family_size", 1 + sn * m0}}, std::to_string(m0),
                    std::nullopt};
    });
    sa.attach(c);
    c->add_option("--m", sm)->required();
    c->add_option("--n", sn);
    c->add_option("--d", sd)->required();
  }
  {
    CLI::App* c = leaf(span, "verify-bound", "Sample families of size 1 + n*M0", run, [&g] {
      BoundParams p;
      p.algebra = sa.build();
      p.m = sm;
      p.n = sn;
      p.d = sd;
      p.trials = strials;
      p.seed = g.seed;
      p.box = sbox;
      BoundReport r = verify_bound(p, g.budget());
      Output out{io::to_json(r), std::nullopt, std::nullopt};
      out.text = std::to_string(r.successes) + "/" + std::to_string(r.trials) +
                 " trials verified";
      out.violated = r.counterexample.has_value();
      return out;
    });
    sa.attach(c);
    c->add_option("--m", sm)->required();
    c->add_option("--n", sn)->required();
    c->add_option("--d", sd)->required();
    c->add_option("--trials", strials);
    c->add_option("--box", sbox, "Entries over Q are drawn from [-box, box]");
  }
  static std::string span_input;
  {
    CLI::App* c = leaf(span, "combine", "Low-rank combination of a given family", run, [] {
      json j = load_json(span_input);
      RankInstance inst;
      inst.d = j.at("d").get<std::size_t>();
      for (const auto& m : j.at("matrices")) inst.matrices.push_back(io::comp_matrix_from_json(m));
      LowRankCombination r = find_low_rank_combination(inst);
      json coeffs = json::array();
      for (const auto& cf : r.coeffs) coeffs.push_back(io::to_json(cf));
      json out{{"coeffs", coeffs},
               {"combination", io::to_json(r.combination)},
               {"c_rank", r.rank},
               {"over_base_field", r.over_base_field}};
      Output o{out, std::nullopt, std::nullopt};
      o.violated = r.rank + 1 > inst.d;
      return o;
    });
    c->add_option("--input", span_input, "{\"d\": .., \"matrices\": [..]}")->required();
  }

  // ---- poincare ---------------------------------------------------------
  CLI::App* poin = app.add_subcommand("poincare", "Poincare polynomials");
  poin->require_subcommand(1);
  static std::string pg, pu, pspace = "Y";
  static std::size_t pn = 2, pk = 1, pp = 1, pq = 1, pm = 1, pstep = 1;
  {
    CLI::App* c = leaf(poin, "hirsch", "Hirsch quotient for an equal-rank pair", run, [] {
      return poly_output(hirsch(WeylDegrees::parse(pg), WeylDegrees::parse(pu)));
    });
    c->add_option("--g", pg, "Degrees of G, e.g. BC:3")->required();
    c->add_option("--u", pu, "Degrees of U, e.g. U1SU:3")->required();
  }
  {
    CLI::App* c = leaf(poin, "product", "Product forms Y(n), Z(n)", run, [] {
      require(pspace == "Y" || pspace == "Z", Errc::ParseError, "space is Y or Z");
      return poly_output(product_form(pspace == "Y" ? ProductSpace::Y : ProductSpace::Z, pn));
    });
    c->add_option("--space", pspace, "Y or Z");
    c->add_option("--n", pn)->required();
  }
  {
    CLI::App* c = leaf(poin, "gaussian", "Gaussian binomial in t or t^2", run,
                       [] { return poly_output(gaussian_binomial(pn, pk, pstep)); });
    c->add_option("--n", pn)->required();
    c->add_option("--k", pk)->required();
    c->add_option("--step", pstep, "1 or 2");
  }
  {
    CLI::App* c = leaf(poin, "grassmann", "Real Grassmannian O(p+q)/(O(p)xO(q))", run,
                       [] { return poly_output(grassmann_poincare(pp, pq)); });
    c->add_option("--p", pp)->required();
    c->add_option("--q", pq)->required();
  }
  {
    CLI::App* c = leaf(poin, "oriented", "SO(2m+1)/(SO(2k)xSO(2m+1-2k))", run,
                       [] { return poly_output(oriented_grassmann_poincare(pm, pk)); });
    c->add_option("--m", pm)->required();
    c->add_option("--k", pk)->required();
  }
  {
    CLI::App* c = leaf(poin, "gamma", "Complex Clifford group quotient", run,
                       [] { return poly_output(clifford_gamma_poincare(pn, pp, pq)); });
    c->add_option("--n", pn)->required();
    c->add_option("--p", pp)->required();
    c->add_option("--q", pq)->required();
  }

  // ---- weyl -------------------------------------------------------------
  CLI::App* weyl = app.add_subcommand("weyl", "Weyl groups and invariants");
  weyl->require_subcommand(1);
  static std::string wgroup, whgroup, wpoly, wflavor = "A", wpair = "quaternionic";
  static std::size_t wn = 1, wbound = 2;
  {
    CLI::App* c = leaf(weyl, "reynolds", "Average a Laurent polynomial over G", run, [&g] {
      SignedPermGroup grp = io::group_from_json(load_json(wgroup));
      LaurentPoly f = LaurentPoly::parse(wpoly, grp.n());
      LaurentPoly r = reynolds(grp, f, g.budget());
      return Output{{{"result", r.to_string()}, {"invariant", is_invariant(grp, r)}},
                    r.to_string(), std::nullopt};
    });
    c->add_option("--group", wgroup, "{\"flavor\": \"BC\", \"n\": 3}")->required();
    c->add_option("--f", wpoly, "Laurent polynomial, e.g. \"x1^2*x2^-1 + 3\"")->required();
  }
  {
    CLI::App* c = leaf(weyl, "invariant", "Test invariance under G", run, [] {
      SignedPermGroup grp = io::group_from_json(load_json(wgroup));
      bool inv = is_invariant(grp, LaurentPoly::parse(wpoly, grp.n()));
      return Output{{{"invariant", inv}}, inv ? "true" : "false", std::nullopt};
    });
    c->add_option("--group", wgroup)->required();
    c->add_option("--f", wpoly)->required();
  }
  {
    CLI::App* c = leaf(weyl, "generators", "Fundamental invariants", run, [] {
      SignedPermGroup grp = SignedPermGroup::from_name(wflavor, wn);
      json arr = json::array();
      std::string text;
      for (const auto& f : fundamental_generators(grp.flavor(), wn)) {
        arr.push_back(f.to_string());
        text += f.to_string() + "\n";
      }
      text.pop_back();
      return Output{{{"generators", arr}}, text, std::nullopt};
    });
    c->add_option("--flavor", wflavor, "A or BC")->required();
    c->add_option("--n", wn)->required();
  }
  {
    CLI::App* c = leaf(weyl, "index", "Index |G|/|H|", run, [] {
      mpz_class idx = weyl_index(io::group_from_json(load_json(wgroup)),
                                 io::group_from_json(load_json(whgroup)));
      return Output{{{"index", idx.get_str()}}, idx.get_str(), std::nullopt};
    });
    c->add_option("--group", wgroup, "G as JSON")->required();
    c->add_option("--subgroup", whgroup, "H as JSON")->required();
  }
  {
    CLI::App* c = leaf(weyl, "ktheory", "Rank of K-theory over K_*(k)", run, [] {
      KPair pair;
      if (wpair == "quaternionic")
        pair = KPair::Quaternionic;
      else if (wpair == "split")
        pair = KPair::Split;
      else if (wpair == "one_dim_split")
        pair = KPair::OneDimSplit;
      else
        fail(Errc::ParseError, "pair is quaternionic, split or one_dim_split");
      mpz_class r = ktheory_rank(pair, wn);
      return Output{{{"rank", r.get_str()}}, r.get_str(), std::nullopt};
    });
    c->add_option("--pair", wpair)->required();
    c->add_option("--n", wn);
  }
  {
    CLI::App* c = leaf(weyl, "generation", "Bounded-degree generation check", run, [&g] {
      GroupFlavor fl = SignedPermGroup::from_name(wflavor, wn).flavor();
      GenerationReport r = verify_generation(fl, wn, wbound, g.budget());
      return Output{io::to_json(r),
                    std::to_string(r.entries.size() - r.inconclusive()) + " expressible, " +
                        std::to_string(r.inconclusive()) + " inconclusive at this bound",
                    std::nullopt};
    });
    c->add_option("--flavor", wflavor)->required();
    c->add_option("--n", wn)->required();
    c->add_option("--bound", wbound)->required();
  }

  // ---- zmod -------------------------------------------------------------
  CLI::App* zmod = app.add_subcommand("zmod", "Integer matrices and exact sequences");
  zmod->require_subcommand(1);
  static std::string zf, zg, zsigns;
  static std::size_t zn = 1, zsmax = 1;
  {
    CLI::App* c = leaf(zmod, "snf", "Smith normal form U A V = D", run, [] {
      SmithForm s = smith_normal_form(io::int_matrix_from_json(load_json(zf)));
      json inv = json::array();
      for (const auto& x : s.invariant_factors()) inv.push_back(x.get_str());
      return Output{{{"u", io::to_json(s.u)},
                     {"d", io::to_json(s.d)},
                     {"v", io::to_json(s.v)},
                     {"invariant_factors", inv}},
                    s.d.to_string(), std::nullopt};
    });
    c->add_option("--matrix", zf, "{\"rows\":..,\"cols\":..,\"entries\":[..]}")->required();
  }
  {
    CLI::App* c = leaf(zmod, "sequence", "Checks on 0 -> A -f-> B -g-> C -> 0", run, [] {
      SequenceVerdict v = sequence_checks(io::int_matrix_from_json(load_json(zf)),
                                          io::int_matrix_from_json(load_json(zg)));
      return Output{io::to_json(v), std::nullopt, std::nullopt};
    });
    c->add_option("--f", zf)->required();
    c->add_option("--g", zg)->required();
  }
  {
    CLI::App* c = leaf(zmod, "loc-model", "Truncated split localization sequence", run, [] {
      std::vector<int> signs = zsigns.empty() ? all_plus_signs(zn) : parse_signs(zsigns);
      LocalizationModel m = build_localization_model(zn, zsmax, signs);
      LocalizationVerdict v = verify_localization(m);
      json j = io::to_json(v);
      j["delta"] = io::to_json(m.delta);
      Output o{j, std::nullopt, std::nullopt};
      o.violated = !v.all() || v.middle_rank != 2 * zsmax;
      return o;
    });
    c->add_option("--n", zn)->required();
    c->add_option("--smax", zsmax)->required();
    c->add_option("--signs", zsigns, "2n-1 characters from {+,-}; default all +");
  }

  // ---- clifford ---------------------------------------------------------
  CLI::App* cl = app.add_subcommand("clifford", "Clifford algebras Cl(p,q)");
  cl->require_subcommand(1);
  static std::size_t cp = 0, cq = 0;
  static std::string csig = "0,0", cx = "0", cy = "0";
  static std::vector<std::string> cfactors;
  auto sig = [] {
    auto comma = csig.find(',');
    require(comma != std::string::npos, Errc::ParseError, "signature is p,q");
    try {
      return CliffordAlgebra::make(std::stoul(csig.substr(0, comma)),
                                   std::stoul(csig.substr(comma + 1)));
    } catch (const std::logic_error&) {
      fail(Errc::ParseError, "signature is p,q");
    }
  };
  auto mv = [](const Clifford& alg, const std::string& s) {
    std::size_t i = s.find_first_not_of(" \t");
    if (i != std::string::npos && s[i] == '{') return io::multivector_from_json(load_json(s));
    return Multivector::parse(alg, s);
  };
  {
    CLI::App* c = leaf(cl, "classify", "Matrix algebra type by (p - q) mod 8", run, [] {
      Classification k = classify(cp, cq);
      return Output{io::to_json(k), to_string(k), std::nullopt};
    });
    c->add_option("--p", cp)->required();
    c->add_option("--q", cq)->required();
  }
  {
    CLI::App* c = leaf(cl, "verify", "Center, dimension and transport checks", run, [] {
      ClassificationReport r = verify_classification(cp, cq);
      Output o{io::to_json(r), std::nullopt, std::nullopt};
      o.violated = !r.agree;
      return o;
    });
    c->add_option("--p", cp)->required();
    c->add_option("--q", cq)->required();
  }
  {
    CLI::App* c = leaf(cl, "product", "Geometric product", run, [sig, mv] {
      Clifford alg = sig();
      Multivector r = mv(alg, cx) * mv(alg, cy);
      return Output{io::to_json(r), r.to_string(), std::nullopt};
    });
    c->add_option("--sig", csig, "p,q")->required();
    c->add_option("--x", cx)->required();
    c->add_option("--y", cy)->required();
  }
  {
    CLI::App* c = leaf(cl, "involutions", "Grade involution, reversion, conjugate", run,
                       [sig, mv] {
                         Clifford alg = sig();
                         Multivector x = mv(alg, cx);
                         return Output{{{"grade_involution", io::to_json(grade_involution(x))},
                                        {"reversion", io::to_json(reversion(x))},
                                        {"clifford_conjugate", io::to_json(clifford_conjugate(x))}},
                                       std::nullopt, std::nullopt};
                       });
    c->add_option("--sig", csig)->required();
    c->add_option("--x", cx)->required();
  }
  {
    CLI::App* c = leaf(cl, "adjoint", "g m g^-1 for a vector m", run, [sig, mv] {
      Clifford alg = sig();
      Multivector r = twisted_adjoint(mv(alg, cx), mv(alg, cy));
      return Output{io::to_json(r), r.to_string(), std::nullopt};
    });
    c->add_option("--sig", csig)->required();
    c->add_option("--g", cx)->required();
    c->add_option("--m", cy)->required();
  }
  {
    CLI::App* c = leaf(cl, "membership", "Clifford group and Spin checks", run, [sig, mv] {
      Clifford alg = sig();
      GroupMembership m;
      if (!cfactors.empty()) {
        std::vector<Multivector> vs;
        for (const auto& f : cfactors) vs.push_back(mv(alg, f));
        m = clifford_group_membership(UnitProduct::make(std::move(vs)));
      } else {
        m = clifford_group_membership(mv(alg, cx));
      }
      return Output{io::to_json(m), std::nullopt, std::nullopt};
    });
    c->add_option("--sig", csig)->required();
    auto* gx = c->add_option("--g", cx, "Element to test");
    c->add_option("--factors", cfactors, "Unit vectors whose product is tested")
        ->excludes(gx);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::error_json(Error(Errc::ParseError, e.what())).dump() << "\n";
    return 1;
  }
  if (!run) return 1;

  try {
    Output out = run();
    if (g.format == "text" && out.text)
      std::cout << *out.text << "\n";
    else if (g.format == "latex" && out.latex)
      std::cout << *out.latex << "\n";
    else if (g.format == "json")
      std::cout << out.payload.dump() << "\n";
    else
      std::cout << out.payload.dump(2) << "\n";
    return out.violated ? 2 : 0;
  } catch (const Error& e) {
    std::cerr << io::error_json(e).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << io::error_json(Error(Errc::ParseError, e.what())).dump() << "\n";
    return 1;
  }
}
