// Command-line front end: load or construct presentations, run the verifiers
// and computations, emit text or JSON reports.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebroid/catalog.hpp"
#include "algebroid/presentation_io.hpp"
#include "algebroid/reproduce.hpp"
#include "algebroid/separability.hpp"

using namespace algd;

namespace {

struct CommonOpts {
  std::string example;
  std::string file;
  bool json = false;
  int degree_cap = 4;
  std::string flavor = "s";
  unsigned seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input = true) {
  if (needs_input) {
    cmd->add_option("--example", o.example, "catalog example, e.g. malgrange:3");
    cmd->add_option("--file", o.file, "presentation file path");
  }
  cmd->add_flag("--json", o.json, "emit JSON");
  cmd->add_option("--degree-cap", o.degree_cap, "degree cap for exhaustive checks");
  cmd->add_option("--flavor", o.flavor, "derivation flavor: s or t")
      ->check(CLI::IsMember({"s", "t"}));
  cmd->add_option("--seed", o.seed, "seed for randomized property checks");
}

HopfPtr load_hopf(const CommonOpts& o) {
  if (!o.file.empty()) return read_presentation_file(o.file);
  if (o.example.empty()) throw algebra_error("need --example or --file");
  ExampleObject ex = make_example(o.example);
  if (ex.kind == ExampleObject::Kind::Hopf) return ex.hopf;
  if (ex.kind == ExampleObject::Kind::Split) return ex.split.split;
  throw algebra_error("example '" + o.example + "' is not a Hopf algebroid");
}

int degree_cap_env(int cli_value) {
  if (const char* env = std::getenv("ALGEBROID_DEGREE_CAP")) return std::atoi(env);
  return cli_value;
}

int report_exit(const AxiomReport& rep, const std::string& subject, bool json) {
  if (json)
    std::cout << axiom_report_to_json(rep, subject) << "\n";
  else
    std::cout << subject << "\n" << rep.summary();
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic computation for commutative Hopf algebroids, "
               "Lie-Rinehart algebras and their differentiation"};
  app.require_subcommand(1);

  CommonOpts vo, dfo, eo, duo, lo, so, ro;
  std::string morphism_spec, nc_expr;

  CLI::App* verify = app.add_subcommand("verify", "build a presentation and run the axiom suite");
  add_common(verify, vo);

  CLI::App* diff = app.add_subcommand("differentiate", "compute the Lie-Rinehart algebra L(H)");
  add_common(diff, dfo);

  CLI::App* env = app.add_subcommand("envelope", "build V_A(L) and normalize an expression");
  add_common(env, eo);
  env->add_option("--expr", nc_expr, "noncommutative expression, e.g. D.iA(X) - iA(X).D");

  CLI::App* dual = app.add_subcommand("dual", "finite dual of a finite free cocommutative algebroid");
  add_common(dual, duo);

  CLI::App* lift = app.add_subcommand("lift", "run the V_A(L) -> *H bridge for h = id on L(H)");
  add_common(lift, lo);

  CLI::App* sep = app.add_subcommand("separability", "Theorem-C separability report for a morphism");
  add_common(sep, so, /*needs_input=*/false);
  sep->add_option("--morphism", morphism_spec, "e.g. inclusion:1:2, unit_counit:malgrange:1")
      ->required();

  CLI::App* rep = app.add_subcommand("reproduce", "run the full paper-reproduction suite");
  add_common(rep, ro, /*needs_input=*/false);

  CLI::App* cat = app.add_subcommand("catalog", "list bundled examples and morphisms");
  bool cat_json = false;
  cat->add_flag("--json", cat_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      HopfPtr H = load_hopf(vo);
      if (!H->antipode) derive_antipode(H);
      return report_exit(check_axioms(H), H->name, vo.json);
    }

    if (*diff) {
      HopfPtr H = load_hopf(dfo);
      if (!H->antipode) derive_antipode(H);
      DiffResult D = differentiate(H, dfo.flavor == "s" ? Flavor::S : Flavor::T);
      AxiomReport checks = check_lie_rinehart(D.lr);
      if (dfo.json) {
        std::cout << lie_rinehart_to_json(D.lr, &checks) << "\n";
      } else {
        std::cout << D.lr.name << ": rank " << D.lr.rank() << "\n";
        for (int k = 0; k < D.lr.rank(); ++k) {
          std::cout << "  " << D.lr.basis[k] << "  anchor:";
          for (int a = 0; a < D.lr.base->nvars(); ++a)
            std::cout << " " << D.lr.base->vars()[a] << " -> "
                      << D.lr.anchor[k].images()[a].str() << ";";
          std::cout << "\n";
        }
        for (int i = 0; i < D.lr.rank(); ++i)
          for (int j = i + 1; j < D.lr.rank(); ++j) {
            std::string bracket;
            for (int k = 0; k < D.lr.rank(); ++k)
              if (!D.lr.c[i][j][k].is_zero())
                bracket += (bracket.empty() ? "" : " + ") + std::string("(") +
                           D.lr.c[i][j][k].str() + ")*" + D.lr.basis[k];
            std::cout << "  [" << D.lr.basis[i] << ", " << D.lr.basis[j] << "] = "
                      << (bracket.empty() ? "0" : bracket) << "\n";
          }
        std::cout << checks.summary();
      }
      return checks.all_pass() ? 0 : 1;
    }

    if (*env) {
      ExampleObject ex = make_example(eo.example.empty() ? "weyl_lr" : eo.example);
      if (ex.kind != ExampleObject::Kind::LR)
        throw algebra_error("envelope needs a Lie-Rinehart example");
      Envelope U = build_enveloping(ex.lr);
      if (!nc_expr.empty()) {
        NCElement e = parse_nc(nc_expr, U);
        std::cout << e.str(U) << "\n";
        return 0;
      }
      std::mt19937 rng(eo.seed);
      std::vector<NCElement> samples;
      for (int i = 0; i < 10; ++i) {
        NCElement s = U.one();
        for (int j = 0; j < 2; ++j) s = U.mul(s, U.gen(static_cast<int>(rng() % U.rank())));
        samples.push_back(s);
      }
      AxiomReport repU = check_cocomm_identities(U, samples);
      return report_exit(repU, U.name, eo.json);
    }

    if (*dual) {
      ExampleObject ex = make_example(duo.example);
      if (ex.kind != ExampleObject::Kind::Finite)
        throw algebra_error("dual needs a finite cocommutative example (group_algebra:n)");
      AxiomReport tables = check_finite_cocomm(ex.finite);
      HopfPtr D = finite_dual(ex.finite);
      AxiomReport axioms = check_axioms(D);
      if (duo.json) {
        nlohmann::json j;
        j["input"] = ex.finite.name;
        j["tables"] = nlohmann::json::parse(axiom_report_to_json(tables, ex.finite.name));
        j["dual"] = nlohmann::json::parse(axiom_report_to_json(axioms, D->name));
        j["presentation"] = write_presentation(D);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << ex.finite.name << " tables\n" << tables.summary();
        std::cout << D->name << " axioms\n" << axioms.summary();
        std::cout << write_presentation(D);
      }
      return (tables.all_pass() && axioms.all_pass()) ? 0 : 1;
    }

    if (*lift) {
      HopfPtr H = load_hopf(lo);
      if (!H->antipode) derive_antipode(H);
      DiffResult D = differentiate(H, Flavor::S);
      LiftReport lr = lift_lr_morphism(D.lr, H, D.basis, degree_cap_env(lo.degree_cap));
      if (lo.json) {
        nlohmann::json j;
        j["hopf"] = H->name;
        j["ok"] = lr.ok;
        j["words_checked"] = lr.words_checked;
        j["violations"] = lr.violations;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "lift over " << H->name << ": " << (lr.ok ? "ok" : "FAIL") << ", "
                  << lr.words_checked << " words checked\n";
        for (const auto& v : lr.violations) std::cout << "  " << v << "\n";
      }
      return lr.ok ? 0 : 1;
    }

    if (*sep) {
      SeparabilityReport r = separability_report(make_morphism(morphism_spec));
      if (so.json) {
        std::cout << separability_to_json(r) << "\n";
      } else {
        std::cout << r.morphism << "\n";
        std::cout << "  (a) Q(phi) split-injective: " << (r.condition_a ? "yes" : "no") << "\n";
        std::cout << "  (b) L(phi) surjective:      " << (r.condition_b ? "yes" : "no") << "\n";
        std::cout << "  (d) Der^s(phi)(H) surj.:    " << (r.condition_d ? "yes" : "no") << "\n";
        std::cout << "  verdicts consistent: " << (r.consistent ? "yes" : "no")
                  << ", separable: " << (r.separable() ? "yes" : "no") << "\n";
      }
      return r.consistent ? 0 : 1;
    }

    if (*rep) {
      auto results = run_acceptance(ro.seed);
      std::cout << (ro.json ? acceptance_json(results) : acceptance_table(results));
      for (const auto& r : results)
        if (!r.pass) return 1;
      return 0;
    }

    if (*cat) {
      if (cat_json) {
        nlohmann::json j;
        j["examples"] = catalog_names();
        j["morphisms"] = morphism_names();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "examples:\n";
        for (const auto& n : catalog_names()) std::cout << "  " << n << "\n";
        std::cout << "morphisms:\n";
        for (const auto& n : morphism_names()) std::cout << "  " << n << "\n";
      }
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
