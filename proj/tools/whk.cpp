// Command-line driver: computes Whitehead-group data of odd p-groups from a
// genetic basis. Subcommands:
//   cl1 <spec>                 torsion subgroup Cl_1(ZP)
//   wh <spec>                  free rank + torsion summary
//   deflate <spec> <selector>  deflation along frattini|center|derived
//   verify <suite>             pass/fail tables (theorem-a, elementary-abelian,
//                              oracle, witness)
//   oracle <p> <k>             polynomial-oracle comparison for EA(p,k)
//
// Exit codes: 0 ok, 1 check failed, 2 parse error, 3 size error,
// 4 unsupported prime, 5 internal contract violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <thread>

#include "whk/cl1.hpp"
#include "whk/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
  bool as_json = false;
  std::size_t max_order = 0;
  int workers = 0;
  std::uint64_t seed = 0x5eed;
};

whk::Cl1Options make_options(const GlobalOpts& g, bool progress) {
  whk::Cl1Options opts;
  opts.max_order = g.max_order;
  opts.workers = g.workers > 0
                     ? g.workers
                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (progress) {
    opts.progress = [](std::size_t done, std::size_t total) {
      if (total >= 64 && (done % 16 == 0 || done == total))
        std::cerr << "\r[relations " << done << "/" << total << "]" << std::flush;
      if (done == total && total >= 64) std::cerr << "\n";
    };
  }
  return opts;
}

std::string family_note(const whk::GroupSpec& spec, const whk::AbelianInvariants& got) {
  auto expected = whk::formulas::expected_cl1(spec);
  if (!expected) return "no closed form known";
  return got == *expected ? "matches the known closed form"
                          : "MISMATCH with the known closed form";
}

int cmd_cl1(const std::string& spec_text, const GlobalOpts& g) {
  whk::GroupSpec spec = whk::GroupSpec::parse(spec_text);
  whk::FiniteGroup grp = spec.build();
  whk::Cl1Options opts = make_options(g, !g.as_json);

  whk::GeneticBasis basis = whk::genetic_basis(grp, opts.max_order);
  whk::GammaGroup gamma = whk::build_gamma(basis);
  std::vector<whk::RelationVector> rels = whk::relation_generators(
      grp, basis, opts.workers, whk::GeneratorSetMode::Minimal, opts.progress);
  whk::AbelianInvariants inv = whk::smith_quotient(gamma, rels);

  if (g.as_json) {
    json j;
    j["group"] = spec.str();
    j["order"] = spec.order();
    j["genetic_basis_size"] = basis.size();
    j["gamma_moduli"] = gamma.moduli;
    j["relation_count"] = rels.size();
    j["cl1"] = json::parse(whk::invariants_to_json(inv, spec.p));
    auto expected = whk::formulas::expected_cl1(spec);
    j["closed_form_match"] =
        expected ? json(inv == *expected) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group          " << spec.str() << " of order " << spec.order() << "\n";
    std::cout << "genetic basis  " << basis.size() << " entries, section orders:";
    std::int64_t last = -1;
    std::size_t run = 0;
    auto flush_run = [&] {
      if (run) std::cout << " " << last << "x" << run;
    };
    for (std::int64_t m : gamma.moduli) {
      if (m == last) {
        ++run;
      } else {
        flush_run();
        last = m;
        run = 1;
      }
    }
    flush_run();
    std::cout << "\n";
    std::cout << "relations      " << rels.size() << " generators\n";
    std::cout << "cl1            " << whk::invariants_to_json(inv, spec.p) << "\n";
    std::cout << "               " << family_note(spec, inv) << "\n";
  }
  return 0;
}

int cmd_wh(const std::string& spec_text, const GlobalOpts& g) {
  whk::GroupSpec spec = whk::GroupSpec::parse(spec_text);
  whk::FiniteGroup grp = spec.build();
  whk::WhiteheadSummary s = whk::whitehead_summary(grp, make_options(g, !g.as_json));
  if (g.as_json) {
    json j;
    j["group"] = spec.str();
    j["free_rank"] = s.free_rank;
    j["torsion"] = json::parse(whk::invariants_to_json(s.torsion, spec.p));
    j["sk1_equals_cl1"] = s.sk1_equals_cl1;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group      " << spec.str() << "\n";
    std::cout << "free rank  " << s.free_rank << "\n";
    std::cout << "torsion    " << whk::invariants_to_json(s.torsion, spec.p) << "\n";
    std::cout << "sk1 = cl1  " << (s.sk1_equals_cl1 ? "yes" : "lower bound only") << "\n";
  }
  return 0;
}

int cmd_deflate(const std::string& spec_text, const std::string& selector,
                const GlobalOpts& g) {
  whk::GroupSpec spec = whk::GroupSpec::parse(spec_text);
  whk::FiniteGroup grp = spec.build();
  whk::Subgroup n;
  if (selector == "frattini")
    n = whk::frattini(grp);
  else if (selector == "center")
    n = whk::center(grp);
  else if (selector == "derived")
    n = whk::derived_subgroup(grp);
  else
    throw whk::spec_parse_error("unknown subgroup selector '" + selector +
                                "' (frattini|center|derived)");
  whk::DeflationData d = whk::deflation(grp, n, make_options(g, !g.as_json));
  if (g.as_json) {
    json j;
    j["group"] = spec.str();
    j["selector"] = selector;
    j["normal_subgroup_order"] = n.order();
    j["cl1"] = json::parse(whk::invariants_to_json(d.cl1_parent, spec.p));
    j["cl1_quotient"] = json::parse(whk::invariants_to_json(d.cl1_quotient, spec.p));
    j["kernel"] = json::parse(whk::invariants_to_json(d.kernel, spec.p));
    j["surjective"] = d.surjective;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group            " << spec.str() << ", N = " << selector
              << " of order " << n.order() << "\n";
    std::cout << "cl1(P)           " << whk::invariants_to_json(d.cl1_parent, spec.p) << "\n";
    std::cout << "cl1(P/N)         " << whk::invariants_to_json(d.cl1_quotient, spec.p) << "\n";
    std::cout << "kernel K         " << whk::invariants_to_json(d.kernel, spec.p) << "\n";
    std::cout << "surjective       " << (d.surjective ? "yes" : "NO") << "\n";
  }
  return 0;
}

int print_checks(const whk::CheckList& checks, const GlobalOpts& g) {
  if (g.as_json) {
    json out = json::array();
    for (const whk::CheckLine& l : checks.lines)
      out.push_back({{"name", l.name}, {"pass", l.pass}, {"detail", l.detail}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const whk::CheckLine& l : checks.lines) {
      std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << l.name;
      if (!l.detail.empty()) std::cout << "  (" << l.detail << ")";
      std::cout << "\n";
    }
    std::size_t passed = 0;
    for (const whk::CheckLine& l : checks.lines) passed += l.pass;
    std::cout << passed << "/" << checks.lines.size() << " checks passed\n";
  }
  return checks.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& suite, int p, int max_k, int k, const GlobalOpts& g) {
  whk::Cl1Options opts = make_options(g, !g.as_json);
  whk::CheckList checks;
  if (suite == "elementary-abelian") {
    checks = whk::verify_elementary_abelian(p, max_k, opts);
  } else if (suite == "theorem-a") {
    checks = whk::verify_theorem_a(opts);
  } else if (suite == "oracle") {
    checks = whk::verify_oracle(p, k, opts);
  } else if (suite == "witness") {
    checks = whk::verify_witness(opts);
  } else {
    throw whk::spec_parse_error(
        "unknown suite '" + suite +
        "' (theorem-a|elementary-abelian|oracle|witness)");
  }
  return print_checks(checks, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Whitehead-group torsion of finite p-groups, p odd"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_flag("--json", g.as_json, "machine-readable output");
  app.add_option("--max-order", g.max_order,
                 "bound for the general (subgroup-enumeration) path");
  app.add_option("--workers", g.workers, "worker threads for relation assembly");
  app.add_option("--seed", g.seed, "seed for sampled checks");

  std::string spec_text, selector, suite;
  int p = 3, max_k = 4, k = 3;

  CLI::App* c_cl1 = app.add_subcommand("cl1", "torsion subgroup Cl_1(ZP)");
  c_cl1->add_option("spec", spec_text, "group spec, e.g. ES(3,2,1)")->required();

  CLI::App* c_wh = app.add_subcommand("wh", "Whitehead group summary");
  c_wh->add_option("spec", spec_text)->required();

  CLI::App* c_def = app.add_subcommand("deflate", "deflation along a normal subgroup");
  c_def->add_option("spec", spec_text)->required();
  c_def->add_option("selector", selector, "frattini|center|derived")->required();

  CLI::App* c_ver = app.add_subcommand("verify", "verification suites");
  c_ver->add_option("suite", suite, "theorem-a|elementary-abelian|oracle|witness")
      ->required();
  c_ver->add_option("--p", p, "prime for parameterized suites");
  c_ver->add_option("--max-k", max_k, "max rank for elementary-abelian");
  c_ver->add_option("--k", k, "rank for the oracle suite");

  CLI::App* c_or = app.add_subcommand("oracle", "polynomial oracle for EA(p,k)");
  c_or->add_option("p", p)->required();
  c_or->add_option("k", k)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_cl1->parsed()) return cmd_cl1(spec_text, g);
    if (c_wh->parsed()) return cmd_wh(spec_text, g);
    if (c_def->parsed()) return cmd_deflate(spec_text, selector, g);
    if (c_ver->parsed()) return cmd_verify(suite, p, max_k, k, g);
    if (c_or->parsed()) return print_checks(whk::verify_oracle(p, k, make_options(g, false)), g);
  } catch (const whk::spec_parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const whk::size_error& e) {
    std::cerr << "size error: " << e.what() << "\n";
    return 3;
  } catch (const whk::unsupported_prime_error& e) {
    std::cerr << "unsupported prime: " << e.what() << "\n";
    return 4;
  } catch (const whk::contract_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  } catch (const whk::unsupported_error& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
