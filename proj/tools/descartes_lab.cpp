#include <descartes/jsonio.hpp>
#include <descartes/oracle.hpp>
#include <descartes/parallel.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace descartes;

SignPattern parse_pattern_arg(const std::string& s, int degree) {
  SignPattern p = SignPattern::parse(s);
  if (degree > 0 && p.degree() != degree)
    throw CLI::ValidationError("--pattern degree " + std::to_string(p.degree()) +
                               " disagrees with --degree " + std::to_string(degree));
  return p;
}

AdmissiblePair parse_ap_arg(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError("--ap expects \"pos,neg\"");
  return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
}

int emit(const nlohmann::json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) {
    std::cerr << "cannot open " << out_path << "\n";
    return 1;
  }
  f << j.dump(2) << "\n";
  return 0;
}

int run_battery(const BatteryReport& rep, bool quiet_pass = false) {
  for (const auto& c : rep.checks) {
    if (c.pass && quiet_pass) continue;
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << (rep.pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << " ("
            << rep.checks.size() << " checks)\n";
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of sign-pattern/root-count couples under Descartes' rule"};
  app.require_subcommand(1);

  // classify
  auto* c_cmd = app.add_subcommand("classify", "classify one (pattern, pair) couple");
  int c_degree = 0;
  std::string c_pattern, c_ap, c_out;
  bool c_no_witness = false;
  c_cmd->add_option("-d,--degree", c_degree, "degree (checked against the pattern)");
  c_cmd->add_option("-s,--pattern", c_pattern, "sign pattern \"+--+\" or \"S(m,n,q)\"")->required();
  c_cmd->add_option("-a,--ap", c_ap, "admissible pair \"pos,neg\"")->required();
  c_cmd->add_option("--out", c_out, "write JSON here instead of stdout");
  c_cmd->add_flag("--no-witness", c_no_witness, "skip witness construction");

  // catalog
  auto* k_cmd = app.add_subcommand("catalog", "classify every couple of a degree");
  int k_degree = 0, k_max_degree = 16;
  std::string k_out, k_format = "json";
  bool k_blocks = false, k_witnesses = false;
  k_cmd->add_option("-d,--degree", k_degree, "degree")->required();
  k_cmd->add_option("--max-degree", k_max_degree, "safety cap for the degree (default 16)");
  k_cmd->add_flag("--blocks-only", k_blocks, "three-block (c=2) patterns only");
  k_cmd->add_flag("--witnesses", k_witnesses, "attach certified witnesses to Realizable rows");
  k_cmd->add_option("--format", k_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  k_cmd->add_option("--out", k_out, "output path (default stdout)");

  // witness
  auto* w_cmd = app.add_subcommand("witness", "construct or search a certified witness");
  int w_degree = 0;
  std::string w_pattern, w_ap, w_out;
  bool w_search = false;
  uint64_t w_seed = 0, w_budget = 0;
  bool w_seed_set = false;
  w_cmd->add_option("-d,--degree", w_degree, "degree (checked against the pattern)");
  w_cmd->add_option("-s,--pattern", w_pattern, "sign pattern or S(m,n,q)")->required();
  w_cmd->add_option("-a,--ap", w_ap, "admissible pair \"pos,neg\"")->required();
  w_cmd->add_flag("--search", w_search, "use the root-placement oracle instead of the constructions");
  w_cmd->add_option("--seed", w_seed, "random search seed (grid search when omitted)")
      ->each([&](const std::string&) { w_seed_set = true; });
  w_cmd->add_option("--budget", w_budget, "candidate budget for the search");
  w_cmd->add_option("--out", w_out, "write JSON here instead of stdout");

  // verify
  auto* v_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  int v_max_degree = 30;
  uint64_t v_seed = 20250810;
  v_cmd->add_option("suite", v_suite, "prop3 | thm2-sweep | inequalities | oracle-consistency | q-bounds")
      ->required();
  v_cmd->add_option("--max-degree", v_max_degree, "degree bound for thm2-sweep (default 30)");
  v_cmd->add_option("--seed", v_seed, "seed for the randomized batteries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_cmd) {
      SignPattern sp = parse_pattern_arg(c_pattern, c_degree);
      AdmissiblePair ap = parse_ap_arg(c_ap);
      Classification cls = classify(sp, ap, {.attach_witness = !c_no_witness});
      return emit(classification_json(sp, ap, cls), c_out);
    }
    if (*k_cmd) {
      if (k_degree < 1 || k_degree > k_max_degree) {
        std::cerr << "degree out of range 1.." << k_max_degree << "\n";
        return 2;
      }
      auto rows = build_catalog(k_degree, {k_blocks, k_witnesses});
      if (k_format == "csv") {
        std::string csv = catalog_csv(rows);
        if (k_out.empty()) {
          std::cout << csv;
          return 0;
        }
        std::ofstream f(k_out);
        if (!f) {
          std::cerr << "cannot open " << k_out << "\n";
          return 1;
        }
        f << csv;
        return 0;
      }
      return emit(catalog_json(k_degree, rows), k_out);
    }
    if (*w_cmd) {
      SignPattern sp = parse_pattern_arg(w_pattern, w_degree);
      AdmissiblePair ap = parse_ap_arg(w_ap);
      if (w_search) {
        std::optional<SearchResult> hit;
        if (w_seed_set)
          hit = random_search(sp, ap, w_seed, w_budget ? w_budget : 20000);
        else
          hit = grid_search(sp, ap, GridSpec{}, w_budget ? w_budget : 200000);
        if (!hit) {
          std::cerr << "search exhausted with no witness (not a nonrealizability claim)\n";
          return 1;
        }
        Witness w{hit->poly, w_seed_set ? "random-search" : "grid-search", {}};
        return emit(witness_json(sp, ap, w), w_out);
      }
      auto w = build_witness(sp, ap);
      if (!w) {
        std::cerr << "no construction covers this couple; try --search\n";
        return 1;
      }
      return emit(witness_json(sp, ap, *w), w_out);
    }
    if (*v_cmd) {
      if (v_suite == "prop3") {
        SuiteReport rep = run_prop3_suite();
        for (const auto& c : rep.cases) std::cout << case_report_json(c).dump() << "\n";
        std::cout << (rep.pass ? "ALL CHECKS PASSED" : "CHECK FAILURES PRESENT") << " ("
                  << rep.cases.size() << " cases)\n";
        return rep.pass ? 0 : 1;
      }
      if (v_suite == "thm2-sweep") return run_battery(run_thm2_sweep(v_max_degree), true);
      if (v_suite == "inequalities") return run_battery(run_inequality_battery(v_seed));
      if (v_suite == "oracle-consistency") return run_battery(run_oracle_consistency());
      if (v_suite == "q-bounds") return run_battery(run_q_monotonicity());
      std::cerr << "unknown suite: " << v_suite << "\n";
      return 2;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
