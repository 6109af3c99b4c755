// lefschetz-lab: build complete-intersection quotients exactly and verify
// their Lefschetz-type properties from the command line.

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "lefschetz/algebra.hpp"
#include "lefschetz/inverse_system.hpp"
#include "lefschetz/verify.hpp"
#include "lefschetz/wlp.hpp"

using namespace lefschetz;

namespace {

FieldSpec parse_field(const std::string& text) {
  if (text == "rational") return FieldSpec::rational();
  if (text.rfind("prime:", 0) == 0) {
    std::uint64_t p = std::stoull(text.substr(6));
    return FieldSpec::prime(p);
  }
  throw malformed_input("bad field spec '" + text + "' (want prime:P or rational)");
}

std::uint64_t ensure_seed(std::optional<std::uint64_t> seed) {
  if (seed) return *seed;
  std::random_device rd;
  std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "note: no --seed given; using " << s << "\n";
  return s;
}

void emit(const Report& rep, const std::string& out_path) {
  if (out_path == "-") {
    std::cout << rep.structured();
    return;
  }
  std::cout << rep.table();
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw malformed_input("cannot write report to " + out_path);
    out << rep.structured();
  }
}

int report_exit_code(const Report& rep) { return rep.any_fail() ? 1 : 0; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lefschetz-property laboratory for complete intersections"};
  app.set_version_flag("--version", "lefschetz-lab 0.1.0");
  app.require_subcommand(1);

  std::string instance_path, out_path, field_text = "prime:65521";
  std::optional<std::uint64_t> seed_opt;
  int trials = 8;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a random regular instance");
  int gen_m = 4, gen_d = 2;
  gen->add_option("--m", gen_m, "projective dimension m");
  gen->add_option("--d", gen_d, "generator degree d");
  gen->add_option("--field", field_text, "prime:P or rational");
  gen->add_option("--seed", seed_opt, "root seed");
  gen->add_option("--out", out_path, "instance file path (default stdout)");

  // verify and the single-suite wrappers
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suites = "all";
  VerifyConfig cfg;
  verify->add_option("--instance", instance_path, "instance file")->required();
  verify->add_option("--suite", suites, "comma-separated suites or 'all'");
  verify->add_option("--seed", seed_opt, "root seed");
  verify->add_option("--trials", trials, "samples per genericity check");
  verify->add_option("--locus-samples", cfg.locus_samples, "lines per locus scan");
  verify->add_option("--strata-samples", cfg.strata_samples, "ideal samples per histogram");
  verify->add_option("--pair-samples", cfg.pair_samples, "(z,w) pairs for span bounds");
  verify->add_option("--scan-prime", cfg.scan_prime, "small prime for rank-1 scans");
  verify->add_option("--scan-budget", cfg.scan_budget, "point budget for scans");
  verify->add_option("--out", out_path, "report file ('-' for structured stdout)");

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function vs Koszul prediction");
  hilbert->add_option("--instance", instance_path, "instance file")->required();
  hilbert->add_option("--seed", seed_opt, "root seed");
  hilbert->add_option("--out", out_path, "report file ('-' for structured stdout)");

  auto* inverse = app.add_subcommand("inverse", "Macaulay inverse system report");
  bool socle_only = false;
  inverse->add_option("--instance", instance_path, "instance file")->required();
  inverse->add_flag("--socle", socle_only, "print only the dual socle generator");
  inverse->add_option("--seed", seed_opt, "root seed");
  inverse->add_option("--trials", trials, "samples per certificate check");
  inverse->add_option("--out", out_path, "report file ('-' for structured stdout)");

  auto* strata = app.add_subcommand("strata", "quadric rank strata and pencils");
  strata->add_option("--instance", instance_path, "instance file")->required();
  strata->add_option("--seed", seed_opt, "root seed");
  strata->add_option("--samples", cfg.strata_samples, "ideal samples per histogram");
  strata->add_option("--pencils", cfg.pencil_samples, "random pencils to profile");
  strata->add_option("--scan-prime", cfg.scan_prime, "small prime for the rank-1 scan");
  strata->add_option("--out", out_path, "report file ('-' for structured stdout)");

  auto* locus = app.add_subcommand("locus", "non-Lefschetz locus scan");
  std::string locus_mode = "line", locus_degree = "critical";
  int locus_samples = 2;
  locus->add_option("--instance", instance_path, "instance file")->required();
  locus->add_option("--mode", locus_mode, "line or plane")
      ->check(CLI::IsMember({"line", "plane"}));
  locus->add_option("--degree-mode", locus_degree, "critical or injectivity")
      ->check(CLI::IsMember({"critical", "injectivity"}));
  locus->add_option("--samples", locus_samples, "lines/planes to scan");
  locus->add_option("--seed", seed_opt, "root seed");
  locus->add_option("--budget", cfg.scan_budget, "plane point budget");
  locus->add_option("--out", out_path, "report file ('-' for structured stdout)");

  auto* check = app.add_subcommand("check", "run one named suite");
  std::string check_name;
  check->add_option("name", check_name, "wlp|slp|injectivity|duality|lemmas")
      ->required()
      ->check(CLI::IsMember({"wlp", "slp", "injectivity", "duality", "lemmas"}));
  check->add_option("--instance", instance_path, "instance file")->required();
  check->add_option("--seed", seed_opt, "root seed");
  check->add_option("--trials", trials, "samples per genericity check");
  check->add_option("--out", out_path, "report file ('-' for structured stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      FieldSpec field = parse_field(field_text);
      std::uint64_t seed = ensure_seed(seed_opt);
      auto [inst, attempts] = gen_regular(gen_m, gen_d, field, seed);
      if (out_path.empty() || out_path == "-")
        std::cout << inst.serialize();
      else
        inst.save(out_path);
      std::cerr << "generated regular instance " << inst.digest() << " in " << attempts
                << " attempt(s)\n";
      return 0;
    }

    Instance inst = Instance::load(instance_path);
    cfg.trials = trials;
    cfg.seed = ensure_seed(seed_opt);

    if (verify->parsed()) {
      cfg.suites = suites;
      Report rep = run_verify(inst, cfg);
      emit(rep, out_path);
      return report_exit_code(rep);
    }
    if (hilbert->parsed()) {
      cfg.suites = "hilbert";
      Report rep = run_verify(inst, cfg);
      emit(rep, out_path);
      return report_exit_code(rep);
    }
    if (inverse->parsed()) {
      if (socle_only) {
        Algebra a = Algebra::build(inst);
        std::cout << "g = " << dual_socle_generator(a).text() << "\n";
        return 0;
      }
      cfg.suites = "inverse";
      Report rep = run_verify(inst, cfg);
      emit(rep, out_path);
      return report_exit_code(rep);
    }
    if (strata->parsed()) {
      cfg.suites = "strata";
      Report rep = run_verify(inst, cfg);
      emit(rep, out_path);
      return report_exit_code(rep);
    }
    if (locus->parsed()) {
      Algebra a = Algebra::build(inst);
      LocusScan scan = locus_scan(
          a, locus_mode == "line" ? ScanGeometry::line : ScanGeometry::plane,
          locus_degree == "critical" ? ScanDegree::critical : ScanDegree::injectivity,
          locus_samples, cfg.seed, cfg.scan_budget);
      Report rep;
      rep.instance_digest = inst.digest();
      rep.seed = cfg.seed;
      CheckRecord rec;
      rec.name = "locus";
      rec.params["mode"] = locus_mode;
      rec.params["degree_mode"] = locus_degree;
      rec.params["samples"] = locus_samples;
      rec.status = "pass";
      rec.data["points_scanned"] = scan.points_scanned;
      rec.data["hit_points"] = scan.hit_points;
      rec.data["exhaustive"] = scan.exhaustive;
      nlohmann::json pairs = nlohmann::json::array();
      for (const KernelPair& pair : scan.pairs) {
        nlohmann::json jp;
        jp["z"] = a.lift(pair.z).text();
        jp["q"] = a.lift(pair.q).text();
        jp["q_dim"] = pair.q_dim;
        jp["z_dim"] = pair.z_dim;
        pairs.push_back(jp);
      }
      rec.data["pairs"] = pairs;
      rec.data["summary"] =
          std::to_string(scan.pairs.size()) + " kernel pairs / " +
          std::to_string(scan.hit_points) + " hit points";
      rep.checks.push_back(std::move(rec));
      emit(rep, out_path);
      return 0;
    }
    if (check->parsed()) {
      cfg.suites = check_name;
      Report rep = run_verify(inst, cfg);
      emit(rep, out_path);
      return report_exit_code(rep);
    }
  } catch (const malformed_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const presentation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
