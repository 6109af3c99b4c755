#include <doctest.h>

#include "lefschetz/verify.hpp"

using namespace lefschetz;

namespace {

const FieldSpec kPrime = FieldSpec::prime(65521);

Poly term(const FieldSpec& f, std::vector<int> exps) {
  return Poly::monomial_term(f, Side::op, Monomial(std::move(exps)), Scalar::one(f));
}

}  // namespace

TEST_CASE("verify runs every suite and passes on a regular instance") {
  auto [inst, attempts] = gen_regular(2, 2, kPrime, 424242);
  CHECK(attempts >= 1);
  VerifyConfig cfg;
  cfg.seed = 99;
  cfg.trials = 4;
  cfg.locus_samples = 1;
  cfg.strata_samples = 50;
  cfg.pair_samples = 40;
  Report rep = run_verify(inst, cfg);
  CHECK_FALSE(rep.any_fail());
  REQUIRE(!rep.checks.empty());
  CHECK(rep.checks.front().name == "regular_sequence");
  CHECK(rep.checks.front().status == "pass");
  bool saw_wlp = false, saw_lemmas = false;
  for (const CheckRecord& c : rep.checks) {
    if (c.name == "wlp") {
      saw_wlp = true;
      CHECK(c.status == "pass");
    }
    if (c.name == "lemmas") saw_lemmas = true;
  }
  CHECK(saw_wlp);
  CHECK(saw_lemmas);
}

TEST_CASE("verify is deterministic for a fixed seed") {
  auto [inst, attempts] = gen_regular(3, 2, kPrime, 7);
  (void)attempts;
  VerifyConfig cfg;
  cfg.seed = 1234;
  cfg.trials = 3;
  cfg.locus_samples = 1;
  cfg.strata_samples = 30;
  cfg.pair_samples = 25;
  Report r1 = run_verify(inst, cfg);
  Report r2 = run_verify(inst, cfg);
  CHECK(r1.structured(false) == r2.structured(false));

  VerifyConfig other = cfg;
  other.seed = 4321;
  Report r3 = run_verify(inst, other);
  CHECK(r3.structured(false) != r1.structured(false));  // seed is echoed in the payload
}

TEST_CASE("a non-regular instance fails fast and skips the rest") {
  std::vector<Poly> gens;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(5, 0);
    e[i] = 2;
    gens.push_back(term(kPrime, e));
  }
  gens.push_back(term(kPrime, {1, 0, 0, 0, 1}));  // shares a zero with the others
  Instance bad(4, 2, kPrime, gens);
  VerifyConfig cfg;
  cfg.seed = 5;
  Report rep = run_verify(bad, cfg);
  CHECK(rep.any_fail());
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks.front().name == "regular_sequence");
  CHECK(rep.checks.front().status == "fail");
  CHECK(rep.checks.front().data.contains("skipped_suites"));
}

TEST_CASE("suite selection") {
  auto [inst, attempts] = gen_regular(2, 2, kPrime, 8);
  (void)attempts;
  VerifyConfig cfg;
  cfg.seed = 6;
  cfg.suites = "hilbert,duality";
  Report rep = run_verify(inst, cfg);
  REQUIRE(rep.checks.size() == 3);  // regular_sequence + the two requested
  CHECK(rep.checks[1].name == "hilbert");
  CHECK(rep.checks[2].name == "duality");

  cfg.suites = "nonsense";
  CHECK_THROWS_AS(run_verify(inst, cfg), malformed_input);
}

TEST_CASE("degenerate suites are reported, not failed") {
  auto [inst, attempts] = gen_regular(2, 3, kPrime, 9);  // d = 3: no quadric strata
  (void)attempts;
  VerifyConfig cfg;
  cfg.seed = 7;
  cfg.suites = "strata";
  Report rep = run_verify(inst, cfg);
  CHECK_FALSE(rep.any_fail());
  REQUIRE(rep.checks.size() == 2);
  CHECK(rep.checks[1].name == "strata");
  CHECK(rep.checks[1].status == "degenerate");
}

TEST_CASE("reports render both forms") {
  auto [inst, attempts] = gen_regular(2, 2, kPrime, 10);
  (void)attempts;
  VerifyConfig cfg;
  cfg.seed = 8;
  cfg.suites = "hilbert";
  Report rep = run_verify(inst, cfg);
  std::string table = rep.table();
  CHECK(table.find("hilbert") != std::string::npos);
  CHECK(table.find(inst.digest()) != std::string::npos);
  std::string with_timing = rep.structured(true);
  CHECK(with_timing.find("elapsed_ms") != std::string::npos);
  CHECK(rep.structured(false).find("elapsed_ms") == std::string::npos);
  // The structured form parses back as JSON with the check list intact.
  auto parsed = nlohmann::json::parse(rep.structured());
  CHECK(parsed["checks"].size() == rep.checks.size());
  CHECK(parsed["instance_digest"] == inst.digest());
}
