#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <iterator>

#include "oracles.hpp"
#include "sandwich/pipeline.hpp"

using namespace sandwich;
using nlohmann::json;

namespace {

PipelineConfig c_config(int rank) {
  PipelineConfig cfg;
  cfg.ambient_type = "C";
  cfg.rank = rank;
  cfg.h_star.assign(static_cast<std::size_t>(rank), 0);
  cfg.h_star[0] = 1;
  return cfg;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f);
  return {std::istreambuf_iterator<char>(f), {}};
}

const json& check_entry(const json& report, const std::string& name) {
  for (const auto& c : report.at("checks"))
    if (c.at("name") == name) return c;
  throw std::logic_error("no check " + name);
}

}  // namespace

TEST_CASE("rational JSON encoding") {
  CHECK(rat_to_json(Rat(-3, 2)) == json::array({-3, 2}));
  CHECK(rat_from_json(json::array({5, 1})) == Rat(5));
  CHECK_THROWS_AS(rat_from_json(json::array({2, 4})), BundleParseError);
  CHECK_THROWS_AS(rat_from_json(json::array({1, 0})), BundleParseError);
  CHECK_THROWS_AS(rat_from_json(json::array({1, -2})), BundleParseError);
  CHECK_THROWS_AS(rat_from_json(json(0.5)), BundleParseError);
  CHECK_THROWS_AS(rat_from_json(json::array({1, 2, 3})), BundleParseError);

  std::mt19937_64 rng(51);
  for (int it = 0; it < 500; ++it) {
    RatMat m(1 + it % 4, 1 + (it / 4) % 4);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = oracle::random_rat(rng, 1000);
    json j = json::parse(mat_to_json(m).dump());
    CHECK(mat_from_json(j) == m);
  }
}

TEST_CASE("bundles round-trip field-exactly") {
  for (int rank = 2; rank <= 6; ++rank) {
    CAPTURE(rank);
    Bundle b = build_bundle(c_config(rank));
    Bundle back = bundle_from_json(json::parse(to_json(b).dump()));
    CHECK(back == b);
    CHECK(to_json(back) == to_json(b));
  }
  // A hand-made bundle with non-integer entries keeps its denominators.
  Bundle b = build_bundle(c_config(3));
  b.alignment.restriction(1, 2) = Rat(-7, 3);
  b.hat.zeta = RatVec{Rat(1, 2), 0, Rat(-5, 9), 0};
  CHECK(bundle_from_json(to_json(b)) == b);
}

TEST_CASE("bundle parse errors") {
  json j = to_json(build_bundle(c_config(2)));
  json wrong = j;
  wrong["format"] = "other/1";
  CHECK_THROWS_AS(bundle_from_json(wrong), BundleParseError);
  wrong = j;
  wrong["hat"].erase("pi_hat");
  CHECK_THROWS_AS(bundle_from_json(wrong), BundleParseError);
  wrong = j;
  wrong["ambient"]["type"] = "Q";
  CHECK_THROWS_AS(bundle_from_json(wrong), BundleParseError);
  wrong = j;
  wrong["alignment"]["restriction"]["rows"] = 5;
  CHECK_THROWS_AS(bundle_from_json(wrong), BundleParseError);
  CHECK_THROWS_AS(bundle_from_json(json::array()), BundleParseError);
}

TEST_CASE("build examples") {
  CHECK(build_bundle(c_config(3)).hat.M == 2);
  CHECK(build_bundle(c_config(2)).hat.M == 1);

  PipelineConfig b3;
  b3.ambient_type = "B";
  b3.rank = 3;
  b3.h_star = {1, 0, 0};
  try {
    (void)build_bundle(b3);
    FAIL("expected ClassCError");
  } catch (const ClassCError& e) {
    CHECK(e.report.dimension == 5);
    CHECK(rejection_json(e.report)["center"]["dimension"] == 5);
  }

  PipelineConfig bad = c_config(3);
  bad.h_star = {1, 0};
  CHECK_THROWS_AS(build_bundle(bad), UsageError);
  bad = c_config(3);
  bad.h_star = {0, 0, 0};
  CHECK_THROWS_AS(build_bundle(bad), UsageError);
  bad = c_config(3);
  bad.ambient_type = "Z";
  CHECK_THROWS_AS(build_bundle(bad), UsageError);
  bad = c_config(3);
  bad.checks = {"axioms", "nonsense"};
  CHECK_THROWS_AS(build_bundle(bad), UsageError);
  bad = c_config(3);
  bad.output_format = "xml";
  CHECK_THROWS_AS(validate_config(bad), UsageError);
}

TEST_CASE("full verification of the C3 bundle passes") {
  PipelineConfig cfg = c_config(3);
  json r = run_verify(build_bundle(cfg), cfg);
  CHECK(r["passed"] == true);
  CHECK(report_passed(r));
  for (const auto& c : r["checks"]) {
    CAPTURE(c.dump());
    CHECK(c["status"] == "pass");
  }
  CHECK(r["groups"]["W_R"] == 8);
  CHECK(r["groups"]["W_R_hat"] == 4);
  CHECK(r["groups"]["W_script"] == 4);
  CHECK(r["groups"]["W_R_tilde"] == 32);
  CHECK(r["alignment"]["r_zero"] == 8);
  CHECK(r["alignment"]["r_minus"] == 5);
  CHECK(r["checks"].size() == check_registry().size());
}

TEST_CASE("partial check selection marks the rest skipped") {
  PipelineConfig cfg = c_config(3);
  cfg.checks = {"axioms"};
  json r = run_verify(build_bundle(cfg), cfg);
  CHECK(r["passed"] == true);
  CHECK(check_entry(r, "axioms")["status"] == "pass");
  CHECK(check_entry(r, "tau")["status"] == "skipped");
  CHECK(r["groups"]["W_R"].is_null());
  CHECK(r["config"]["checks"] == json::array({"axioms"}));
  CHECK(resolve_checks({"tau", "axioms"}) == std::vector<std::string>{"axioms", "tau"});
}

TEST_CASE("a corrupted bundle fails the symmetry axiom with a witness") {
  PipelineConfig cfg = c_config(3);
  json j = to_json(build_bundle(cfg));
  j["hat"]["phi"].erase(0);
  Bundle b = bundle_from_json(j);
  json r = run_verify(b, cfg);
  CHECK(r["passed"] == false);
  CHECK_FALSE(report_passed(r));
  const json& ax = check_entry(r, "axioms");
  CHECK(ax["status"] == "fail");
  bool found = false;
  for (const auto& c : ax["checks"])
    if (c["name"] == "hat.symmetry") {
      found = true;
      CHECK(c["status"] == "fail");
      CHECK(c.contains("witness"));
    }
  CHECK(found);
  // Later checks fail or pass but never crash the run.
  CHECK(r["checks"].size() == check_registry().size());
}

TEST_CASE("reports are deterministic across thread counts") {
  PipelineConfig cfg = c_config(4);
  Bundle b = build_bundle(cfg);
  const int saved = thread_count();
  set_thread_count(1);
  std::string one = canonical_dump(run_verify(b, cfg));
  set_thread_count(4);
  json four = run_verify(b, cfg);
  set_thread_count(saved);
  CHECK(one == canonical_dump(four));
  CHECK(four.contains("timing"));
  CHECK(one.find("timing") == std::string::npos);
}

TEST_CASE("text summary") {
  PipelineConfig cfg = c_config(3);
  std::string t = format_text(run_verify(build_bundle(cfg), cfg));
  CHECK(t.find("C3") != std::string::npos);
  CHECK(t.find("M = 2") != std::string::npos);
  CHECK(t.find("verified") != std::string::npos);
}

TEST_CASE("scan examples") {
  auto has = [](const std::vector<ScanHit>& hits, std::vector<std::int64_t> h, int m) {
    for (const auto& x : hits)
      if (x.h_star == h) return x.M == m;
    return false;
  };
  auto c3 = scan("C", 3, 1);
  CHECK(has(c3, {1, 0, 0}, 2));
  CHECK(has(c3, {0, 0, -1}, 2));
  for (const auto& x : c3) CHECK(x.M == 2);
  CHECK_FALSE(has(scan("B", 3, 1), {1, 0, 0}, 2));
  CHECK(scan("A", 2, 1).empty());
  // Only primitive vectors: 2e1 is the same alignment as e1.
  for (const auto& x : scan("C", 2, 2)) CHECK(x.h_star != std::vector<std::int64_t>{2, 0});
  CHECK_THROWS_AS(scan("C", 3, 0), UsageError);
  json j = scan_to_json("C", 3, 1, c3);
  CHECK(j["candidates"].size() == c3.size());
}

TEST_CASE("golden files freeze the bundle and report schema") {
  PipelineConfig c2 = c_config(2);
  CHECK(to_json(build_bundle(c2)).dump(2) + "\n" == slurp(SANDWICH_GOLDEN_DIR "/c2_bundle.json"));
  PipelineConfig c3 = c_config(3);
  CHECK(canonical_dump(run_verify(build_bundle(c3), c3)) == slurp(SANDWICH_GOLDEN_DIR "/c3_report.json"));
}
