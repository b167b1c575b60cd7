#include <doctest.h>

#include <set>

#include "exrings/theorems.hpp"

using namespace exrings;

TEST_CASE("one checker per theorem id") {
  const std::set<std::string> ids{"lem2",  "lem5",  "lem6",  "lem8",  "lem10", "lem11", "lem14", "lem17",
                                  "lem18", "lem19", "lem20", "lem21", "lem22", "lem23", "thm16", "thm19",
                                  "thm23", "thm24", "thm25", "thm28", "thm29", "thm31", "thm32", "thm34",
                                  "thm35", "thm36", "thm37", "ex2",   "ex3",   "ex4",   "remark1"};
  std::set<std::string> seen;
  for (const auto& e : registry()) {
    CHECK(seen.insert(e.id).second);
    CHECK_FALSE(e.contexts.empty());
    for (const auto& c : e.contexts) CHECK(RingContext::parse(c.ring).to_string() == c.ring);
  }
  CHECK(seen == ids);
  CHECK(find_theorem("thm16") != nullptr);
  CHECK(find_theorem("thm99") == nullptr);
  CHECK(registry_json().size() == ids.size());
}

TEST_CASE("job planning") {
  std::size_t contexts = 0;
  for (const auto& e : registry()) contexts += e.contexts.size();
  CHECK(plan_jobs({"all"}, std::nullopt).size() == contexts);
  CHECK(plan_jobs({"thm16"}, std::nullopt).size() == 2);
  CHECK(plan_jobs({"thm16"}, std::string("m2-gf4")).size() == 1);
  CHECK_THROWS_AS(plan_jobs({"bogus"}, std::nullopt), UnsupportedError);
  CHECK_THROWS_AS(plan_jobs({"thm16"}, std::string("m2-rat2")), UnsupportedError);
  CHECK_THROWS_AS(plan_jobs({"all"}, std::string("m3-gf2")), UnsupportedError);
  for (const auto& j : plan_jobs({"all"}, std::string("m2-tpoly2"))) CHECK(j.context.to_string() == "m2-tpoly2");
}

TEST_CASE("verdict JSON key order") {
  Verdict v;
  v.theorem = "thm16";
  v.mode = VerifyMode::ProvedExhaustive;
  v.cases_total = 3;
  const Json j = v.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"theorem", "mode", "cases_total", "cases_failed", "witnesses",
                                         "counterexamples", "elapsed_ms", "config"});
  CHECK(j["mode"] == "ProvedExhaustive");
  CHECK(v.passed());
  v.cases_failed = 1;
  CHECK_FALSE(v.passed());
  CHECK_FALSE(Verdict{}.passed());
}

TEST_CASE("results do not depend on the worker count") {
  const RunConfig cfg{6, 7, 40};
  const auto jobs = plan_jobs({"lem6", "thm29", "thm25", "lem11", "thm34"}, std::nullopt);
  const Json serial = report_json(run_jobs(jobs, cfg, 1, false), cfg);
  const Json parallel = report_json(run_jobs(jobs, cfg, 4, false), cfg);
  CHECK(serial.dump() == parallel.dump());
  CHECK(serial["all_passed"] == true);
}

TEST_CASE("run_one rejects unsupported pairs") {
  const RunConfig cfg;
  CHECK_THROWS_AS(run_one("ex2", RingContext::parse("m2-poly2"), cfg), UnsupportedError);
  const Verdict v = run_one("ex2", RingContext::parse("m2-tpoly2"), RunConfig{8, 0, 20});
  CHECK(v.passed());
  CHECK(v.config["ring"] == "m2-tpoly2");
  CHECK(v.config["samples"] == 20);
}

TEST_CASE("every checker passes on a small configuration") {
  const RunConfig cfg{6, 3, 25};
  const auto verdicts = run_jobs(plan_jobs({"all"}, std::nullopt), cfg, 2, false);
  for (const auto& v : verdicts) {
    INFO(v.theorem << " " << v.config["ring"].get<std::string>());
    CHECK(v.passed());
  }
}
