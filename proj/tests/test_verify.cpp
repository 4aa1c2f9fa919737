#include "isocoh/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

using namespace isocoh;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("configuration parsing") {
  const VerifyConfig c = parse_config(R"(
[run]
groups = tables, jacobi
seed = 99
samples = 5
threads = 2
[tolerance]
curvature = 1e-7
)");
  CHECK(c.groups == std::vector<std::string>{"tables", "jacobi"});
  CHECK(c.seed == 99);
  CHECK(c.samples == 5);
  CHECK(c.threads == 2);
  CHECK(c.tolerances.curvature == 1e-7);
  CHECK(c.tolerances.algebraic == 1e-9);
  CHECK(c.tolerances.value(ToleranceClass::Curvature) == 1e-7);
  CHECK(c.tolerances.value(ToleranceClass::Exact) == 0.0);

  const VerifyConfig d = parse_config("");
  CHECK(d.groups.empty());
  CHECK(d.seed == kDefaultSeed);
}

TEST_CASE("malformed configuration raises ConfigError") {
  CHECK_THROWS_AS(parse_config("[run]\ncolour = blue\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[other]\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run]\ngroups = tables, nonsense\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[tolerance]\nalgebraic = -1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[tolerance]\nalgebraic = abc\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("[run\n"), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/isocoh.ini"), ConfigError);
}

TEST_CASE("outcome rules") {
  CHECK(exact_outcome(2, 2).pass);
  CHECK_FALSE(exact_outcome(2, 3).pass);
  CHECK(residual_outcome(1e-12, 1e-9, "x").pass);
  CHECK_FALSE(residual_outcome(1e-6, 1e-9, "x").pass);
  // A zero tolerance can never be met.
  CHECK_FALSE(residual_outcome(0.0, 0.0, "x").pass);
  CHECK(lower_bound_outcome(0.5, 1e-3).pass);
  CHECK_FALSE(lower_bound_outcome(1e-4, 1e-3).pass);
}

TEST_CASE("claim ids are unique and grouped") {
  const auto claims = build_claims(VerifyConfig{});
  std::set<std::string> ids;
  const auto& groups = claim_groups();
  for (const auto& c : claims) {
    ids.insert(c.id);
    CHECK(std::find(groups.begin(), groups.end(), c.group) != groups.end());
    CHECK((c.source == "reference" || c.source == "derived" || c.source == "invariant"));
  }
  CHECK(ids.size() == claims.size());
  VerifyConfig only;
  only.groups = {"splitting"};
  for (const auto& c : build_claims(only)) CHECK(c.group == "splitting");
}

TEST_CASE("heisenberg group passes and is reproducible") {
  VerifyConfig c;
  c.groups = {"heisenberg"};
  c.threads = 2;
  const SuiteResult a = run_suite(c);
  CHECK(a.exit_code() == 0);
  CHECK(a.failed == 0);
  CHECK(a.passed == static_cast<int>(a.reports.size()));
  const SuiteResult b = run_suite(c);
  CHECK(render_json_lines(a, false) == render_json_lines(b, false));
  for (std::size_t i = 1; i < a.reports.size(); ++i) CHECK(a.reports[i - 1].claim_id < a.reports[i].claim_id);
}

TEST_CASE("zero tolerance fails residual claims") {
  VerifyConfig c;
  c.groups = {"heisenberg"};
  c.tolerances.anticommutation = 0.0;
  const SuiteResult r = run_suite(c);
  CHECK(r.exit_code() == 1);
  CHECK(r.failed > 0);
}

TEST_CASE("JSON lines schema") {
  VerifyConfig c;
  c.groups = {"splitting"};
  const SuiteResult r = run_suite(c);
  const auto with = lines(render_json_lines(r, true));
  const auto without = lines(render_json_lines(r, false));
  REQUIRE(with.size() == r.reports.size() + 1);
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    const Json j = Json::parse(with[i]);
    CHECK(j["schema_version"] == 1);
    for (const char* key : {"claim_id", "group", "target", "check", "status", "computed", "expected", "source",
                            "residual", "tolerance"}) {
      CHECK(j.contains(key));
    }
    CHECK(j.contains("timing"));
    CHECK_FALSE(Json::parse(without[i]).contains("timing"));
  }
  const Json summary = Json::parse(with.back());
  CHECK(summary["summary"]["failed"] == 0);
  CHECK(summary["summary"]["exit_code"] == 0);
  CHECK(render_text(r).find("passed") != std::string::npos);
}
