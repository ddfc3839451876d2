#include "qalg/cli.hpp"

#include <doctest.h>

using namespace qalg::cli;
using nlohmann::json;

TEST_CASE("bound for generic-p1 n = 3") {
  const auto r = run(json{{"n", 3}, {"kind", "generic-p1"}}, "bound");
  CHECK(r.exit_code == 0);
  CHECK(r.report.values["bernstein"]["d"] == 3);
  CHECK(r.report.values["bernstein"]["bound"] == 3);
  CHECK(r.report.values["bernstein"]["gkdim_algebra"] == 6);
}

TEST_CASE("dim for symplectic at q = 2") {
  const auto r = run(json{{"n", 2}, {"kind", "symplectic"}, {"q", "2"}}, "dim");
  CHECK(r.exit_code == 0);
  CHECK(r.report.values["dimension"]["d"] == 2);
}

TEST_CASE("config and usage errors exit 2") {
  const auto zero = run(json{{"n", 0}, {"kind", "generic"}}, "dim");
  CHECK(zero.exit_code == 2);
  REQUIRE(zero.report.checks.size() == 1);
  CHECK(zero.report.checks[0].name == "config");
  CHECK(zero.report.checks[0].detail.find("n") != std::string::npos);

  const auto bad_json = run_text("{\"n\": 2, \"kind\": ", "dim");
  CHECK(bad_json.exit_code == 2);

  CHECK(run(json{{"n", 2}, {"kind", "generic"}}, "frobnicate").exit_code == 2);
  CHECK(run(json{{"n", 2}, {"kind", "nonsense"}}, "dim").exit_code == 2);

  RunOptions bad_word;
  bad_word.args = {"x7"};
  CHECK(run(json{{"n", 2}, {"kind", "generic"}}, "nf", bad_word).exit_code == 2);

  const json custom = {{"n", 1},
                       {"kind", "custom"},
                       {"custom", {{"symbols", {"a"}}, {"q", {"a + 1"}}, {"p", {"1"}}}}};
  const auto r = run(custom, "dim");
  CHECK(r.exit_code == 2);
  CHECK(r.report.checks[0].detail.find("custom.q") != std::string::npos);
}

TEST_CASE("single commands") {
  const json g2 = {{"n", 2}, {"kind", "generic"}};
  RunOptions o;
  o.args = {"x2", "y2"};
  const auto nf = run(g2, "nf", o);
  CHECK(nf.exit_code == 0);
  CHECK(nf.report.values["word"] == "x2 y2");

  o.args = {"x1", "y1 x2"};
  CHECK(run(g2, "mul", o).exit_code == 0);
  o.args = {"2", "3"};
  CHECK(run(g2, "skew", o).exit_code == 0);
  o.args = {"4"};
  const auto growth = run(g2, "growth", o);
  CHECK(growth.exit_code == 0);
  CHECK(growth.report.values["growth_counts"] == json::array({1, 5, 15, 35, 70}));
  CHECK(run(g2, "verify").exit_code == 0);
}

TEST_CASE("report round trip and ordering") {
  const auto r = run(json{{"n", 2}, {"kind", "generic"}}, "report");
  CHECK(r.exit_code == 0);
  CHECK(report_from_json(to_json(r.report)) == r.report);
  CHECK(report_from_json(json::parse(to_json(r.report).dump())) == r.report);
  CHECK(std::is_sorted(r.report.checks.begin(), r.report.checks.end(),
                       [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; }));
  CHECK(r.report.values.contains("fuzz_seed"));
  const std::string text = to_text(r.report);
  CHECK(text.find("overall: pass") != std::string::npos);

  // fixed config, command and seed give the same report apart from timing
  auto again = run(json{{"n", 2}, {"kind", "generic"}}, "report").report;
  again.elapsed_ms = r.report.elapsed_ms;
  CHECK(again == r.report);
}

TEST_CASE("report passes on every preset up to n = 3") {
  for (const char* kind :
       {"generic", "generic-p1", "generic-q1", "symplectic", "euclidean", "heisenberg", "graded-weyl"}) {
    for (int n = 1; n <= 3; ++n) {
      CAPTURE(kind);
      CAPTURE(n);
      const auto r = run(json{{"n", n}, {"kind", kind}}, "report");
      CHECK(r.exit_code == 0);
      CHECK_FALSE(r.report.failed());
    }
  }
}

TEST_CASE("failed report serialization") {
  Report r;
  r.checks.push_back({"a", "pass", ""});
  r.checks.push_back({"b", "fail", "off by one"});
  CHECK(r.failed());
  CHECK(to_text(r).find("overall: fail") != std::string::npos);
  CHECK(report_from_json(to_json(r)) == r);
}
