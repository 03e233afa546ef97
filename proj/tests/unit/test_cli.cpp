#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "faithcert/cli/config.hpp"
#include "faithcert/cli/run.hpp"

using namespace faithcert;
using namespace faithcert::cli;

namespace {

const std::string kCurve = R"(
curve:
  psi: "2"
  p: ["1", "2", "3"]
  P: ["1", "2", "3"]
  Q: ["1", "-19/52", "-21/52"]
  S: ["2", "1", "3"]
caps:
  d: 3
)";
const std::string kDefaultSklyanin = "suite: sklyanin" + kCurve;

std::string error_of(const std::string& text) {
  try {
    validate(parse_config(text, "t.yaml"));
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

std::string without_timing(const CertificateReport& report) {
  auto j = report_to_json(report);
  j.erase("timing");
  return j.dump();
}

}  // namespace

TEST_CASE("config parsing") {
  const RunConfig c = parse_config(R"(
suite: env
backend: prime:101
lie:
  dim: 3
  labels: [a, b, c]
  structure_constants:
    - [0, 1, 2, "1"]
  x: b
  mu: "3/2"
caps: {d: 2, N: 5}
)");
  CHECK(c.suite == Suite::env);
  CHECK(c.backend == "prime:101");
  REQUIRE(c.lie);
  CHECK(c.lie->dim == 3);
  CHECK(c.lie->x == std::vector<std::string>{"0", "1", "0"});
  CHECK(c.lie->mu == "3/2");
  CHECK(c.caps.env_d() == 2);
  CHECK(c.caps.shifts(3) == 5);
  CHECK(c.caps.n_max == 6);

  const RunConfig b = parse_config("lie: {builtin: sl2}");
  CHECK(b.lie->labels == std::vector<std::string>{"h", "e", "f"});
  // Defaults: d = 4 and N = dim U_4 for sl2, d = 3 for sklyanin.
  CHECK(b.caps.env_d() == 4);
  CHECK(b.caps.shifts(3) == 35);
  CHECK(b.caps.sklyanin_d() == 3);
  CHECK(parse_config("").suite == Suite::all);
}

TEST_CASE("config errors carry position and field") {
  CHECK(error_of("suite: env\nlie:\n  builtin: so5\n").starts_with("t.yaml:3:12: field 'lie.builtin'"));
  CHECK(error_of("suite: env\nlie: {builtin: sl2}\ncaps:\n  d: 0\n").starts_with("t.yaml:4:6: field 'caps.d'"));
  CHECK(error_of("suite: env\nlie: {builtin: sl2}\ncaps:\n  dd: 2\n").find("caps.dd': unknown key") !=
        std::string::npos);
  CHECK(error_of("suite: env\nlie:\n  dim: 2\n  structure_constants: [[0, 1, 5, \"1\"]]\n").find("out of range") !=
        std::string::npos);
  CHECK(error_of("suite: sklyanin\ncurve:\n  psi: two\n").find("curve.psi") != std::string::npos);
  CHECK(error_of("suite: sklyanin\n").find("field 'curve': required") != std::string::npos);
  CHECK(error_of("suite: rees\n").find("field 'lie': required") != std::string::npos);
  CHECK(error_of("backend: prime:9\n").find("field 'backend'") != std::string::npos);
  CHECK(error_of("suite: [env\n").starts_with("t.yaml:"));
  CHECK(error_of("suite: everything\n").find("unknown suite") != std::string::npos);
  CHECK_THROWS_AS(load_config("/nonexistent/faithcert.yaml"), ConfigError);
}

TEST_CASE("run: nonabelian2 env at d = 4 passes") {
  const auto report = run(parse_config("suite: env\nlie: {builtin: nonabelian2}\ncaps: {d: 4}\n"));
  CHECK(report.verdict() == Status::pass);
  CHECK(exit_code(report.verdict()) == 0);
  CHECK(report.find("env.eigenpair"));
}

TEST_CASE("run: abelian2 env fails with x as witness") {
  const auto report = run(parse_config("suite: env\nlie: {builtin: abelian2}\n"));
  CHECK(report.verdict() == Status::fail);
  CHECK(exit_code(report.verdict()) == 1);
  const auto* direct = report.find("env.direct_annihilator");
  REQUIRE(direct);
  CHECK(direct->data["x_annihilates"] == true);
}

TEST_CASE("run: default Sklyanin instance passes and reports dims") {
  const auto report = run(parse_config(kDefaultSklyanin));
  CHECK(report.verdict() == Status::pass);
  const auto* hilbert = report.find("sklyanin.hilbert_function");
  REQUIRE(hilbert);
  CHECK(hilbert->data["dims"] == nlohmann::json({1, 3, 6, 10, 15, 21, 28}));
  CHECK(report.checks().front().name == "ecurve.points_on_curve");
}

TEST_CASE("run: hypothesis violations become precondition errors") {
  RunConfig prime = parse_config(kDefaultSklyanin);
  prime.backend = "prime:101";
  const auto report = run(prime);
  CHECK(report.verdict() == Status::precondition_error);
  CHECK(exit_code(report.verdict()) == 3);
  CHECK(report.find("sklyanin.context")->status == Status::precondition_error);

  RunConfig off = parse_config(kDefaultSklyanin);
  off.curve->S = {"1", "1", "1"};
  CHECK(run(off).verdict() == Status::precondition_error);

  // Jacobi fails: [x,y] = z, [x,z] = x.
  const auto bad = run(parse_config(
      "suite: env\nlie:\n  dim: 3\n  structure_constants: [[0, 1, 2, \"1\"], [0, 2, 0, \"1\"]]\n"));
  CHECK(bad.verdict() != Status::pass);

  CHECK(exit_code(Status::inconclusive) == 2);
}

TEST_CASE("reports are deterministic and round-trip") {
  const RunConfig config = parse_config("suite: all\nlie: {builtin: sl2}" + kCurve);
  const auto first = run(config);
  const auto second = run(config);
  CHECK(without_timing(first) == without_timing(second));

  const auto path = (std::filesystem::temp_directory_path() / "faithcert_roundtrip.json").string();
  emit_report(first, path);
  const auto parsed = parse_report(path);
  CHECK(parsed.checks().size() == first.checks().size());
  emit_report(parsed, path);
  CHECK(parse_report(path) == parsed);
  CHECK(report_to_json(parsed)["schema"] == kReportSchema);
  std::remove(path.c_str());
}

TEST_CASE("empty report is valid and passes") {
  const CertificateReport empty;
  const auto j = report_to_json(empty);
  CHECK(j["verdict"] == "pass");
  CHECK(j["checks"].empty());
  CHECK(report_from_json(j) == empty);
  CHECK_THROWS(report_from_json(nlohmann::json{{"schema", "other/9"}, {"checks", nlohmann::json::array()}}));
}
