#include <iostream>

#include <CLI11.hpp>

#include "faithcert/cli/config.hpp"
#include "faithcert/cli/run.hpp"

int main(int argc, char** argv) {
  using namespace faithcert;
  CLI::App app{"Exact faithfulness certificates for U/Ux and Sklyanin A/AL"};
  std::string config_path, suite, out, backend;
  bool quiet = false;
  app.add_option("--config", config_path, "YAML run configuration")->required()->check(CLI::ExistingFile);
  app.add_option("--suite", suite, "Suite to run")->check(CLI::IsMember({"env", "rees", "sklyanin", "all"}));
  app.add_option("--out", out, "Report path; stdout when neither this nor 'output' is set");
  app.add_option("--backend", backend, "rational or prime:<p>");
  app.add_flag("-q,--quiet", quiet, "No per-check summary on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  cli::RunConfig config;
  try {
    config = cli::load_config(config_path);
    if (!suite.empty()) config.suite = cli::suite_from_string(suite);
    if (!backend.empty()) config.backend = backend;
    if (!out.empty()) config.output = out;
    cli::validate(config);
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 3;
  }

  const CertificateReport report = cli::run(config);
  if (!quiet) {
    for (const auto& c : report.checks()) std::cerr << to_string(c.status) << "  " << c.name << '\n';
    std::cerr << "verdict: " << to_string(report.verdict()) << '\n';
  }
  try {
    if (config.output.empty())
      std::cout << cli::report_to_json(report).dump(2) << '\n';
    else
      cli::emit_report(report, config.output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return cli::exit_code(report.verdict());
}
