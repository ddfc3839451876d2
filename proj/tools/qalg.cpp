#include "qalg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Normal forms, relation checks and dimension bounds for K_n(P, Q, Gamma)"};

  std::string config_path;
  std::string command;
  qalg::cli::RunOptions options;
  double budget = 0;
  bool json = false;
  bool text = false;

  app.add_option("--config", config_path, "algebra config JSON file ('-' for stdin)")->required();
  app.add_option("--command", command, "nf | mul | verify | skew | growth | dim | bound | report")
      ->required()
      ->check(CLI::IsMember({"nf", "mul", "verify", "skew", "growth", "dim", "bound", "report"}));
  app.add_option("--args", options.args, "command arguments (words, indices, lengths)")->expected(0, -1);
  app.add_option("--height", options.height, "isotropic search height")->check(CLI::Range(1, 10));
  auto* budget_opt = app.add_option("--budget", budget, "time budget in seconds for enumeration")
                         ->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "seed for the associativity fuzz in 'report'");
  auto* json_flag = app.add_flag("--json", json, "JSON output (default)");
  app.add_flag("--text", text, "tabular text output")->excludes(json_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (budget_opt->count() > 0) options.budget_seconds = budget;

  std::string config_text;
  if (config_path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    config_text = ss.str();
  } else {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config '" << config_path << "'\n";
      return 2;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    config_text = ss.str();
  }

  const auto result = qalg::cli::run_text(config_text, command, options);
  if (text) {
    std::cout << qalg::cli::to_text(result.report);
  } else {
    std::cout << qalg::cli::to_json(result.report).dump(2) << "\n";
  }
  if (result.exit_code == 2) {
    for (const auto& c : result.report.checks)
      if (c.name == "config" || c.name == "usage") std::cerr << "error: " << c.detail << "\n";
  }
  return result.exit_code;
}
