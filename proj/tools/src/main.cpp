#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using fokas::cli::CommandResult;
using fokas::cli::ConfigError;
using fokas::cli::RunConfig;

// Config file, then FOKAS_* environment variables, then --set flags.
RunConfig load_config(const std::string& path, const std::vector<std::string>& sets) {
  std::map<std::string, std::string> values;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read '" + path + "'");
    std::stringstream text;
    text << in.rdbuf();
    values = fokas::cli::parse_key_values(text.str());
  }
  for (const auto& [key, value] : fokas::cli::environment_overrides()) values[key] = value;
  for (const auto& item : sets) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("--set", "expected key=value, got '" + item + "'");
    values[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return fokas::cli::make_config(values);
}

int emit(const CommandResult& result, const std::string& json_path) {
  const std::string text = result.report.dump(2);
  if (json_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(json_path);
    out << text << '\n';
    if (!out) {
      std::cerr << "fokas: cannot write '" << json_path << "'\n";
      return fokas::cli::kConfigError;
    }
  }
  if (result.exit_code != fokas::cli::kPass && result.report.contains("message")) {
    std::cerr << "fokas: " << result.report["message"].get<std::string>() << '\n';
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral solutions of linear evolution problems on the half-line and the interval"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> sets;
  std::vector<std::string> checks;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-c,--config", config_path, "key = value configuration file");
    sub->add_option("-s,--set", sets, "override a configuration key (section.key=value)");
  };
  auto* solve = app.add_subcommand("solve", "solve on the configured grid; CSV and JSON summary");
  auto* verify = app.add_subcommand("verify", "inversion, diagonalization and remainder certificates");
  auto* compare = app.add_subcommand("compare", "compare against the reference solver");
  auto* list = app.add_subcommand("list-problems", "list problem tags");
  add_common(solve);
  add_common(verify);
  add_common(compare);
  verify->add_option("--checks", checks, "subset of inversion,diagonalization,remainder")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : fokas::cli::kConfigError;
  }

  if (list->parsed()) {
    std::cout << fokas::cli::list_problems().dump(2) << '\n';
    return fokas::cli::kPass;
  }

  std::string json_path;
  const CommandResult result = fokas::cli::run_guarded([&]() -> CommandResult {
    if (!checks.empty()) {
      std::string joined;
      for (const auto& c : checks) joined += (joined.empty() ? "" : ",") + c;
      sets.push_back("verify.checks=" + joined);
    }
    const RunConfig config = load_config(config_path, sets);
    json_path = config.json_path;
    if (solve->parsed()) {
      if (config.csv_path.empty()) return fokas::cli::cmd_solve(config, std::cout);
      std::ofstream csv(config.csv_path);
      if (!csv) throw ConfigError("output.csv", "cannot write '" + config.csv_path + "'");
      return fokas::cli::cmd_solve(config, csv);
    }
    if (verify->parsed()) return fokas::cli::cmd_verify(config);
    return fokas::cli::cmd_compare(config);
  });
  return emit(result, json_path);
}
