// Command-line front end: scenario runner, built-in examples, character
// tables, and double-coset censuses, with deterministic reports.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylext/scenario.hpp"

namespace {

void emit(const weylext::Report& rep, const std::string& format,
          const std::string& out_path) {
  std::string text = format == "machine" ? rep.machine() : rep.human();
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw weylext::InputError(out_path + ": cannot open for write");
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "weylext: extended Weyl groups, R-groups, and induced-representation "
      "constituent counts for disconnected reductive groups"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "human";
  std::string out_path;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "machine"}));
  app.add_option("--out", out_path, "Write the report to a file");

  auto* cmd_run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_path;
  cmd_run->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();

  auto* cmd_builtin =
      app.add_subcommand("builtin", "Run a built-in worked example");
  std::string builtin_name;
  std::vector<std::string> raw_params;
  cmd_builtin->add_option("name", builtin_name, "Built-in name")->required();
  cmd_builtin->add_option("--param", raw_params, "key=value parameter");

  auto* cmd_chartable =
      app.add_subcommand("chartable", "Character table of a group table");
  std::string group_path;
  cmd_chartable->add_option("group", group_path, "Group JSON file")
      ->required();

  auto* cmd_dc = app.add_subcommand("doublecosets", "Double-coset census");
  std::string dc_path;
  cmd_dc->add_option("spec", dc_path, "Double-coset spec JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    weylext::Report rep;
    if (*cmd_run) {
      rep = weylext::run_scenario(weylext::load_scenario_file(scenario_path));
    } else if (*cmd_builtin) {
      std::map<std::string, std::string> params;
      for (const std::string& kv : raw_params) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos)
          throw weylext::InputError("--param expects key=value, got '" + kv +
                                    "'");
        params[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      rep = weylext::run_builtin(builtin_name, params);
    } else if (*cmd_chartable) {
      rep = weylext::chartable_report_from_file(group_path);
    } else if (*cmd_dc) {
      rep = weylext::doublecosets_report_from_file(dc_path);
    }
    emit(rep, format, out_path);
    return 0;
  } catch (const weylext::TheoremViolationError& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const weylext::ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 4;
  } catch (const weylext::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 4;
  } catch (const weylext::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
