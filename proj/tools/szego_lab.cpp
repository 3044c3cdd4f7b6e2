// szego-lab: run a JSON-configured experiment and write its result table.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "szego/errors.hpp"
#include "szego/experiment.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kIo = 2;

szego::OutputFormat format_from_path(const std::string& path) {
  auto ends_with = [&](const std::string& s) {
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".json")) return szego::OutputFormat::json;
  if (ends_with(".dat") || ends_with(".gp")) return szego::OutputFormat::gnuplot;
  return szego::OutputFormat::csv;
}

int run_command(const std::string& config_path, std::string out_path, const std::string& format_name) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot read config '" << config_path << "'\n";
    return kIo;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kValidation;
  }

  szego::ExperimentConfig config;
  szego::ResultTable table;
  try {
    config = szego::ExperimentConfig::from_json(doc);
    if (out_path.empty()) out_path = config.output_path.value_or("");
    if (out_path.empty()) throw szego::config_error("output_path", "no --out given and none in the config");
    const szego::OutputFormat format = format_name.empty() ? format_from_path(out_path) : szego::parse_format(format_name);
    table = szego::run(config);
    szego::emit(table, format, out_path);
  } catch (const szego::config_error& e) {
    std::cerr << "error: invalid config field " << e.what() << "\n";
    return kValidation;
  } catch (const szego::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const szego::configuration_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  std::cout << szego::to_string(config.experiment) << ": " << table.rows.size() << " rows -> " << out_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Szego kernel and Hardy filtration experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", szego::kLibraryVersion);

  std::string config_path, out_path, format_name;
  CLI::App* run = app.add_subcommand("run", "Run the experiment described by a JSON config");
  run->add_option("--config", config_path, "Path to the JSON config")->required();
  run->add_option("--out", out_path, "Output path (defaults to output_path in the config)");
  run->add_option("--format", format_name, "csv, json or gnuplot (defaults from the output extension)")
      ->check(CLI::IsMember({"csv", "json", "gnuplot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }
  return run_command(config_path, out_path, format_name);
}
