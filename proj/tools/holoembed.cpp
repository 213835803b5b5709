#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "holo/config.hpp"
#include "holo/errors.hpp"
#include "holo/job.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream ifs(path, std::ios::binary);
  if (!ifs) throw holo::ConfigError("cannot read config file: " + path);
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, certify, and sample proper plane-curve embeddings"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int truncation = -1;
  app.add_option("--config", config_path, "job configuration file")->required();
  app.add_option("--out", out_dir, "directory for output files (default: cwd)");
  auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
  auto* trunc_opt = app.add_option("--truncation", truncation, "override the config truncation");

  app.add_subcommand("construct", "build the map and write the artifact description");
  app.add_subcommand("verify", "run the certification checks and write the report");
  app.add_subcommand("sample", "write an image point-cloud table");
  app.add_subcommand("export", "write artifact, report, and samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    holo::JobConfig config = holo::parse_config(read_file(config_path));
    if (seed_opt->count() > 0) config.seed = seed;
    if (trunc_opt->count() > 0) config.truncation = truncation;
    holo::JobCommand command =
        holo::parse_command(app.get_subcommands().front()->get_name());
    return holo::run_job(config, command, out_dir, std::cerr);
  } catch (const holo::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
