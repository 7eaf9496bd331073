// ebitsim: post-selected two-atom entanglement from photon coincidences.
//
//   ebitsim run <config.json>
//   ebitsim sweep <config.json>
//   ebitsim decompose <unitary.json> [-o netlist.json]
//   ebitsim selftest

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ebitsim/parallel.hpp"
#include "ebitsim/runner.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement of two atoms from post-selected photon coincidences"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run an experiment config (including any sweep)");
  run->add_option("config", config_path, "Experiment config JSON")->required();

  auto* sweep = app.add_subcommand("sweep", "Run a config that must contain a sweep block");
  sweep->add_option("config", config_path, "Experiment config JSON")->required();

  std::string unitary_path;
  std::string netlist_out;
  auto* decompose = app.add_subcommand("decompose", "Reck-decompose a unitary into a netlist");
  decompose->add_option("unitary", unitary_path, "JSON {\"re\": [[..]], \"im\": [[..]]}")->required();
  decompose->add_option("-o,--output", netlist_out, "Write the netlist here instead of stdout");

  auto* selftest = app.add_subcommand("selftest", "Run the oracle cross-check suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ebitsim::kExitConfigError;
  }

  const int threads = ebitsim::configured_threads();

  if (run->parsed() || sweep->parsed()) {
    std::string text;
    if (!read_file(config_path, text)) {
      std::cerr << "config error: cannot read " << config_path << '\n';
      return ebitsim::kExitConfigError;
    }
    return ebitsim::run_config_text(text, sweep->parsed(), std::cout, std::cerr, threads);
  }
  if (decompose->parsed()) {
    std::string text;
    if (!read_file(unitary_path, text)) {
      std::cerr << "error: cannot read " << unitary_path << '\n';
      return ebitsim::kExitConfigError;
    }
    if (netlist_out.empty()) return ebitsim::decompose_text(text, std::cout, std::cerr);
    std::ostringstream buf;
    const int code = ebitsim::decompose_text(text, buf, std::cerr);
    if (code != 0) return code;
    std::ofstream out(netlist_out, std::ios::binary | std::ios::trunc);
    if (!(out << buf.str())) {
      std::cerr << "error: cannot write " << netlist_out << '\n';
      return ebitsim::kExitConfigError;
    }
    return 0;
  }
  if (selftest->parsed()) return ebitsim::run_selftest(std::cout);
  return ebitsim::kExitConfigError;
}
