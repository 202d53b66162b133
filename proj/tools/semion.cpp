// Copyright 2026 The semion Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "semion/experiments.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out;
  std::string format = "json";
  int dense_limit = semion::kDefaultDenseLimit;
  std::uint64_t seed = 12345;
};

nlohmann::json read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw semion::ArgumentError("cannot open config '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw semion::ArgumentError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

int execute(const std::string& command, const Flags& f) {
  semion::experiments::RunOptions opt;
  opt.dense_limit = f.dense_limit;
  opt.seed = f.seed;
  const auto result = semion::experiments::run(command, read_config(f.config), opt);
  const std::string text = f.format == "csv" ? semion::experiments::render_csv(result.table)
                                             : semion::experiments::render_json(result);
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.out, std::ios::binary);
    if (!out) throw semion::ArgumentError("cannot write '" + f.out + "'");
    out << text;
  }
  std::cerr << command << ": " << (result.pass ? "PASS" : "FAIL") << "\n";
  return result.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semion: honeycomb semion lattice and circuit toolkit"};
  app.require_subcommand(1);
  Flags flags;
  const std::pair<const char*, const char*> commands[] = {
      {"lattice", "Layout tables: sites, ranks, plaquettes, chains"},
      {"spectrum", "Spin spectrum against the fermion oracle"},
      {"ground", "Projected ground state, vortex map and energy checks"},
      {"braid", "Braiding phases of loops around a string"},
      {"qnd", "Cavity QND closed form and interferometry readout"},
      {"circuit", "Effective couplings and diagnostics of a device network"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config, "JSON config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", flags.out, "Write results here instead of stdout");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--dense-limit", flags.dense_limit, "Largest register for dense methods")
        ->check(CLI::Range(1, 24));
    sub->add_option("--seed", flags.seed, "Seed for randomized sweeps");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return execute(command, flags);
  } catch (const std::exception& e) {
    std::cerr << "semion " << command << ": error: " << e.what() << "\n";
    return 2;
  }
}
