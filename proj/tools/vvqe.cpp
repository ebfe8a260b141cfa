// Copyright 2026 The vvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vvqe/experiment.hpp"

namespace {

struct Flags {
  std::string hamiltonian;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
};

int dispatch(vvqe::Mode mode, const Flags& flags) {
  vvqe::ExperimentConfig config;
  try {
    if (!flags.config.empty()) {
      config = vvqe::load_config(flags.config, mode);
    } else if (mode == vvqe::Mode::kSpectrum) {
      config.mode = mode;
    } else {
      std::cerr << "config error: --config is required for "
                << vvqe::to_string(mode) << "\n";
      return vvqe::kExitConfigError;
    }
  } catch (const vvqe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return vvqe::kExitConfigError;
  }
  if (!flags.hamiltonian.empty()) config.hamiltonian = flags.hamiltonian;
  if (flags.seed) config.optimizer.seed = *flags.seed;
  return vvqe::run_experiment(config, flags.out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-minimizing VQE on a statevector simulator"};
  app.require_subcommand(1);
  Flags flags;
  std::optional<vvqe::Mode> chosen;

  const std::pair<vvqe::Mode, const char*> commands[] = {
      {vvqe::Mode::kSpectrum, "Exact spectrum, full and particle sector"},
      {vvqe::Mode::kSurvey, "Multi-start single-ansatz variance minimization"},
      {vvqe::Mode::kOrtho, "Equal-weight variance cost over orthogonal references"},
      {vvqe::Mode::kSsvqe, "Weighted energy cost over orthogonal references"},
      {vvqe::Mode::kMixed, "Energy sum plus eta_v times variance sum"},
      {vvqe::Mode::kSgd, "Variance descent with Hamiltonian term sampling"},
      {vvqe::Mode::kMds, "Survey followed by a 2D embedding of the minima"},
  };
  for (const auto& [mode, help] : commands) {
    CLI::App* sub = app.add_subcommand(vvqe::to_string(mode), help);
    sub->add_option("--hamiltonian", flags.hamiltonian, "Hamiltonian file");
    sub->add_option("--config", flags.config, "JSON experiment config");
    sub->add_option("--seed", flags.seed, "RNG seed, overrides the config");
    sub->add_option("--out", flags.out, "Output directory")
        ->capture_default_str();
    sub->callback([&chosen, m = mode] { chosen = m; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : vvqe::kExitConfigError;
  }
  return dispatch(*chosen, flags);
}
