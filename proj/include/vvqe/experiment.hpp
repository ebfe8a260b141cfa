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


#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vvqe/solvers.hpp"
#include "vvqe/ucc.hpp"

namespace vvqe {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitSolverFailure = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { kSpectrum, kSurvey, kOrtho, kSsvqe, kMixed, kSgd, kMds };

std::optional<Mode> parse_mode(std::string_view name);
std::string to_string(Mode mode);

/// Excitation lists, either explicit or by rule. Single rules: "all_pairs",
/// "none". Double rules: "pairing", "occupied_to_virtual" (from the first
/// reference), "none".
struct AnsatzSpec {
  std::string singles_rule = "all_pairs";
  std::vector<SingleExcitation> singles;
  std::string doubles_rule = "pairing";
  std::vector<DoubleExcitation> doubles;
  UccOptions options;
};

AnsatzCircuit build_ansatz(const AnsatzSpec& spec, int n_qubits,
                           std::string_view reference);

struct ExperimentConfig {
  Mode mode = Mode::kSpectrum;
  std::string hamiltonian;
  std::vector<std::string> references;
  AnsatzSpec ansatz;
  std::optional<std::vector<double>> weights;
  std::optional<double> eta_v;
  OptimizerConfig optimizer;
  /// "uniform" draws theta0 from [0, 2 pi * init_scale)^K, "zero" starts at
  /// the origin, "explicit" uses theta0.
  std::string init = "uniform";
  double init_scale = 1.0;
  std::vector<double> theta0;
  SurveyOptions survey;
  std::optional<int> particle_number;
};

/// Parses a JSON config. `mode` overrides the document's "mode" key and
/// must agree with it when both are present. Throws ConfigError.
ExperimentConfig parse_config(std::string_view json_text,
                              std::optional<Mode> mode = std::nullopt);
ExperimentConfig load_config(const std::string& path,
                             std::optional<Mode> mode = std::nullopt);

/// Runs one experiment and writes its artifacts into `out_dir`:
/// summary.json always, trajectory.csv for descent modes, points.csv for
/// mds. Returns kExitOk, kExitConfigError or kExitSolverFailure; progress
/// and errors go to `log`.
int run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                   std::ostream& log);

/// Wide CSV: iteration, cost, E_0.., D_0.., s.
std::string trajectory_csv(const Trajectory& trajectory);

}  // namespace vvqe
