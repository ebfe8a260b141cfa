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

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vvqe/state.hpp"
#include "vvqe/ucc.hpp"
#include "vvqe/variance.hpp"

namespace vvqe {

/// Shared circuit acting on mutually orthogonal basis references, with one
/// weight per reference.
struct OrthogonalSet {
  std::vector<StateVector> references;
  AnsatzCircuit circuit;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(references.size()); }

  /// w_n = 1/k.
  static OrthogonalSet equal_weight(std::vector<StateVector> references,
                                    AnsatzCircuit circuit);
  /// Weights must be positive and strictly decreasing.
  static OrthogonalSet weighted(std::vector<StateVector> references,
                                AnsatzCircuit circuit, Eigen::VectorXd weights);
};

/// Linearly decreasing SSVQE weights k, k-1, ..., 1 normalized to sum 1.
Eigen::VectorXd descending_weights(int k);

/// Per-reference energies and variances at one parameter point.
struct SetEvaluation {
  Eigen::VectorXd energies;
  Eigen::VectorXd variances;
};

SetEvaluation evaluate_set(const OrthogonalSet& set, const Hamiltonian& h,
                           const Eigen::VectorXd& params);

/// Columns n hold d E_n / d theta and d Delta_n / d theta, by central
/// differences sharing the probe states.
struct SetGradients {
  Eigen::MatrixXd energies;
  Eigen::MatrixXd variances;
};

SetGradients set_gradients(const OrthogonalSet& set, const Hamiltonian& h,
                           const Eigen::VectorXd& params,
                           double step = kDefaultFdStep);

/// sum_n w_n Delta_n.
double cost_variance_set(const OrthogonalSet& set, const Hamiltonian& h,
                         const Eigen::VectorXd& params);
/// sum_n w_n E_n. Throws unless weights strictly decrease.
double cost_ssvqe(const OrthogonalSet& set, const Hamiltonian& h,
                  const Eigen::VectorXd& params);
/// sum_n E_n + eta_v * sum_n Delta_n (unweighted sums).
double cost_mixed(const OrthogonalSet& set, const Hamiltonian& h,
                  const Eigen::VectorXd& params, double eta_v);

struct ScheduleEntry {
  int start_iteration = 0;
  double rate = 1.0;
};

/// Parses "0:0.1,1000:1.0".
std::vector<ScheduleEntry> parse_schedule(const std::string& text);
/// Throws unless iterations strictly increase from 0 and rates lie in (0,1].
void validate_schedule(const std::vector<ScheduleEntry>& schedule);
double active_rate(const std::vector<ScheduleEntry>& schedule, int iteration);

struct OptimizerConfig {
  double learning_rate = 0.05;
  int max_iterations = 5000;
  double gradient_tolerance = 1e-8;
  /// Converged when the cost moves less than this over `stall_window` steps.
  double cost_tolerance = 1e-12;
  int stall_window = 10;
  double fd_step = kDefaultFdStep;
  std::vector<ScheduleEntry> schedule{{0, 1.0}};
  std::uint64_t seed = 0;
  /// Keep a theta snapshot every this many iterations; 0 keeps none.
  int theta_every = 0;
};

enum class RunStatus { kConverged, kMaxIterations, kFailed };
std::string to_string(RunStatus status);

struct IterationRecord {
  int iteration = 0;
  double cost = 0.0;
  Eigen::VectorXd energies;
  Eigen::VectorXd variances;
  double rate = 1.0;
  std::optional<Eigen::VectorXd> theta;
};

struct Trajectory {
  std::vector<IterationRecord> records;
  Eigen::VectorXd theta;
  RunStatus status = RunStatus::kMaxIterations;
  std::string message;

  const IterationRecord& last() const { return records.back(); }
};

/// Cost plus optional per-state diagnostics at one point.
struct Evaluation {
  double cost = 0.0;
  Eigen::VectorXd energies;
  Eigen::VectorXd variances;
};

struct Objective {
  std::function<Evaluation(const Eigen::VectorXd&)> evaluate;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

Objective variance_set_objective(const OrthogonalSet& set,
                                 const Hamiltonian& h, double step);
Objective ssvqe_objective(const OrthogonalSet& set, const Hamiltonian& h,
                          double step);
/// Gradient is sum_n dE_n + eta_v * sum_n dDelta_n.
Objective mixed_objective(const OrthogonalSet& set, const Hamiltonian& h,
                          double eta_v, double step);

/// Fixed-step gradient descent theta <- theta - eta * grad.
Trajectory minimize(const Objective& objective, const Eigen::VectorXd& theta0,
                    const OptimizerConfig& config);

/// Stochastic descent on sum_n w_n Delta~_n with a fresh mask per iteration
/// drawn at the scheduled rate. Records hold the exact set cost. A full mask
/// takes the exact gradient path.
Trajectory minimize_sgd(const OrthogonalSet& set, const Hamiltonian& h,
                        const Eigen::VectorXd& theta0,
                        const OptimizerConfig& config, std::mt19937_64& rng);

/// Independent variance minimizations from uniform starts in [0, 2 pi)^K.
struct SurveyResult {
  Eigen::VectorXd theta;
  double variance = 0.0;
  double energy = 0.0;
  RunStatus status = RunStatus::kMaxIterations;
  int iterations = 0;
  /// Nearest oracle eigenvalue, when a spectrum was supplied.
  std::optional<double> eigenvalue;
  std::optional<Eigen::Index> eigen_index;
  bool accepted = false;
};

struct SurveyOptions {
  int n_starts = 50;
  double acceptance_threshold = 1e-8;
};

std::vector<SurveyResult> multi_start_survey(
    const Hamiltonian& h, const AnsatzCircuit& circuit,
    const StateVector& reference, const SurveyOptions& options,
    const OptimizerConfig& config, std::mt19937_64& rng,
    const std::optional<Eigen::VectorXd>& oracle_eigenvalues = std::nullopt);

}  // namespace vvqe
