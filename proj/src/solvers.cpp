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

#include "vvqe/solvers.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace vvqe {

namespace {

void check_references(const std::vector<StateVector>& refs,
                      const AnsatzCircuit& circuit) {
  if (refs.empty()) throw std::invalid_argument("reference set is empty");
  for (std::size_t a = 0; a < refs.size(); ++a) {
    if (refs[a].n_qubits() != circuit.n_qubits()) {
      throw QubitMismatch("reference does not match circuit qubit count");
    }
    for (std::size_t b = a + 1; b < refs.size(); ++b) {
      if (std::abs(refs[a].inner(refs[b])) > 1e-12) {
        throw std::invalid_argument("references " + std::to_string(a) +
                                    " and " + std::to_string(b) +
                                    " are not orthogonal");
      }
    }
  }
}

void check_strictly_decreasing(const Eigen::VectorXd& w) {
  for (Eigen::Index n = 0; n < w.size(); ++n) {
    if (!(w[n] > 0.0)) throw std::invalid_argument("weights must be positive");
    if (n > 0 && !(w[n] < w[n - 1])) {
      throw std::invalid_argument("weights must be strictly decreasing");
    }
  }
}

bool finite(const Eigen::VectorXd& v) { return v.allFinite(); }

}  // namespace

OrthogonalSet OrthogonalSet::equal_weight(std::vector<StateVector> references,
                                          AnsatzCircuit circuit) {
  check_references(references, circuit);
  const auto k = static_cast<Eigen::Index>(references.size());
  Eigen::VectorXd w = Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
  return {std::move(references), std::move(circuit), std::move(w)};
}

OrthogonalSet OrthogonalSet::weighted(std::vector<StateVector> references,
                                      AnsatzCircuit circuit,
                                      Eigen::VectorXd weights) {
  check_references(references, circuit);
  if (weights.size() != static_cast<Eigen::Index>(references.size())) {
    throw std::invalid_argument("one weight per reference required");
  }
  check_strictly_decreasing(weights);
  return {std::move(references), std::move(circuit), std::move(weights)};
}

Eigen::VectorXd descending_weights(int k) {
  Eigen::VectorXd w(k);
  for (int n = 0; n < k; ++n) w[n] = k - n;
  return w / w.sum();
}

SetEvaluation evaluate_set(const OrthogonalSet& set, const Hamiltonian& h,
                           const Eigen::VectorXd& params) {
  const int k = set.size();
  SetEvaluation out{Eigen::VectorXd(k), Eigen::VectorXd(k)};
  for (int n = 0; n < k; ++n) {
    const StateVector psi = prepare_state(
        set.circuit, params, set.references[static_cast<std::size_t>(n)]);
    out.energies[n] = energy(psi, h);
    out.variances[n] = variance(psi, h);
  }
  return out;
}

SetGradients set_gradients(const OrthogonalSet& set, const Hamiltonian& h,
                           const Eigen::VectorXd& params, double step) {
  const Eigen::Index dim = params.size();
  const int k = set.size();
  SetGradients out{Eigen::MatrixXd(dim, k), Eigen::MatrixXd(dim, k)};
  Eigen::VectorXd probe = params;
  for (int n = 0; n < k; ++n) {
    const ProbeCache cache(set.circuit, params,
                           set.references[static_cast<std::size_t>(n)]);
    for (Eigen::Index j = 0; j < dim; ++j) {
      probe[j] = params[j] + step;
      const StateVector up = cache.probe(probe, j);
      probe[j] = params[j] - step;
      const StateVector down = cache.probe(probe, j);
      probe[j] = params[j];
      out.energies(j, n) = (energy(up, h) - energy(down, h)) / (2.0 * step);
      out.variances(j, n) =
          (variance(up, h) - variance(down, h)) / (2.0 * step);
    }
  }
  if (!out.energies.allFinite() || !out.variances.allFinite()) {
    throw std::domain_error("non-finite cost at finite-difference probe");
  }
  return out;
}

double cost_variance_set(const OrthogonalSet& set, const Hamiltonian& h,
                         const Eigen::VectorXd& params) {
  return set.weights.dot(evaluate_set(set, h, params).variances);
}

double cost_ssvqe(const OrthogonalSet& set, const Hamiltonian& h,
                  const Eigen::VectorXd& params) {
  check_strictly_decreasing(set.weights);
  return set.weights.dot(evaluate_set(set, h, params).energies);
}

double cost_mixed(const OrthogonalSet& set, const Hamiltonian& h,
                  const Eigen::VectorXd& params, double eta_v) {
  if (eta_v < 0.0) throw std::invalid_argument("eta_v must be non-negative");
  const SetEvaluation e = evaluate_set(set, h, params);
  return e.energies.sum() + eta_v * e.variances.sum();
}

std::vector<ScheduleEntry> parse_schedule(const std::string& text) {
  std::vector<ScheduleEntry> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("schedule entry '" + item +
                                  "' is not ITERATION:RATE");
    }
    try {
      std::size_t used = 0;
      const std::string it_text = item.substr(0, colon);
      const std::string rate_text = item.substr(colon + 1);
      ScheduleEntry entry;
      entry.start_iteration = std::stoi(it_text, &used);
      if (used != it_text.size()) throw std::invalid_argument(it_text);
      entry.rate = std::stod(rate_text, &used);
      if (used != rate_text.size()) throw std::invalid_argument(rate_text);
      out.push_back(entry);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed schedule entry '" + item + "'");
    }
  }
  validate_schedule(out);
  return out;
}

void validate_schedule(const std::vector<ScheduleEntry>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("schedule is empty");
  if (schedule.front().start_iteration != 0) {
    throw std::invalid_argument("schedule must start at iteration 0");
  }
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const double r = schedule[i].rate;
    if (!(r > 0.0 && r <= 1.0)) {
      throw std::invalid_argument("schedule rate outside (0, 1]");
    }
    if (i > 0 &&
        schedule[i].start_iteration <= schedule[i - 1].start_iteration) {
      throw std::invalid_argument("schedule iterations must strictly increase");
    }
  }
}

double active_rate(const std::vector<ScheduleEntry>& schedule, int iteration) {
  double rate = schedule.front().rate;
  for (const auto& entry : schedule) {
    if (entry.start_iteration <= iteration) rate = entry.rate;
  }
  return rate;
}

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::kConverged: return "converged";
    case RunStatus::kMaxIterations: return "max-iterations";
    case RunStatus::kFailed: return "failed";
  }
  return "unknown";
}

Objective variance_set_objective(const OrthogonalSet& set,
                                 const Hamiltonian& h, double step) {
  return {
      [&set, &h](const Eigen::VectorXd& p) {
        SetEvaluation e = evaluate_set(set, h, p);
        return Evaluation{set.weights.dot(e.variances), std::move(e.energies),
                          std::move(e.variances)};
      },
      [&set, &h, step](const Eigen::VectorXd& p) -> Eigen::VectorXd {
        return set_gradients(set, h, p, step).variances * set.weights;
      }};
}

Objective ssvqe_objective(const OrthogonalSet& set, const Hamiltonian& h,
                          double step) {
  check_strictly_decreasing(set.weights);
  return {
      [&set, &h](const Eigen::VectorXd& p) {
        SetEvaluation e = evaluate_set(set, h, p);
        return Evaluation{set.weights.dot(e.energies), std::move(e.energies),
                          std::move(e.variances)};
      },
      [&set, &h, step](const Eigen::VectorXd& p) -> Eigen::VectorXd {
        return set_gradients(set, h, p, step).energies * set.weights;
      }};
}

Objective mixed_objective(const OrthogonalSet& set, const Hamiltonian& h,
                          double eta_v, double step) {
  if (eta_v < 0.0) throw std::invalid_argument("eta_v must be non-negative");
  return {
      [&set, &h, eta_v](const Eigen::VectorXd& p) {
        SetEvaluation e = evaluate_set(set, h, p);
        const double cost = e.energies.sum() + eta_v * e.variances.sum();
        return Evaluation{cost, std::move(e.energies), std::move(e.variances)};
      },
      [&set, &h, eta_v, step](const Eigen::VectorXd& p) -> Eigen::VectorXd {
        const SetGradients g = set_gradients(set, h, p, step);
        return g.energies.rowwise().sum() + eta_v * g.variances.rowwise().sum();
      }};
}

namespace {

// Shared descent loop; `step_gradient(t, theta)` supplies update t and the
// sampling rate active at t.
template <typename GradientFn>
Trajectory descend(const std::function<Evaluation(const Eigen::VectorXd&)>& evaluate,
                   GradientFn&& step_gradient, const Eigen::VectorXd& theta0,
                   const OptimizerConfig& config) {
  Trajectory traj;
  traj.theta = theta0;
  auto record = [&](int iteration, Evaluation e, double rate) {
    IterationRecord r{iteration, e.cost, std::move(e.energies),
                      std::move(e.variances), rate, std::nullopt};
    if (config.theta_every > 0 && iteration % config.theta_every == 0) {
      r.theta = traj.theta;
    }
    traj.records.push_back(std::move(r));
  };

  Evaluation current = evaluate(theta0);
  if (!std::isfinite(current.cost)) {
    traj.status = RunStatus::kFailed;
    traj.message = "initial cost is not finite";
    return traj;
  }
  record(0, current, active_rate(config.schedule, 0));

  for (int it = 1; it <= config.max_iterations; ++it) {
    Eigen::VectorXd grad;
    double rate = 1.0;
    try {
      std::tie(grad, rate) = step_gradient(it, traj.theta);
    } catch (const std::domain_error& e) {
      traj.status = RunStatus::kFailed;
      traj.message = e.what();
      return traj;
    }
    if (!finite(grad)) {
      traj.status = RunStatus::kFailed;
      traj.message = "non-finite gradient at iteration " + std::to_string(it);
      return traj;
    }
    if (grad.norm() < config.gradient_tolerance) {
      traj.status = RunStatus::kConverged;
      traj.message = "gradient norm below tolerance";
      return traj;
    }
    Eigen::VectorXd next = traj.theta - config.learning_rate * grad;
    Evaluation e = evaluate(next);
    if (!std::isfinite(e.cost)) {
      traj.status = RunStatus::kFailed;
      traj.message = "non-finite cost at iteration " + std::to_string(it);
      return traj;
    }
    traj.theta = std::move(next);
    record(it, std::move(e), rate);

    const auto n = traj.records.size();
    const auto window = static_cast<std::size_t>(config.stall_window);
    if (window > 0 && n > window &&
        std::abs(traj.records[n - 1 - window].cost - traj.records[n - 1].cost) <
            config.cost_tolerance) {
      traj.status = RunStatus::kConverged;
      traj.message = "cost stalled";
      return traj;
    }
  }
  traj.status = RunStatus::kMaxIterations;
  traj.message = "iteration limit reached";
  return traj;
}

}  // namespace

Trajectory minimize(const Objective& objective, const Eigen::VectorXd& theta0,
                    const OptimizerConfig& config) {
  return descend(
      objective.evaluate,
      [&](int, const Eigen::VectorXd& theta) {
        return std::pair{objective.gradient(theta), 1.0};
      },
      theta0, config);
}

Trajectory minimize_sgd(const OrthogonalSet& set, const Hamiltonian& h,
                        const Eigen::VectorXd& theta0,
                        const OptimizerConfig& config, std::mt19937_64& rng) {
  validate_schedule(config.schedule);
  const Objective exact = variance_set_objective(set, h, config.fd_step);
  const auto n_terms = static_cast<int>(h.n_terms());
  return descend(
      exact.evaluate,
      [&](int iteration, const Eigen::VectorXd& theta) {
        const double rate = active_rate(config.schedule, iteration);
        const SampleMask mask = draw_mask(n_terms, rate, rng);
        if (static_cast<int>(mask.kept.size()) == n_terms) {
          return std::pair{exact.gradient(theta), rate};
        }
        Eigen::VectorXd grad = Eigen::VectorXd::Zero(theta.size());
        for (int n = 0; n < set.size(); ++n) {
          grad += set.weights[n] *
                  sampled_variance_gradient(
                      set.circuit, theta,
                      set.references[static_cast<std::size_t>(n)], h, mask,
                      config.fd_step);
        }
        return std::pair{std::move(grad), rate};
      },
      theta0, config);
}

std::vector<SurveyResult> multi_start_survey(
    const Hamiltonian& h, const AnsatzCircuit& circuit,
    const StateVector& reference, const SurveyOptions& options,
    const OptimizerConfig& config, std::mt19937_64& rng,
    const std::optional<Eigen::VectorXd>& oracle_eigenvalues) {
  if (options.n_starts < 1) throw std::invalid_argument("n_starts must be >= 1");
  const OrthogonalSet single =
      OrthogonalSet::equal_weight({reference}, circuit);
  const Objective objective =
      variance_set_objective(single, h, config.fd_step);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  std::vector<SurveyResult> results;
  results.reserve(static_cast<std::size_t>(options.n_starts));
  for (int start = 0; start < options.n_starts; ++start) {
    Eigen::VectorXd theta0(circuit.n_params());
    for (Eigen::Index j = 0; j < theta0.size(); ++j) theta0[j] = angle(rng);
    const Trajectory traj = minimize(objective, theta0, config);

    SurveyResult r;
    r.theta = traj.theta;
    r.status = traj.status;
    r.iterations = traj.records.empty() ? 0 : traj.last().iteration;
    if (!traj.records.empty()) {
      r.variance = traj.last().variances[0];
      r.energy = traj.last().energies[0];
    }
    if (oracle_eigenvalues && oracle_eigenvalues->size() > 0) {
      Eigen::Index idx = 0;
      (oracle_eigenvalues->array() - r.energy).abs().minCoeff(&idx);
      r.eigen_index = idx;
      r.eigenvalue = (*oracle_eigenvalues)[idx];
    }
    r.accepted = r.status != RunStatus::kFailed &&
                 r.variance < options.acceptance_threshold;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace vvqe
