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


#include "vvqe/experiment.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "vvqe/io.hpp"
#include "vvqe/mds.hpp"
#include "vvqe/oracle.hpp"
#include "vvqe/variance.hpp"

namespace vvqe {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::pair<Mode, std::string_view> kModeNames[] = {
    {Mode::kSpectrum, "spectrum"}, {Mode::kSurvey, "survey"},
    {Mode::kOrtho, "ortho"},       {Mode::kSsvqe, "ssvqe"},
    {Mode::kMixed, "mixed"},       {Mode::kSgd, "sgd"},
    {Mode::kMds, "mds"},
};

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void check_keys(const Json& obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(std::string(where) + " must be an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) ==
        allowed.end()) {
      fail("unknown key '" + item.key() + "' in " + std::string(where));
    }
  }
}

template <typename T>
T get(const Json& obj, const char* key, T fallback) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const Json::exception&) {
    fail(std::string("wrong type for '") + key + "'");
  }
}

double positive(const Json& obj, const char* key, double fallback) {
  const double v = get<double>(obj, key, fallback);
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail(std::string("'") + key + "' must be a positive number");
  }
  return v;
}

double non_negative(const Json& obj, const char* key, double fallback) {
  const double v = get<double>(obj, key, fallback);
  if (!(v >= 0.0) || !std::isfinite(v)) {
    fail(std::string("'") + key + "' must be a non-negative number");
  }
  return v;
}

template <std::size_t N>
std::vector<std::array<int, N>> index_tuples(const Json& list,
                                             const char* key) {
  std::vector<std::array<int, N>> out;
  for (const auto& item : list) {
    if (!item.is_array() || item.size() != N) {
      fail(std::string("entries of '") + key + "' must have " +
           std::to_string(N) + " indices");
    }
    std::array<int, N> t{};
    for (std::size_t i = 0; i < N; ++i) {
      if (!item[i].is_number_integer()) {
        fail(std::string("indices in '") + key + "' must be integers");
      }
      t[i] = item[i].get<int>();
    }
    out.push_back(t);
  }
  return out;
}

std::vector<ScheduleEntry> schedule_from(const Json& value) {
  std::vector<ScheduleEntry> out;
  try {
    if (value.is_string()) {
      out = parse_schedule(value.get<std::string>());
    } else if (value.is_array()) {
      for (const auto& e : value) {
        if (!e.is_array() || e.size() != 2) {
          fail("schedule entries must be [start_iteration, rate]");
        }
        out.push_back({e[0].get<int>(), e[1].get<double>()});
      }
    } else {
      fail("schedule must be a string or a list");
    }
    validate_schedule(out);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    fail(std::string("invalid schedule: ") + e.what());
  }
  return out;
}

AnsatzSpec ansatz_from(const Json& obj) {
  check_keys(obj, "ansatz",
             {"singles", "doubles", "trotter_steps", "independent_steps"});
  AnsatzSpec spec;
  if (obj.contains("singles")) {
    const Json& s = obj["singles"];
    if (s.is_string()) {
      spec.singles_rule = s.get<std::string>();
      if (spec.singles_rule != "all_pairs" && spec.singles_rule != "none") {
        fail("unknown singles rule '" + spec.singles_rule + "'");
      }
    } else if (s.is_array()) {
      spec.singles_rule.clear();
      spec.singles = index_tuples<2>(s, "singles");
    } else {
      fail("'singles' must be a rule name or a list");
    }
  }
  if (obj.contains("doubles")) {
    const Json& d = obj["doubles"];
    if (d.is_string()) {
      spec.doubles_rule = d.get<std::string>();
      if (spec.doubles_rule != "pairing" &&
          spec.doubles_rule != "occupied_to_virtual" &&
          spec.doubles_rule != "none") {
        fail("unknown doubles rule '" + spec.doubles_rule + "'");
      }
    } else if (d.is_array()) {
      spec.doubles_rule.clear();
      spec.doubles = index_tuples<4>(d, "doubles");
    } else {
      fail("'doubles' must be a rule name or a list");
    }
  }
  spec.options.trotter_steps = get<int>(obj, "trotter_steps", 1);
  if (spec.options.trotter_steps < 1) fail("'trotter_steps' must be >= 1");
  spec.options.independent_steps = get<bool>(obj, "independent_steps", false);
  return spec;
}

OptimizerConfig optimizer_from(const Json& obj) {
  check_keys(obj, "optimizer",
             {"learning_rate", "max_iterations", "gradient_tolerance",
              "cost_tolerance", "stall_window", "fd_step", "schedule",
              "theta_every"});
  OptimizerConfig c;
  c.learning_rate = positive(obj, "learning_rate", c.learning_rate);
  c.max_iterations = get<int>(obj, "max_iterations", c.max_iterations);
  if (c.max_iterations < 1) fail("'max_iterations' must be >= 1");
  c.gradient_tolerance =
      non_negative(obj, "gradient_tolerance", c.gradient_tolerance);
  c.cost_tolerance = non_negative(obj, "cost_tolerance", c.cost_tolerance);
  c.stall_window = get<int>(obj, "stall_window", c.stall_window);
  if (c.stall_window < 0) fail("'stall_window' must be >= 0");
  c.fd_step = positive(obj, "fd_step", c.fd_step);
  if (obj.contains("schedule")) c.schedule = schedule_from(obj["schedule"]);
  c.theta_every = get<int>(obj, "theta_every", c.theta_every);
  if (c.theta_every < 0) fail("'theta_every' must be >= 0");
  return c;
}

std::vector<double> to_std(const Eigen::VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int hamming_weight(std::string_view bits) {
  return static_cast<int>(std::count(bits.begin(), bits.end(), '1'));
}

/// Per-run state shared by the mode runners.
struct Context {
  const ExperimentConfig& config;
  const HamiltonianFile& file;
  const Hamiltonian& h;
  std::filesystem::path out_dir;
  std::ostream& log;
  std::mt19937_64 rng;
  std::map<int, Eigen::VectorXd> sectors;
  bool oracle_available;

  const Eigen::VectorXd& sector(int particles) {
    auto it = sectors.find(particles);
    if (it == sectors.end()) {
      it = sectors
               .emplace(particles,
                        spectrum(to_dense(h.polynomial()), particles).values)
               .first;
    }
    return it->second;
  }
};

Json header(const Context& ctx) {
  Json j;
  j["mode"] = to_string(ctx.config.mode);
  Json ham;
  ham["path"] = ctx.config.hamiltonian;
  ham["n_qubits"] = ctx.h.n_qubits();
  ham["n_terms"] = ctx.h.n_terms();
  ham["metadata"] = ctx.file.metadata;
  j["hamiltonian"] = ham;
  j["seed"] = ctx.config.optimizer.seed;
  return j;
}

void write_json(const Context& ctx, const Json& j) {
  write_file_atomic((ctx.out_dir / "summary.json").string(), j.dump(2) + "\n");
}

Eigen::VectorXd initial_theta(Context& ctx, Eigen::Index n_params) {
  const auto& c = ctx.config;
  Eigen::VectorXd theta(n_params);
  if (c.init == "zero") {
    theta.setZero();
  } else if (c.init == "explicit") {
    if (static_cast<Eigen::Index>(c.theta0.size()) != n_params) {
      fail("theta0 has " + std::to_string(c.theta0.size()) +
           " entries, ansatz has " + std::to_string(n_params) + " parameters");
    }
    theta = Eigen::Map<const Eigen::VectorXd>(c.theta0.data(), n_params);
  } else {
    std::uniform_real_distribution<double> u(0.0, 2.0 * M_PI * c.init_scale);
    for (Eigen::Index i = 0; i < n_params; ++i) theta[i] = u(ctx.rng);
  }
  return theta;
}

std::vector<StateVector> reference_states(const Context& ctx) {
  std::vector<StateVector> refs;
  for (const auto& r : ctx.config.references) {
    refs.push_back(basis_state(ctx.h.n_qubits(), r));
  }
  return refs;
}

Json oracle_comparison(Context& ctx, const OrthogonalSet& set,
                       const Eigen::VectorXd& theta,
                       const Eigen::VectorXd& energies) {
  Json out = Json::array();
  for (int n = 0; n < set.size(); ++n) {
    const std::string& ref = ctx.config.references[static_cast<std::size_t>(n)];
    const Eigen::VectorXd& values = ctx.sector(hamming_weight(ref));
    const Eigen::Index idx = nearest_eigenvalue(values, energies[n]);
    const StateVector psi = prepare_state(
        set.circuit, theta, set.references[static_cast<std::size_t>(n)]);
    Json row;
    row["reference"] = ref;
    row["particle_number"] = hamming_weight(ref);
    row["eigen_index"] = idx;
    row["eigenvalue"] = values[idx];
    row["abs_error"] = std::abs(values[idx] - energies[n]);
    row["residual"] = eigenstate_residual(psi, ctx.h.polynomial());
    out.push_back(row);
  }
  return out;
}

int finish_descent(Context& ctx, const OrthogonalSet& set,
                   const Trajectory& t, Json extra) {
  write_file_atomic((ctx.out_dir / "trajectory.csv").string(),
                    trajectory_csv(t));
  Json j = header(ctx);
  j["references"] = ctx.config.references;
  j["n_params"] = set.circuit.n_params();
  for (auto& item : extra.items()) j[item.key()] = item.value();
  j["status"] = to_string(t.status);
  if (!t.message.empty()) j["message"] = t.message;
  j["iterations"] = t.records.empty() ? 0 : t.last().iteration;
  j["theta"] = to_std(t.theta);
  if (!t.records.empty()) {
    j["cost"] = t.last().cost;
    j["energies"] = to_std(t.last().energies);
    j["variances"] = to_std(t.last().variances);
    if (ctx.oracle_available) {
      j["oracle"] = oracle_comparison(ctx, set, t.theta, t.last().energies);
    }
  }
  write_json(ctx, j);
  ctx.log << to_string(ctx.config.mode) << ": " << to_string(t.status)
          << " after " << j["iterations"].get<int>() << " iterations\n";
  return t.status == RunStatus::kFailed ? kExitSolverFailure : kExitOk;
}

int run_spectrum(Context& ctx) {
  Json j = header(ctx);
  if (!ctx.oracle_available) {
    fail("spectrum mode needs at most " + std::to_string(kMaxDenseQubits) +
         " qubits");
  }
  const DenseOperator dense = to_dense(ctx.h.polynomial());
  j["eigenvalues"] = to_std(spectrum(dense).values);
  std::optional<int> particles = ctx.config.particle_number;
  if (!particles && !ctx.config.references.empty()) {
    particles = hamming_weight(ctx.config.references.front());
  }
  if (!particles && ctx.file.metadata.count("reference")) {
    particles = hamming_weight(ctx.file.metadata.at("reference"));
  }
  if (particles) {
    j["particle_number"] = *particles;
    j["sector_eigenvalues"] = to_std(ctx.sector(*particles));
  }
  write_json(ctx, j);
  ctx.log << "spectrum: " << dense.rows() << " eigenvalues\n";
  return kExitOk;
}

int run_survey(Context& ctx, bool embed) {
  const auto& c = ctx.config;
  const AnsatzCircuit circuit =
      build_ansatz(c.ansatz, ctx.h.n_qubits(), c.references.front());
  const StateVector ref = basis_state(ctx.h.n_qubits(), c.references.front());
  std::optional<Eigen::VectorXd> values;
  if (ctx.oracle_available) {
    values = ctx.sector(hamming_weight(c.references.front()));
  }
  const auto results =
      multi_start_survey(ctx.h, circuit, ref, c.survey, c.optimizer, ctx.rng,
                         values);
  Json j = header(ctx);
  j["references"] = c.references;
  j["n_params"] = circuit.n_params();
  j["acceptance_threshold"] = c.survey.acceptance_threshold;
  if (values) j["sector_eigenvalues"] = to_std(*values);
  Json starts = Json::array();
  std::set<Eigen::Index> found;
  int accepted = 0, failed = 0;
  for (const auto& r : results) {
    Json row;
    row["status"] = to_string(r.status);
    row["iterations"] = r.iterations;
    row["energy"] = r.energy;
    row["variance"] = r.variance;
    row["accepted"] = r.accepted;
    if (r.eigenvalue) {
      row["eigenvalue"] = *r.eigenvalue;
      row["eigen_index"] = *r.eigen_index;
    }
    row["theta"] = to_std(r.theta);
    starts.push_back(row);
    if (r.accepted) {
      ++accepted;
      if (r.eigen_index) found.insert(*r.eigen_index);
    }
    if (r.status == RunStatus::kFailed) ++failed;
  }
  j["n_starts"] = results.size();
  j["n_accepted"] = accepted;
  j["n_failed"] = failed;
  j["distinct_eigen_indices"] = std::vector<Eigen::Index>(found.begin(),
                                                          found.end());
  if (embed) {
    std::vector<Eigen::VectorXd> thetas;
    for (const auto& r : results) thetas.push_back(r.theta);
    if (thetas.size() < 3) fail("mds mode needs n_starts >= 3");
    const Embedding e = mds_embed(thetas);
    std::ostringstream csv;
    csv << "index,x,y,energy,variance,accepted,eigen_index\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto row = static_cast<Eigen::Index>(i);
      csv << i << ',' << format_double(e.coordinates(row, 0)) << ','
          << format_double(e.coordinates(row, 1)) << ','
          << format_double(results[i].energy) << ','
          << format_double(results[i].variance) << ','
          << (results[i].accepted ? 1 : 0) << ','
          << (results[i].eigen_index ? std::to_string(*results[i].eigen_index)
                                     : std::string())
          << '\n';
    }
    write_file_atomic((ctx.out_dir / "points.csv").string(), csv.str());
    j["mds"] = {{"degenerate", e.degenerate},
                {"eigenvalues", to_std(e.eigenvalues)}};
  }
  j["starts"] = starts;
  write_json(ctx, j);
  ctx.log << to_string(c.mode) << ": " << accepted << "/" << results.size()
          << " starts accepted\n";
  return failed == static_cast<int>(results.size()) ? kExitSolverFailure
                                                    : kExitOk;
}

int run_descent(Context& ctx) {
  const auto& c = ctx.config;
  const int n = ctx.h.n_qubits();
  AnsatzCircuit circuit = build_ansatz(c.ansatz, n, c.references.front());
  const Eigen::VectorXd theta0 = initial_theta(ctx, circuit.n_params());
  std::vector<StateVector> refs = reference_states(ctx);
  Json extra;
  switch (c.mode) {
    case Mode::kOrtho: {
      const OrthogonalSet set =
          OrthogonalSet::equal_weight(std::move(refs), std::move(circuit));
      const Trajectory t = minimize(
          variance_set_objective(set, ctx.h, c.optimizer.fd_step), theta0,
          c.optimizer);
      return finish_descent(ctx, set, t, extra);
    }
    case Mode::kSsvqe: {
      const int k = static_cast<int>(refs.size());
      Eigen::VectorXd w = descending_weights(k);
      if (c.weights) {
        w = Eigen::Map<const Eigen::VectorXd>(
            c.weights->data(), static_cast<Eigen::Index>(c.weights->size()));
      }
      const OrthogonalSet set = [&] {
        try {
          return OrthogonalSet::weighted(std::move(refs), std::move(circuit),
                                         w);
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }();
      extra["weights"] = to_std(set.weights);
      const Trajectory t = minimize(
          ssvqe_objective(set, ctx.h, c.optimizer.fd_step), theta0,
          c.optimizer);
      return finish_descent(ctx, set, t, extra);
    }
    case Mode::kMixed: {
      const OrthogonalSet set =
          OrthogonalSet::equal_weight(std::move(refs), std::move(circuit));
      extra["eta_v"] = *c.eta_v;
      const Trajectory t = minimize(
          mixed_objective(set, ctx.h, *c.eta_v, c.optimizer.fd_step), theta0,
          c.optimizer);
      return finish_descent(ctx, set, t, extra);
    }
    case Mode::kSgd: {
      const OrthogonalSet set =
          OrthogonalSet::equal_weight(std::move(refs), std::move(circuit));
      Json sched = Json::array();
      for (const auto& e : c.optimizer.schedule) {
        sched.push_back({e.start_iteration, e.rate});
      }
      extra["schedule"] = sched;
      const Trajectory t =
          minimize_sgd(set, ctx.h, theta0, c.optimizer, ctx.rng);
      return finish_descent(ctx, set, t, extra);
    }
    default:
      throw std::logic_error("not a descent mode");
  }
}

void validate_against(const ExperimentConfig& c, int n_qubits) {
  std::set<std::string> seen;
  for (const auto& r : c.references) {
    if (static_cast<int>(r.size()) != n_qubits) {
      fail("reference '" + r + "' has " + std::to_string(r.size()) +
           " bits, Hamiltonian has " + std::to_string(n_qubits) + " qubits");
    }
    if (r.find_first_not_of("01") != std::string::npos) {
      fail("reference '" + r + "' is not a bitstring");
    }
    if (!seen.insert(r).second) fail("duplicate reference '" + r + "'");
  }
  auto check_index = [&](int q) {
    if (q < 0 || q >= n_qubits) {
      fail("excitation index " + std::to_string(q) + " out of range");
    }
  };
  for (const auto& s : c.ansatz.singles) {
    for (int q : s) check_index(q);
  }
  for (const auto& d : c.ansatz.doubles) {
    for (int q : d) check_index(q);
  }
}

}  // namespace

std::optional<Mode> parse_mode(std::string_view name) {
  if (name == "ortho-variance") return Mode::kOrtho;
  for (const auto& [mode, text] : kModeNames) {
    if (text == name) return mode;
  }
  return std::nullopt;
}

std::string to_string(Mode mode) {
  for (const auto& [m, text] : kModeNames) {
    if (m == mode) return std::string(text);
  }
  return "unknown";
}

AnsatzCircuit build_ansatz(const AnsatzSpec& spec, int n_qubits,
                           std::string_view reference) {
  std::vector<SingleExcitation> singles = spec.singles;
  if (spec.singles_rule == "all_pairs") singles = all_pair_singles(n_qubits);
  std::vector<DoubleExcitation> doubles = spec.doubles;
  if (spec.doubles_rule == "pairing") {
    doubles = all_pairing_doubles(n_qubits);
  } else if (spec.doubles_rule == "occupied_to_virtual") {
    doubles = occupied_to_virtual_doubles(reference);
  }
  try {
    return build_ucc(singles, doubles, n_qubits, spec.options);
  } catch (const std::logic_error& e) {
    fail(std::string("invalid ansatz: ") + e.what());
  }
}

ExperimentConfig parse_config(std::string_view json_text,
                              std::optional<Mode> mode) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(doc, "config",
             {"mode", "hamiltonian", "references", "ansatz", "weights",
              "eta_v", "optimizer", "seed", "init", "init_scale", "survey",
              "particle_number"});
  ExperimentConfig c;
  std::optional<Mode> declared;
  if (doc.contains("mode")) {
    declared = parse_mode(get<std::string>(doc, "mode", ""));
    if (!declared) fail("unknown mode '" + doc["mode"].dump() + "'");
  }
  if (mode && declared && *mode != *declared) {
    fail("config mode '" + to_string(*declared) + "' conflicts with '" +
         to_string(*mode) + "'");
  }
  if (!mode && !declared) fail("no mode given");
  c.mode = mode ? *mode : *declared;
  c.hamiltonian = get<std::string>(doc, "hamiltonian", "");
  c.references = get<std::vector<std::string>>(doc, "references", {});
  if (doc.contains("ansatz")) c.ansatz = ansatz_from(doc["ansatz"]);
  if (doc.contains("weights")) {
    c.weights = get<std::vector<double>>(doc, "weights", {});
  }
  if (doc.contains("eta_v")) c.eta_v = non_negative(doc, "eta_v", 0.0);
  if (doc.contains("optimizer")) c.optimizer = optimizer_from(doc["optimizer"]);
  c.optimizer.seed = get<std::uint64_t>(doc, "seed", 0);
  if (doc.contains("init")) {
    const Json& init = doc["init"];
    if (init.is_array()) {
      c.init = "explicit";
      c.theta0 = get<std::vector<double>>(doc, "init", {});
    } else {
      c.init = get<std::string>(doc, "init", "uniform");
      if (c.init != "uniform" && c.init != "zero") {
        fail("'init' must be \"uniform\", \"zero\" or a list");
      }
    }
  }
  c.init_scale = positive(doc, "init_scale", 1.0);
  if (doc.contains("survey")) {
    const Json& s = doc["survey"];
    check_keys(s, "survey", {"n_starts", "acceptance_threshold"});
    c.survey.n_starts = get<int>(s, "n_starts", c.survey.n_starts);
    if (c.survey.n_starts < 1) fail("'n_starts' must be >= 1");
    c.survey.acceptance_threshold =
        positive(s, "acceptance_threshold", c.survey.acceptance_threshold);
  }
  if (doc.contains("particle_number")) {
    c.particle_number = get<int>(doc, "particle_number", 0);
    if (*c.particle_number < 0) fail("'particle_number' must be >= 0");
  }

  switch (c.mode) {
    case Mode::kSpectrum:
      break;
    case Mode::kSurvey:
    case Mode::kMds:
      if (c.references.size() != 1) fail("this mode needs exactly one reference");
      break;
    case Mode::kSsvqe:
      if (c.references.empty()) fail("'references' is required");
      if (c.weights && c.weights->size() != c.references.size()) {
        fail("'weights' must match 'references' in length");
      }
      break;
    case Mode::kMixed:
      if (c.references.empty()) fail("'references' is required");
      if (!c.eta_v) fail("mixed mode requires 'eta_v'");
      break;
    case Mode::kOrtho:
    case Mode::kSgd:
      if (c.references.empty()) fail("'references' is required");
      break;
  }
  if (c.mode != Mode::kSgd &&
      (c.optimizer.schedule.size() != 1 ||
       c.optimizer.schedule.front().rate != 1.0)) {
    fail("'schedule' only applies to sgd mode");
  }
  return c;
}

ExperimentConfig load_config(const std::string& path, std::optional<Mode> mode) {
  std::ifstream in(path);
  if (!in) fail("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), mode);
}

std::string trajectory_csv(const Trajectory& trajectory) {
  std::ostringstream out;
  const Eigen::Index k =
      trajectory.records.empty() ? 0 : trajectory.records.front().energies.size();
  out << "iteration,cost";
  for (Eigen::Index n = 0; n < k; ++n) out << ",E_" << n;
  for (Eigen::Index n = 0; n < k; ++n) out << ",D_" << n;
  out << ",s\n";
  for (const auto& r : trajectory.records) {
    out << r.iteration << ',' << format_double(r.cost);
    for (Eigen::Index n = 0; n < k; ++n) out << ',' << format_double(r.energies[n]);
    for (Eigen::Index n = 0; n < k; ++n) out << ',' << format_double(r.variances[n]);
    out << ',' << format_double(r.rate) << '\n';
  }
  return out.str();
}

int run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                   std::ostream& log) {
  HamiltonianFile file;
  try {
    if (config.hamiltonian.empty()) fail("no Hamiltonian given");
    file = load_hamiltonian(config.hamiltonian);
    if (!file.polynomial.is_hermitian()) fail("Hamiltonian is not Hermitian");
    validate_against(config, file.polynomial.n_qubits());
    std::filesystem::create_directories(out_dir);
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }

  try {
    const Hamiltonian h(file.polynomial);
    Context ctx{config,
                file,
                h,
                out_dir,
                log,
                std::mt19937_64(config.optimizer.seed),
                {},
                h.n_qubits() <= kMaxDenseQubits};
    switch (config.mode) {
      case Mode::kSpectrum:
        return run_spectrum(ctx);
      case Mode::kSurvey:
        return run_survey(ctx, false);
      case Mode::kMds:
        return run_survey(ctx, true);
      default:
        return run_descent(ctx);
    }
  } catch (const ConfigError& e) {
    log << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    log << "solver failure: " << e.what() << '\n';
    return kExitSolverFailure;
  }
}

}  // namespace vvqe
