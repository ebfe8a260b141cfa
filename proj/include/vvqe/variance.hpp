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
#include <random>
#include <vector>

#include "vvqe/pauli.hpp"
#include "vvqe/state.hpp"
#include "vvqe/ucc.hpp"

namespace vvqe {

/**
 * Hermitian Hamiltonian H = sum_i c_i L_i prepared for variance evaluation.
 *
 * The term list follows the canonical polynomial order and keeps the
 * identity string when present, so |c|^2 = Tr[H^2] / 2^n. Its covariance row
 * is identically zero. H^2 is precomputed once for the fast variance path.
 */
class Hamiltonian {
 public:
  explicit Hamiltonian(PauliPolynomial h);

  const PauliPolynomial& polynomial() const { return h_; }
  const PauliPolynomial& squared() const { return h_squared_; }
  const CompiledPauliSum& compiled() const { return compiled_h_; }
  const CompiledPauliSum& compiled_squared() const { return compiled_h2_; }
  int n_qubits() const { return h_.n_qubits(); }
  double identity_coefficient() const { return identity_; }

  /// Pauli terms L_i, identity included.
  const std::vector<PauliString>& terms() const { return strings_; }
  /// Coefficients c_i matching terms().
  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  Eigen::Index n_terms() const { return coefficients_.size(); }

 private:
  PauliPolynomial h_;
  PauliPolynomial h_squared_;
  CompiledPauliSum compiled_h_;
  CompiledPauliSum compiled_h2_;
  std::vector<PauliString> strings_;
  Eigen::VectorXd coefficients_;
  double identity_ = 0.0;
};

/// G_ij = <L_i L_j> - <L_i><L_j>; Hermitian and positive semidefinite.
using CovarianceMatrix = Eigen::MatrixXcd;

double energy(const StateVector& state, const Hamiltonian& h);

/// <L_i> for every term.
Eigen::VectorXd term_expectations(const StateVector& state,
                                  const Hamiltonian& h);

CovarianceMatrix covariance_matrix(const StateVector& state,
                                   const Hamiltonian& h);

/// Covariance restricted to rows/columns `indices` (in that order).
CovarianceMatrix covariance_matrix(const StateVector& state,
                                   const Hamiltonian& h,
                                   const std::vector<int>& indices);

/// <H^2> - <H>^2 through the precomputed H^2.
double variance(const StateVector& state, const Hamiltonian& h);

/// c^T Re(G) c.
double covariance_quadratic_form(const CovarianceMatrix& g,
                                 const Eigen::VectorXd& c);

struct SampleMask {
  int n_terms = 0;
  /// Sorted, distinct term indices.
  std::vector<int> kept;
  double rate = 1.0;
  std::uint64_t seed = 0;
};

/// max(1, round(rate * n_terms)) indices drawn uniformly without replacement.
SampleMask draw_mask(int n_terms, double rate, std::mt19937_64& rng);
SampleMask draw_mask(int n_terms, double rate, std::uint64_t seed);
SampleMask full_mask(int n_terms);

/// (|c|^2 / |c~|^2) c~^T G c~ with c~ the coefficients kept by the mask.
/// Only |kept|^2 covariance entries are evaluated.
double sampled_variance(const StateVector& state, const Hamiltonian& h,
                        const SampleMask& mask);

/// Scalar cost of a parameter vector.
using CostFunction = std::function<double(const Eigen::VectorXd&)>;

/// Default central-difference step, in radians.
inline constexpr double kDefaultFdStep = 1e-5;

/// Central differences (f(x + h e_k) - f(x - h e_k)) / 2h. Throws
/// std::domain_error if a probe value is not finite.
Eigen::VectorXd central_difference(const CostFunction& f,
                                   const Eigen::VectorXd& x,
                                   double step = kDefaultFdStep);

Eigen::VectorXd variance_gradient(const AnsatzCircuit& circuit,
                                  const Eigen::VectorXd& params,
                                  const StateVector& reference,
                                  const Hamiltonian& h,
                                  double step = kDefaultFdStep);

Eigen::VectorXd energy_gradient(const AnsatzCircuit& circuit,
                                const Eigen::VectorXd& params,
                                const StateVector& reference,
                                const Hamiltonian& h,
                                double step = kDefaultFdStep);

/// The mask is held fixed across both probes of every component.
Eigen::VectorXd sampled_variance_gradient(const AnsatzCircuit& circuit,
                                          const Eigen::VectorXd& params,
                                          const StateVector& reference,
                                          const Hamiltonian& h,
                                          const SampleMask& mask,
                                          double step = kDefaultFdStep);

}  // namespace vvqe
