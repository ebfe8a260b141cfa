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

#include "vvqe/variance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace vvqe {

namespace {

PauliPolynomial checked_square(const PauliPolynomial& h) {
  if (!h.is_hermitian()) {
    throw std::invalid_argument("Hamiltonian must be Hermitian");
  }
  PauliPolynomial sq = poly_mul(h, h);
  for (const auto& [s, c] : sq.terms()) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::overflow_error("H^2 has non-finite coefficients");
    }
  }
  return sq;
}

}  // namespace

Hamiltonian::Hamiltonian(PauliPolynomial h)
    : h_(std::move(h)),
      h_squared_(checked_square(h_)),
      compiled_h_(h_),
      compiled_h2_(h_squared_) {
  std::vector<double> coeffs;
  for (const auto& [s, c] : h_.terms()) {
    if (s.is_identity()) identity_ = c.real();
    strings_.push_back(s);
    coeffs.push_back(c.real());
  }
  coefficients_ = Eigen::Map<const Eigen::VectorXd>(
      coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
}

double energy(const StateVector& state, const Hamiltonian& h) {
  return h.compiled().expectation(state);
}

Eigen::VectorXd term_expectations(const StateVector& state,
                                  const Hamiltonian& h) {
  Eigen::VectorXd out(h.n_terms());
  for (Eigen::Index i = 0; i < h.n_terms(); ++i) {
    out[i] = expectation(state, h.terms()[static_cast<std::size_t>(i)]);
  }
  return out;
}

CovarianceMatrix covariance_matrix(const StateVector& state,
                                   const Hamiltonian& h,
                                   const std::vector<int>& indices) {
  const auto n = static_cast<Eigen::Index>(indices.size());
  const auto& terms = h.terms();
  Eigen::VectorXd means(n);
  for (Eigen::Index a = 0; a < n; ++a) {
    means[a] = expectation(state, terms.at(static_cast<std::size_t>(indices[a])));
  }
  CovarianceMatrix g(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    const auto& la = terms[static_cast<std::size_t>(indices[a])];
    for (Eigen::Index b = a; b < n; ++b) {
      const auto& lb = terms[static_cast<std::size_t>(indices[b])];
      auto [s, phase] = pauli_mul(la, lb);
      g(a, b) = phase.value() * expectation(state, s) - means[a] * means[b];
      if (b != a) g(b, a) = std::conj(g(a, b));
    }
  }
  return g;
}

CovarianceMatrix covariance_matrix(const StateVector& state,
                                   const Hamiltonian& h) {
  std::vector<int> all(static_cast<std::size_t>(h.n_terms()));
  std::iota(all.begin(), all.end(), 0);
  return covariance_matrix(state, h, all);
}

double variance(const StateVector& state, const Hamiltonian& h) {
  const double e = energy(state, h);
  return h.compiled_squared().expectation(state) - e * e;
}

double covariance_quadratic_form(const CovarianceMatrix& g,
                                 const Eigen::VectorXd& c) {
  return c.dot(g.real() * c);
}

SampleMask draw_mask(int n_terms, double rate, std::mt19937_64& rng) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("sampling rate must lie in (0, 1], got " +
                                std::to_string(rate));
  }
  if (n_terms < 1) throw std::invalid_argument("mask needs at least one term");
  const int size = std::clamp(
      static_cast<int>(std::lround(rate * n_terms)), 1, n_terms);
  std::vector<int> indices(static_cast<std::size_t>(n_terms));
  std::iota(indices.begin(), indices.end(), 0);
  // Partial Fisher-Yates; the first `size` slots are the sample.
  for (int i = 0; i < size; ++i) {
    std::uniform_int_distribution<int> pick(i, n_terms - 1);
    std::swap(indices[static_cast<std::size_t>(i)],
              indices[static_cast<std::size_t>(pick(rng))]);
  }
  indices.resize(static_cast<std::size_t>(size));
  std::sort(indices.begin(), indices.end());
  return {n_terms, std::move(indices), rate, 0};
}

SampleMask draw_mask(int n_terms, double rate, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampleMask mask = draw_mask(n_terms, rate, rng);
  mask.seed = seed;
  return mask;
}

SampleMask full_mask(int n_terms) {
  SampleMask mask;
  mask.n_terms = n_terms;
  mask.kept.resize(static_cast<std::size_t>(n_terms));
  std::iota(mask.kept.begin(), mask.kept.end(), 0);
  return mask;
}

double sampled_variance(const StateVector& state, const Hamiltonian& h,
                        const SampleMask& mask) {
  if (mask.n_terms != h.n_terms()) {
    throw std::invalid_argument("mask size does not match Hamiltonian terms");
  }
  if (mask.kept.empty()) throw std::invalid_argument("empty sample mask");
  const auto& c = h.coefficients();
  Eigen::VectorXd kept(static_cast<Eigen::Index>(mask.kept.size()));
  for (std::size_t a = 0; a < mask.kept.size(); ++a) {
    const int i = mask.kept[a];
    if (i < 0 || i >= mask.n_terms) {
      throw std::out_of_range("mask index " + std::to_string(i) +
                              " out of range");
    }
    kept[static_cast<Eigen::Index>(a)] = c[i];
  }
  const double kept_norm_sq = kept.squaredNorm();
  if (kept_norm_sq == 0.0) {
    throw std::invalid_argument("sample mask keeps only zero coefficients");
  }
  const CovarianceMatrix g = covariance_matrix(state, h, mask.kept);
  return c.squaredNorm() / kept_norm_sq * covariance_quadratic_form(g, kept);
}

Eigen::VectorXd central_difference(const CostFunction& f,
                                   const Eigen::VectorXd& x, double step) {
  Eigen::VectorXd grad(x.size());
  Eigen::VectorXd probe = x;
  for (Eigen::Index k = 0; k < x.size(); ++k) {
    probe[k] = x[k] + step;
    const double up = f(probe);
    probe[k] = x[k] - step;
    const double down = f(probe);
    probe[k] = x[k];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw std::domain_error("non-finite cost at finite-difference probe " +
                              std::to_string(k));
    }
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

namespace {

template <typename StateCost>
Eigen::VectorXd circuit_gradient(const AnsatzCircuit& circuit,
                                 const Eigen::VectorXd& params,
                                 const StateVector& reference, double step,
                                 StateCost cost) {
  const ProbeCache cache(circuit, params, reference);
  Eigen::VectorXd grad(params.size());
  Eigen::VectorXd probe = params;
  for (Eigen::Index k = 0; k < params.size(); ++k) {
    probe[k] = params[k] + step;
    const double up = cost(cache.probe(probe, k));
    probe[k] = params[k] - step;
    const double down = cost(cache.probe(probe, k));
    probe[k] = params[k];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw std::domain_error("non-finite cost at finite-difference probe " +
                              std::to_string(k));
    }
    grad[k] = (up - down) / (2.0 * step);
  }
  return grad;
}

}  // namespace

Eigen::VectorXd variance_gradient(const AnsatzCircuit& circuit,
                                  const Eigen::VectorXd& params,
                                  const StateVector& reference,
                                  const Hamiltonian& h, double step) {
  return circuit_gradient(
      circuit, params, reference, step,
      [&](const StateVector& psi) { return variance(psi, h); });
}

Eigen::VectorXd energy_gradient(const AnsatzCircuit& circuit,
                                const Eigen::VectorXd& params,
                                const StateVector& reference,
                                const Hamiltonian& h, double step) {
  return circuit_gradient(
      circuit, params, reference, step,
      [&](const StateVector& psi) { return energy(psi, h); });
}

Eigen::VectorXd sampled_variance_gradient(const AnsatzCircuit& circuit,
                                          const Eigen::VectorXd& params,
                                          const StateVector& reference,
                                          const Hamiltonian& h,
                                          const SampleMask& mask,
                                          double step) {
  return circuit_gradient(
      circuit, params, reference, step,
      [&](const StateVector& psi) { return sampled_variance(psi, h, mask); });
}

}  // namespace vvqe
