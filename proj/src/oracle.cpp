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

#include "vvqe/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vvqe {

namespace {

void check_dimension(int n_qubits) {
  if (n_qubits > kMaxDenseQubits) {
    throw std::length_error("dense oracle limited to 12 qubits, got " +
                            std::to_string(n_qubits));
  }
}

}  // namespace

DenseOperator to_dense(const PauliString& p) {
  check_dimension(p.n_qubits());
  using Mat2 = Eigen::Matrix2cd;
  const Complex i{0.0, 1.0};
  const Mat2 id = Mat2::Identity();
  const Mat2 x = (Mat2() << 0, 1, 1, 0).finished();
  const Mat2 y = (Mat2() << 0, -i, i, 0).finished();
  const Mat2 z = (Mat2() << 1, 0, 0, -1).finished();
  std::vector<Mat2> factors;
  for (int q = 0; q < p.n_qubits(); ++q) {
    switch (p.op(q)) {
      case Pauli::I: factors.push_back(id); break;
      case Pauli::X: factors.push_back(x); break;
      case Pauli::Y: factors.push_back(y); break;
      case Pauli::Z: factors.push_back(z); break;
    }
  }
  // <r|P|c> = prod_q P_q[r_q, c_q] with qubit q at bit q.
  const Eigen::Index dim = Eigen::Index{1} << p.n_qubits();
  DenseOperator out(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      Complex entry{1.0, 0.0};
      for (int q = 0; q < p.n_qubits() && entry != Complex{0.0, 0.0}; ++q) {
        entry *= factors[static_cast<std::size_t>(q)]((r >> q) & 1, (c >> q) & 1);
      }
      out(r, c) = entry;
    }
  }
  return out;
}

DenseOperator to_dense(const PauliPolynomial& a) {
  check_dimension(a.n_qubits());
  const Eigen::Index dim = Eigen::Index{1} << a.n_qubits();
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (const auto& [s, c] : a.terms()) out += c * to_dense(s);
  return out;
}

Spectrum spectrum(const DenseOperator& a, std::optional<int> particle_number) {
  if (a.rows() != a.cols()) throw std::invalid_argument("operator not square");
  if ((a - a.adjoint()).norm() > 1e-10 * std::max(1.0, a.norm())) {
    throw std::invalid_argument("spectrum requires a Hermitian operator");
  }
  if (!particle_number) {
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(a);
    return {solver.eigenvalues(), solver.eigenvectors()};
  }
  std::vector<Eigen::Index> basis;
  for (Eigen::Index b = 0; b < a.rows(); ++b) {
    if (std::popcount(static_cast<std::uint64_t>(b)) == *particle_number) {
      basis.push_back(b);
    }
  }
  const auto m = static_cast<Eigen::Index>(basis.size());
  if (m == 0) return {Eigen::VectorXd(0), Eigen::MatrixXcd(a.rows(), 0)};
  DenseOperator block(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) block(i, j) = a(basis[i], basis[j]);
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(block);
  Eigen::MatrixXcd vectors = Eigen::MatrixXcd::Zero(a.rows(), m);
  for (Eigen::Index i = 0; i < m; ++i) {
    vectors.row(basis[i]) = solver.eigenvectors().row(i);
  }
  return {solver.eigenvalues(), vectors};
}

double eigenstate_residual(const StateVector& state, const DenseOperator& h) {
  const Eigen::VectorXcd& psi = state.amplitudes();
  const Eigen::VectorXcd h_psi = h * psi;
  const Complex mean = psi.dot(h_psi);
  return (h_psi - mean.real() * psi).norm();
}

double eigenstate_residual(const StateVector& state, const PauliPolynomial& h) {
  return eigenstate_residual(state, to_dense(h));
}

Eigen::Index nearest_eigenvalue(const Eigen::VectorXd& values, double value) {
  Eigen::Index best = 0;
  (values.array() - value).abs().minCoeff(&best);
  return best;
}

}  // namespace vvqe
