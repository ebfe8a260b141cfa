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


#include "vvqe/mds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vvqe {

double periodic_dissimilarity(const Eigen::VectorXd& a,
                              const Eigen::VectorXd& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("parameter vectors differ in length");
  }
  return (1.0 - (a - b).array().cos()).sum();
}

Eigen::MatrixXd dissimilarity_matrix(
    const std::vector<Eigen::VectorXd>& points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i + 1; j < m; ++j) {
      d(i, j) = d(j, i) = periodic_dissimilarity(
          points[static_cast<std::size_t>(i)],
          points[static_cast<std::size_t>(j)]);
    }
  }
  return d;
}

Embedding classical_mds(const Eigen::MatrixXd& dissimilarity, int dims) {
  const Eigen::Index m = dissimilarity.rows();
  if (m != dissimilarity.cols()) {
    throw std::invalid_argument("dissimilarity matrix must be square");
  }
  if (dims < 1 || dims > m) {
    throw std::invalid_argument("embedding dimension out of range");
  }
  if ((dissimilarity - dissimilarity.transpose()).cwiseAbs().maxCoeff() >
      1e-12 * std::max(1.0, dissimilarity.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("dissimilarity matrix must be symmetric");
  }
  Embedding out;
  out.coordinates = Eigen::MatrixXd::Zero(m, dims);
  out.eigenvalues = Eigen::VectorXd::Zero(dims);
  if (dissimilarity.cwiseAbs().maxCoeff() == 0.0) {
    out.degenerate = true;
    return out;
  }
  const Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(m, m) -
      Eigen::MatrixXd::Constant(m, m, 1.0 / static_cast<double>(m));
  const Eigen::MatrixXd b =
      -0.5 * j * dissimilarity.array().square().matrix() * j;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(b);
  for (int k = 0; k < dims; ++k) {
    const Eigen::Index col = m - 1 - k;
    const double lambda = eig.eigenvalues()[col];
    out.eigenvalues[k] = lambda;
    if (lambda <= 0.0) continue;
    Eigen::VectorXd v = eig.eigenvectors().col(col);
    const Eigen::Index pivot = [&] {
      Eigen::Index idx;
      v.cwiseAbs().maxCoeff(&idx);
      return idx;
    }();
    if (v[pivot] < 0.0) v = -v;
    out.coordinates.col(k) = std::sqrt(lambda) * v;
  }
  return out;
}

Embedding mds_embed(const std::vector<Eigen::VectorXd>& thetas) {
  if (thetas.size() < 3) {
    throw std::invalid_argument("MDS needs at least 3 points");
  }
  for (const auto& t : thetas) {
    if (t.size() != thetas.front().size()) {
      throw std::invalid_argument("parameter vectors differ in length");
    }
  }
  return classical_mds(dissimilarity_matrix(thetas), 2);
}

}  // namespace vvqe
