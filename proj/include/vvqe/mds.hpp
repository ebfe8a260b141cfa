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
#include <vector>

namespace vvqe {

/// sum_i (1 - cos(a_i - b_i)); zero iff a == b modulo 2 pi componentwise.
double periodic_dissimilarity(const Eigen::VectorXd& a,
                              const Eigen::VectorXd& b);

/// Symmetric matrix of periodic dissimilarities.
Eigen::MatrixXd dissimilarity_matrix(const std::vector<Eigen::VectorXd>& points);

struct Embedding {
  /// One row per input point.
  Eigen::MatrixXd coordinates;
  /// Leading eigenvalues of the double-centred Gram matrix.
  Eigen::VectorXd eigenvalues;
  /// Set when every dissimilarity vanishes; all points then sit at the
  /// origin.
  bool degenerate = false;
};

/// Classical (Torgerson) MDS of a dissimilarity matrix, treating entries as
/// distances: B = -1/2 J D.^2 J, coordinates from the top `dims` eigenpairs.
Embedding classical_mds(const Eigen::MatrixXd& dissimilarity, int dims = 2);

/// classical_mds(dissimilarity_matrix(thetas)). Needs >= 3 points of equal
/// length.
Embedding mds_embed(const std::vector<Eigen::VectorXd>& thetas);

}  // namespace vvqe
