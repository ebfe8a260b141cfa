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


#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "vvqe/ucc.hpp"

namespace vvqe {
namespace {

using testing::fermion_double;
using testing::fermion_single;
using testing::Mat;
using testing::poly_matrix;
using testing::Vec;

const char* kTwoElectronRefs[] = {"0011", "0101", "1001", "0110", "1010", "1100"};

Eigen::VectorXd random_params(int k, double scale, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Eigen::VectorXd v(k);
  for (auto& x : v) x = u(rng);
  return v;
}

AnsatzCircuit h2_circuit(const UccOptions& options = {}) {
  return build_ucc(all_pair_singles(4), all_pairing_doubles(4), 4, options);
}

TEST(JwSingle, AntiHermitianTwoTerms) {
  const auto g = jw_single(0, 1, 2);
  EXPECT_TRUE(g.is_anti_hermitian());
  EXPECT_EQ(g.size(), 2u);
  const Mat d = poly_matrix(g);
  EXPECT_LT((d + d.adjoint()).norm(), 1e-15);
}

TEST(JwSingle, ZStringBetweenEndpoints) {
  const auto g = jw_single(1, 4, 6);
  for (const auto& [s, c] : g.terms()) {
    EXPECT_EQ(s.op(0), Pauli::I);
    EXPECT_EQ(s.op(5), Pauli::I);
    EXPECT_EQ(s.op(2), Pauli::Z);
    EXPECT_EQ(s.op(3), Pauli::Z);
    EXPECT_NE(s.op(1), Pauli::Z);
    EXPECT_NE(s.op(4), Pauli::Z);
    EXPECT_EQ(c.real(), 0.0);
  }
}

TEST(JwSingle, MatchesFermionicOracle) {
  EXPECT_LT((poly_matrix(jw_single(0, 2, 3)) - fermion_single(0, 2, 3)).norm(),
            1e-14);
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      if (p == q) continue;
      EXPECT_LT((poly_matrix(jw_single(p, q, 4)) - fermion_single(p, q, 4)).norm(),
                1e-14);
    }
  }
}

TEST(JwSingle, ExponentialConservesParticleNumber) {
  const Mat n_op = testing::number_operator(4);
  const Mat u = (0.7 * poly_matrix(jw_single(0, 3, 4))).exp();
  EXPECT_LT((u * n_op - n_op * u).norm(), 1e-12);
}

TEST(JwDouble, MatchesFermionicOracleOnFourQubits) {
  const int tuples[][4] = {{0, 1, 2, 3}, {2, 3, 0, 1}, {0, 2, 1, 3},
                           {3, 1, 0, 2}, {1, 0, 3, 2}, {0, 3, 1, 2}};
  for (const auto& t : tuples) {
    const auto g = jw_double(t[0], t[1], t[2], t[3], 4);
    EXPECT_TRUE(g.is_anti_hermitian());
    EXPECT_EQ(g.size(), 8u);
    EXPECT_LT((poly_matrix(g) - fermion_double(t[0], t[1], t[2], t[3], 4)).norm(),
              1e-14);
  }
}

TEST(JwDouble, ExponentialConservesParticleNumber) {
  const Mat n_op = testing::number_operator(5);
  const Mat u = (1.3 * poly_matrix(jw_double(4, 1, 0, 3, 5))).exp();
  EXPECT_LT((u * n_op - n_op * u).norm(), 1e-11);
}

TEST(Jw, InvalidIndicesThrow) {
  EXPECT_THROW(jw_single(1, 1, 3), std::invalid_argument);
  EXPECT_THROW(jw_single(0, 3, 3), std::out_of_range);
  EXPECT_THROW(jw_double(0, 1, 1, 2, 4), std::invalid_argument);
  EXPECT_THROW(jw_double(0, 1, 2, 4, 4), std::out_of_range);
  EXPECT_THROW(jw_single(-1, 0, 3), std::out_of_range);
}

TEST(Jw, GeneratorTermsMutuallyCommute) {
  std::vector<PauliPolynomial> gens;
  for (const auto& s : all_pair_singles(6)) gens.push_back(jw_single(s[0], s[1], 6));
  for (const auto& d : all_pairing_doubles(6)) {
    gens.push_back(jw_double(d[0], d[1], d[2], d[3], 6));
  }
  for (const auto& g : gens) {
    for (const auto& [a, ca] : g.terms()) {
      for (const auto& [b, cb] : g.terms()) EXPECT_TRUE(a.commutes_with(b));
    }
  }
}

TEST(Enumeration, Counts) {
  EXPECT_EQ(all_pair_singles(4).size(), 6u);
  EXPECT_EQ(all_pairing_doubles(4).size(), 3u);
  EXPECT_EQ(all_pair_singles(6).size(), 15u);
  EXPECT_EQ(occupied_to_virtual_doubles("000011").size(), 6u);
  EXPECT_EQ(occupied_to_virtual_doubles("0011").size(), 1u);
}

TEST(Enumeration, OccupiedToVirtualMovesElectrons) {
  const auto ref = basis_state(6, "000011");
  for (const auto& d : occupied_to_virtual_doubles("000011")) {
    const Mat g = fermion_double(d[0], d[1], d[2], d[3], 6);
    const Vec out = g * ref.amplitudes();
    EXPECT_GT(out.norm(), 0.5);
  }
}

TEST(BuildUcc, ParameterCounts) {
  EXPECT_EQ(h2_circuit().n_params(), 9);
  const auto h4 = build_ucc(all_pair_singles(6),
                            occupied_to_virtual_doubles("000011"), 6);
  EXPECT_EQ(h4.n_params(), 21);
  EXPECT_EQ(h2_circuit({.trotter_steps = 3}).n_params(), 9);
  EXPECT_EQ(h2_circuit({.trotter_steps = 3, .independent_steps = true}).n_params(),
            27);
  EXPECT_THROW(h2_circuit({.trotter_steps = 0}), std::invalid_argument);
}

TEST(BuildUcc, GateAnglesFollowConvention) {
  const auto c = h2_circuit({.trotter_steps = 2});
  Eigen::VectorXd theta = Eigen::VectorXd::LinSpaced(9, 0.1, 0.9);
  for (std::size_t g = 0; g < c.gates().size(); ++g) {
    const auto& gate = c.gates()[g];
    EXPECT_DOUBLE_EQ(c.angle(g, theta),
                     -2.0 * gate.coefficient * 0.5 * theta[gate.param_index]);
  }
}

TEST(PrepareState, ZeroParamsGiveReference) {
  const auto c = h2_circuit();
  const auto ref = basis_state(4, "0011");
  const auto out = prepare_state(c, Eigen::VectorXd::Zero(9), ref);
  EXPECT_EQ((out.amplitudes() - ref.amplitudes()).norm(), 0.0);
  EXPECT_THROW(prepare_state(c, Eigen::VectorXd::Zero(8), ref),
               std::invalid_argument);
}

TEST(PrepareState, EmptyCircuitIsIdentity) {
  const auto c = build_ucc({}, {}, 4);
  EXPECT_EQ(c.n_params(), 0);
  const auto ref = basis_state(4, "0101");
  EXPECT_EQ(prepare_state(c, Eigen::VectorXd(0), ref).amplitudes(),
            ref.amplitudes());
}

TEST(PrepareState, MatchesOrderedDenseExponentials) {
  std::mt19937_64 rng(1);
  const auto singles = all_pair_singles(4);
  const auto doubles = all_pairing_doubles(4);
  const auto c = build_ucc(singles, doubles, 4);
  const Eigen::VectorXd theta = random_params(9, 3.0, rng);
  const auto ref = basis_state(4, "0011");
  const Vec expected =
      testing::dense_ucc_state(singles, doubles, 4, theta, ref.amplitudes());
  EXPECT_LT((prepare_state(c, theta, ref).amplitudes() - expected).norm(), 1e-12);
}

TEST(PrepareState, TrotterConsistency) {
  std::mt19937_64 rng(2);
  const auto singles = all_pair_singles(4);
  const auto doubles = all_pairing_doubles(4);
  const Eigen::VectorXd direction = random_params(9, 1.0, rng);
  const auto ref = basis_state(4, "0011");
  auto errors = [&](double eps) {
    const Eigen::VectorXd theta = eps * direction;
    Mat sum = Mat::Zero(16, 16);
    int t = 0;
    for (const auto& s : singles) sum += theta[t++] * fermion_single(s[0], s[1], 4);
    for (const auto& d : doubles) {
      sum += theta[t++] * fermion_double(d[0], d[1], d[2], d[3], 4);
    }
    const Vec exact = sum.exp() * ref.amplitudes();
    const double e1 =
        (prepare_state(build_ucc(singles, doubles, 4, {.trotter_steps = 1}),
                       theta, ref).amplitudes() - exact).norm();
    const double e4 =
        (prepare_state(build_ucc(singles, doubles, 4, {.trotter_steps = 4}),
                       theta, ref).amplitudes() - exact).norm();
    return std::pair{e1, e4};
  };
  const auto [a1, a4] = errors(0.02);
  const auto [b1, b4] = errors(0.01);
  EXPECT_LT(a1, 0.02 * 0.02 * 10);
  EXPECT_LT(a4, a1);
  EXPECT_NEAR(a1 / b1, 4.0, 0.5);
  EXPECT_LT(b4, b1);
}

TEST(PrepareState, IndependentStepsWithSharedValuesMatchShared) {
  std::mt19937_64 rng(3);
  const Eigen::VectorXd theta = random_params(9, 2.0, rng);
  const auto shared = h2_circuit({.trotter_steps = 3});
  const auto indep = h2_circuit({.trotter_steps = 3, .independent_steps = true});
  Eigen::VectorXd per_step(27);
  per_step << theta / 3, theta / 3, theta / 3;
  const auto ref = basis_state(4, "0011");
  EXPECT_LT((prepare_state(shared, theta, ref).amplitudes() -
             prepare_state(indep, per_step, ref).amplitudes()).norm(),
            1e-13);
}

TEST(PrepareState, ConservesParticleNumberAndOrthogonality) {
  std::mt19937_64 rng(4);
  const auto c = h2_circuit();
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::VectorXd theta = random_params(9, 6.3, rng);
    std::vector<StateVector> out;
    for (const char* r : kTwoElectronRefs) {
      out.push_back(prepare_state(c, theta, basis_state(4, r)));
      EXPECT_NEAR(particle_number(out.back()), 2.0, 1e-10);
      EXPECT_NEAR(out.back().norm(), 1.0, 1e-12);
    }
    Mat gram(6, 6);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) gram(i, j) = out[i].inner(out[j]);
    }
    EXPECT_LT((gram - Mat::Identity(6, 6)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(ProbeCache, ProbesMatchFullPreparation) {
  std::mt19937_64 rng(5);
  const auto c = build_ucc(all_pair_singles(6),
                           occupied_to_virtual_doubles("000011"), 6,
                           {.trotter_steps = 2});
  const Eigen::VectorXd theta = random_params(21, 3.0, rng);
  const auto ref = basis_state(6, "000011");
  const ProbeCache cache(c, theta, ref);
  for (Eigen::Index j = 0; j < 21; ++j) {
    Eigen::VectorXd shifted = theta;
    shifted[j] += 0.3;
    EXPECT_EQ(cache.probe(shifted, j).amplitudes(),
              prepare_state(c, shifted, ref).amplitudes());
  }
}

}  // namespace
}  // namespace vvqe
