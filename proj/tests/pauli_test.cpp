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
#include "vvqe/io.hpp"
#include "vvqe/pauli.hpp"

namespace vvqe {
namespace {

using testing::label_matrix;
using testing::Mat;
using testing::poly_matrix;

std::string all_labels_code(int code, int n) {
  std::string label;
  for (int q = 0; q < n; ++q) label += "IXYZ"[(code >> (2 * q)) & 3];
  return label;
}

TEST(PauliString, LabelRoundTrip) {
  const auto s = PauliString::from_label("XIZY");
  EXPECT_EQ(s.n_qubits(), 4);
  EXPECT_EQ(s.op(0), Pauli::X);
  EXPECT_EQ(s.op(1), Pauli::I);
  EXPECT_EQ(s.op(2), Pauli::Z);
  EXPECT_EQ(s.op(3), Pauli::Y);
  EXPECT_EQ(s.label(), "XIZY");
  EXPECT_EQ(s.sparse_label(), "X0 Z2 Y3");
  EXPECT_EQ(s.weight(), 3);
  EXPECT_EQ(s.y_count(), 1);
}

TEST(PauliString, FromOpsRejectsRepeatsAndRange) {
  EXPECT_THROW(PauliString::from_ops(2, {{0, Pauli::X}, {0, Pauli::Z}}),
               std::invalid_argument);
  EXPECT_THROW(PauliString::from_ops(2, {{2, Pauli::X}}), std::out_of_range);
  EXPECT_THROW(PauliString(0), std::invalid_argument);
  EXPECT_THROW(PauliString::from_label("XQ"), std::invalid_argument);
}

TEST(PauliString, EqualityIsPerQubit) {
  EXPECT_EQ(PauliString::from_label("XZ"),
            PauliString::from_ops(2, {{1, Pauli::Z}, {0, Pauli::X}}));
  EXPECT_NE(PauliString::from_label("XZ"), PauliString::from_label("ZX"));
  EXPECT_TRUE(PauliString(3).is_identity());
}

TEST(PauliMul, XTimesYIsIZ) {
  const auto [s, phase] =
      pauli_mul(PauliString::from_label("X"), PauliString::from_label("Y"));
  EXPECT_EQ(s, PauliString::from_label("Z"));
  EXPECT_EQ(phase.value(), Complex(0, 1));
}

TEST(PauliMul, IdentityIsNeutral) {
  const auto b = PauliString::from_label("XYZ");
  const auto [s, phase] = pauli_mul(PauliString(3), b);
  EXPECT_EQ(s, b);
  EXPECT_EQ(phase.power, 0);
}

TEST(PauliMul, X0Z1TimesZ0X1MatchesDense) {
  const auto a = PauliString::from_label("XZ");
  const auto b = PauliString::from_label("ZX");
  const auto [s, phase] = pauli_mul(a, b);
  const Mat expected = label_matrix("XZ") * label_matrix("ZX");
  EXPECT_LT((phase.value() * label_matrix(s.label()) - expected).norm(), 1e-15);
}

TEST(PauliMul, ExhaustiveTwoQubitsMatchesDense) {
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) {
      const std::string la = all_labels_code(i, 2), lb = all_labels_code(j, 2);
      const auto [s, phase] =
          pauli_mul(PauliString::from_label(la), PauliString::from_label(lb));
      const Mat expected = label_matrix(la) * label_matrix(lb);
      EXPECT_EQ((phase.value() * label_matrix(s.label()) - expected).norm(), 0.0)
          << la << " * " << lb;
    }
  }
}

TEST(PauliMul, RandomUpToFourQubitsMatchesDense) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = testing::random_string(n, rng);
    const auto b = testing::random_string(n, rng);
    const auto [s, phase] = pauli_mul(a, b);
    const Mat expected = label_matrix(a.label()) * label_matrix(b.label());
    EXPECT_EQ((phase.value() * label_matrix(s.label()) - expected).norm(), 0.0);
    const Mat commutator = expected - label_matrix(b.label()) *
                                          label_matrix(a.label());
    EXPECT_EQ(a.commutes_with(b), commutator.norm() == 0.0);
  }
}

TEST(PauliMul, QubitMismatchThrows) {
  EXPECT_THROW(pauli_mul(PauliString(2), PauliString(3)), QubitMismatch);
  EXPECT_THROW(poly_mul(PauliPolynomial::identity(2),
                        PauliPolynomial::identity(3)),
               QubitMismatch);
}

TEST(PauliPolynomial, MergesAndPrunes) {
  const auto z = PauliString::from_label("ZI");
  const auto x = PauliString::from_label("IX");
  const PauliPolynomial p(2, {{z, 0.5}, {x, 1e-13}, {z, 0.25}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_DOUBLE_EQ(p.coefficient(z).real(), 0.75);
  EXPECT_EQ(p.coefficient(x), Complex(0.0));
  EXPECT_TRUE(p.is_hermitian());

  const PauliPolynomial cancel(2, {{z, 1.0}, {z, -1.0}});
  EXPECT_TRUE(cancel.empty());

  const PauliPolynomial loose(2, {{x, 1e-8}}, 1e-6);
  EXPECT_TRUE(loose.empty());
}

TEST(PauliPolynomial, ClassifiesHermiticity) {
  const auto z = PauliString::from_label("Z");
  const auto x = PauliString::from_label("X");
  EXPECT_EQ(PauliPolynomial(1, {{z, 1.0}}).hermiticity(),
            Hermiticity::kHermitian);
  EXPECT_EQ(PauliPolynomial(1, {{z, Complex(0, 2)}}).hermiticity(),
            Hermiticity::kAntiHermitian);
  EXPECT_EQ(PauliPolynomial(1, {{z, 1.0}, {x, Complex(0, 1)}}).hermiticity(),
            Hermiticity::kGeneral);
}

TEST(PauliPolynomial, CanonicalIsIdempotent) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testing::random_hamiltonian(3, 12, rng);
    EXPECT_EQ(p.canonical().canonical(), p.canonical());
    EXPECT_EQ(p.canonical(), p);
  }
}

TEST(PolyMul, ZSquaredIsIdentity) {
  const auto h = PauliPolynomial::single(PauliString::from_label("Z"), 1.0);
  const auto sq = poly_mul(h, h);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_TRUE(sq.terms().front().first.is_identity());
  EXPECT_DOUBLE_EQ(sq.identity_coefficient(), 1.0);
}

TEST(PolyMul, AnticommutingCrossTermsCancel) {
  const PauliPolynomial h(1, {{PauliString::from_label("X"), 1.0},
                              {PauliString::from_label("Z"), 1.0}});
  const auto sq = poly_mul(h, h);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_DOUBLE_EQ(sq.identity_coefficient(), 2.0);
}

TEST(PolyMul, RandomSquareMatchesDense) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto h = testing::random_hamiltonian(3, 3, rng);
    const auto sq = poly_mul(h, h);
    EXPECT_TRUE(sq.is_hermitian());
    const Mat dense = poly_matrix(h);
    EXPECT_LT((poly_matrix(sq) - dense * dense).norm(), 1e-12);
  }
}

TEST(PolyMul, GeneralProductMatchesDense) {
  std::mt19937_64 rng(6);
  const auto a = testing::random_hamiltonian(3, 5, rng);
  const auto b = Complex(0, 1) * testing::random_hamiltonian(3, 4, rng);
  EXPECT_LT((poly_matrix(poly_mul(a, b)) - poly_matrix(a) * poly_matrix(b))
                .norm(),
            1e-12);
}

TEST(PolyMul, AdjointAndArithmetic) {
  std::mt19937_64 rng(8);
  const auto a = testing::random_hamiltonian(2, 5, rng);
  const auto b = Complex(0.5, -1.0) * testing::random_hamiltonian(2, 5, rng);
  EXPECT_LT((poly_matrix(b.adjoint()) - poly_matrix(b).adjoint()).norm(), 1e-13);
  EXPECT_LT((poly_matrix(a + b) - poly_matrix(a) - poly_matrix(b)).norm(), 1e-13);
  EXPECT_LT((poly_matrix(a - b) - poly_matrix(a) + poly_matrix(b)).norm(), 1e-13);
}

TEST(FrobeniusNorm, SimpleCases) {
  EXPECT_DOUBLE_EQ(
      frobenius_norm_sq(PauliPolynomial::single(PauliString::from_label("Z"), 1)),
      1.0);
  const PauliPolynomial h(2, {{PauliString::from_label("XI"), 3.0},
                              {PauliString::from_label("IZ"), 4.0}});
  EXPECT_DOUBLE_EQ(frobenius_norm_sq(h), 25.0);
}

TEST(FrobeniusNorm, TraceIdentityOnRandomHamiltonians) {
  std::mt19937_64 rng(9);
  for (int n = 1; n <= 4; ++n) {
    const auto h = testing::random_hamiltonian(n, 10, rng);
    const Mat dense = poly_matrix(h);
    const double trace = (dense * dense).trace().real();
    EXPECT_NEAR(trace, std::ldexp(frobenius_norm_sq(h), n), 1e-10);
    EXPECT_NEAR(trace_of_square(h), trace, 1e-10);
  }
}

TEST(FrobeniusNorm, H2FixtureMatchesDenseTrace) {
  const auto file = load_hamiltonian(testing::fixture("h2_sto3g_0.8.ham"));
  const Mat dense = poly_matrix(file.polynomial);
  EXPECT_NEAR(frobenius_norm_sq(file.polynomial),
              (dense * dense).trace().real() / 16.0, 1e-12);
}

}  // namespace
}  // namespace vvqe
