// Copyright 2026 The CVQC Authors
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


#include "cvqc/hamiltonian.h"

#include <cmath>
#include <map>
#include <string>

#include <gtest/gtest.h>

#include "oracles.h"

namespace cvqc {
namespace {

using testing::DenseCoupling;
using testing::DenseZX;
using testing::SortedEigenvalues;

ZXHamiltonian Pair(double a = -1.0, double b = -0.5) {
  return ZXHamiltonian::Normalize(2, {{0, 1, 1.0}}, a, b);
}

ZXHamiltonian RandomInstance(int n, Rng& rng) {
  std::vector<Coupling> cs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (RandomBit(rng)) cs.push_back({i, j, Uniform01(rng) * 2.0 - 1.0});
    }
  }
  if (cs.empty()) cs.push_back({0, n - 1, 0.7});
  return ZXHamiltonian::Normalize(n, cs, -1.0, 0.0);
}

std::vector<DenseCoupling> DenseOf(const ZXHamiltonian& h) {
  std::vector<DenseCoupling> out;
  const std::vector<Coupling> listed = *h.couplings();
  for (const Coupling& c : listed) out.push_back({c.i, c.j, c.strength});
  return out;
}

StateVector RandomState(int n, Rng& rng) {
  StateVector psi(std::size_t{1} << n);
  for (auto& a : psi) a = {Uniform01(rng) - 0.5, Uniform01(rng) - 0.5};
  Normalize(psi);
  return psi;
}

Eigen::VectorXcd AsEigen(const StateVector& psi) {
  Eigen::VectorXcd v(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) v[i] = psi[i];
  return v;
}

TEST(Normalize, SingleCouplingBecomesHalf) {
  const auto h = ZXHamiltonian::Normalize(2, {{0, 1, 2.0}}, -1, 0);
  ASSERT_TRUE(h.couplings());
  EXPECT_DOUBLE_EQ((*h.couplings())[0].strength, 0.5);
}

TEST(Normalize, SymmetricPairSplitsEvenly) {
  const auto h = ZXHamiltonian::Normalize(3, {{0, 1, 1.0}, {0, 2, 1.0}}, -1, 0);
  const std::vector<Coupling> listed = *h.couplings();
  for (const Coupling& c : listed) EXPECT_DOUBLE_EQ(c.strength, 0.25);
}

TEST(Normalize, EmptyCouplingsRejected) {
  EXPECT_THROW(ZXHamiltonian::Normalize(2, {}, -1, 0), InvalidArgument);
  EXPECT_THROW(ZXHamiltonian::Normalize(2, {{0, 1, 0.0}}, -1, 0), InvalidArgument);
}

TEST(Normalize, TermsCarryMagnitudeAndSign) {
  const auto h = ZXHamiltonian::Normalize(3, {{1, 2, -3.0}, {0, 1, 1.0}}, -1, 0);
  ASSERT_EQ(h.terms().size(), 4u);
  // Canonical order: (0,1) before (1,2), ZZ before XX.
  EXPECT_EQ(h.terms()[0].i, 0);
  EXPECT_EQ(h.terms()[0].pauli, Pauli::kZZ);
  EXPECT_EQ(h.terms()[1].pauli, Pauli::kXX);
  EXPECT_EQ(h.terms()[2].i, 1);
  EXPECT_DOUBLE_EQ(h.terms()[2].weight, 0.375);
  EXPECT_EQ(h.terms()[2].sign, -1);
  EXPECT_EQ(h.terms()[0].sign, 1);
}

TEST(Normalize, WeightsSumToOneForRandomInstances) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto h = RandomInstance(2 + trial % 5, rng);
    double total = 0.0;
    for (const Term& t : h.terms()) total += t.weight;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(SampleTerm, ZeroRandomnessPicksFirstTerm) {
  const auto h = Pair();
  EXPECT_EQ(SampleTerm(h, std::uint64_t{0}).pauli, Pauli::kZZ);
  const Bits zeros(64, 0);
  EXPECT_EQ(SampleTerm(h, zeros).pauli, Pauli::kZZ);
}

TEST(SampleTerm, ThreeQuartersCrossesIntoSecondTerm) {
  const auto h = Pair();
  Bits s(64, 0);
  s[0] = 1;
  s[1] = 1;  // u = 0.75, most significant bit first
  EXPECT_EQ(SampleTerm(h, s).pauli, Pauli::kXX);
}

TEST(SampleTerm, BoundaryGoesToLowerIndex) {
  const auto h = Pair();
  EXPECT_EQ(SampleTerm(h, std::uint64_t{1} << 63).pauli, Pauli::kZZ);  // u = 0.5 exactly
  EXPECT_EQ(SampleTerm(h, (std::uint64_t{1} << 63) + 1).pauli, Pauli::kXX);
}

TEST(SampleTerm, ShortRandomnessRejected) {
  EXPECT_THROW(SampleTerm(Pair(), Bits(63, 0)), InvalidArgument);
}

TEST(SampleTerm, EqualWeightsGiveUniformMarginal) {
  const auto h = ZXHamiltonian::Normalize(3, {{0, 1, 1.0}, {1, 2, 1.0}}, -1, 0);
  Rng rng(3);
  std::map<std::string, std::int64_t> counts;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    const Term& t = SampleTerm(h, rng());
    counts[std::to_string(t.i) + std::to_string(t.j) + (t.pauli == Pauli::kXX ? "X" : "Z")]++;
  }
  ASSERT_EQ(counts.size(), 4u);
  for (const auto& [k, v] : counts) EXPECT_NEAR(static_cast<double>(v) / samples, 0.25, 0.01) << k;
}

TEST(SampleTerm, MarginalMatchesWeights) {
  Rng rng(5);
  const auto h = RandomInstance(4, rng);
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, double> expected;
  for (std::size_t i = 0; i < h.terms().size(); ++i) expected[std::to_string(i)] += h.terms()[i].weight;
  for (int i = 0; i < 100000; ++i) {
    const Term& t = SampleTerm(h, rng());
    counts[std::to_string(&t - h.terms().data())]++;
  }
  EXPECT_GT(testing::GoodnessOfFit(counts, expected).p_value, 0.001);
}

TEST(IsConsistent, Definition) {
  const Term xx{0, 1, Pauli::kXX, 0.5, 1};
  const Term zz{0, 1, Pauli::kZZ, 0.5, 1};
  EXPECT_TRUE(IsConsistent(xx, Bits{1, 1, 0}));
  EXPECT_FALSE(IsConsistent(zz, Bits{1, 0, 0}));
  EXPECT_TRUE(IsConsistent(zz, Bits{0, 0, 1}));
  EXPECT_FALSE(IsConsistent(xx, Bits{1, 0, 1}));
}

TEST(IsConsistent, UniformBasisRateIsOneQuarter) {
  Rng rng(7);
  const auto h = RandomInstance(5, rng);
  int hits = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const Bits basis = RandomBits(5, rng);
    if (IsConsistent(SampleTerm(h, rng()), basis)) ++hits;
  }
  EXPECT_NEAR(static_cast<double>(hits) / trials, 0.25, 0.01);
}

TEST(Energy, ZeroZeroOnPair) {
  EXPECT_NEAR(Energy(Pair(), BasisState(2, 0)), 0.5, 1e-12);
  EXPECT_NEAR(MfAcceptProbability(Pair(), BasisState(2, 0)), 0.25, 1e-12);
}

TEST(Energy, MatchesDenseOracle) {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 4;
    const auto h = RandomInstance(n, rng);
    const StateVector psi = RandomState(n, rng);
    const Eigen::VectorXcd v = AsEigen(psi);
    const Eigen::MatrixXcd m = DenseZX(n, DenseOf(h)).cast<std::complex<double>>();
    EXPECT_NEAR(Energy(h, psi), (v.adjoint() * m * v)(0, 0).real(), 1e-10);
  }
}

TEST(Energy, AverageOverBasisIsZero) {
  Rng rng(17);
  const auto h = RandomInstance(4, rng);
  double total = 0.0;
  for (std::uint64_t i = 0; i < 16; ++i) total += Energy(h, BasisState(4, i));
  EXPECT_NEAR(total / 16, 0.0, 1e-12);
}

TEST(Energy, RejectsBadInput) {
  EXPECT_THROW(Energy(Pair(), BasisState(3, 0)), InvalidArgument);
  StateVector psi = BasisState(2, 0);
  psi[0] = 2.0;
  EXPECT_THROW(Energy(Pair(), psi), InvalidArgument);
}

TEST(MinEnergy, PairGroundEnergyIsMinusOne) {
  const auto g = MinEnergy(Pair());
  EXPECT_NEAR(g.energy, SortedEigenvalues(DenseZX(2, {{0, 1, 0.5}}))[0], 1e-12);
  EXPECT_NEAR(g.energy, -1.0, 1e-12);
  EXPECT_NEAR(MfAcceptProbability(Pair(), g.state), 1.0, 1e-12);
}

TEST(MinEnergy, SpectrumMatchesDenseOracle) {
  Rng rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const auto h = RandomInstance(n, rng);
    const auto expected = SortedEigenvalues(DenseZX(n, DenseOf(h)));
    const auto got = Spectrum(h);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], expected[i], 1e-9);
    const auto g = MinEnergy(h);
    EXPECT_NEAR(g.energy, expected[0], 1e-9);
    EXPECT_NEAR(Energy(h, g.state), expected[0], 1e-9);
  }
}

TEST(MinEnergy, TooManyQubitsRejected) {
  const auto h = ZXHamiltonian::Normalize(13, {{0, 12, 1.0}}, -1, 0);
  EXPECT_THROW(MinEnergy(h), CapacityError);
}

TEST(MfAcceptProbability, YesAndNoThresholds) {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto base = RandomInstance(3, rng);
    const double e0 = MinEnergy(base).energy;
    const auto yes = ZXHamiltonian::Normalize(3, *base.couplings(), e0, e0 + 0.2);
    EXPECT_GE(MfAcceptProbability(yes, MinEnergy(yes).state), (1 - yes.a()) / 2 - 1e-12);
    const auto no = ZXHamiltonian::Normalize(3, *base.couplings(), e0 - 0.2, e0);
    // Every state of a no-instance, so in particular every eigenvector.
    EXPECT_LE((1 - MinEnergy(no).energy) / 2, (1 - no.b()) / 2 + 1e-12);
  }
}

TEST(MfAcceptProbability, MonteCarloRoundsAgree) {
  Rng rng(29);
  const auto h = RandomInstance(3, rng);
  const StateVector psi = RandomState(3, rng);
  const double p = MfAcceptProbability(h, psi);
  const int trials = 10000;
  int accepted = 0;
  for (int t = 0; t < trials; ++t) {
    const Term& term = SampleTerm(h, rng());
    StateVector copy = psi;
    if (term.pauli == Pauli::kXX) {
      ApplyH(copy, term.i);
      ApplyH(copy, term.j);
    }
    const std::uint64_t idx = SampleBasisIndex(copy, rng);
    if (TermSatisfied(term, (idx >> term.i) & 1, (idx >> term.j) & 1)) ++accepted;
  }
  const double se = std::sqrt(p * (1 - p) / trials);
  EXPECT_NEAR(static_cast<double>(accepted) / trials, p, 3 * se);
}

TEST(TermSatisfied, Examples) {
  EXPECT_TRUE(TermSatisfied(Term{0, 1, Pauli::kZZ, 1, 1}, 0, 1));
  EXPECT_TRUE(TermSatisfied(Term{0, 1, Pauli::kZZ, 1, -1}, 0, 0));
}

TEST(TermSatisfied, MatchesProjectorOnAllPatterns) {
  for (int sign : {1, -1}) {
    for (Pauli pauli : {Pauli::kZZ, Pauli::kXX}) {
      const Term term{0, 1, pauli, 1.0, sign};
      // (1 - m S)/2 in the term's eigenbasis: eigenvalue of S on |e_i e_j> is (-1)^{e_i+e_j}.
      const Eigen::MatrixXd s = pauli == Pauli::kZZ ? testing::DenseZXSigned(2, 0, 1, 1, 0)
                                                    : testing::DenseZXSigned(2, 0, 1, 0, 1);
      const Eigen::MatrixXd proj = (Eigen::MatrixXd::Identity(4, 4) - sign * s) / 2;
      for (int e = 0; e < 4; ++e) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(4);
        v[e] = 1.0;
        if (pauli == Pauli::kXX) {
          Eigen::Matrix2d hd;
          hd << 1, 1, 1, -1;
          hd /= std::sqrt(2.0);
          Eigen::MatrixXd hh(4, 4);
          for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) hh(r, c) = hd(r >> 1, c >> 1) * hd(r & 1, c & 1);
          v = hh * v;
        }
        const bool in_range = (v.transpose() * proj * v)(0, 0) > 0.5;
        EXPECT_EQ(TermSatisfied(term, e & 1, (e >> 1) & 1), in_range) << sign << " " << e;
      }
    }
  }
}

TEST(ConjugatePad, IdentityPadKeepsInstance) {
  const auto h = Pair();
  EXPECT_EQ(ConjugatePad(h, Bits{0, 0}, Bits{0, 0}), h);
}

TEST(ConjugatePad, BitFlipNegatesZZOnly) {
  const auto h = Pair();
  const auto p = ConjugatePad(h, Bits{1, 0}, Bits{0, 0});
  EXPECT_EQ(p.terms()[0].sign, -1);
  EXPECT_EQ(p.terms()[1].sign, 1);
  // Explicit conjugation X_0 (ZZ) X_0 on 4x4 matrices.
  Eigen::MatrixXd x0 = Eigen::MatrixXd::Zero(4, 4);
  for (int i = 0; i < 4; ++i) x0(i ^ 1, i) = 1;
  const Eigen::MatrixXd zz = testing::DenseZXSigned(2, 0, 1, 1, 0);
  EXPECT_TRUE((x0 * zz * x0).isApprox(-zz));
}

TEST(ConjugatePad, PhaseFlipNegatesXXOnly) {
  const auto p = ConjugatePad(Pair(), Bits{0, 0}, Bits{0, 1});
  EXPECT_EQ(p.terms()[0].sign, 1);
  EXPECT_EQ(p.terms()[1].sign, -1);
}

TEST(ConjugatePad, InvolutionAndSpectrum) {
  Rng rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 5;
    const auto h = RandomInstance(n, rng);
    const Bits beta = RandomBits(n, rng);
    const Bits gamma = RandomBits(n, rng);
    const auto p = ConjugatePad(h, beta, gamma);
    EXPECT_EQ(ConjugatePad(p, beta, gamma), h);
    const auto a = Spectrum(h);
    const auto b = Spectrum(p);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-9);
  }
}

TEST(ConjugatePad, LengthMismatchRejected) {
  EXPECT_THROW(ConjugatePad(Pair(), Bits{0}, Bits{0, 0}), InvalidArgument);
}

TEST(Serialization, RoundTripAndDigestStable) {
  Rng rng(37);
  const auto h = RandomInstance(4, rng);
  EXPECT_EQ(ZXHamiltonian::Parse(h.Serialize()), h);
  EXPECT_EQ(h.DigestBytes(), ZXHamiltonian::Parse(h.Serialize()).DigestBytes());
  EXPECT_NE(h.DigestBytes(), Pair().DigestBytes());
}

}  // namespace
}  // namespace cvqc
