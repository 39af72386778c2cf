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


#include "cvqc/qprover.h"

#include <cmath>
#include <map>
#include <string>

#include <gtest/gtest.h>

#include "cvqc/hamiltonian.h"
#include "oracles.h"

namespace cvqc {
namespace {

StateVector Plus() { return {1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}; }

StateVector RandomState(int n, Rng& rng) {
  StateVector psi(std::size_t{1} << n);
  for (auto& a : psi) a = {Uniform01(rng) - 0.5, Uniform01(rng) - 0.5};
  Normalize(psi);
  return psi;
}

std::vector<PublicKey> Keys(const std::vector<KeyPair>& kps) {
  std::vector<PublicKey> out;
  for (const auto& kp : kps) out.push_back(kp.pk);
  return out;
}

std::uint8_t DecodeHadamard(const SecretKey& sk, Word y, const Response& u) {
  if (sk.kind() == FamilyKind::kNtif) return sk.Invert(y)->b;
  const Claw claw = *sk.FindClaw(y);
  return static_cast<std::uint8_t>(DotGf2(u.t, claw.x0 ^ claw.x1) ^ u.w);
}

TEST(PrepareWitness, PairGroundState) {
  const auto h = ZXHamiltonian::Normalize(2, {{0, 1, 1.0}}, -1, 0);
  const WitnessState w = PrepareWitness(h, 3);
  ASSERT_EQ(w.copies.size(), 3u);
  for (const auto& c : w.copies) {
    EXPECT_NEAR(Energy(h, c), -1.0, 1e-12);
    EXPECT_NEAR(Norm(c), 1.0, 1e-9);
  }
}

TEST(InjectWitness, StoredVerbatimAndValidated) {
  const WitnessState w = InjectWitness(BasisState(2, 0), 2);
  EXPECT_EQ(w.copies[1], BasisState(2, 0));
  StateVector bad = BasisState(2, 0);
  bad[1] = 0.5;
  EXPECT_THROW(InjectWitness(bad, 1), InvalidArgument);
}

TEST(Pad, ZeroPadAndInvolution) {
  Rng rng(1);
  const StateVector psi = RandomState(3, rng);
  WitnessState w = InjectWitness(psi, 2);
  Pad(w, Bits(6, 0), Bits(6, 0));
  EXPECT_EQ(w.copies[0], psi);
  const Bits beta = RandomBits(6, rng);
  const Bits gamma = RandomBits(6, rng);
  Pad(w, beta, gamma);
  Pad(w, beta, gamma);
  for (const auto& c : w.copies) EXPECT_NEAR(std::abs(InnerProduct(c, psi)), 1.0, 1e-12);
  EXPECT_THROW(Pad(w, Bits(5, 0), Bits(6, 0)), InvalidArgument);
}

TEST(Pad, EnergyInvariantUnderConjugatedInstance) {
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Coupling> cs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) cs.push_back({i, j, Uniform01(rng) - 0.5});
    const auto h = ZXHamiltonian::Normalize(n, cs, -1, 0);
    const StateVector psi = RandomState(n, rng);
    const Bits beta = RandomBits(n, rng);
    const Bits gamma = RandomBits(n, rng);
    WitnessState w = InjectWitness(psi, 1);
    Pad(w, beta, gamma);
    EXPECT_NEAR(Energy(ConjugatePad(h, beta, gamma), w.copies[0]), Energy(h, psi), 1e-9);
  }
}

TEST(Commit, InjectiveKeysOnZeroStateDecodeToZero) {
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto kps = GenerateKeysForBases(6, Bits{0, 0}, Backend::kMock, rng);
    QuantumDevice dev(InjectWitness(BasisState(2, 0), 1));
    const auto y = dev.Commit(Keys(kps), rng);
    EXPECT_EQ(kps[0].sk.Invert(y[0])->b, 0);
    EXPECT_EQ(kps[1].sk.Invert(y[1])->b, 0);
  }
}

TEST(Commit, InjectiveKeysOnPlusFollowBornRule) {
  Rng rng(4);
  const auto kps = GenerateKeysForBases(6, Bits{0}, Backend::kMock, rng);
  int ones = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    QuantumDevice dev(InjectWitness(Plus(), 1));
    ones += kps[0].sk.Invert(dev.Commit(Keys(kps), rng)[0])->b;
  }
  EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 0.02);
}

TEST(Commit, ClawFreeKeysLeaveStateUntouched) {
  Rng rng(5);
  const StateVector psi = RandomState(2, rng);
  const auto kps = GenerateKeysForBases(6, Bits{1, 1}, Backend::kMock, rng);
  QuantumDevice dev(InjectWitness(psi, 1));
  const auto y = dev.Commit(Keys(kps), rng);
  EXPECT_EQ(dev.state().copies[0], psi);
  for (int l = 0; l < 2; ++l) {
    const QubitRecord& rec = dev.state().qubits[l];
    EXPECT_TRUE(kps[l].pk.Check(0, rec.claw.x0, y[l]));
    EXPECT_TRUE(kps[l].pk.Check(1, rec.claw.x1, y[l]));
  }
}

TEST(Commit, KeyCountMismatchRejected) {
  Rng rng(6);
  const auto kps = GenerateKeysForBases(6, Bits{1}, Backend::kMock, rng);
  QuantumDevice dev(InjectWitness(BasisState(2, 0), 1));
  EXPECT_THROW(dev.Commit(Keys(kps), rng), InvalidArgument);
}

TEST(MeasureTest, AlwaysPassesCheck) {
  Rng rng(7);
  for (int t = 0; t < 1000; ++t) {
    const Bits h = RandomBits(3, rng);
    const auto kps = GenerateKeysForBases(6, h, Backend::kMock, rng);
    QuantumDevice dev(InjectWitness(RandomState(3, rng), 1));
    const auto y = dev.Commit(Keys(kps), rng);
    const auto u = dev.MeasureTest(0, rng);
    for (int l = 0; l < 3; ++l) EXPECT_TRUE(kps[l].pk.Check(u[l].w, u[l].t, y[l]));
  }
}

TEST(MeasureTest, InjectiveQubitsRepeatRecordedOutcome) {
  Rng rng(8);
  const auto kps = GenerateKeysForBases(6, Bits{0}, Backend::kMock, rng);
  QuantumDevice dev(InjectWitness(Plus(), 1));
  dev.Commit(Keys(kps), rng);
  const auto first = dev.MeasureTest(0, rng);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(dev.MeasureTest(0, rng), first);
}

TEST(MeasureTest, LogicalHistogramFollowsBornRule) {
  Rng rng(9);
  const StateVector psi = RandomState(2, rng);
  const auto kps = GenerateKeysForBases(6, Bits{1, 1}, Backend::kMock, rng);
  std::map<std::string, std::int64_t> counts;
  std::map<std::string, double> expected;
  for (int i = 0; i < 4; ++i) expected[std::to_string(i)] = std::norm(psi[i]);
  for (int t = 0; t < 10000; ++t) {
    QuantumDevice dev(InjectWitness(psi, 1));
    dev.Commit(Keys(kps), rng);
    const auto u = dev.MeasureTest(0, rng);
    counts[std::to_string(u[0].w | (u[1].w << 1))]++;
  }
  EXPECT_GT(testing::GoodnessOfFit(counts, expected).p_value, 0.001);
}

TEST(MeasureHadamard, PlusDecodesToZero) {
  Rng rng(10);
  const auto kps = GenerateKeysForBases(6, Bits{1}, Backend::kMock, rng);
  for (int t = 0; t < 1000; ++t) {
    QuantumDevice dev(InjectWitness(Plus(), 1));
    const auto y = dev.Commit(Keys(kps), rng);
    const auto u = dev.MeasureHadamard(0, rng);
    EXPECT_NE(u[0].t, 0u);
    EXPECT_EQ(DecodeHadamard(kps[0].sk, y[0], u[0]), 0);
  }
}

TEST(MeasureHadamard, ZeroDecodesUniformly) {
  Rng rng(11);
  const auto kps = GenerateKeysForBases(6, Bits{1}, Backend::kMock, rng);
  int ones = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    QuantumDevice dev(InjectWitness(BasisState(1, 0), 1));
    const auto y = dev.Commit(Keys(kps), rng);
    ones += DecodeHadamard(kps[0].sk, y[0], dev.MeasureHadamard(0, rng)[0]);
  }
  EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 0.02);
}

TEST(MeasureHadamard, DecodedTermsMatchAcceptProbability) {
  // Honest decoding on the ground state of a consistent XX term.
  const auto h = ZXHamiltonian::Normalize(2, {{0, 1, -1.0}}, -1, 0);
  const GroundState g = MinEnergy(h);
  Rng rng(12);
  const auto kps = GenerateKeysForBases(6, Bits{1, 1}, Backend::kMock, rng);
  int sat = 0;
  const int trials = 5000;
  const Term& xx = h.terms()[1];
  for (int t = 0; t < trials; ++t) {
    QuantumDevice dev(InjectWitness(g.state, 1));
    const auto y = dev.Commit(Keys(kps), rng);
    const auto u = dev.MeasureHadamard(0, rng);
    sat += TermSatisfied(xx, DecodeHadamard(kps[0].sk, y[0], u[0]), DecodeHadamard(kps[1].sk, y[1], u[1]));
  }
  // Ground energy -1 means both terms are satisfied with certainty.
  EXPECT_EQ(sat, trials);
}

TEST(SampleNonzero, NeverZero) {
  Rng rng(13);
  for (int i = 0; i < 10000; ++i) EXPECT_NE(SampleNonzero(1 + i % 4, rng), 0u);
}

// Smaller version of the oracle comparison run by the acceptance suite.
TEST(LiteralOracle, JointDistributionsAgreeAtOneQubit) {
  Rng rng(14);
  for (std::uint8_t basis : {0, 1}) {
    const auto kps = GenerateKeysForBases(2, Bits{basis}, Backend::kMock, rng);
    const StateVector psi = RandomState(1, rng);
    for (int round : {0, 1}) {
      std::map<std::string, std::int64_t> compact;
      std::map<std::string, std::int64_t> literal;
      const Bits nonzero{basis};
      for (int t = 0; t < 4000; ++t) {
        QuantumDevice dev(InjectWitness(psi, 1));
        const auto y = dev.Commit(Keys(kps), rng);
        const auto u = round ? dev.MeasureHadamard(0, rng) : dev.MeasureTest(0, rng);
        compact[std::to_string(y[0]) + "/" + std::to_string(u[0].w) + "/" + std::to_string(u[0].t)]++;
        testing::LiteralRegister reg(psi, Keys(kps));
        const auto ly = reg.MeasureImages(rng);
        const auto lu = round ? reg.MeasureHadamard(nonzero, rng) : reg.MeasureComputational(rng);
        literal[std::to_string(ly[0]) + "/" + std::to_string(lu[0].w) + "/" + std::to_string(lu[0].t)]++;
      }
      EXPECT_GT(testing::TwoSampleChiSquare(compact, literal).p_value, 0.001)
          << "basis " << int(basis) << " round " << round;
    }
  }
}

}  // namespace
}  // namespace cvqc
