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


#include "cvqc/protocol.h"

#include <cmath>

#include <gtest/gtest.h>

#include "cvqc/analysis.h"

namespace cvqc {
namespace {

ZXHamiltonian Pair() { return ZXHamiltonian::Normalize(2, {{0, 1, 1.0}}, -0.95, -0.55); }

ProtocolParams Params(int r, int k, int n = 2) {
  ProtocolParams p;
  p.lambda = 6;
  p.n = n;
  p.r = r;
  p.k = k;
  return p;
}

// Commits to uniformly random words and answers with random responses.
class GarbageProver : public Prover {
 public:
  std::string name() const override { return "garbage"; }
  std::vector<Word> Commit(const ProverSetup& setup, Rng& rng) override {
    count_ = setup.pk.size();
    std::vector<Word> y(count_);
    for (auto& v : y) v = rng() & LowMask(setup.pk[0].image_bits());
    return y;
  }
  std::vector<Response> Respond(std::span<const std::uint8_t>, Rng& rng) override {
    std::vector<Response> u(count_);
    for (auto& r : u) r = {RandomBit(rng), (rng() & 0x3f) | 1};
    return u;
  }

 private:
  std::size_t count_ = 0;
};

// Replays fixed messages.
class ScriptedProver : public Prover {
 public:
  ScriptedProver(std::vector<Word> y, std::vector<Response> u) : y_(std::move(y)), u_(std::move(u)) {}
  std::string name() const override { return "scripted"; }
  std::vector<Word> Commit(const ProverSetup&, Rng&) override { return y_; }
  std::vector<Response> Respond(std::span<const std::uint8_t>, Rng&) override { return u_; }

 private:
  std::vector<Word> y_;
  std::vector<Response> u_;
};

TEST(Setup, DeterministicAndKindsFollowBases) {
  Rng a(1);
  Rng b(1);
  const SetupPair x = cvqc::Setup(Params(4, 3), a);
  const SetupPair y = cvqc::Setup(Params(4, 3), b);
  EXPECT_EQ(x.verifier.Serialize(), y.verifier.Serialize());
  ASSERT_EQ(x.verifier.h.size(), 24u);
  ASSERT_EQ(x.prover.pk.size(), 24u);
  EXPECT_EQ(x.verifier.s.size(), 12u);
  for (std::size_t q = 0; q < 24; ++q) {
    EXPECT_EQ(x.prover.pk[q].kind(), x.verifier.h[q] ? FamilyKind::kNtcf : FamilyKind::kNtif);
    EXPECT_EQ(x.verifier.sk[q].public_key(), x.prover.pk[q]);
  }
  Rng c(2);
  EXPECT_NE(cvqc::Setup(Params(4, 3), c).verifier.h, x.verifier.h);
}

TEST(Setup, SerializationRoundTrip) {
  Rng rng(3);
  const SetupPair s = cvqc::Setup(Params(2, 2), rng);
  EXPECT_EQ(VerifierSetup::Parse(s.verifier.Serialize()).Serialize(), s.verifier.Serialize());
  EXPECT_EQ(ProverSetup::Parse(s.prover.Serialize()).Serialize(), s.prover.Serialize());
  EXPECT_EQ(s.verifier.PublicPart().DigestBytes(), s.prover.DigestBytes());
}

TEST(Setup, ParameterCaps) {
  Rng rng(4);
  EXPECT_THROW(cvqc::Setup(Params(0, 1), rng), InvalidArgument);
  EXPECT_THROW(cvqc::Setup(Params(1, 1, 13), rng), InvalidArgument);
  ProtocolParams huge = Params(1 << 20, 8);
  EXPECT_THROW(huge.Validate(), CapacityError);
}

TEST(MeetsThreshold, WorkedExample) {
  // (2 - 0.2 - 0.6) * 10 / 4 = 3.
  EXPECT_TRUE(MeetsThreshold(3, 10, 0.2, 0.6));
  EXPECT_FALSE(MeetsThreshold(2, 10, 0.2, 0.6));
  EXPECT_TRUE(MeetsThreshold(0, 0, 0.2, 0.6));
}

TEST(RunInteractive, HonestAllTestRoundsAccepts) {
  Rng rng(5);
  const auto h = Pair();
  for (int t = 0; t < 20; ++t) {
    const SetupPair s = cvqc::Setup(Params(4, 3), rng);
    HonestProver prover(MinEnergy(h).state);
    const auto y = prover.Commit(s.prover, rng);
    const auto u = prover.Respond(Bits(3, 0), rng);
    const auto report = Verdict(h, s.verifier, y, Bits(3, 0), u);
    EXPECT_TRUE(report.accepted);
    EXPECT_EQ(report.groups.size(), 3u);
  }
}

TEST(RunInteractive, TranscriptShape) {
  Rng rng(5);
  const auto h = Pair();
  const SetupPair s = cvqc::Setup(Params(4, 3), rng);
  HonestProver prover(MinEnergy(h).state);
  const Transcript tr = RunInteractive(h, s, prover, rng);
  EXPECT_EQ(tr.y.size(), 24u);
  EXPECT_EQ(tr.u.size(), 24u);
  EXPECT_EQ(tr.c.size(), 3u);
  EXPECT_EQ(tr.instance, h.DigestBytes());
}

TEST(RunInteractive, ZeroRepetitionsAcceptVacuously) {
  Rng rng(6);
  const SetupPair s = cvqc::Setup(Params(4, 0), rng);
  GarbageProver prover;
  EXPECT_TRUE(RunInteractive(Pair(), s, prover, rng).accepted);
}

TEST(RunInteractive, GarbageImagesRejected) {
  Rng rng(7);
  const int k = 3;
  int accepted = 0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const SetupPair s = cvqc::Setup(Params(4, k), rng);
    GarbageProver prover;
    accepted += RunInteractive(Pair(), s, prover, rng).accepted;
  }
  EXPECT_LE(static_cast<double>(accepted) / trials, std::ldexp(1.0, -k) + 0.05);
}

TEST(RunInteractive, MalformedResponsesRejectNotThrow) {
  Rng rng(8);
  const SetupPair s = cvqc::Setup(Params(2, 2), rng);
  ScriptedProver prover(std::vector<Word>(8, 0), std::vector<Response>(3));
  const Transcript tr = RunInteractive(Pair(), s, prover, rng);
  EXPECT_FALSE(tr.accepted);
}

TEST(RunInteractive, InstanceSizeMismatch) {
  Rng rng(9);
  const SetupPair s = cvqc::Setup(Params(2, 2, 3), rng);
  GarbageProver prover;
  EXPECT_THROW(RunInteractive(Pair(), s, prover, rng), InvalidArgument);
}

TEST(Verdict, EmptyConsistentSetAccepts) {
  // With every basis Z, a sampled XX term is never consistent.
  Rng rng(10);
  const auto h = Pair();
  SetupPair s = cvqc::Setup(Params(1, 1), rng);
  s.verifier.s = {~std::uint64_t{0}};  // u close to 1 selects the XX term
  s.verifier.h = Bits{0, 0};
  std::vector<KeyPair> kps = GenerateKeysForBases(6, s.verifier.h, Backend::kMock, rng);
  s.verifier.sk = {kps[0].sk, kps[1].sk};
  s.prover = s.verifier.PublicPart();
  HonestProver prover(MinEnergy(h).state);
  const auto y = prover.Commit(s.prover, rng);
  const auto u = prover.Respond(Bits{1}, rng);
  const auto report = Verdict(h, s.verifier, y, Bits{1}, u);
  ASSERT_EQ(report.groups.size(), 1u);
  EXPECT_EQ(report.groups[0].consistent, 0);
  EXPECT_TRUE(report.accepted);
}

TEST(Verdict, TrivialTRejectedOnClawFreeQubits) {
  Rng rng(11);
  const auto h = Pair();
  SetupPair s = cvqc::Setup(Params(1, 1), rng);
  s.verifier.s = {~std::uint64_t{0}};
  s.verifier.h = Bits{1, 1};
  std::vector<KeyPair> kps = GenerateKeysForBases(6, s.verifier.h, Backend::kMock, rng);
  s.verifier.sk = {kps[0].sk, kps[1].sk};
  s.prover = s.verifier.PublicPart();
  HonestProver prover(MinEnergy(h).state);
  const auto y = prover.Commit(s.prover, rng);
  auto u = prover.Respond(Bits{1}, rng);
  EXPECT_TRUE(Verdict(h, s.verifier, y, Bits{1}, u).accepted);
  u[0].t = 0;
  const auto report = Verdict(h, s.verifier, y, Bits{1}, u);
  EXPECT_FALSE(report.accepted);
  EXPECT_GE(report.groups[0].decode_failures, 1);
}

TEST(Verdict, Deterministic) {
  Rng rng(12);
  const auto h = Pair();
  const SetupPair s = cvqc::Setup(Params(4, 3), rng);
  HonestProver prover(MinEnergy(h).state);
  const Transcript tr = RunInteractive(h, s, prover, rng);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(ReplayDecision(&h, s.verifier, tr), tr.accepted);
  EXPECT_EQ(Transcript::Parse(tr.Serialize()), tr);
  EXPECT_EQ(Transcript::Parse(tr.Serialize()).DigestBytes(), tr.DigestBytes());
}

TEST(Verdict, HonestRateIsProductOfCopyRates) {
  // One copy group per run (k = 1) gives the per-group rate; k = 3 must match its cube.
  const auto h = Pair();
  auto rate = [&](int k, std::uint64_t seed) {
    EstimateConfig cfg;
    cfg.params = Params(4, k);
    cfg.trials = 4000;
    cfg.seed = seed;
    return Estimate(cfg, &h);
  };
  const auto one = rate(1, 100);
  const auto three = rate(3, 200);
  const double predicted = std::pow(one.rate, 3);
  // Error of the prediction propagates as 3 p^2 sigma_1.
  const double sigma = std::hypot(three.std_error, 3 * one.rate * one.rate * one.std_error);
  EXPECT_NEAR(three.rate, predicted, 3 * sigma);
}

TEST(RunCtq, HonestAcceptsAlmostAlways) {
  EstimateConfig cfg;
  cfg.mode = ProtocolMode::kCtq;
  cfg.params = Params(2, 3);
  cfg.trials = 1000;
  cfg.seed = 13;
  EXPECT_GE(Estimate(cfg, nullptr).rate, 0.99);
}

TEST(RunCtq, TestOnlyMatchesHalfPerRepetition) {
  EstimateConfig cfg;
  cfg.mode = ProtocolMode::kCtq;
  // Large r: a random decode passes a Hadamard round with probability about 2^-(r n).
  cfg.params = Params(16, 2);
  cfg.trials = 4000;
  cfg.seed = 14;
  cfg.strategy = "test-only";
  const auto r = Estimate(cfg, nullptr);
  EXPECT_NEAR(r.rate, 0.25, 3 * StdError(0.25, cfg.trials));
}

TEST(RunCtq, TamperedImageRejectedInTestRound) {
  Rng rng(15);
  const SetupPair s = SetupCtq(Params(1, 1), rng);
  HonestProver prover(StateVector{1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0)});
  auto y = prover.Commit(s.prover, rng);
  const auto u = prover.Respond(Bits{0}, rng);
  EXPECT_TRUE(VerdictCtq(s.verifier, y, Bits{0}, u).accepted);
  y[0] ^= 1;
  EXPECT_FALSE(VerdictCtq(s.verifier, y, Bits{0}, u).accepted);
  EXPECT_THROW(RunCtq(cvqc::Setup(Params(1, 1), rng), prover, rng), InvalidArgument);
}

}  // namespace
}  // namespace cvqc
