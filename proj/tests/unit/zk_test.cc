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


#include "cvqc/zk/zk.h"

#include <cmath>
#include <set>
#include <type_traits>

#include <gtest/gtest.h>

#include "cvqc/bytes.h"
#include "cvqc/zk/commitment.h"

namespace cvqc {
namespace {

ZXHamiltonian Pair() { return ZXHamiltonian::Normalize(2, {{0, 1, 1.0}}, -0.95, -0.55); }

ProtocolParams Params(int r, int k) {
  ProtocolParams p;
  p.lambda = 6;
  p.n = 2;
  p.r = r;
  p.k = k;
  return p;
}

// The prover state holds only ciphertexts of the trapdoor material: there is
// no member named sk or s to read. Detected by member-pointer probes.
template <typename T>
concept HasSk = requires { &T::sk; };
template <typename T>
concept HasS = requires { &T::s; };
static_assert(!HasSk<ZkProverState>);
static_assert(!HasS<ZkProverState>);
static_assert(HasSk<VerifierSetup>);  // the probe itself works
static_assert(!HasSk<ProverSetup>);

TEST(Commitment, RoundTripAndWrongOpening) {
  Rng rng(1);
  const CommitRandomness r = SampleCommitRandomness(rng);
  const Commitment c = CommitMessage(AsBytes("hello"), r);
  EXPECT_TRUE(VerifyCommitment(c, AsBytes("hello"), r));
  EXPECT_EQ(CommitMessage(AsBytes("hello"), r), c);
  CommitRandomness other = r;
  other[0] ^= 1;
  EXPECT_FALSE(VerifyCommitment(c, AsBytes("hello"), other));
  EXPECT_FALSE(VerifyCommitment(c, AsBytes("hellp"), r));
}

TEST(Commitment, LayoutMatchesDomainSeparatedHash) {
  CommitRandomness r{};
  for (int i = 0; i < 32; ++i) r[i] = static_cast<std::uint8_t>(i);
  Bytes pre = AsBytes("CVQC-COM-v1");
  pre.insert(pre.end(), r.begin(), r.end());
  const Bytes m = AsBytes("msg");
  pre.insert(pre.end(), m.begin(), m.end());
  EXPECT_EQ(CommitMessage(m, r).value, Sha256(pre));
}

TEST(Commitment, NoCollisionsInRandomSample) {
  Rng rng(2);
  std::set<Digest> seen;
  for (int i = 0; i < 100000; ++i) {
    const Bytes m{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())};
    EXPECT_TRUE(seen.insert(CommitMessage(m, SampleCommitRandomness(rng)).value).second);
  }
}

TEST(SetupZk, TrapdoorsEncryptedAndPadCommitted) {
  Rng rng(3);
  const ZkBackends backends = ZkBackends::Default();
  const ZkSetup z = SetupZk(Params(2, 2), backends, rng);
  const auto sk = backends.fhe->Decrypt(z.verifier.hsk, z.prover.csk);
  ASSERT_TRUE(sk.has_value());
  EXPECT_EQ(*sk, EncodeSecretKeys(z.verifier.setup.sk));
  const auto s = backends.fhe->Decrypt(z.verifier.hsk, z.prover.cs);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(DecodeTermWords(*s), z.verifier.setup.s);
  EXPECT_TRUE(VerifyCommitment(z.verifier.xi, EncodePad(z.prover.beta, z.prover.gamma), z.prover.r1));
  EXPECT_EQ(z.prover.beta.size(), 8u);
  EXPECT_EQ(z.prover.setup.DigestBytes(), z.verifier.setup.PublicPart().DigestBytes());
}

TEST(Encoders, RoundTrip) {
  Rng rng(4);
  const SetupPair s = cvqc::Setup(Params(1, 2), rng);
  const auto sk = DecodeSecretKeys(EncodeSecretKeys(s.verifier.sk));
  ASSERT_EQ(sk.size(), s.verifier.sk.size());
  for (std::size_t i = 0; i < sk.size(); ++i) EXPECT_EQ(sk[i], s.verifier.sk[i]);
  const std::vector<Response> u{{1, 5}, {0, 9}};
  EXPECT_EQ(DecodeResponses(EncodeResponses(u)), u);
}

TEST(ZkProve, HonestAcceptsAndRelationMatchesPaddedVerdict) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  Rng rng(5);
  int accepted = 0;
  const int runs = 40;
  for (int t = 0; t < runs; ++t) {
    const ZkSetup z = SetupZk(Params(8, 2), backends, rng);
    LWitness tau;
    const ZkTranscript tr =
        ZkProve(h, z.prover, MinEnergy(h).state, backends, UniformChallenges(2, rng), rng, &tau);
    const bool ok = ZkVerify(z.verifier, h, tr, backends);
    const LInstance x{h, z.verifier.setup, tr.xi, tr.y, tr.c, tr.chi};
    EXPECT_EQ(VerdictPrime(x, tau), ok);
    EXPECT_TRUE(VerdictPrimeBytes(x.Serialize(), tau.Serialize()) == ok);
    EXPECT_EQ(ZkTranscript::Parse(tr.Serialize()).digest, tr.digest);
    accepted += ok;
  }
  EXPECT_GE(accepted, runs / 2);
}

TEST(VerdictPrime, SingleCopyEqualsVerdictOnConjugatedInstance) {
  // With r = k = 1 the pad covers one copy, so the relation is the plain
  // verdict on X^beta Z^gamma H Z^gamma X^beta.
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<Coupling> cs{{0, 1, Uniform01(rng) - 0.5}};
    const auto h = ZXHamiltonian::Normalize(2, cs, -0.95, -0.55);
    const ZkBackends backends = ZkBackends::Default();
    const ZkSetup z = SetupZk(Params(1, 1), backends, rng);
    LWitness tau;
    const ZkTranscript tr =
        ZkProve(h, z.prover, MinEnergy(h).state, backends, UniformChallenges(1, rng), rng, &tau);
    const LInstance x{h, z.verifier.setup, tr.xi, tr.y, tr.c, tr.chi};
    EXPECT_EQ(VerdictPrime(x, tau),
              Verdict(ConjugatePad(h, tau.beta, tau.gamma), z.verifier.setup, tr.y, tr.c, tau.u).accepted);
  }
}

TEST(ZkProve, PaddingKeepsHonestAcceptanceRate) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  Rng rng(12);
  const int runs = 1000;
  int padded = 0;
  int plain = 0;
  for (int t = 0; t < runs; ++t) {
    const ZkSetup z = SetupZk(Params(4, 1), backends, rng);
    padded += ZkVerify(z.verifier, h, ZkProve(h, z.prover, MinEnergy(h).state, backends,
                                              UniformChallenges(1, rng), rng),
                       backends);
    HonestProver prover(MinEnergy(h).state);
    plain += RunInteractive(h, SetupPair{z.verifier.setup, z.prover.setup}, prover, rng).accepted;
  }
  const double p = 0.5 * (padded + plain) / runs;
  EXPECT_NEAR(static_cast<double>(padded) / runs, static_cast<double>(plain) / runs,
              3 * std::sqrt(2 * p * (1 - p) / runs));
}

TEST(VerdictPrime, ZeroPadReducesToVerdict) {
  const auto h = Pair();
  Rng rng(6);
  const SetupPair s = cvqc::Setup(Params(4, 2), rng);
  HonestProver prover(MinEnergy(h).state);
  const auto y = prover.Commit(s.prover, rng);
  const Bits c{0, 1};
  const auto u = prover.Respond(c, rng);
  LWitness tau;
  tau.beta = Bits(16, 0);
  tau.gamma = Bits(16, 0);
  tau.u = u;
  tau.r1 = SampleCommitRandomness(rng);
  tau.r2 = SampleCommitRandomness(rng);
  const LInstance x{h, s.verifier, CommitMessage(EncodePad(tau.beta, tau.gamma), tau.r1), y, c,
                    CommitMessage(EncodeResponses(u), tau.r2)};
  EXPECT_EQ(VerdictPrime(x, tau), Verdict(h, s.verifier, y, c, u).accepted);
  // Flipping one response bit breaks the opening of chi.
  LWitness bad = tau;
  bad.u[0].w ^= 1;
  EXPECT_FALSE(VerdictPrime(x, bad));
  bad = tau;
  bad.r1[0] ^= 1;
  EXPECT_FALSE(VerdictPrime(x, bad));
}

TEST(ZkVerify, WrongDecryptionKeyRejects) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const ZkSetup z = SetupZk(Params(4, 1), backends, rng);
    const ZkTranscript tr = ZkProve(h, z.prover, MinEnergy(h).state, backends, UniformChallenges(1, rng), rng);
    if (!ZkVerify(z.verifier, h, tr, backends)) continue;
    ZkVerifierState wrong = z.verifier;
    wrong.hsk = backends.fhe->KeyGen(rng).secret_key;
    EXPECT_FALSE(ZkVerify(wrong, h, tr, backends));
    ZkTranscript bad = tr;
    bad.y[0] ^= 1;
    EXPECT_FALSE(ZkVerify(z.verifier, h, bad, backends));
    return;
  }
  FAIL() << "no honest run accepted";
}

TEST(ZkProve, InvalidKeysAbort) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  Rng rng(8);
  ZkSetup z = SetupZk(Params(2, 1), backends, rng);
  z.prover.setup.pk.pop_back();
  EXPECT_THROW(ZkProve(h, z.prover, MinEnergy(h).state, backends, UniformChallenges(1, rng), rng),
               InvalidArgument);
}

TEST(Simulate, TranscriptsSatisfyRelation) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  Rng rng(9);
  int holds = 0;
  const int runs = 100;
  for (int t = 0; t < runs; ++t) {
    const ZkSetup z = SetupZk(Params(8, 2), backends, rng);
    const Simulation sim = Simulate(h, z, backends, UniformChallenges(2, rng), rng);
    const LInstance x{h, z.verifier.setup, sim.transcript.xi, sim.transcript.y, sim.transcript.c,
                      sim.transcript.chi};
    holds += VerdictPrime(x, sim.witness);
    EXPECT_EQ(sim.transcript.xi, z.verifier.xi);
  }
  EXPECT_GE(holds, 90);
}

TEST(FsZk, HonestAcceptsTamperRejectsChallengeDeterministic) {
  const auto h = Pair();
  const ZkBackends backends = ZkBackends::Default();
  const RandomOracle oracle("CVQC-FS-ZK-v1");
  Rng rng(10);
  int accepted = 0;
  for (int t = 0; t < 20; ++t) {
    const ZkSetup z = SetupZk(Params(8, 2), backends, rng);
    const ZkTranscript tr = FsZkProve(h, z.prover, MinEnergy(h).state, backends, oracle, rng);
    EXPECT_EQ(tr.c, FsZkChallenge(oracle, h, z.prover.setup, tr.xi, tr.y));
    const bool ok = FsZkVerify(z.verifier, h, tr, backends, oracle);
    accepted += ok;
    ZkTranscript bad = tr;
    bad.c[0] ^= 1;
    bad.digest = bad.ComputeDigest();
    EXPECT_FALSE(FsZkVerify(z.verifier, h, bad, backends, oracle));
    const Simulation sim = FsSimulate(h, z, backends, oracle, rng);
    EXPECT_TRUE(FsZkVerify(z.verifier, h, sim.transcript, backends, oracle));
  }
  EXPECT_GE(accepted, 10);
}

TEST(Backends, RegistryNames) {
  EXPECT_EQ(FheNames(), std::vector<std::string>{"transparent"});
  EXPECT_EQ(NizkNames(), std::vector<std::string>{"toy"});
  EXPECT_THROW(MakeFhe("bogus"), InvalidArgument);
  EXPECT_THROW(MakeNizk("bogus"), InvalidArgument);
}

}  // namespace
}  // namespace cvqc
