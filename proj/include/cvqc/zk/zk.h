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

// Zero-knowledge variant of the verification protocol.
//
// A trusted setup hands the verifier (crs, sk, s, hsk, hpk, xi) and the
// prover (crs, pk, hpk, Enc(sk), Enc(s), beta, gamma, r1), where
// xi = commit(beta, gamma; r1). The prover runs the protocol on the padded
// witness X^beta Z^gamma |psi>, commits to its response u as
// chi = commit(u; r2), and returns a NIZK proof for
//
//   x   = (H, s, sk, xi, y, c, chi)
//   tau = (beta, gamma, u, r1, r2)
//   R(x, tau) = [xi opens to (beta, gamma) with r1]
//             and [chi opens to u with r2]
//             and verdict(H padded per copy, s, sk, y, c, u)
//
// computed under FHE, since sk and s are only available encrypted.

#ifndef CVQC_ZK_ZK_H_
#define CVQC_ZK_ZK_H_

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "cvqc/fiat_shamir.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/protocol.h"
#include "cvqc/statevector.h"
#include "cvqc/zk/commitment.h"
#include "cvqc/zk/fhe.h"
#include "cvqc/zk/nizk.h"

namespace cvqc {

struct ZkBackends {
  std::shared_ptr<const FheScheme> fhe;
  std::shared_ptr<const NizkScheme> nizk;

  // transparent FHE and toy NIZK.
  static ZkBackends Default();
};

// Verifier state. Holds s in addition to the listed trapdoors: the verdict
// cannot be evaluated without the term randomness.
struct ZkVerifierState {
  Bytes crs;
  VerifierSetup setup;
  Bytes hsk;
  Bytes hpk;
  Commitment xi;
};

// Prover state. Holds no plaintext secret keys or term randomness.
struct ZkProverState {
  Bytes crs;
  ProverSetup setup;
  Bytes hpk;
  Bytes csk;  // Enc(sk)
  Bytes cs;   // Enc(s)
  Bits beta;  // n bits per copy
  Bits gamma;
  CommitRandomness r1{};
};

struct ZkSetup {
  ZkVerifierState verifier;
  ZkProverState prover;
};

// N = n r k basis bits, M = r k term strings.
ZkSetup SetupZk(const ProtocolParams& params, const ZkBackends& backends, Rng& rng);

// Encodings shared by the relation and the encrypted setup fields.
Bytes EncodeSecretKeys(std::span<const SecretKey> sk);
std::vector<SecretKey> DecodeSecretKeys(std::span<const std::uint8_t> bytes);
Bytes EncodeTermWords(std::span<const std::uint64_t> s);
std::vector<std::uint64_t> DecodeTermWords(std::span<const std::uint8_t> bytes);
Bytes EncodePad(std::span<const std::uint8_t> beta, std::span<const std::uint8_t> gamma);
Bytes EncodeResponses(std::span<const Response> u);
std::vector<Response> DecodeResponses(std::span<const std::uint8_t> bytes);

struct LInstance {
  ZXHamiltonian h;
  VerifierSetup setup;  // carries sk and s
  Commitment xi;
  std::vector<Word> y;
  Bits c;
  Commitment chi;

  Bytes Serialize() const;
  static LInstance Parse(std::span<const std::uint8_t> bytes);
};

struct LWitness {
  Bits beta;
  Bits gamma;
  std::vector<Response> u;
  CommitRandomness r1{};
  CommitRandomness r2{};

  Bytes Serialize() const;
  static LWitness Parse(std::span<const std::uint8_t> bytes);
};

// The relation R(x, tau). Malformed openings give false.
bool VerdictPrime(const LInstance& x, const LWitness& tau);
// Byte-level form used inside NIZK proving; parse failures give false.
bool VerdictPrimeBytes(std::span<const std::uint8_t> x, std::span<const std::uint8_t> tau);

// Round V2 as seen by the prover: returns k challenge bits for (xi, y).
using ChallengeSource = std::function<Bits(const Commitment& xi, std::span<const Word> y)>;

// Uniform coins drawn from rng (the honest verifier).
ChallengeSource UniformChallenges(int k, Rng& rng);

struct ZkTranscript {
  Commitment xi;
  std::vector<Word> y;
  Bits c;
  Commitment chi;
  Bytes ce;
  Digest digest{};  // over (xi, y, c, chi, ce)

  Bytes CanonicalBody() const;
  Digest ComputeDigest() const;
  Bytes Serialize() const;
  static ZkTranscript Parse(std::span<const std::uint8_t> bytes);
};

// Honest prover. Aborts (InvalidArgument) on an invalid public key. When
// `tau_out` is set it receives the witness used inside the proof.
ZkTranscript ZkProve(const ZXHamiltonian& h, const ZkProverState& state, const StateVector& witness,
                     const ZkBackends& backends, const ChallengeSource& challenge, Rng& rng,
                     LWitness* tau_out = nullptr);

bool ZkVerify(const ZkVerifierState& state, const ZXHamiltonian& h, const ZkTranscript& t,
              const ZkBackends& backends);

struct Simulation {
  ZkTranscript transcript;
  LWitness witness;  // for checking the relation with trapdoors
};

// Produces a transcript from the setup and the challenge callback alone. The
// signature admits no witness state.
Simulation Simulate(const ZXHamiltonian& h, const ZkSetup& setup, const ZkBackends& backends,
                    const ChallengeSource& challenge, Rng& rng);

// ---- Fiat-Shamir variants ----------------------------------------------------------

// c = first k bits of the oracle on (instance digest, setup digest, xi || y).
Bits FsZkChallenge(const RandomOracle& oracle, const ZXHamiltonian& h, const ProverSetup& setup,
                   const Commitment& xi, std::span<const Word> y);
ChallengeSource OracleChallenges(const RandomOracle& oracle, const ZXHamiltonian& h,
                                 const ProverSetup& setup);

ZkTranscript FsZkProve(const ZXHamiltonian& h, const ZkProverState& state,
                       const StateVector& witness, const ZkBackends& backends,
                       const RandomOracle& oracle, Rng& rng, LWitness* tau_out = nullptr);
bool FsZkVerify(const ZkVerifierState& state, const ZXHamiltonian& h, const ZkTranscript& t,
                const ZkBackends& backends, const RandomOracle& oracle);
Simulation FsSimulate(const ZXHamiltonian& h, const ZkSetup& setup, const ZkBackends& backends,
                      const RandomOracle& oracle, Rng& rng);

}  // namespace cvqc

#endif  // CVQC_ZK_ZK_H_
