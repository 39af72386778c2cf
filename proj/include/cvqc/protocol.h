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

// Three-round verification protocol with instance-independent setup and
// k-fold parallel repetition.
//
// Every per-qubit array is indexed ((i * r) + j) * n + l for group i < k,
// copy j < r and qubit l < n. Term randomness s holds one 64-bit word per
// copy, indexed i * r + j.

#ifndef CVQC_PROTOCOL_H_
#define CVQC_PROTOCOL_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"
#include "cvqc/funcfam.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/qprover.h"

namespace cvqc {

// Largest n * r * k a setup may allocate.
inline constexpr std::size_t kMaxProtocolQubits = std::size_t{1} << 22;

struct ProtocolParams {
  int lambda = 8;
  int n = 2;
  int r = 16;
  int k = 5;
  Backend backend = Backend::kMock;

  std::size_t copies() const { return static_cast<std::size_t>(r) * k; }
  std::size_t qubits() const { return copies() * n; }
  std::size_t Index(int i, int j, int l) const {
    return (static_cast<std::size_t>(i) * r + j) * n + l;
  }
  // Throws InvalidArgument when out of range.
  void Validate() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

enum class ProtocolMode : std::uint8_t { kHamiltonian = 0, kCtq = 1 };

// What the prover receives: public keys in index order.
struct ProverSetup {
  ProtocolParams params;
  ProtocolMode mode = ProtocolMode::kHamiltonian;
  std::vector<PublicKey> pk;

  Bytes Serialize() const;
  static ProverSetup Parse(std::span<const std::uint8_t> bytes);
  Digest DigestBytes() const;
};

struct VerifierSetup {
  ProtocolParams params;
  ProtocolMode mode = ProtocolMode::kHamiltonian;
  Bits h;                         // n * r * k basis bits
  std::vector<SecretKey> sk;      // kinds follow h
  std::vector<std::uint64_t> s;   // r * k term-sampling words

  ProverSetup PublicPart() const;
  Bytes Serialize() const;
  static VerifierSetup Parse(std::span<const std::uint8_t> bytes);
};

struct SetupPair {
  VerifierSetup verifier;
  ProverSetup prover;
};

// Consumes only (lambda, n, r, k); never the Hamiltonian. Deterministic in
// the rng state.
SetupPair Setup(const ProtocolParams& params, Rng& rng);

// Degenerate mode: every basis bit is 1 (all claw-free keys) and s is empty.
SetupPair SetupCtq(const ProtocolParams& params, Rng& rng);

// Prover behavior. Implementations throw freely; the protocol driver turns
// any failure into a rejected transcript.
class Prover {
 public:
  virtual ~Prover() = default;
  virtual std::string name() const = 0;
  // Round P1: one image per qubit.
  virtual std::vector<Word> Commit(const ProverSetup& setup, Rng& rng) = 0;
  // Round P2: one (w, t) per qubit.
  virtual std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) = 0;
};

// Honest prover: r * k copies of the witness held in a QuantumDevice.
class HonestProver : public Prover {
 public:
  // `witness` is a single n-qubit state; it is copied once per copy.
  explicit HonestProver(StateVector witness);
  // Per-copy states (already padded, for instance).
  explicit HonestProver(WitnessState witness);

  std::string name() const override { return "honest"; }
  std::vector<Word> Commit(const ProverSetup& setup, Rng& rng) override;
  std::vector<Response> Respond(std::span<const std::uint8_t> c, Rng& rng) override;

 private:
  std::optional<StateVector> single_;
  std::optional<WitnessState> copies_;
  std::optional<QuantumDevice> device_;
  ProtocolParams params_;
};

struct GroupOutcome {
  std::uint8_t challenge = 0;
  bool accepted = false;
  int consistent = 0;        // |A_i|
  int satisfied = 0;         // sum of v_ij over A_i
  int decode_failures = 0;   // rejected Inv or trivial t
  double threshold = 0.0;    // (2 - a - b) |A_i| / 4
};

struct VerdictReport {
  bool accepted = false;
  bool well_formed = true;
  std::vector<GroupOutcome> groups;
};

// Optional one-time-pad keys, n bits per copy in index order. Copy (i, j) is
// judged against conjugate_pad(H, beta_ij, gamma_ij).
struct PadKeys {
  Bits beta;
  Bits gamma;
};

// Acceptance threshold test with a 1e-9 tolerance so that exact rational
// thresholds are not lost to rounding.
bool MeetsThreshold(int satisfied, int consistent, double a, double b);

// Pure function of its arguments. Malformed shapes reject.
VerdictReport Verdict(const ZXHamiltonian& h, const VerifierSetup& setup,
                      std::span<const Word> y, std::span<const std::uint8_t> c,
                      std::span<const Response> u, const PadKeys* pad = nullptr);

// Degenerate mode verdict: test rounds as usual; a Hadamard round accepts iff
// every qubit decodes (claw exists, t != 0) to e = 0.
VerdictReport VerdictCtq(const VerifierSetup& setup, std::span<const Word> y,
                         std::span<const std::uint8_t> c, std::span<const Response> u);

struct Transcript {
  ProtocolMode mode = ProtocolMode::kHamiltonian;
  Digest instance{};
  Digest setup{};
  std::vector<Word> y;
  Bits c;
  std::vector<Response> u;
  bool accepted = false;

  // Canonical encoding: stable and injective on the field values.
  Bytes Serialize() const;
  static Transcript Parse(std::span<const std::uint8_t> bytes);
  Digest DigestBytes() const;

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

// Digest used as the instance field in degenerate mode.
Digest CtqInstanceDigest();

// Commit, uniform challenge, respond, verdict.
Transcript RunInteractive(const ZXHamiltonian& h, const SetupPair& setup, Prover& prover,
                          Rng& rng, VerdictReport* report = nullptr);
Transcript RunCtq(const SetupPair& setup, Prover& prover, Rng& rng,
                  VerdictReport* report = nullptr);

// Re-evaluates the verdict of a stored transcript.
bool ReplayDecision(const ZXHamiltonian* h, const VerifierSetup& setup, const Transcript& t);

}  // namespace cvqc

#endif  // CVQC_PROTOCOL_H_
