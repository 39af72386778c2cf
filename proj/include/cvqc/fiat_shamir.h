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

// Fiat-Shamir compression of the setup-then-three-round protocol, and the
// classical-adversary version of the reprogramming reduction.
//
// Oracle input encoding (bit-exact):
//
//   SHA-256( tag || u64be(|x|) || x || u64be(|w|) || w || u64be(|y|) || y )
//
// with tag = "CVQC-FS-v1". The challenge c is the first k bits of the digest,
// most significant bit of byte 0 first. Instantiating the oracle with a
// concrete hash is a heuristic step.

#ifndef CVQC_FIAT_SHAMIR_H_
#define CVQC_FIAT_SHAMIR_H_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/protocol.h"

namespace cvqc {

class RandomOracle {
 public:
  explicit RandomOracle(std::string tag = "CVQC-FS-v1") : tag_(std::move(tag)) {}

  const std::string& tag() const { return tag_; }
  Digest Query(std::span<const std::uint8_t> x, std::span<const std::uint8_t> w,
               std::span<const std::uint8_t> y) const;

 private:
  std::string tag_;
};

// First k bits of the oracle output, MSB first. Throws for k > 256.
Bits DeriveChallenge(const RandomOracle& oracle, std::span<const std::uint8_t> x,
                     std::span<const std::uint8_t> w, std::span<const std::uint8_t> y, int k);

// Canonical encoding of the commitment images used as the oracle's y input.
Bytes EncodeImages(std::span<const Word> y);

struct FsTranscript {
  Digest x{};  // instance digest
  Digest w{};  // prover-setup digest
  std::vector<Word> y;
  Bits c;
  std::vector<Response> u;
  bool accepted = false;
  // SHA-256 of the canonical encoding of (x, w, y, c, u). Binds the stored
  // fields so that any edit is detected even where the verdict would not
  // read the edited bits.
  Digest digest{};

  Bytes CanonicalBody() const;
  Digest ComputeDigest() const;
  Bytes Serialize() const;
  static FsTranscript Parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const FsTranscript&, const FsTranscript&) = default;
};

// The prover derives its own challenge. The decision field is left false;
// it is the verifier's to set.
FsTranscript FsProve(const ZXHamiltonian& h, const ProverSetup& setup, Prover& prover,
                     const RandomOracle& oracle, Rng& rng);

struct FsCheck {
  bool accepted = false;
  bool bindings_ok = false;   // x and w match the instance and setup
  bool challenge_ok = false;  // c equals the re-derived challenge
  bool digest_ok = false;     // stored digest matches the fields
  VerdictReport verdict;      // interactive verdict under the re-derived c
};

FsCheck FsVerify(const ZXHamiltonian& h, const VerifierSetup& setup, const FsTranscript& t,
                 const RandomOracle& oracle);

// eps / (2 (2q+1)(2q+3)) - 1 / ((2q+1) |Y|).
double FsBound(int q, double range_size, double epsilon);

// ---- reduction for classical adversaries ---------------------------------------

// Lazily sampled random function F(x, y) -> challenge in {0,1}^bits, with
// optional reprogramming F*Theta y: every input whose y component equals the
// programmed y returns Theta.
class LazyOracle {
 public:
  LazyOracle(int challenge_bits, std::uint64_t seed);

  Word Query(Word x, Word y);
  // F, ignoring any reprogramming.
  Word QueryOriginal(Word x, Word y);
  void Reprogram(Word y, Word theta);
  bool reprogrammed() const { return program_.has_value(); }
  std::size_t table_size() const { return table_.size(); }

 private:
  int bits_;
  Rng rng_;
  std::map<std::pair<Word, Word>, Word> table_;
  std::optional<std::pair<Word, Word>> program_;  // (y, Theta)
};

using OracleQuery = std::function<Word(Word x, Word y)>;

struct AdversaryOutput {
  Word y = 0;
  Word m = 0;
};

// A classical q-query prover for the compressed protocol: it may call the
// oracle at most q times, then outputs (y, m).
using FsAdversary = std::function<AdversaryOutput(const OracleQuery&)>;

struct ReductionOutcome {
  int index = 0;      // i in {0..q}
  int coin = 0;       // b
  Word y = 0;
  Word m = 0;
  Word theta = 0;
  bool aborted = false;
  bool success = false;
};

// Runs S^A once. `challenge` plays the interactive verifier: it sees y and
// returns Theta. `verdict` judges (y, Theta, m). Throws InvalidArgument if
// the adversary exceeds q queries.
ReductionOutcome ReductionSim(const FsAdversary& adversary, int q, int challenge_bits,
                              const std::function<Word(Word y)>& challenge,
                              const std::function<bool(Word y, Word theta, Word m)>& verdict,
                              Rng& rng);

}  // namespace cvqc

#endif  // CVQC_FIAT_SHAMIR_H_
