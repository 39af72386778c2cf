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

// Hash commitments: value = SHA-256("CVQC-COM-v1" || r || m) with 32 bytes of
// randomness r. Computationally binding and hiding under the usual random
// oracle heuristics; not perfectly binding.

#ifndef CVQC_ZK_COMMITMENT_H_
#define CVQC_ZK_COMMITMENT_H_

#include <array>
#include <cstdint>
#include <span>

#include "cvqc/bytes.h"
#include "cvqc/common.h"

namespace cvqc {

using CommitRandomness = std::array<std::uint8_t, 32>;

struct Commitment {
  Digest value{};
  friend bool operator==(const Commitment&, const Commitment&) = default;
};

CommitRandomness SampleCommitRandomness(Rng& rng);

Commitment CommitMessage(std::span<const std::uint8_t> message, const CommitRandomness& r);

bool VerifyCommitment(const Commitment& c, std::span<const std::uint8_t> message,
                      const CommitRandomness& r);

}  // namespace cvqc

#endif  // CVQC_ZK_COMMITMENT_H_
