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


#include "cvqc/zk/commitment.h"

namespace cvqc {

CommitRandomness SampleCommitRandomness(Rng& rng) {
  CommitRandomness r{};
  for (std::size_t k = 0; k < r.size(); k += 8) {
    const std::uint64_t v = rng();
    for (int b = 0; b < 8; ++b) r[k + b] = static_cast<std::uint8_t>(v >> (8 * b));
  }
  return r;
}

Commitment CommitMessage(std::span<const std::uint8_t> message, const CommitRandomness& r) {
  ByteWriter w;
  w.Raw("CVQC-COM-v1");
  w.Raw(r);
  w.Raw(message);
  return Commitment{Sha256(w.bytes())};
}

bool VerifyCommitment(const Commitment& c, std::span<const std::uint8_t> message,
                      const CommitRandomness& r) {
  return CommitMessage(message, r) == c;
}

}  // namespace cvqc
