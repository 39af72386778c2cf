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


#include "cvqc/zk/nizk.h"

#include <algorithm>

namespace cvqc {
namespace {

Bytes ProofFor(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x) {
  ByteWriter w;
  w.Raw("CVQC-NIZK-v1");
  w.LengthPrefixed(crs);
  w.LengthPrefixed(x);
  return AsBytes(Sha256(w.bytes()));
}

}  // namespace

Bytes ToyNizk::Setup(Rng& rng) const {
  Bytes crs(32);
  for (auto& b : crs) b = static_cast<std::uint8_t>(rng());
  return crs;
}

Bytes ToyNizk::Prove(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
                     std::span<const std::uint8_t> witness, const NpRelation& relation) const {
  if (!relation(x, witness)) return {};
  return ProofFor(crs, x);
}

bool ToyNizk::Verify(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
                     std::span<const std::uint8_t> proof) const {
  const Bytes want = ProofFor(crs, x);
  return std::equal(proof.begin(), proof.end(), want.begin(), want.end());
}

Bytes ToyNizk::Simulate(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x) const {
  return ProofFor(crs, x);
}

std::shared_ptr<const NizkScheme> MakeNizk(std::string_view name) {
  if (name == "toy") return std::make_shared<ToyNizk>();
  throw InvalidArgument("unknown NIZK backend: " + std::string(name));
}

std::vector<std::string> NizkNames() { return {"toy"}; }

}  // namespace cvqc
