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

// Non-interactive zero-knowledge interface for NP relations.
//
// Contract for real instantiations: completeness, adaptive soundness and
// zero knowledge with a simulator S(crs, x).
//
// ToyNizk is complete and trivially simulatable but NOT sound: a proof is
// SHA-256("CVQC-NIZK-v1" || crs || x), which the honest prover only emits
// when the relation holds, but anyone can compute. Soundness of the
// composed protocol is therefore only meaningful before this layer.

#ifndef CVQC_ZK_NIZK_H_
#define CVQC_ZK_NIZK_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"

namespace cvqc {

using NpRelation =
    std::function<bool(std::span<const std::uint8_t> x, std::span<const std::uint8_t> witness)>;

class NizkScheme {
 public:
  virtual ~NizkScheme() = default;
  virtual std::string name() const = 0;
  virtual Bytes Setup(Rng& rng) const = 0;
  // Empty proof when the relation does not hold.
  virtual Bytes Prove(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> witness, const NpRelation& relation) const = 0;
  virtual bool Verify(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> proof) const = 0;
  virtual Bytes Simulate(std::span<const std::uint8_t> crs,
                         std::span<const std::uint8_t> x) const = 0;
};

class ToyNizk final : public NizkScheme {
 public:
  std::string name() const override { return "toy"; }
  Bytes Setup(Rng& rng) const override;
  Bytes Prove(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
              std::span<const std::uint8_t> witness, const NpRelation& relation) const override;
  bool Verify(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x,
              std::span<const std::uint8_t> proof) const override;
  Bytes Simulate(std::span<const std::uint8_t> crs, std::span<const std::uint8_t> x) const override;
};

// Registry: "toy". Throws InvalidArgument for unknown names.
std::shared_ptr<const NizkScheme> MakeNizk(std::string_view name);
std::vector<std::string> NizkNames();

}  // namespace cvqc

#endif  // CVQC_ZK_NIZK_H_
