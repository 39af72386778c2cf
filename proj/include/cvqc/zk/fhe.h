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

// Fully homomorphic encryption interface.
//
// Contract for real instantiations: Dec(hsk, Eval(hpk, C, Enc(m...))) = C(m...)
// and malicious circuit privacy, i.e. the evaluated ciphertext reveals
// nothing about C beyond its output, even for adversarial keys.
//
// TransparentFhe satisfies correctness only. Ciphertexts carry the
// plaintext in the clear:
//
//   ct = "CVQC-FHE-v1" || hpk (32) || nonce (16) || m,  hpk = SHA-256(tag || hsk)
//
// Decryption fails for a key whose hpk does not match.

#ifndef CVQC_ZK_FHE_H_
#define CVQC_ZK_FHE_H_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"

namespace cvqc {

struct FheKeys {
  Bytes public_key;
  Bytes secret_key;
};

// Circuit over plaintexts.
using FheCircuit = std::function<Bytes(std::span<const Bytes> plaintexts)>;

class FheScheme {
 public:
  virtual ~FheScheme() = default;
  virtual std::string name() const = 0;
  virtual FheKeys KeyGen(Rng& rng) const = 0;
  virtual Bytes Encrypt(std::span<const std::uint8_t> hpk, std::span<const std::uint8_t> message,
                        Rng& rng) const = 0;
  virtual std::optional<Bytes> Decrypt(std::span<const std::uint8_t> hsk,
                                       std::span<const std::uint8_t> ciphertext) const = 0;
  // Throws InvalidArgument when an input is not a ciphertext under hpk.
  virtual Bytes Eval(std::span<const std::uint8_t> hpk, const FheCircuit& circuit,
                     std::span<const Bytes> ciphertexts, Rng& rng) const = 0;
};

class TransparentFhe final : public FheScheme {
 public:
  std::string name() const override { return "transparent"; }
  FheKeys KeyGen(Rng& rng) const override;
  Bytes Encrypt(std::span<const std::uint8_t> hpk, std::span<const std::uint8_t> message,
                Rng& rng) const override;
  std::optional<Bytes> Decrypt(std::span<const std::uint8_t> hsk,
                               std::span<const std::uint8_t> ciphertext) const override;
  Bytes Eval(std::span<const std::uint8_t> hpk, const FheCircuit& circuit,
             std::span<const Bytes> ciphertexts, Rng& rng) const override;
};

// Registry: "transparent". Throws InvalidArgument for unknown names.
std::shared_ptr<const FheScheme> MakeFhe(std::string_view name);
std::vector<std::string> FheNames();

}  // namespace cvqc

#endif  // CVQC_ZK_FHE_H_
