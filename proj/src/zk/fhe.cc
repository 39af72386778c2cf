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


#include "cvqc/zk/fhe.h"

#include <algorithm>

namespace cvqc {
namespace {

constexpr std::string_view kTag = "CVQC-FHE-v1";
constexpr std::size_t kNonceBytes = 16;
constexpr std::size_t kHeader = kTag.size() + 32 + kNonceBytes;

Bytes PublicFromSecret(std::span<const std::uint8_t> hsk) {
  ByteWriter w;
  w.Raw(kTag);
  w.Raw(hsk);
  return AsBytes(Sha256(w.bytes()));
}

// Checks framing and returns the key-binding bytes and payload.
bool Frame(std::span<const std::uint8_t> ct, std::span<const std::uint8_t>& hpk,
           std::span<const std::uint8_t>& payload) {
  if (ct.size() < kHeader) return false;
  if (!std::equal(kTag.begin(), kTag.end(), ct.begin())) return false;
  hpk = ct.subspan(kTag.size(), 32);
  payload = ct.subspan(kHeader);
  return true;
}

}  // namespace

FheKeys TransparentFhe::KeyGen(Rng& rng) const {
  FheKeys keys;
  keys.secret_key.resize(32);
  for (auto& b : keys.secret_key) b = static_cast<std::uint8_t>(rng());
  keys.public_key = PublicFromSecret(keys.secret_key);
  return keys;
}

Bytes TransparentFhe::Encrypt(std::span<const std::uint8_t> hpk,
                              std::span<const std::uint8_t> message, Rng& rng) const {
  if (hpk.size() != 32) throw InvalidArgument("FHE public key must be 32 bytes");
  ByteWriter w;
  w.Raw(kTag);
  w.Raw(hpk);
  for (std::size_t k = 0; k < kNonceBytes; ++k) w.U8(static_cast<std::uint8_t>(rng()));
  w.Raw(message);
  return w.Take();
}

std::optional<Bytes> TransparentFhe::Decrypt(std::span<const std::uint8_t> hsk,
                                             std::span<const std::uint8_t> ciphertext) const {
  std::span<const std::uint8_t> hpk, payload;
  if (!Frame(ciphertext, hpk, payload)) return std::nullopt;
  const Bytes expected = PublicFromSecret(hsk);
  if (!std::equal(hpk.begin(), hpk.end(), expected.begin(), expected.end())) return std::nullopt;
  return Bytes(payload.begin(), payload.end());
}

Bytes TransparentFhe::Eval(std::span<const std::uint8_t> hpk, const FheCircuit& circuit,
                           std::span<const Bytes> ciphertexts, Rng& rng) const {
  std::vector<Bytes> plain;
  plain.reserve(ciphertexts.size());
  for (const Bytes& ct : ciphertexts) {
    std::span<const std::uint8_t> key, payload;
    if (!Frame(ct, key, payload) || !std::equal(key.begin(), key.end(), hpk.begin(), hpk.end())) {
      throw InvalidArgument("Eval input is not a ciphertext under this key");
    }
    plain.emplace_back(payload.begin(), payload.end());
  }
  return Encrypt(hpk, circuit(plain), rng);
}

std::shared_ptr<const FheScheme> MakeFhe(std::string_view name) {
  if (name == "transparent") return std::make_shared<TransparentFhe>();
  throw InvalidArgument("unknown FHE backend: " + std::string(name));
}

std::vector<std::string> FheNames() { return {"transparent"}; }

}  // namespace cvqc
