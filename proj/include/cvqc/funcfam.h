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

// Trapdoor claw-free (NTCF) and trapdoor injective (NTIF) function families
// in their ideal, noiseless form: every f(b, x) is a single image y.
//
// Two backends are provided. Neither is cryptographically secure.
//
//   mock     f(b, x) = P(x xor b*Delta)  (claw-free)
//            f(b, x) = P(b || x)         (injective)
//            where P is a keyed bijection on w + 9 bits and only images whose
//            preimage under P has a zero tail are valid, so random words are
//            rejected by inversion.
//
//   toy-lwe  f(b, x) = A' (x + b s) + b e  over Z_q, with A' an (d+1) x d
//            matrix whose top d x d block is invertible. e = 0 gives a
//            claw-free pair with x0 - x1 = s; e = (0,...,0,1) makes the map
//            injective. There is no LWE noise, so the public key determines
//            the trapdoor by linear algebra.
//
// Domain elements and images are packed into 64-bit words. For toy-lwe each
// coordinate takes ceil(log2 q) bits, so the bit encoding used by the
// Hadamard-round decoding is the concatenated binary representation.

#ifndef CVQC_FUNCFAM_H_
#define CVQC_FUNCFAM_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cvqc/bytes.h"
#include "cvqc/common.h"

namespace cvqc {

enum class FamilyKind : std::uint8_t { kNtif = 0, kNtcf = 1 };
enum class Backend : std::uint8_t { kMock = 0, kToyLwe = 1 };

std::string BackendName(Backend backend);
Backend ParseBackend(std::string_view name);

struct Preimage {
  std::uint8_t b = 0;
  Word x = 0;
  friend bool operator==(const Preimage&, const Preimage&) = default;
};

struct Claw {
  Word x0 = 0;
  Word x1 = 0;
  friend bool operator==(const Claw&, const Claw&) = default;
};

namespace funcfam_internal {

inline constexpr int kMockSparsity = 8;

struct MockParams {
  int width = 0;  // domain bits w
  std::array<Word, 3> mul{};
  std::array<Word, 3> add{};
  Word shift = 0;  // Delta; zero for injective keys
  friend bool operator==(const MockParams&, const MockParams&) = default;
};

struct LweParams {
  int dim = 0;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> matrix;  // (dim + 1) x dim, row-major
  std::vector<std::uint32_t> offset;  // dim + 1
  friend bool operator==(const LweParams&, const LweParams&) = default;
};

struct LweTrapdoor {
  std::vector<std::uint32_t> inverse;  // dim x dim inverse of the top block
  std::vector<std::uint32_t> secret;   // s
  friend bool operator==(const LweTrapdoor&, const LweTrapdoor&) = default;
};

struct KeyFactory;

}  // namespace funcfam_internal

class PublicKey {
 public:
  PublicKey() = default;

  FamilyKind kind() const { return kind_; }
  Backend backend() const;
  // Width w of the bit encoding of domain elements.
  int domain_bits() const;
  int image_bits() const;
  // Number of domain elements |X|.
  double domain_size() const;

  bool IsDomainElement(Word x) const;
  Word SampleDomain(Rng& rng) const;

  // y = f(b, x). Throws InvalidArgument for x outside the domain.
  Word Eval(std::uint8_t b, Word x) const;
  // True iff y is the image of (b, x).
  bool Check(std::uint8_t b, Word x, Word y) const;

  // Structural validation (parameter ranges, invertible top block for
  // toy-lwe, odd multipliers for mock).
  bool IsWellFormed() const;

  // Tagged binary: backend u8, kind u8, w u32, length-prefixed body.
  Bytes Serialize() const;
  static PublicKey Parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const PublicKey&, const PublicKey&) = default;

 private:
  friend class SecretKey;
  friend class CoherentSampler;
  friend struct funcfam_internal::KeyFactory;

  FamilyKind kind_ = FamilyKind::kNtif;
  std::variant<funcfam_internal::MockParams, funcfam_internal::LweParams> params_;
};

class SecretKey {
 public:
  SecretKey() = default;

  FamilyKind kind() const { return pk_.kind(); }
  const PublicKey& public_key() const { return pk_; }

  // Injective inversion: the unique (b, x) with f(b, x) = y, or nullopt
  // (reject) when y is not an image.
  std::optional<Preimage> Invert(Word y) const;
  // x_{b,y} with f(b, x) = y, or nullopt.
  std::optional<Word> InvertBranch(std::uint8_t b, Word y) const;
  // Both preimages for claw-free keys; nullopt for injective keys or
  // non-images.
  std::optional<Claw> FindClaw(Word y) const;

  Bytes Serialize() const;
  static SecretKey Parse(std::span<const std::uint8_t> bytes);

  friend bool operator==(const SecretKey&, const SecretKey&) = default;

 private:
  friend struct funcfam_internal::KeyFactory;

  PublicKey pk_;
  // Mock: the shift Delta. Toy-lwe: inverse block and secret.
  std::variant<Word, funcfam_internal::LweTrapdoor> trapdoor_;
};

struct KeyPair {
  PublicKey pk;
  SecretKey sk;
};

// Supported security-parameter ranges.
inline constexpr int kMockMinLambda = 1;
inline constexpr int kMockMaxLambda = 24;
inline constexpr int kLweMinLambda = 4;
inline constexpr int kLweMaxLambda = 24;

// Deterministic in the rng state. Throws InvalidArgument for unsupported
// lambda. For mock, w = lambda. For toy-lwe, d = 2 and q is the largest prime
// below 2^ceil(lambda/2).
KeyPair GenerateKey(FamilyKind kind, int lambda, Backend backend, Rng& rng);

// One key per basis bit: NTIF for 0 (Z basis), NTCF for 1 (X basis).
std::vector<KeyPair> GenerateKeysForBases(int lambda, std::span<const std::uint8_t> h,
                                          Backend backend, Rng& rng);

// Toy-lwe keys from explicit parts: top block `matrix` (d x d, row-major),
// extra row `row` (d), secret `secret` (d). For tests and worked examples.
KeyPair MakeToyLweKeyPair(FamilyKind kind, std::uint32_t modulus,
                          std::span<const std::uint32_t> matrix,
                          std::span<const std::uint32_t> row,
                          std::span<const std::uint32_t> secret);

// Packing helpers for toy-lwe vectors.
int LweCoordinateBits(std::uint32_t modulus);
Word PackCoordinates(std::span<const std::uint32_t> coords, std::uint32_t modulus);
std::vector<std::uint32_t> UnpackCoordinates(Word packed, int count,
                                             std::uint32_t modulus);

// Coherent Samp followed by measurement of the image register, in compact
// form: the image and both branch preimages of a claw-free key. Only the
// quantum prover simulation can construct one; classical strategies see
// public keys alone.
class CoherentSampler {
 public:
  struct Outcome {
    Word y = 0;
    Claw claw;
  };

  Outcome SampleClawState(const PublicKey& pk, Rng& rng) const;

 private:
  CoherentSampler() = default;
  friend class QuantumDevice;
};

}  // namespace cvqc

#endif  // CVQC_FUNCFAM_H_
