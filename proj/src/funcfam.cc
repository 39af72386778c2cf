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

#include "cvqc/funcfam.h"

#include <bit>
#include <cmath>

namespace cvqc {

using funcfam_internal::kMockSparsity;
using funcfam_internal::LweParams;
using funcfam_internal::LweTrapdoor;
using funcfam_internal::MockParams;

namespace funcfam_internal {

// Builds keys from parts; the only code allowed to touch the private
// representation besides the key classes themselves.
struct KeyFactory {
  static KeyPair Make(FamilyKind kind, std::variant<MockParams, LweParams> params,
                      std::variant<Word, LweTrapdoor> trapdoor) {
    KeyPair out;
    out.pk.kind_ = kind;
    out.pk.params_ = std::move(params);
    out.sk.pk_ = out.pk;
    out.sk.trapdoor_ = std::move(trapdoor);
    return out;
  }
};

}  // namespace funcfam_internal

namespace {

constexpr std::uint8_t kKeyVersion = 1;

// ---- mock permutation ----------------------------------------------------

int MockTotalBits(const MockParams& p) { return p.width + 1 + kMockSparsity; }

int MockXorShift(int m) { return (m + 1) / 2; }

Word InverseOdd(Word a) {
  Word x = a;  // correct to 3 bits; each step doubles the precision
  for (int k = 0; k < 5; ++k) x *= 2 - a * x;
  return x;
}

Word UndoXorShift(Word y, int shift, int m) {
  Word x = y;
  for (int covered = shift; covered < m; covered += shift) x = y ^ (x >> shift);
  return x;
}

Word MockPermute(const MockParams& p, Word v) {
  const int m = MockTotalBits(p);
  const Word mask = LowMask(m);
  const int sh = MockXorShift(m);
  for (int r = 0; r < 3; ++r) {
    v = (v * p.mul[r] + p.add[r]) & mask;
    v ^= v >> sh;
  }
  return v;
}

Word MockUnpermute(const MockParams& p, Word v) {
  const int m = MockTotalBits(p);
  const Word mask = LowMask(m);
  const int sh = MockXorShift(m);
  for (int r = 2; r >= 0; --r) {
    v = UndoXorShift(v, sh, m);
    v = ((v - p.add[r]) * InverseOdd(p.mul[r])) & mask;
  }
  return v;
}

Word MockEmbed(FamilyKind kind, const MockParams& p, std::uint8_t b, Word x) {
  if (kind == FamilyKind::kNtcf) {
    return (x ^ (b ? p.shift : 0)) << (kMockSparsity + 1);
  }
  return ((static_cast<Word>(b & 1) << p.width) | x) << kMockSparsity;
}

bool MockWellFormed(FamilyKind kind, const MockParams& p) {
  if (p.width < kMockMinLambda || p.width > kMockMaxLambda) return false;
  const Word mask = LowMask(MockTotalBits(p));
  for (int r = 0; r < 3; ++r) {
    if ((p.mul[r] & 1) == 0 || p.mul[r] > mask || p.add[r] > mask) return false;
  }
  if (kind == FamilyKind::kNtcf) return p.shift != 0 && p.shift <= LowMask(p.width);
  return p.shift == 0;
}

// ---- modular arithmetic for toy-lwe --------------------------------------

using U64 = std::uint64_t;

U64 PowMod(U64 base, U64 exp, U64 mod) {
  U64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

bool IsPrime(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; static_cast<U64>(d) * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

// Gauss-Jordan inverse of a d x d matrix mod a prime; nullopt if singular.
std::optional<std::vector<std::uint32_t>> InverseMod(std::span<const std::uint32_t> a, int d,
                                                     std::uint32_t q) {
  std::vector<U64> m(static_cast<std::size_t>(d) * 2 * d, 0);
  const int cols = 2 * d;
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) m[r * cols + c] = a[r * d + c] % q;
    m[r * cols + d + r] = 1 % q;
  }
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int r = c; r < d; ++r) {
      if (m[r * cols + c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != c) {
      for (int k = 0; k < cols; ++k) std::swap(m[c * cols + k], m[pivot * cols + k]);
    }
    const U64 inv = PowMod(m[c * cols + c], q - 2, q);
    for (int k = 0; k < cols; ++k) m[c * cols + k] = m[c * cols + k] * inv % q;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r * cols + c] == 0) continue;
      const U64 f = m[r * cols + c];
      for (int k = 0; k < cols; ++k) {
        m[r * cols + k] = (m[r * cols + k] + (q - f) * m[c * cols + k]) % q;
      }
    }
  }
  std::vector<std::uint32_t> out(static_cast<std::size_t>(d) * d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) out[r * d + c] = static_cast<std::uint32_t>(m[r * cols + d + c]);
  }
  return out;
}

// rows x d matrix times a d-vector.
std::vector<std::uint32_t> MatVec(std::span<const std::uint32_t> a, int rows, int d,
                                  std::span<const std::uint32_t> v, std::uint32_t q) {
  std::vector<std::uint32_t> out(rows);
  for (int r = 0; r < rows; ++r) {
    U64 acc = 0;
    for (int c = 0; c < d; ++c) acc = (acc + static_cast<U64>(a[r * d + c]) * v[c]) % q;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

std::vector<std::uint32_t> SubMod(std::span<const std::uint32_t> x,
                                  std::span<const std::uint32_t> y, std::uint32_t q) {
  std::vector<std::uint32_t> out(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = (x[k] + q - y[k]) % q;
  return out;
}

bool AllZero(std::span<const std::uint32_t> v) {
  for (auto e : v) {
    if (e != 0) return false;
  }
  return true;
}

std::span<const std::uint32_t> TopBlock(const LweParams& p) {
  return std::span<const std::uint32_t>(p.matrix).first(static_cast<std::size_t>(p.dim) * p.dim);
}

std::span<const std::uint32_t> ExtraRow(const LweParams& p) {
  return std::span<const std::uint32_t>(p.matrix).subspan(static_cast<std::size_t>(p.dim) * p.dim,
                                                          p.dim);
}

U64 Dot(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, std::uint32_t q) {
  U64 acc = 0;
  for (std::size_t k = 0; k < a.size(); ++k) acc = (acc + static_cast<U64>(a[k]) * b[k]) % q;
  return acc;
}

// Unpacks y into d + 1 coordinates; nullopt if any coordinate is out of
// range or stray high bits are set.
std::optional<std::vector<std::uint32_t>> UnpackImage(const LweParams& p, Word y) {
  const int bits = LweCoordinateBits(p.modulus);
  const int total = (p.dim + 1) * bits;
  if (total < 64 && (y >> total) != 0) return std::nullopt;
  auto coords = UnpackCoordinates(y, p.dim + 1, p.modulus);
  for (auto c : coords) {
    if (c >= p.modulus) return std::nullopt;
  }
  return coords;
}

// The point z = x + b*s with A z = y_top, and the residual of the extra row.
struct LweSolution {
  std::vector<std::uint32_t> z;
  std::uint32_t residual = 0;
};

std::optional<LweSolution> SolveImage(const LweParams& p, std::span<const std::uint32_t> inverse,
                                      Word y) {
  auto coords = UnpackImage(p, y);
  if (!coords) return std::nullopt;
  LweSolution out;
  out.z = MatVec(inverse, p.dim, p.dim,
                 std::span<const std::uint32_t>(*coords).first(p.dim), p.modulus);
  const U64 predicted = Dot(ExtraRow(p), out.z, p.modulus);
  out.residual = static_cast<std::uint32_t>(((*coords)[p.dim] + p.modulus - predicted) % p.modulus);
  return out;
}

// Recovers s from the public offset: s = A^{-1} u_top. Valid because the
// toy family has no noise.
std::optional<std::vector<std::uint32_t>> PublicShift(const LweParams& p,
                                                      std::span<const std::uint32_t> inverse) {
  auto s = MatVec(inverse, p.dim, p.dim, std::span<const std::uint32_t>(p.offset).first(p.dim),
                  p.modulus);
  return s;
}

bool LweWellFormed(FamilyKind kind, const LweParams& p) {
  if (p.dim < 1 || p.dim > 4) return false;
  if (!IsPrime(p.modulus) || p.modulus >= (1u << 16)) return false;
  if ((p.dim + 1) * LweCoordinateBits(p.modulus) > 64) return false;
  if (p.matrix.size() != static_cast<std::size_t>(p.dim + 1) * p.dim) return false;
  if (p.offset.size() != static_cast<std::size_t>(p.dim + 1)) return false;
  for (auto e : p.matrix) {
    if (e >= p.modulus) return false;
  }
  for (auto e : p.offset) {
    if (e >= p.modulus) return false;
  }
  auto inverse = InverseMod(TopBlock(p), p.dim, p.modulus);
  if (!inverse) return false;
  auto s = *PublicShift(p, *inverse);
  const U64 predicted = Dot(ExtraRow(p), s, p.modulus);
  const U64 residual = (p.offset[p.dim] + p.modulus - predicted) % p.modulus;
  if (kind == FamilyKind::kNtcf) return residual == 0 && !AllZero(s);
  return residual == 1 % p.modulus;
}

std::uint32_t LargestPrimeBelow(std::uint32_t bound) {
  for (std::uint32_t q = bound - 1; q >= 2; --q) {
    if (IsPrime(q)) return q;
  }
  throw InvalidArgument("no prime below bound");
}

std::vector<std::uint32_t> RandomVector(int count, std::uint32_t q, Rng& rng) {
  std::vector<std::uint32_t> v(count);
  for (auto& e : v) e = static_cast<std::uint32_t>(UniformBelow(rng, q));
  return v;
}

KeyPair BuildLwe(FamilyKind kind, std::uint32_t q, int d, std::span<const std::uint32_t> top,
                 std::span<const std::uint32_t> row, std::span<const std::uint32_t> secret) {
  LweParams p;
  p.dim = d;
  p.modulus = q;
  p.matrix.assign(top.begin(), top.end());
  p.matrix.insert(p.matrix.end(), row.begin(), row.end());
  p.offset = MatVec(p.matrix, d + 1, d, secret, q);
  if (kind == FamilyKind::kNtif) p.offset[d] = (p.offset[d] + 1) % q;
  auto inverse = InverseMod(top, d, q);
  if (!inverse) throw InvalidArgument("toy-lwe matrix is not invertible mod q");
  LweTrapdoor td{*inverse, std::vector<std::uint32_t>(secret.begin(), secret.end())};
  KeyPair kp = funcfam_internal::KeyFactory::Make(kind, p, td);
  if (!kp.pk.IsWellFormed()) throw InvalidArgument("toy-lwe parameters are not well formed");
  return kp;
}

void WriteWords32(ByteWriter& w, std::span<const std::uint32_t> v) {
  w.U64(v.size());
  for (auto e : v) w.U32(e);
}

std::vector<std::uint32_t> ReadWords32(ByteReader& r) {
  const std::uint64_t count = r.U64();
  if (count > r.remaining() / 4) throw InvalidArgument("truncated key vector");
  std::vector<std::uint32_t> v(count);
  for (auto& e : v) e = r.U32();
  return v;
}

Bytes SerializeParams(const std::variant<MockParams, LweParams>& params) {
  ByteWriter w;
  if (const auto* m = std::get_if<MockParams>(&params)) {
    w.U32(static_cast<std::uint32_t>(m->width));
    for (Word v : m->mul) w.U64(v);
    for (Word v : m->add) w.U64(v);
    w.U64(m->shift);
  } else {
    const auto& l = std::get<LweParams>(params);
    w.U32(static_cast<std::uint32_t>(l.dim));
    w.U32(l.modulus);
    WriteWords32(w, l.matrix);
    WriteWords32(w, l.offset);
  }
  return w.Take();
}

}  // namespace

std::string BackendName(Backend backend) {
  return backend == Backend::kMock ? "mock" : "toylwe";
}

Backend ParseBackend(std::string_view name) {
  if (name == "mock") return Backend::kMock;
  if (name == "toylwe" || name == "toy-lwe") return Backend::kToyLwe;
  throw InvalidArgument("unknown function-family backend: " + std::string(name));
}

int LweCoordinateBits(std::uint32_t modulus) {
  if (modulus < 2) throw InvalidArgument("modulus must be at least 2");
  return std::bit_width(modulus - 1);
}

Word PackCoordinates(std::span<const std::uint32_t> coords, std::uint32_t modulus) {
  const int bits = LweCoordinateBits(modulus);
  if (static_cast<int>(coords.size()) * bits > 64) throw InvalidArgument("vector too wide to pack");
  Word out = 0;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] >= modulus) throw InvalidArgument("coordinate out of range");
    out |= static_cast<Word>(coords[k]) << (k * bits);
  }
  return out;
}

std::vector<std::uint32_t> UnpackCoordinates(Word packed, int count, std::uint32_t modulus) {
  const int bits = LweCoordinateBits(modulus);
  std::vector<std::uint32_t> out(count);
  for (int k = 0; k < count; ++k) {
    out[k] = static_cast<std::uint32_t>((packed >> (k * bits)) & LowMask(bits));
  }
  return out;
}

// ---- PublicKey -------------------------------------------------------------

Backend PublicKey::backend() const {
  return std::holds_alternative<MockParams>(params_) ? Backend::kMock : Backend::kToyLwe;
}

int PublicKey::domain_bits() const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return m->width;
  const auto& l = std::get<LweParams>(params_);
  return l.dim * LweCoordinateBits(l.modulus);
}

int PublicKey::image_bits() const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return MockTotalBits(*m);
  const auto& l = std::get<LweParams>(params_);
  return (l.dim + 1) * LweCoordinateBits(l.modulus);
}

double PublicKey::domain_size() const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return std::ldexp(1.0, m->width);
  const auto& l = std::get<LweParams>(params_);
  return std::pow(static_cast<double>(l.modulus), l.dim);
}

bool PublicKey::IsDomainElement(Word x) const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return x <= LowMask(m->width);
  const auto& l = std::get<LweParams>(params_);
  if (x > LowMask(domain_bits())) return false;
  for (auto c : UnpackCoordinates(x, l.dim, l.modulus)) {
    if (c >= l.modulus) return false;
  }
  return true;
}

Word PublicKey::SampleDomain(Rng& rng) const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return rng() & LowMask(m->width);
  const auto& l = std::get<LweParams>(params_);
  return PackCoordinates(RandomVector(l.dim, l.modulus, rng), l.modulus);
}

Word PublicKey::Eval(std::uint8_t b, Word x) const {
  if (b > 1) throw InvalidArgument("branch bit must be 0 or 1");
  if (!IsDomainElement(x)) throw InvalidArgument("preimage outside the domain");
  if (const auto* m = std::get_if<MockParams>(&params_)) {
    return MockPermute(*m, MockEmbed(kind_, *m, b, x));
  }
  const auto& l = std::get<LweParams>(params_);
  auto y = MatVec(l.matrix, l.dim + 1, l.dim, UnpackCoordinates(x, l.dim, l.modulus), l.modulus);
  if (b) {
    for (int k = 0; k <= l.dim; ++k) y[k] = (y[k] + l.offset[k]) % l.modulus;
  }
  return PackCoordinates(y, l.modulus);
}

bool PublicKey::Check(std::uint8_t b, Word x, Word y) const {
  if (b > 1 || !IsDomainElement(x)) return false;
  return Eval(b, x) == y;
}

bool PublicKey::IsWellFormed() const {
  if (const auto* m = std::get_if<MockParams>(&params_)) return MockWellFormed(kind_, *m);
  return LweWellFormed(kind_, std::get<LweParams>(params_));
}

Bytes PublicKey::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-PK");
  w.U8(kKeyVersion);
  w.U8(static_cast<std::uint8_t>(backend()));
  w.U8(static_cast<std::uint8_t>(kind_));
  w.U32(static_cast<std::uint32_t>(domain_bits()));
  w.LengthPrefixed(SerializeParams(params_));
  return w.Take();
}

namespace {

PublicKey ParsePublicKey(ByteReader& r) {
  if (r.Raw(7) != AsBytes("CVQC-PK")) throw InvalidArgument("not a public key");
  if (r.U8() != kKeyVersion) throw InvalidArgument("unsupported key version");
  const std::uint8_t backend = r.U8();
  const std::uint8_t kind = r.U8();
  const std::uint32_t width = r.U32();
  if (backend > 1 || kind > 1) throw InvalidArgument("bad key tag");
  const Bytes body = r.LengthPrefixed();
  ByteReader b(body);
  std::variant<MockParams, LweParams> params;
  if (backend == static_cast<std::uint8_t>(Backend::kMock)) {
    MockParams m;
    m.width = static_cast<int>(b.U32());
    for (Word& v : m.mul) v = b.U64();
    for (Word& v : m.add) v = b.U64();
    m.shift = b.U64();
    params = m;
  } else {
    LweParams l;
    l.dim = static_cast<int>(b.U32());
    l.modulus = b.U32();
    l.matrix = ReadWords32(b);
    l.offset = ReadWords32(b);
    params = l;
  }
  if (!b.done()) throw InvalidArgument("trailing bytes in key body");
  KeyPair kp = funcfam_internal::KeyFactory::Make(static_cast<FamilyKind>(kind), params, Word{0});
  if (!kp.pk.IsWellFormed() || static_cast<std::uint32_t>(kp.pk.domain_bits()) != width) {
    throw InvalidArgument("malformed public key");
  }
  return kp.pk;
}

}  // namespace

PublicKey PublicKey::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  PublicKey pk = ParsePublicKey(r);
  if (!r.done()) throw InvalidArgument("trailing bytes after public key");
  return pk;
}

// ---- SecretKey -------------------------------------------------------------

std::optional<Preimage> SecretKey::Invert(Word y) const {
  if (pk_.kind() != FamilyKind::kNtif) return std::nullopt;
  if (const auto* m = std::get_if<MockParams>(&pk_.params_)) {
    if (y > LowMask(MockTotalBits(*m))) return std::nullopt;
    Word v = MockUnpermute(*m, y);
    if (v & LowMask(kMockSparsity)) return std::nullopt;
    v >>= kMockSparsity;
    return Preimage{static_cast<std::uint8_t>((v >> m->width) & 1), v & LowMask(m->width)};
  }
  const auto& l = std::get<LweParams>(pk_.params_);
  const auto& td = std::get<LweTrapdoor>(trapdoor_);
  auto sol = SolveImage(l, td.inverse, y);
  if (!sol || sol->residual > 1) return std::nullopt;
  const std::uint8_t b = static_cast<std::uint8_t>(sol->residual);
  auto x = b ? SubMod(sol->z, td.secret, l.modulus) : sol->z;
  return Preimage{b, PackCoordinates(x, l.modulus)};
}

std::optional<Word> SecretKey::InvertBranch(std::uint8_t b, Word y) const {
  if (b > 1) return std::nullopt;
  if (pk_.kind() == FamilyKind::kNtif) {
    auto pre = Invert(y);
    if (!pre || pre->b != b) return std::nullopt;
    return pre->x;
  }
  auto claw = FindClaw(y);
  if (!claw) return std::nullopt;
  return b ? claw->x1 : claw->x0;
}

std::optional<Claw> SecretKey::FindClaw(Word y) const {
  if (pk_.kind() != FamilyKind::kNtcf) return std::nullopt;
  if (const auto* m = std::get_if<MockParams>(&pk_.params_)) {
    if (y > LowMask(MockTotalBits(*m))) return std::nullopt;
    Word v = MockUnpermute(*m, y);
    if (v & LowMask(kMockSparsity + 1)) return std::nullopt;
    const Word x0 = v >> (kMockSparsity + 1);
    return Claw{x0, x0 ^ std::get<Word>(trapdoor_)};
  }
  const auto& l = std::get<LweParams>(pk_.params_);
  const auto& td = std::get<LweTrapdoor>(trapdoor_);
  auto sol = SolveImage(l, td.inverse, y);
  if (!sol || sol->residual != 0) return std::nullopt;
  return Claw{PackCoordinates(sol->z, l.modulus),
              PackCoordinates(SubMod(sol->z, td.secret, l.modulus), l.modulus)};
}

Bytes SecretKey::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-SK");
  w.U8(kKeyVersion);
  w.Raw(pk_.Serialize());
  ByteWriter t;
  if (const auto* delta = std::get_if<Word>(&trapdoor_)) {
    t.U64(*delta);
  } else {
    const auto& td = std::get<LweTrapdoor>(trapdoor_);
    WriteWords32(t, td.inverse);
    WriteWords32(t, td.secret);
  }
  w.LengthPrefixed(t.bytes());
  return w.Take();
}

SecretKey SecretKey::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Raw(7) != AsBytes("CVQC-SK")) throw InvalidArgument("not a secret key");
  if (r.U8() != kKeyVersion) throw InvalidArgument("unsupported key version");
  PublicKey pk = ParsePublicKey(r);
  const Bytes body = r.LengthPrefixed();
  if (!r.done()) throw InvalidArgument("trailing bytes after secret key");
  ByteReader t(body);
  std::variant<Word, LweTrapdoor> td;
  if (pk.backend() == Backend::kMock) {
    td = t.U64();
  } else {
    LweTrapdoor l;
    l.inverse = ReadWords32(t);
    l.secret = ReadWords32(t);
    td = l;
  }
  if (!t.done()) throw InvalidArgument("trailing bytes in trapdoor");
  KeyPair kp = funcfam_internal::KeyFactory::Make(pk.kind(), pk.params_, td);
  // The trapdoor must agree with the public key it claims to invert.
  if (const auto* m = std::get_if<MockParams>(&pk.params_)) {
    if (std::get<Word>(td) != m->shift) throw InvalidArgument("trapdoor does not match key");
  } else {
    const auto& l = std::get<LweParams>(pk.params_);
    const auto& lt = std::get<LweTrapdoor>(td);
    auto inverse = InverseMod(TopBlock(l), l.dim, l.modulus);
    if (!inverse || *inverse != lt.inverse || *PublicShift(l, *inverse) != lt.secret) {
      throw InvalidArgument("trapdoor does not match key");
    }
  }
  return kp.sk;
}

// ---- generation --------------------------------------------------------------

KeyPair GenerateKey(FamilyKind kind, int lambda, Backend backend, Rng& rng) {
  if (backend == Backend::kMock) {
    if (lambda < kMockMinLambda || lambda > kMockMaxLambda) {
      throw InvalidArgument("mock backend supports lambda in [1, 24]");
    }
    MockParams p;
    p.width = lambda;
    const Word mask = LowMask(MockTotalBits(p));
    for (int r = 0; r < 3; ++r) {
      p.mul[r] = (rng() & mask) | 1;
      p.add[r] = rng() & mask;
    }
    if (kind == FamilyKind::kNtcf) {
      do {
        p.shift = rng() & LowMask(p.width);
      } while (p.shift == 0);
    }
    return funcfam_internal::KeyFactory::Make(kind, p, p.shift);
  }
  if (lambda < kLweMinLambda || lambda > kLweMaxLambda) {
    throw InvalidArgument("toy-lwe backend supports lambda in [4, 24]");
  }
  constexpr int kDim = 2;
  const int bits = (lambda + 1) / 2;
  const std::uint32_t q = LargestPrimeBelow(1u << bits);
  for (;;) {
    auto top = RandomVector(kDim * kDim, q, rng);
    if (!InverseMod(top, kDim, q)) continue;
    auto row = RandomVector(kDim, q, rng);
    auto s = RandomVector(kDim, q, rng);
    if (kind == FamilyKind::kNtcf && AllZero(s)) continue;
    return BuildLwe(kind, q, kDim, top, row, s);
  }
}

std::vector<KeyPair> GenerateKeysForBases(int lambda, std::span<const std::uint8_t> h,
                                          Backend backend, Rng& rng) {
  std::vector<KeyPair> out;
  out.reserve(h.size());
  for (std::uint8_t bit : h) {
    out.push_back(GenerateKey(bit ? FamilyKind::kNtcf : FamilyKind::kNtif, lambda, backend, rng));
  }
  return out;
}

KeyPair MakeToyLweKeyPair(FamilyKind kind, std::uint32_t modulus,
                          std::span<const std::uint32_t> matrix,
                          std::span<const std::uint32_t> row,
                          std::span<const std::uint32_t> secret) {
  const int d = static_cast<int>(secret.size());
  if (d < 1 || matrix.size() != static_cast<std::size_t>(d) * d || row.size() != secret.size()) {
    throw InvalidArgument("toy-lwe part shapes do not match");
  }
  if (!IsPrime(modulus)) throw InvalidArgument("toy-lwe modulus must be prime");
  for (auto e : matrix) {
    if (e >= modulus) throw InvalidArgument("matrix entry out of range");
  }
  for (auto e : row) {
    if (e >= modulus) throw InvalidArgument("row entry out of range");
  }
  for (auto e : secret) {
    if (e >= modulus) throw InvalidArgument("secret entry out of range");
  }
  return BuildLwe(kind, modulus, d, matrix, row, secret);
}

// ---- coherent sampling -------------------------------------------------------

CoherentSampler::Outcome CoherentSampler::SampleClawState(const PublicKey& pk, Rng& rng) const {
  if (pk.kind() != FamilyKind::kNtcf) throw InvalidArgument("claw state needs a claw-free key");
  Outcome out;
  out.claw.x0 = pk.SampleDomain(rng);
  out.y = pk.Eval(0, out.claw.x0);
  if (const auto* m = std::get_if<MockParams>(&pk.params_)) {
    out.claw.x1 = out.claw.x0 ^ m->shift;
  } else {
    const auto& l = std::get<LweParams>(pk.params_);
    auto inverse = InverseMod(TopBlock(l), l.dim, l.modulus);
    auto s = *PublicShift(l, *inverse);
    out.claw.x1 = PackCoordinates(
        SubMod(UnpackCoordinates(out.claw.x0, l.dim, l.modulus), s, l.modulus), l.modulus);
  }
  return out;
}

}  // namespace cvqc
