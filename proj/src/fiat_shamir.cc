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

#include "cvqc/fiat_shamir.h"

#include <algorithm>

namespace cvqc {

Digest RandomOracle::Query(std::span<const std::uint8_t> x, std::span<const std::uint8_t> w,
                           std::span<const std::uint8_t> y) const {
  ByteWriter out;
  out.Raw(tag_);
  out.LengthPrefixed(x);
  out.LengthPrefixed(w);
  out.LengthPrefixed(y);
  return Sha256(out.bytes());
}

Bits DeriveChallenge(const RandomOracle& oracle, std::span<const std::uint8_t> x,
                     std::span<const std::uint8_t> w, std::span<const std::uint8_t> y, int k) {
  if (k < 0 || k > 256) throw InvalidArgument("challenge length must be in [0, 256]");
  const Digest d = oracle.Query(x, w, y);
  Bits c(k);
  for (int i = 0; i < k; ++i) c[i] = (d[i / 8] >> (7 - i % 8)) & 1;
  return c;
}

Bytes EncodeImages(std::span<const Word> y) {
  ByteWriter w;
  w.U64(y.size());
  for (Word v : y) w.U64(v);
  return w.Take();
}

Bytes FsTranscript::CanonicalBody() const {
  ByteWriter out;
  out.Raw("CVQC-FST-v1");
  out.Raw(x);
  out.Raw(w);
  out.Raw(EncodeImages(y));
  out.BitString(c);
  out.U64(u.size());
  for (const Response& r : u) {
    out.U8(r.w);
    out.U64(r.t);
  }
  return out.Take();
}

Digest FsTranscript::ComputeDigest() const { return Sha256(CanonicalBody()); }

Bytes FsTranscript::Serialize() const {
  ByteWriter out;
  out.Raw(CanonicalBody());
  out.U8(accepted ? 1 : 0);
  out.Raw(digest);
  return out.Take();
}

FsTranscript FsTranscript::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Raw(11) != AsBytes("CVQC-FST-v1")) throw InvalidArgument("not an FS transcript");
  FsTranscript t;
  auto x = r.Raw(32);
  std::copy(x.begin(), x.end(), t.x.begin());
  auto w = r.Raw(32);
  std::copy(w.begin(), w.end(), t.w.begin());
  const std::uint64_t ny = r.U64();
  if (ny > r.remaining() / 8) throw InvalidArgument("truncated FS transcript");
  t.y.resize(ny);
  for (auto& v : t.y) v = r.U64();
  t.c = r.BitString();
  const std::uint64_t nu = r.U64();
  if (nu > r.remaining() / 9) throw InvalidArgument("truncated FS transcript");
  t.u.resize(nu);
  for (auto& resp : t.u) {
    resp.w = r.U8();
    resp.t = r.U64();
  }
  const std::uint8_t acc = r.U8();
  if (acc > 1) throw InvalidArgument("bad decision byte");
  t.accepted = acc == 1;
  auto d = r.Raw(32);
  std::copy(d.begin(), d.end(), t.digest.begin());
  if (!r.done()) throw InvalidArgument("trailing bytes after FS transcript");
  return t;
}

FsTranscript FsProve(const ZXHamiltonian& h, const ProverSetup& setup, Prover& prover,
                     const RandomOracle& oracle, Rng& rng) {
  if (h.num_qubits() != setup.params.n) throw InvalidArgument("instance size does not match");
  FsTranscript t;
  t.x = h.DigestBytes();
  t.w = setup.DigestBytes();
  t.y = prover.Commit(setup, rng);
  t.c = DeriveChallenge(oracle, t.x, t.w, EncodeImages(t.y), setup.params.k);
  t.u = prover.Respond(t.c, rng);
  t.digest = t.ComputeDigest();
  return t;
}

FsCheck FsVerify(const ZXHamiltonian& h, const VerifierSetup& setup, const FsTranscript& t,
                 const RandomOracle& oracle) {
  FsCheck out;
  out.bindings_ok = t.x == h.DigestBytes() && t.w == setup.PublicPart().DigestBytes();
  const Bits c = DeriveChallenge(oracle, t.x, t.w, EncodeImages(t.y), setup.params.k);
  out.challenge_ok = c == t.c;
  out.digest_ok = t.digest == t.ComputeDigest();
  out.verdict = Verdict(h, setup, t.y, c, t.u);
  out.accepted = out.bindings_ok && out.challenge_ok && out.digest_ok && out.verdict.accepted;
  return out;
}

double FsBound(int q, double range_size, double epsilon) {
  if (q < 0) throw InvalidArgument("query count must be nonnegative");
  if (!(range_size >= 1.0)) throw InvalidArgument("range size must be at least 1");
  const double a = 2.0 * q + 1.0;
  return epsilon / (2.0 * a * (2.0 * q + 3.0)) - 1.0 / (a * range_size);
}

// ---- reduction ------------------------------------------------------------------

LazyOracle::LazyOracle(int challenge_bits, std::uint64_t seed)
    : bits_(challenge_bits), rng_(seed) {
  if (challenge_bits < 1 || challenge_bits > 64) throw InvalidArgument("challenge bits in [1, 64]");
}

Word LazyOracle::QueryOriginal(Word x, Word y) {
  auto [it, inserted] = table_.try_emplace({x, y}, 0);
  if (inserted) it->second = rng_() & LowMask(bits_);
  return it->second;
}

Word LazyOracle::Query(Word x, Word y) {
  if (program_ && program_->first == y) return program_->second;
  return QueryOriginal(x, y);
}

void LazyOracle::Reprogram(Word y, Word theta) { program_ = std::make_pair(y, theta); }

ReductionOutcome ReductionSim(const FsAdversary& adversary, int q, int challenge_bits,
                              const std::function<Word(Word y)>& challenge,
                              const std::function<bool(Word y, Word theta, Word m)>& verdict,
                              Rng& rng) {
  if (q < 0) throw InvalidArgument("query bound must be nonnegative");
  ReductionOutcome out;
  out.index = static_cast<int>(UniformBelow(rng, static_cast<std::uint64_t>(q) + 1));
  out.coin = RandomBit(rng);
  LazyOracle oracle(challenge_bits, rng());
  int made = 0;
  bool measured = false;

  const OracleQuery query = [&](Word x, Word y) -> Word {
    ++made;
    if (made > q) throw InvalidArgument("adversary exceeded its query bound");
    if (made == out.index + 1) {
      // Stop before query i+1: y is fixed from this query, the verifier
      // answers, and the oracle becomes F*Theta y.
      out.y = y;
      out.theta = challenge(y);
      measured = true;
      const Word original = oracle.QueryOriginal(x, y);
      oracle.Reprogram(out.y, out.theta);
      return out.coin == 0 ? oracle.Query(x, y) : original;
    }
    return oracle.Query(x, y);
  };

  const AdversaryOutput final = adversary(query);
  if (!measured) {
    // i = q (or fewer queries were made): y comes from the final output.
    out.y = final.y;
    out.theta = challenge(final.y);
  }
  out.m = final.m;
  if (final.y != out.y) {
    out.aborted = true;
    return out;
  }
  out.success = verdict(out.y, out.theta, out.m);
  return out;
}

}  // namespace cvqc
