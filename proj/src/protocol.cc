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

#include "cvqc/protocol.h"

#include <algorithm>
#include <exception>
#include <functional>

namespace cvqc {
namespace {

void WriteParams(ByteWriter& w, const ProtocolParams& p, ProtocolMode mode) {
  w.U32(static_cast<std::uint32_t>(p.lambda));
  w.U32(static_cast<std::uint32_t>(p.n));
  w.U32(static_cast<std::uint32_t>(p.r));
  w.U32(static_cast<std::uint32_t>(p.k));
  w.U8(static_cast<std::uint8_t>(p.backend));
  w.U8(static_cast<std::uint8_t>(mode));
}

ProtocolParams ReadParams(ByteReader& r, ProtocolMode& mode) {
  ProtocolParams p;
  p.lambda = static_cast<int>(r.U32());
  p.n = static_cast<int>(r.U32());
  p.r = static_cast<int>(r.U32());
  p.k = static_cast<int>(r.U32());
  const std::uint8_t backend = r.U8();
  const std::uint8_t m = r.U8();
  if (backend > 1 || m > 1) throw InvalidArgument("bad setup tag");
  p.backend = static_cast<Backend>(backend);
  mode = static_cast<ProtocolMode>(m);
  p.Validate();
  return p;
}

void ExpectTag(ByteReader& r, std::string_view tag) {
  if (r.Raw(tag.size()) != AsBytes(tag)) {
    throw InvalidArgument("unexpected tag, wanted " + std::string(tag));
  }
}

GroupOutcome TestRound(const VerifierSetup& setup, int i, std::span<const Word> y,
                       std::span<const Response> u) {
  const ProtocolParams& p = setup.params;
  GroupOutcome g;
  g.challenge = 0;
  g.accepted = true;
  for (int j = 0; j < p.r && g.accepted; ++j) {
    for (int l = 0; l < p.n; ++l) {
      const std::size_t idx = p.Index(i, j, l);
      const Response& resp = u[idx];
      if (resp.w > 1 || !setup.sk[idx].public_key().Check(resp.w, resp.t, y[idx])) {
        g.accepted = false;
        break;
      }
    }
  }
  return g;
}

// Decoded measurement outcome of one qubit, or nullopt on reject.
std::optional<std::uint8_t> Decode(const SecretKey& sk, std::uint8_t basis, Word y,
                                   const Response& resp) {
  if (basis == 0) {
    auto pre = sk.Invert(y);
    if (!pre) return std::nullopt;
    return pre->b;
  }
  if (resp.t == 0 || resp.w > 1) return std::nullopt;
  auto claw = sk.FindClaw(y);
  if (!claw) return std::nullopt;
  return static_cast<std::uint8_t>(DotGf2(resp.t, claw->x0 ^ claw->x1) ^ resp.w);
}

bool ShapesOk(const VerifierSetup& setup, std::span<const Word> y,
              std::span<const std::uint8_t> c, std::span<const Response> u) {
  const ProtocolParams& p = setup.params;
  if (y.size() != p.qubits() || u.size() != p.qubits()) return false;
  if (c.size() != static_cast<std::size_t>(p.k)) return false;
  if (setup.sk.size() != p.qubits() || setup.h.size() != p.qubits()) return false;
  for (std::uint8_t bit : c) {
    if (bit > 1) return false;
  }
  return true;
}

}  // namespace

void ProtocolParams::Validate() const {
  if (n < 1 || n > kMaxExactQubits) throw InvalidArgument("n must be in [1, 12]");
  if (r < 1) throw InvalidArgument("r must be positive");
  if (k < 0 || k > 256) throw InvalidArgument("k must be in [0, 256]");
  if (static_cast<double>(n) * r * k > static_cast<double>(kMaxProtocolQubits)) {
    throw CapacityError("n * r * k exceeds the simulator cap");
  }
}

// ---- setups ------------------------------------------------------------------

Bytes ProverSetup::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-PS-v1");
  WriteParams(w, params, mode);
  w.U64(pk.size());
  for (const PublicKey& key : pk) w.LengthPrefixed(key.Serialize());
  return w.Take();
}

ProverSetup ProverSetup::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-PS-v1");
  ProverSetup out;
  out.params = ReadParams(r, out.mode);
  const std::uint64_t count = r.U64();
  if (count != out.params.qubits()) throw InvalidArgument("key count does not match n*r*k");
  out.pk.reserve(count);
  for (std::uint64_t q = 0; q < count; ++q) out.pk.push_back(PublicKey::Parse(r.LengthPrefixed()));
  if (!r.done()) throw InvalidArgument("trailing bytes after prover setup");
  return out;
}

Digest ProverSetup::DigestBytes() const { return Sha256(Serialize()); }

ProverSetup VerifierSetup::PublicPart() const {
  ProverSetup out;
  out.params = params;
  out.mode = mode;
  out.pk.reserve(sk.size());
  for (const SecretKey& key : sk) out.pk.push_back(key.public_key());
  return out;
}

Bytes VerifierSetup::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-VS-v1");
  WriteParams(w, params, mode);
  w.BitString(h);
  w.U64(sk.size());
  for (const SecretKey& key : sk) w.LengthPrefixed(key.Serialize());
  w.U64(s.size());
  for (std::uint64_t v : s) w.U64(v);
  return w.Take();
}

VerifierSetup VerifierSetup::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-VS-v1");
  VerifierSetup out;
  out.params = ReadParams(r, out.mode);
  out.h = r.BitString();
  if (out.h.size() != out.params.qubits()) throw InvalidArgument("basis string length mismatch");
  const std::uint64_t count = r.U64();
  if (count != out.params.qubits()) throw InvalidArgument("key count does not match n*r*k");
  out.sk.reserve(count);
  for (std::uint64_t q = 0; q < count; ++q) {
    out.sk.push_back(SecretKey::Parse(r.LengthPrefixed()));
    const FamilyKind want = out.h[q] ? FamilyKind::kNtcf : FamilyKind::kNtif;
    if (out.sk.back().kind() != want) throw InvalidArgument("key kind does not match basis bit");
  }
  const std::uint64_t words = r.U64();
  const std::uint64_t want_words = out.mode == ProtocolMode::kCtq ? 0 : out.params.copies();
  if (words != want_words) throw InvalidArgument("term randomness length mismatch");
  out.s.resize(words);
  for (auto& v : out.s) v = r.U64();
  if (!r.done()) throw InvalidArgument("trailing bytes after verifier setup");
  return out;
}

namespace {

SetupPair MakeSetup(const ProtocolParams& params, ProtocolMode mode, Rng& rng) {
  params.Validate();
  SetupPair out;
  VerifierSetup& v = out.verifier;
  v.params = params;
  v.mode = mode;
  v.h = mode == ProtocolMode::kCtq ? Bits(params.qubits(), 1) : RandomBits(params.qubits(), rng);
  auto keys = GenerateKeysForBases(params.lambda, v.h, params.backend, rng);
  v.sk.reserve(keys.size());
  for (auto& kp : keys) v.sk.push_back(std::move(kp.sk));
  if (mode == ProtocolMode::kHamiltonian) {
    v.s.resize(params.copies());
    for (auto& word : v.s) word = rng();
  }
  out.prover = v.PublicPart();
  return out;
}

}  // namespace

SetupPair Setup(const ProtocolParams& params, Rng& rng) {
  return MakeSetup(params, ProtocolMode::kHamiltonian, rng);
}

SetupPair SetupCtq(const ProtocolParams& params, Rng& rng) {
  return MakeSetup(params, ProtocolMode::kCtq, rng);
}

// ---- honest prover -------------------------------------------------------------

HonestProver::HonestProver(StateVector witness) : single_(std::move(witness)) {}

HonestProver::HonestProver(WitnessState witness) : copies_(std::move(witness)) {}

std::vector<Word> HonestProver::Commit(const ProverSetup& setup, Rng& rng) {
  params_ = setup.params;
  WitnessState witness;
  if (single_) {
    witness = InjectWitness(*single_, static_cast<int>(params_.copies()));
  } else {
    witness = *copies_;
  }
  if (witness.num_qubits != params_.n || witness.copies.size() != params_.copies()) {
    throw InvalidArgument("witness shape does not match the setup");
  }
  device_.emplace(std::move(witness));
  return device_->Commit(setup.pk, rng);
}

std::vector<Response> HonestProver::Respond(std::span<const std::uint8_t> c, Rng& rng) {
  if (!device_) throw InvalidArgument("respond before commit");
  if (c.size() != static_cast<std::size_t>(params_.k)) throw InvalidArgument("challenge length");
  std::vector<Response> u;
  u.reserve(params_.qubits());
  for (int i = 0; i < params_.k; ++i) {
    for (int j = 0; j < params_.r; ++j) {
      const int copy = i * params_.r + j;
      auto part = c[i] ? device_->MeasureHadamard(copy, rng) : device_->MeasureTest(copy, rng);
      u.insert(u.end(), part.begin(), part.end());
    }
  }
  return u;
}

// ---- verdicts ------------------------------------------------------------------

bool MeetsThreshold(int satisfied, int consistent, double a, double b) {
  return static_cast<double>(satisfied) >= (2.0 - a - b) * consistent / 4.0 - 1e-9;
}

VerdictReport Verdict(const ZXHamiltonian& h, const VerifierSetup& setup,
                      std::span<const Word> y, std::span<const std::uint8_t> c,
                      std::span<const Response> u, const PadKeys* pad) {
  VerdictReport report;
  const ProtocolParams& p = setup.params;
  if (!ShapesOk(setup, y, c, u) || setup.s.size() != p.copies() || h.num_qubits() != p.n ||
      (pad && (pad->beta.size() != p.qubits() || pad->gamma.size() != p.qubits()))) {
    report.well_formed = false;
    return report;
  }
  report.accepted = true;
  for (int i = 0; i < p.k; ++i) {
    if (c[i] == 0) {
      report.groups.push_back(TestRound(setup, i, y, u));
      report.accepted = report.accepted && report.groups.back().accepted;
      continue;
    }
    GroupOutcome g;
    g.challenge = 1;
    for (int j = 0; j < p.r; ++j) {
      const std::size_t base = p.Index(i, j, 0);
      const Term& term = SampleTerm(h, setup.s[static_cast<std::size_t>(i) * p.r + j]);
      const std::span<const std::uint8_t> basis(setup.h.data() + base, p.n);
      if (!IsConsistent(term, basis)) continue;
      ++g.consistent;
      Bits e(p.n);
      bool ok = true;
      for (int l = 0; l < p.n && ok; ++l) {
        auto bit = Decode(setup.sk[base + l], basis[l], y[base + l], u[base + l]);
        if (!bit) {
          ok = false;
        } else {
          e[l] = *bit;
        }
      }
      if (!ok) {
        ++g.decode_failures;
        continue;
      }
      Term judged = term;
      if (pad) {
        const auto& key = term.pauli == Pauli::kZZ ? pad->beta : pad->gamma;
        if ((key[base + term.i] ^ key[base + term.j]) & 1) judged.sign = -judged.sign;
      }
      if (TermSatisfied(judged, e[term.i], e[term.j])) ++g.satisfied;
    }
    g.threshold = (2.0 - h.a() - h.b()) * g.consistent / 4.0;
    g.accepted = MeetsThreshold(g.satisfied, g.consistent, h.a(), h.b());
    report.accepted = report.accepted && g.accepted;
    report.groups.push_back(g);
  }
  return report;
}

VerdictReport VerdictCtq(const VerifierSetup& setup, std::span<const Word> y,
                         std::span<const std::uint8_t> c, std::span<const Response> u) {
  VerdictReport report;
  const ProtocolParams& p = setup.params;
  if (!ShapesOk(setup, y, c, u) || setup.mode != ProtocolMode::kCtq) {
    report.well_formed = false;
    return report;
  }
  report.accepted = true;
  for (int i = 0; i < p.k; ++i) {
    if (c[i] == 0) {
      report.groups.push_back(TestRound(setup, i, y, u));
      report.accepted = report.accepted && report.groups.back().accepted;
      continue;
    }
    GroupOutcome g;
    g.challenge = 1;
    g.accepted = true;
    for (int j = 0; j < p.r; ++j) {
      for (int l = 0; l < p.n; ++l) {
        const std::size_t idx = p.Index(i, j, l);
        auto bit = Decode(setup.sk[idx], setup.h[idx], y[idx], u[idx]);
        if (!bit) ++g.decode_failures;
        if (!bit || *bit != 0) g.accepted = false;
      }
    }
    report.accepted = report.accepted && g.accepted;
    report.groups.push_back(g);
  }
  return report;
}

// ---- transcripts -----------------------------------------------------------------

Bytes Transcript::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-TR-v1");
  w.U8(static_cast<std::uint8_t>(mode));
  w.Raw(instance);
  w.Raw(setup);
  w.U64(y.size());
  for (Word v : y) w.U64(v);
  w.BitString(c);
  w.U64(u.size());
  for (const Response& r : u) {
    w.U8(r.w);
    w.U64(r.t);
  }
  w.U8(accepted ? 1 : 0);
  return w.Take();
}

Transcript Transcript::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-TR-v1");
  Transcript t;
  const std::uint8_t mode = r.U8();
  if (mode > 1) throw InvalidArgument("bad transcript mode");
  t.mode = static_cast<ProtocolMode>(mode);
  auto inst = r.Raw(32);
  std::copy(inst.begin(), inst.end(), t.instance.begin());
  auto set = r.Raw(32);
  std::copy(set.begin(), set.end(), t.setup.begin());
  const std::uint64_t ny = r.U64();
  if (ny > r.remaining() / 8) throw InvalidArgument("truncated transcript");
  t.y.resize(ny);
  for (auto& v : t.y) v = r.U64();
  t.c = r.BitString();
  const std::uint64_t nu = r.U64();
  if (nu > r.remaining() / 9) throw InvalidArgument("truncated transcript");
  t.u.resize(nu);
  for (auto& resp : t.u) {
    resp.w = r.U8();
    resp.t = r.U64();
  }
  const std::uint8_t acc = r.U8();
  if (acc > 1) throw InvalidArgument("bad decision byte");
  t.accepted = acc == 1;
  if (!r.done()) throw InvalidArgument("trailing bytes after transcript");
  return t;
}

Digest Transcript::DigestBytes() const { return Sha256(Serialize()); }

Digest CtqInstanceDigest() { return Sha256(AsBytes("CVQC-CTQ-v1")); }

namespace {

Transcript Drive(const Digest& instance, const SetupPair& setup, Prover& prover, Rng& rng,
                 const std::function<VerdictReport(const Transcript&)>& judge,
                 VerdictReport* report) {
  Transcript t;
  t.mode = setup.verifier.mode;
  t.instance = instance;
  t.setup = setup.prover.DigestBytes();
  VerdictReport local;
  try {
    t.y = prover.Commit(setup.prover, rng);
    t.c = RandomBits(static_cast<std::size_t>(setup.verifier.params.k), rng);
    t.u = prover.Respond(t.c, rng);
    local = judge(t);
  } catch (const std::exception&) {
    // A failing strategy is a rejected session.
    if (t.c.empty()) t.c = Bits(static_cast<std::size_t>(setup.verifier.params.k), 0);
    local = VerdictReport{};
    local.well_formed = false;
  }
  t.accepted = local.accepted;
  if (report) *report = std::move(local);
  return t;
}

}  // namespace

Transcript RunInteractive(const ZXHamiltonian& h, const SetupPair& setup, Prover& prover,
                          Rng& rng, VerdictReport* report) {
  if (h.num_qubits() != setup.verifier.params.n) {
    throw InvalidArgument("instance size does not match the setup");
  }
  return Drive(h.DigestBytes(), setup, prover, rng,
               [&](const Transcript& t) { return Verdict(h, setup.verifier, t.y, t.c, t.u); },
               report);
}

Transcript RunCtq(const SetupPair& setup, Prover& prover, Rng& rng, VerdictReport* report) {
  if (setup.verifier.mode != ProtocolMode::kCtq) throw InvalidArgument("setup is not in CTQ mode");
  return Drive(CtqInstanceDigest(), setup, prover, rng,
               [&](const Transcript& t) { return VerdictCtq(setup.verifier, t.y, t.c, t.u); },
               report);
}

bool ReplayDecision(const ZXHamiltonian* h, const VerifierSetup& setup, const Transcript& t) {
  if (t.mode == ProtocolMode::kCtq) return VerdictCtq(setup, t.y, t.c, t.u).accepted;
  if (h == nullptr) throw InvalidArgument("replay needs the instance");
  return Verdict(*h, setup, t.y, t.c, t.u).accepted;
}

}  // namespace cvqc
