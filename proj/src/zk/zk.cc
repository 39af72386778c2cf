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

#include "cvqc/zk/zk.h"

#include <algorithm>
#include <exception>

#include "cvqc/qprover.h"

namespace cvqc {
namespace {

void ReadDigest(ByteReader& r, Digest& out) {
  auto raw = r.Raw(out.size());
  std::copy(raw.begin(), raw.end(), out.begin());
}

std::vector<Word> ReadImages(ByteReader& r) {
  const std::uint64_t count = r.U64();
  if (count > r.remaining() / 8) throw InvalidArgument("truncated image list");
  std::vector<Word> y(count);
  for (auto& v : y) v = r.U64();
  return y;
}

void ExpectTag(ByteReader& r, std::string_view tag) {
  if (r.Raw(tag.size()) != AsBytes(tag)) throw InvalidArgument("unexpected tag " + std::string(tag));
}

// Term-satisfying bit pattern: e_i xor e_j must equal (1 + m) / 2.
std::uint8_t TargetParity(const Term& t) { return t.sign > 0 ? 1 : 0; }

}  // namespace

ZkBackends ZkBackends::Default() { return {MakeFhe("transparent"), MakeNizk("toy")}; }

// ---- encodings ----------------------------------------------------------------------

Bytes EncodeSecretKeys(std::span<const SecretKey> sk) {
  ByteWriter w;
  w.U64(sk.size());
  for (const SecretKey& key : sk) w.LengthPrefixed(key.Serialize());
  return w.Take();
}

std::vector<SecretKey> DecodeSecretKeys(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  const std::uint64_t count = r.U64();
  if (count > r.remaining() / 8) throw InvalidArgument("truncated key list");
  std::vector<SecretKey> out;
  out.reserve(count);
  for (std::uint64_t q = 0; q < count; ++q) out.push_back(SecretKey::Parse(r.LengthPrefixed()));
  if (!r.done()) throw InvalidArgument("trailing bytes after key list");
  return out;
}

Bytes EncodeTermWords(std::span<const std::uint64_t> s) {
  ByteWriter w;
  w.U64(s.size());
  for (auto v : s) w.U64(v);
  return w.Take();
}

std::vector<std::uint64_t> DecodeTermWords(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  auto out = ReadImages(r);
  if (!r.done()) throw InvalidArgument("trailing bytes after term words");
  return out;
}

Bytes EncodePad(std::span<const std::uint8_t> beta, std::span<const std::uint8_t> gamma) {
  ByteWriter w;
  w.BitString(beta);
  w.BitString(gamma);
  return w.Take();
}

Bytes EncodeResponses(std::span<const Response> u) {
  ByteWriter w;
  w.U64(u.size());
  for (const Response& r : u) {
    w.U8(r.w);
    w.U64(r.t);
  }
  return w.Take();
}

std::vector<Response> DecodeResponses(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  const std::uint64_t count = r.U64();
  if (count > r.remaining() / 9) throw InvalidArgument("truncated response list");
  std::vector<Response> u(count);
  for (auto& resp : u) {
    resp.w = r.U8();
    resp.t = r.U64();
  }
  if (!r.done()) throw InvalidArgument("trailing bytes after responses");
  return u;
}

// ---- relation -----------------------------------------------------------------------

Bytes LInstance::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-LX-v1");
  w.LengthPrefixed(h.Serialize());
  w.LengthPrefixed(setup.Serialize());
  w.Raw(xi.value);
  w.Raw(EncodeImages(y));
  w.BitString(c);
  w.Raw(chi.value);
  return w.Take();
}

LInstance LInstance::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-LX-v1");
  ZXHamiltonian h = ZXHamiltonian::Parse(r.LengthPrefixed());
  VerifierSetup setup = VerifierSetup::Parse(r.LengthPrefixed());
  Commitment xi;
  ReadDigest(r, xi.value);
  auto y = ReadImages(r);
  Bits c = r.BitString();
  Commitment chi;
  ReadDigest(r, chi.value);
  if (!r.done()) throw InvalidArgument("trailing bytes after instance");
  return LInstance{std::move(h), std::move(setup), xi, std::move(y), std::move(c), chi};
}

Bytes LWitness::Serialize() const {
  ByteWriter w;
  w.Raw("CVQC-LW-v1");
  w.BitString(beta);
  w.BitString(gamma);
  w.LengthPrefixed(EncodeResponses(u));
  w.Raw(r1);
  w.Raw(r2);
  return w.Take();
}

LWitness LWitness::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-LW-v1");
  LWitness out;
  out.beta = r.BitString();
  out.gamma = r.BitString();
  out.u = DecodeResponses(r.LengthPrefixed());
  auto r1 = r.Raw(32);
  std::copy(r1.begin(), r1.end(), out.r1.begin());
  auto r2 = r.Raw(32);
  std::copy(r2.begin(), r2.end(), out.r2.begin());
  if (!r.done()) throw InvalidArgument("trailing bytes after witness");
  return out;
}

bool VerdictPrime(const LInstance& x, const LWitness& tau) {
  if (!VerifyCommitment(x.xi, EncodePad(tau.beta, tau.gamma), tau.r1)) return false;
  if (!VerifyCommitment(x.chi, EncodeResponses(tau.u), tau.r2)) return false;
  const PadKeys pad{tau.beta, tau.gamma};
  return Verdict(x.h, x.setup, x.y, x.c, tau.u, &pad).accepted;
}

bool VerdictPrimeBytes(std::span<const std::uint8_t> x, std::span<const std::uint8_t> tau) {
  try {
    return VerdictPrime(LInstance::Parse(x), LWitness::Parse(tau));
  } catch (const std::exception&) {
    return false;
  }
}

// ---- setup --------------------------------------------------------------------------

ZkSetup SetupZk(const ProtocolParams& params, const ZkBackends& backends, Rng& rng) {
  ZkSetup out;
  out.verifier.crs = backends.nizk->Setup(rng);
  SetupPair pair = Setup(params, rng);
  FheKeys keys = backends.fhe->KeyGen(rng);
  out.verifier.hsk = keys.secret_key;
  out.verifier.hpk = keys.public_key;

  ZkProverState& p = out.prover;
  p.crs = out.verifier.crs;
  p.hpk = keys.public_key;
  p.csk = backends.fhe->Encrypt(p.hpk, EncodeSecretKeys(pair.verifier.sk), rng);
  p.beta = RandomBits(params.qubits(), rng);
  p.gamma = RandomBits(params.qubits(), rng);
  p.r1 = SampleCommitRandomness(rng);
  out.verifier.xi = CommitMessage(EncodePad(p.beta, p.gamma), p.r1);
  p.cs = backends.fhe->Encrypt(p.hpk, EncodeTermWords(pair.verifier.s), rng);
  p.setup = std::move(pair.prover);
  out.verifier.setup = std::move(pair.verifier);
  return out;
}

ChallengeSource UniformChallenges(int k, Rng& rng) {
  return [k, &rng](const Commitment&, std::span<const Word>) {
    return RandomBits(static_cast<std::size_t>(k), rng);
  };
}

// ---- transcripts -------------------------------------------------------------------

Bytes ZkTranscript::CanonicalBody() const {
  ByteWriter w;
  w.Raw("CVQC-ZKT-v1");
  w.Raw(xi.value);
  w.Raw(EncodeImages(y));
  w.BitString(c);
  w.Raw(chi.value);
  w.LengthPrefixed(ce);
  return w.Take();
}

Digest ZkTranscript::ComputeDigest() const { return Sha256(CanonicalBody()); }

Bytes ZkTranscript::Serialize() const {
  ByteWriter w;
  w.Raw(CanonicalBody());
  w.Raw(digest);
  return w.Take();
}

ZkTranscript ZkTranscript::Parse(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  ExpectTag(r, "CVQC-ZKT-v1");
  ZkTranscript t;
  ReadDigest(r, t.xi.value);
  t.y = ReadImages(r);
  t.c = r.BitString();
  ReadDigest(r, t.chi.value);
  t.ce = r.LengthPrefixed();
  ReadDigest(r, t.digest);
  if (!r.done()) throw InvalidArgument("trailing bytes after ZK transcript");
  return t;
}

// ---- prover and verifier -----------------------------------------------------------

ZkTranscript ZkProve(const ZXHamiltonian& h, const ZkProverState& state, const StateVector& witness,
                     const ZkBackends& backends, const ChallengeSource& challenge, Rng& rng,
                     LWitness* tau_out) {
  const ProtocolParams& params = state.setup.params;
  if (state.setup.pk.size() != params.qubits()) throw InvalidArgument("invalid pk: wrong key count");
  for (const PublicKey& pk : state.setup.pk) {
    if (!pk.IsWellFormed()) throw InvalidArgument("invalid pk: prover aborts");
  }
  if (h.num_qubits() != params.n) throw InvalidArgument("instance size does not match");

  WitnessState padded = InjectWitness(witness, static_cast<int>(params.copies()));
  Pad(padded, state.beta, state.gamma);
  HonestProver prover(std::move(padded));

  ZkTranscript t;
  t.xi = CommitMessage(EncodePad(state.beta, state.gamma), state.r1);
  t.y = prover.Commit(state.setup, rng);
  t.c = challenge(t.xi, t.y);
  LWitness tau;
  tau.beta = state.beta;
  tau.gamma = state.gamma;
  tau.u = prover.Respond(t.c, rng);
  tau.r1 = state.r1;
  tau.r2 = SampleCommitRandomness(rng);
  t.chi = CommitMessage(EncodeResponses(tau.u), tau.r2);

  const Bytes ctau = backends.fhe->Encrypt(state.hpk, tau.Serialize(), rng);
  const ProtocolParams setup_params = params;
  const FheCircuit circuit = [&](std::span<const Bytes> plain) -> Bytes {
    // Runs under encryption: plain = (sk, s, tau).
    VerifierSetup vs;
    vs.params = setup_params;
    vs.mode = ProtocolMode::kHamiltonian;
    vs.sk = DecodeSecretKeys(plain[0]);
    vs.s = DecodeTermWords(plain[1]);
    vs.h.reserve(vs.sk.size());
    for (const SecretKey& key : vs.sk) vs.h.push_back(key.kind() == FamilyKind::kNtcf ? 1 : 0);
    const LInstance x{h, std::move(vs), t.xi, t.y, t.c, t.chi};
    return backends.nizk->Prove(state.crs, x.Serialize(), plain[2], VerdictPrimeBytes);
  };
  const std::vector<Bytes> inputs = {state.csk, state.cs, ctau};
  t.ce = backends.fhe->Eval(state.hpk, circuit, inputs, rng);
  t.digest = t.ComputeDigest();
  if (tau_out) *tau_out = std::move(tau);
  return t;
}

bool ZkVerify(const ZkVerifierState& state, const ZXHamiltonian& h, const ZkTranscript& t,
              const ZkBackends& backends) {
  if (t.digest != t.ComputeDigest()) return false;
  if (!(t.xi == state.xi)) return false;
  auto proof = backends.fhe->Decrypt(state.hsk, t.ce);
  if (!proof) return false;
  try {
    const LInstance x{h, state.setup, state.xi, t.y, t.c, t.chi};
    return backends.nizk->Verify(state.crs, x.Serialize(), *proof);
  } catch (const std::exception&) {
    return false;
  }
}

// ---- simulator ----------------------------------------------------------------------

Simulation Simulate(const ZXHamiltonian& h, const ZkSetup& setup, const ZkBackends& backends,
                    const ChallengeSource& challenge, Rng& rng) {
  const VerifierSetup& vs = setup.verifier.setup;
  const ProtocolParams& p = vs.params;
  const Bits& beta = setup.prover.beta;
  const Bits& gamma = setup.prover.gamma;
  if (h.num_qubits() != p.n) throw InvalidArgument("instance size does not match");

  std::vector<const Term*> terms(p.copies());
  for (std::size_t copy = 0; copy < p.copies(); ++copy) terms[copy] = &SampleTerm(h, vs.s[copy]);

  // Commit: uniform (b, x) per qubit. On ZZ-consistent copies the second
  // bit is tied to the first so that the injective decoding satisfies the
  // padded term.
  const std::size_t total = p.qubits();
  Bits b(total);
  std::vector<Word> x(total);
  std::vector<Word> y(total);
  for (auto& bit : b) bit = RandomBit(rng);
  for (std::size_t copy = 0; copy < p.copies(); ++copy) {
    const Term& term = *terms[copy];
    const std::size_t base = copy * p.n;
    const std::span<const std::uint8_t> basis(vs.h.data() + base, p.n);
    if (term.pauli == Pauli::kZZ && IsConsistent(term, basis)) {
      b[base + term.j] = b[base + term.i] ^ TargetParity(term) ^ beta[base + term.i] ^
                         beta[base + term.j];
    }
  }
  for (std::size_t q = 0; q < total; ++q) {
    const PublicKey& pk = vs.sk[q].public_key();
    x[q] = pk.SampleDomain(rng);
    y[q] = pk.Eval(b[q], x[q]);
  }

  Simulation out;
  ZkTranscript& t = out.transcript;
  t.xi = setup.verifier.xi;
  t.y = y;
  t.c = challenge(t.xi, t.y);
  if (t.c.size() != static_cast<std::size_t>(p.k)) throw InvalidArgument("challenge length");

  std::vector<Response> u(total);
  for (int i = 0; i < p.k; ++i) {
    for (int j = 0; j < p.r; ++j) {
      const std::size_t copy = static_cast<std::size_t>(i) * p.r + j;
      const std::size_t base = copy * p.n;
      if (t.c[i] == 0) {
        for (int l = 0; l < p.n; ++l) u[base + l] = {b[base + l], x[base + l]};
        continue;
      }
      // Hadamard round: logical bits b' with w = b' xor o xor gamma, where
      // o = t.(x0 xor x1) is the hardcore bit computed from the trapdoor.
      Bits bprime(p.n);
      for (auto& bit : bprime) bit = RandomBit(rng);
      const Term& term = *terms[copy];
      const std::span<const std::uint8_t> basis(vs.h.data() + base, p.n);
      if (term.pauli == Pauli::kXX && IsConsistent(term, basis)) {
        bprime[term.i] = bprime[term.j] ^ TargetParity(term);
      }
      for (int l = 0; l < p.n; ++l) {
        const std::size_t q = base + l;
        const SecretKey& sk = vs.sk[q];
        if (vs.h[q] == 0) {
          u[q] = {RandomBit(rng), rng() & LowMask(sk.public_key().domain_bits())};
          continue;
        }
        const Word tv = SampleNonzero(sk.public_key().domain_bits(), rng);
        const auto claw = sk.FindClaw(y[q]);
        if (!claw) throw std::logic_error("simulated image has no claw");
        const std::uint8_t o = static_cast<std::uint8_t>(DotGf2(tv, claw->x0 ^ claw->x1));
        u[q] = {static_cast<std::uint8_t>(bprime[l] ^ o ^ gamma[q]), tv};
      }
    }
  }

  out.witness.beta = beta;
  out.witness.gamma = gamma;
  out.witness.u = std::move(u);
  out.witness.r1 = setup.prover.r1;
  out.witness.r2 = SampleCommitRandomness(rng);
  t.chi = CommitMessage(EncodeResponses(out.witness.u), out.witness.r2);
  const LInstance inst{h, vs, t.xi, t.y, t.c, t.chi};
  t.ce = backends.fhe->Encrypt(setup.verifier.hpk,
                               backends.nizk->Simulate(setup.verifier.crs, inst.Serialize()), rng);
  t.digest = t.ComputeDigest();
  return out;
}

// ---- Fiat-Shamir ---------------------------------------------------------------------

Bits FsZkChallenge(const RandomOracle& oracle, const ZXHamiltonian& h, const ProverSetup& setup,
                   const Commitment& xi, std::span<const Word> y) {
  Bytes prefix(xi.value.begin(), xi.value.end());
  const Bytes images = EncodeImages(y);
  prefix.insert(prefix.end(), images.begin(), images.end());
  return DeriveChallenge(oracle, h.DigestBytes(), setup.DigestBytes(), prefix, setup.params.k);
}

ChallengeSource OracleChallenges(const RandomOracle& oracle, const ZXHamiltonian& h,
                                 const ProverSetup& setup) {
  return [&oracle, &h, &setup](const Commitment& xi, std::span<const Word> y) {
    return FsZkChallenge(oracle, h, setup, xi, y);
  };
}

ZkTranscript FsZkProve(const ZXHamiltonian& h, const ZkProverState& state,
                       const StateVector& witness, const ZkBackends& backends,
                       const RandomOracle& oracle, Rng& rng, LWitness* tau_out) {
  return ZkProve(h, state, witness, backends, OracleChallenges(oracle, h, state.setup), rng,
                 tau_out);
}

bool FsZkVerify(const ZkVerifierState& state, const ZXHamiltonian& h, const ZkTranscript& t,
                const ZkBackends& backends, const RandomOracle& oracle) {
  const ProverSetup pub = state.setup.PublicPart();
  if (FsZkChallenge(oracle, h, pub, t.xi, t.y) != t.c) return false;
  return ZkVerify(state, h, t, backends);
}

Simulation FsSimulate(const ZXHamiltonian& h, const ZkSetup& setup, const ZkBackends& backends,
                      const RandomOracle& oracle, Rng& rng) {
  return Simulate(h, setup, backends, OracleChallenges(oracle, h, setup.prover.setup), rng);
}

}  // namespace cvqc
