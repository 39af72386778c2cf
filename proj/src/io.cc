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


#include "cvqc/io.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cvqc::io {
namespace {

std::string DigestHex(const Digest& d) { return ToHex(d); }

Digest ParseDigest(const std::string& s) {
  const Bytes b = FromHex(s);
  if (b.size() != 32) throw InvalidArgument("digest must be 32 bytes");
  Digest d;
  std::copy(b.begin(), b.end(), d.begin());
  return d;
}

json WordsToJson(std::span<const Word> y) {
  json a = json::array();
  for (Word v : y) a.push_back(WordHex(v));
  return a;
}

std::vector<Word> WordsFromJson(const json& a) {
  std::vector<Word> y;
  for (const auto& v : a) y.push_back(ParseWordHex(v.get<std::string>()));
  return y;
}

json ResponsesToJson(std::span<const Response> u) {
  json a = json::array();
  for (const Response& r : u) a.push_back({{"w", r.w}, {"t", WordHex(r.t)}});
  return a;
}

std::vector<Response> ResponsesFromJson(const json& a) {
  std::vector<Response> u;
  for (const auto& v : a) {
    const int w = v.at("w").get<int>();
    if (w < 0 || w > 255) throw InvalidArgument("response bit out of range");
    u.push_back({static_cast<std::uint8_t>(w), ParseWordHex(v.at("t").get<std::string>())});
  }
  return u;
}

json Wrap(std::string_view schema, const json& config, json fields, const Bytes& canonical) {
  json doc = Envelope(schema, config);
  doc["fields"] = std::move(fields);
  doc["canonical"] = ToHex(canonical);
  doc["digest"] = DigestHex(Sha256(canonical));
  return doc;
}

std::string Scalar(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace

std::string Version() { return CVQC_VERSION; }

json ReadJsonFile(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const json& doc) {
  const std::string text = doc.dump(2) + "\n";
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

json Envelope(std::string_view schema, const json& config) {
  return {{"schema", schema}, {"version", Version()}, {"config", config}};
}

void ExpectSchema(const json& doc, std::string_view schema) {
  if (!doc.is_object() || !doc.contains("schema") || doc["schema"] != schema) {
    throw InvalidArgument("expected a " + std::string(schema) + " document");
  }
}

std::string WordHex(Word v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

Word ParseWordHex(const std::string& s) {
  if (s.size() != 16) throw InvalidArgument("word must be 16 hex digits");
  const Bytes b = FromHex(s);
  Word v = 0;
  for (std::uint8_t byte : b) v = (v << 8) | byte;
  return v;
}

std::string BitText(std::span<const std::uint8_t> bits) {
  std::string s;
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits ParseBitText(const std::string& s) {
  Bits out;
  for (char ch : s) {
    if (ch != '0' && ch != '1') throw InvalidArgument("bit string must contain only 0 and 1");
    out.push_back(ch == '1');
  }
  return out;
}

// ---- instances ----------------------------------------------------------------------

json InstanceToJson(const ZXHamiltonian& h) {
  auto couplings = h.couplings();
  if (!couplings) throw InvalidArgument("instance is not of coupling form");
  json list = json::array();
  for (const Coupling& c : *couplings) list.push_back(json::array({c.i, c.j, c.strength}));
  return {{"schema", kInstanceSchema},
          {"n", h.num_qubits()},
          {"couplings", std::move(list)},
          {"a", h.a()},
          {"b", h.b()}};
}

ZXHamiltonian InstanceFromJson(const json& doc) {
  try {
    if (doc.contains("schema")) ExpectSchema(doc, kInstanceSchema);
    std::vector<Coupling> couplings;
    for (const auto& c : doc.at("couplings")) {
      if (!c.is_array() || c.size() != 3) throw InvalidArgument("coupling must be [i, j, J]");
      couplings.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<double>()});
    }
    return ZXHamiltonian::Normalize(doc.at("n").get<int>(), std::move(couplings),
                                    doc.at("a").get<double>(), doc.at("b").get<double>());
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed instance: ") + e.what());
  }
}

json StateToJson(const StateVector& psi) {
  json a = json::array();
  for (const Amplitude& z : psi) a.push_back(json::array({z.real(), z.imag()}));
  return a;
}

// ---- setups -------------------------------------------------------------------------

json SetupToJson(const SetupPair& setup, const json& config) {
  json doc = Envelope(kSetupSchema, config);
  doc["mode"] = setup.prover.mode == ProtocolMode::kCtq ? "ctq" : "hamiltonian";
  doc["prover"] = ToHex(setup.prover.Serialize());
  doc["prover_digest"] = DigestHex(setup.prover.DigestBytes());
  doc["verifier"] = ToHex(setup.verifier.Serialize());
  return doc;
}

SetupPair SetupFromJson(const json& doc) {
  ExpectSchema(doc, kSetupSchema);
  try {
    SetupPair out;
    out.verifier = VerifierSetup::Parse(FromHex(doc.at("verifier").get<std::string>()));
    out.prover = ProverSetup::Parse(FromHex(doc.at("prover").get<std::string>()));
    if (!(out.prover.Serialize() == out.verifier.PublicPart().Serialize())) {
      throw InvalidArgument("prover and verifier setups do not match");
    }
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed setup: ") + e.what());
  }
}

Bytes SerializeZkVerifier(const ZkVerifierState& v) {
  ByteWriter w;
  w.Raw("CVQC-ZKV-v1");
  w.LengthPrefixed(v.crs);
  w.LengthPrefixed(v.setup.Serialize());
  w.LengthPrefixed(v.hsk);
  w.LengthPrefixed(v.hpk);
  w.Raw(v.xi.value);
  return w.Take();
}

ZkVerifierState ParseZkVerifier(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Raw(11) != AsBytes("CVQC-ZKV-v1")) throw InvalidArgument("not a ZK verifier state");
  ZkVerifierState v;
  v.crs = r.LengthPrefixed();
  v.setup = VerifierSetup::Parse(r.LengthPrefixed());
  v.hsk = r.LengthPrefixed();
  v.hpk = r.LengthPrefixed();
  const Bytes xi = r.Raw(32);
  std::copy(xi.begin(), xi.end(), v.xi.value.begin());
  if (!r.done()) throw InvalidArgument("trailing bytes after ZK verifier state");
  return v;
}

Bytes SerializeZkProver(const ZkProverState& p) {
  ByteWriter w;
  w.Raw("CVQC-ZKP-v1");
  w.LengthPrefixed(p.crs);
  w.LengthPrefixed(p.setup.Serialize());
  w.LengthPrefixed(p.hpk);
  w.LengthPrefixed(p.csk);
  w.LengthPrefixed(p.cs);
  w.BitString(p.beta);
  w.BitString(p.gamma);
  w.Raw(p.r1);
  return w.Take();
}

ZkProverState ParseZkProver(std::span<const std::uint8_t> bytes) {
  ByteReader r(bytes);
  if (r.Raw(11) != AsBytes("CVQC-ZKP-v1")) throw InvalidArgument("not a ZK prover state");
  ZkProverState p;
  p.crs = r.LengthPrefixed();
  p.setup = ProverSetup::Parse(r.LengthPrefixed());
  p.hpk = r.LengthPrefixed();
  p.csk = r.LengthPrefixed();
  p.cs = r.LengthPrefixed();
  p.beta = r.BitString();
  p.gamma = r.BitString();
  const Bytes r1 = r.Raw(32);
  std::copy(r1.begin(), r1.end(), p.r1.begin());
  if (!r.done()) throw InvalidArgument("trailing bytes after ZK prover state");
  return p;
}

json ZkSetupToJson(const ZkSetup& setup, const json& config) {
  json doc = Envelope(kZkSetupSchema, config);
  doc["prover"] = ToHex(SerializeZkProver(setup.prover));
  doc["verifier"] = ToHex(SerializeZkVerifier(setup.verifier));
  return doc;
}

ZkSetup ZkSetupFromJson(const json& doc) {
  ExpectSchema(doc, kZkSetupSchema);
  try {
    ZkSetup out;
    out.prover = ParseZkProver(FromHex(doc.at("prover").get<std::string>()));
    out.verifier = ParseZkVerifier(FromHex(doc.at("verifier").get<std::string>()));
    return out;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ZK setup: ") + e.what());
  }
}

// ---- transcripts ---------------------------------------------------------------------

json FieldsOf(const Transcript& t) {
  return {{"mode", t.mode == ProtocolMode::kCtq ? "ctq" : "hamiltonian"},
          {"instance_digest", DigestHex(t.instance)},
          {"setup_digest", DigestHex(t.setup)},
          {"y", WordsToJson(t.y)},
          {"c", BitText(t.c)},
          {"u", ResponsesToJson(t.u)},
          {"accepted", t.accepted}};
}

Transcript TranscriptFromFields(const json& f) {
  try {
    Transcript t;
    const std::string mode = f.at("mode").get<std::string>();
    if (mode != "ctq" && mode != "hamiltonian") throw InvalidArgument("unknown mode " + mode);
    t.mode = mode == "ctq" ? ProtocolMode::kCtq : ProtocolMode::kHamiltonian;
    t.instance = ParseDigest(f.at("instance_digest").get<std::string>());
    t.setup = ParseDigest(f.at("setup_digest").get<std::string>());
    t.y = WordsFromJson(f.at("y"));
    t.c = ParseBitText(f.at("c").get<std::string>());
    t.u = ResponsesFromJson(f.at("u"));
    t.accepted = f.at("accepted").get<bool>();
    return t;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed transcript: ") + e.what());
  }
}

json FieldsOf(const FsTranscript& t) {
  return {{"x", DigestHex(t.x)},
          {"w", DigestHex(t.w)},
          {"y", WordsToJson(t.y)},
          {"c", BitText(t.c)},
          {"u", ResponsesToJson(t.u)},
          {"accepted", t.accepted},
          {"digest", DigestHex(t.digest)}};
}

FsTranscript FsTranscriptFromFields(const json& f) {
  try {
    FsTranscript t;
    t.x = ParseDigest(f.at("x").get<std::string>());
    t.w = ParseDigest(f.at("w").get<std::string>());
    t.y = WordsFromJson(f.at("y"));
    t.c = ParseBitText(f.at("c").get<std::string>());
    t.u = ResponsesFromJson(f.at("u"));
    t.accepted = f.at("accepted").get<bool>();
    t.digest = ParseDigest(f.at("digest").get<std::string>());
    return t;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed FS transcript: ") + e.what());
  }
}

json FieldsOf(const ZkTranscript& t) {
  return {{"xi", DigestHex(t.xi.value)},
          {"y", WordsToJson(t.y)},
          {"c", BitText(t.c)},
          {"chi", DigestHex(t.chi.value)},
          {"ce", ToHex(t.ce)},
          {"digest", DigestHex(t.digest)}};
}

ZkTranscript ZkTranscriptFromFields(const json& f) {
  try {
    ZkTranscript t;
    t.xi.value = ParseDigest(f.at("xi").get<std::string>());
    t.y = WordsFromJson(f.at("y"));
    t.c = ParseBitText(f.at("c").get<std::string>());
    t.chi.value = ParseDigest(f.at("chi").get<std::string>());
    t.ce = FromHex(f.at("ce").get<std::string>());
    t.digest = ParseDigest(f.at("digest").get<std::string>());
    return t;
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed ZK transcript: ") + e.what());
  }
}

json TranscriptToJson(const Transcript& t, const json& config) {
  return Wrap(kTranscriptSchema, config, FieldsOf(t), t.Serialize());
}

json TranscriptToJson(const FsTranscript& t, const json& config) {
  return Wrap(kFsTranscriptSchema, config, FieldsOf(t), t.Serialize());
}

json TranscriptToJson(const ZkTranscript& t, const json& config) {
  return Wrap(kZkTranscriptSchema, config, FieldsOf(t), t.Serialize());
}

std::vector<FieldDiff> DiffJson(const json& expected, const json& found, const std::string& path) {
  std::vector<FieldDiff> out;
  if (expected.is_object() && found.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string sub = path.empty() ? it.key() : path + "." + it.key();
      if (!found.contains(it.key())) {
        out.push_back({sub, Scalar(it.value()), "<missing>"});
        continue;
      }
      auto d = DiffJson(it.value(), found[it.key()], sub);
      out.insert(out.end(), d.begin(), d.end());
    }
    for (auto it = found.begin(); it != found.end(); ++it) {
      if (!expected.contains(it.key())) {
        out.push_back({path.empty() ? it.key() : path + "." + it.key(), "<absent>",
                       Scalar(it.value())});
      }
    }
    return out;
  }
  if (expected.is_array() && found.is_array()) {
    const std::size_t n = std::max(expected.size(), found.size());
    for (std::size_t i = 0; i < n; ++i) {
      const std::string sub = path + "[" + std::to_string(i) + "]";
      if (i >= expected.size()) {
        out.push_back({sub, "<absent>", Scalar(found[i])});
      } else if (i >= found.size()) {
        out.push_back({sub, Scalar(expected[i]), "<missing>"});
      } else {
        auto d = DiffJson(expected[i], found[i], sub);
        out.insert(out.end(), d.begin(), d.end());
      }
    }
    return out;
  }
  if (expected != found) out.push_back({path, Scalar(expected), Scalar(found)});
  return out;
}

}  // namespace cvqc::io
