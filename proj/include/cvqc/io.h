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


// JSON persistence. Every file carries a schema string, the tool version and
// the run configuration. Byte fields are lowercase hex; 64-bit words are
// 16-digit hex strings; bit strings are '0'/'1' text.
//
// Transcript files hold three views of the same transcript: readable
// "fields", the canonical encoding as hex, and SHA-256 of that encoding.
// Replay decodes both views and reports every field where they disagree.

#ifndef CVQC_IO_H_
#define CVQC_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cvqc/fiat_shamir.h"
#include "cvqc/hamiltonian.h"
#include "cvqc/protocol.h"
#include "cvqc/statevector.h"
#include "cvqc/zk/zk.h"

namespace cvqc::io {

using nlohmann::json;

inline constexpr std::string_view kInstanceSchema = "cvqc.instance/1";
inline constexpr std::string_view kSetupSchema = "cvqc.setup/1";
inline constexpr std::string_view kZkSetupSchema = "cvqc.zk-setup/1";
inline constexpr std::string_view kTranscriptSchema = "cvqc.transcript/1";
inline constexpr std::string_view kFsTranscriptSchema = "cvqc.fs-transcript/1";
inline constexpr std::string_view kZkTranscriptSchema = "cvqc.zk-transcript/1";
inline constexpr std::string_view kReportSchema = "cvqc.report/1";

std::string Version();

// "-" reads stdin / writes stdout. Throws InvalidArgument on I/O or parse
// errors.
json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const json& doc);

// {schema, version, config}.
json Envelope(std::string_view schema, const json& config);
// Throws InvalidArgument unless doc.schema == schema.
void ExpectSchema(const json& doc, std::string_view schema);

std::string WordHex(Word v);
Word ParseWordHex(const std::string& s);
std::string BitText(std::span<const std::uint8_t> bits);
Bits ParseBitText(const std::string& s);

// Instance files: {n, couplings: [[i, j, J]], a, b}, couplings sorted by
// (i, j). The schema field is optional on input.
json InstanceToJson(const ZXHamiltonian& h);
ZXHamiltonian InstanceFromJson(const json& doc);

// [[re, im], ...] in basis-index order.
json StateToJson(const StateVector& psi);

json SetupToJson(const SetupPair& setup, const json& config);
SetupPair SetupFromJson(const json& doc);

Bytes SerializeZkVerifier(const ZkVerifierState& v);
ZkVerifierState ParseZkVerifier(std::span<const std::uint8_t> bytes);
Bytes SerializeZkProver(const ZkProverState& p);
ZkProverState ParseZkProver(std::span<const std::uint8_t> bytes);
json ZkSetupToJson(const ZkSetup& setup, const json& config);
ZkSetup ZkSetupFromJson(const json& doc);

json FieldsOf(const Transcript& t);
Transcript TranscriptFromFields(const json& fields);
json FieldsOf(const FsTranscript& t);
FsTranscript FsTranscriptFromFields(const json& fields);
json FieldsOf(const ZkTranscript& t);
ZkTranscript ZkTranscriptFromFields(const json& fields);

json TranscriptToJson(const Transcript& t, const json& config);
json TranscriptToJson(const FsTranscript& t, const json& config);
json TranscriptToJson(const ZkTranscript& t, const json& config);

struct FieldDiff {
  std::string path;
  std::string expected;  // from the canonical encoding
  std::string found;     // from the readable fields
};

// Leaf-level differences between two JSON trees.
std::vector<FieldDiff> DiffJson(const json& expected, const json& found,
                                const std::string& path = "");

}  // namespace cvqc::io

#endif  // CVQC_IO_H_
