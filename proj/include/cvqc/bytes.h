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

// Byte-level helpers: SHA-256, hex, and a big-endian writer/reader used by
// every canonical serialization in the project.

#ifndef CVQC_BYTES_H_
#define CVQC_BYTES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "cvqc/common.h"

namespace cvqc {

using Digest = std::array<std::uint8_t, 32>;

Digest Sha256(std::span<const std::uint8_t> data);

std::string ToHex(std::span<const std::uint8_t> data);
Bytes FromHex(std::string_view hex);

inline Bytes AsBytes(std::string_view s) { return Bytes(s.begin(), s.end()); }
inline Bytes AsBytes(const Digest& d) { return Bytes(d.begin(), d.end()); }

class ByteWriter {
 public:
  void U8(std::uint8_t v) { out_.push_back(v); }
  void U32(std::uint32_t v);
  void U64(std::uint64_t v);
  void F64(double v);
  void Raw(std::span<const std::uint8_t> data);
  void Raw(std::string_view s);
  // 8-byte big-endian length, then the bytes.
  void LengthPrefixed(std::span<const std::uint8_t> data);
  void BitString(std::span<const std::uint8_t> bits);

  const Bytes& bytes() const { return out_; }
  Bytes Take() { return std::move(out_); }

 private:
  Bytes out_;
};

// Throws InvalidArgument on truncated input.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t U8();
  std::uint32_t U32();
  std::uint64_t U64();
  double F64();
  Bytes Raw(std::size_t n);
  Bytes LengthPrefixed();
  Bits BitString();

  bool done() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void Need(std::size_t n) const;

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace cvqc

#endif  // CVQC_BYTES_H_
