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

#include "cvqc/bytes.h"

#include <openssl/sha.h>

#include <bit>
#include <cstring>

namespace cvqc {

Digest Sha256(std::span<const std::uint8_t> data) {
  Digest out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

std::string ToHex(std::span<const std::uint8_t> data) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {

int HexValue(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

Bytes FromHex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw InvalidArgument("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = HexValue(hex[2 * i]);
    int lo = HexValue(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw InvalidArgument("invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

void ByteWriter::U32(std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::U64(std::uint64_t v) {
  for (int s = 56; s >= 0; s -= 8) out_.push_back(static_cast<std::uint8_t>(v >> s));
}

void ByteWriter::F64(double v) { U64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::Raw(std::span<const std::uint8_t> data) {
  out_.insert(out_.end(), data.begin(), data.end());
}

void ByteWriter::Raw(std::string_view s) { out_.insert(out_.end(), s.begin(), s.end()); }

void ByteWriter::LengthPrefixed(std::span<const std::uint8_t> data) {
  U64(data.size());
  Raw(data);
}

void ByteWriter::BitString(std::span<const std::uint8_t> bits) {
  U64(bits.size());
  for (std::uint8_t b : bits) out_.push_back(b ? 1 : 0);
}

void ByteReader::Need(std::size_t n) const {
  if (remaining() < n) throw InvalidArgument("truncated byte stream");
}

std::uint8_t ByteReader::U8() {
  Need(1);
  return data_[pos_++];
}

std::uint32_t ByteReader::U32() {
  Need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

std::uint64_t ByteReader::U64() {
  Need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
  return v;
}

double ByteReader::F64() { return std::bit_cast<double>(U64()); }

Bytes ByteReader::Raw(std::size_t n) {
  Need(n);
  Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
  pos_ += n;
  return out;
}

Bytes ByteReader::LengthPrefixed() {
  std::uint64_t n = U64();
  if (n > remaining()) throw InvalidArgument("length prefix exceeds input");
  return Raw(static_cast<std::size_t>(n));
}

Bits ByteReader::BitString() {
  std::uint64_t n = U64();
  if (n > remaining()) throw InvalidArgument("bit string exceeds input");
  Bits out(static_cast<std::size_t>(n));
  for (auto& b : out) {
    b = U8();
    if (b > 1) throw InvalidArgument("bit string entry is not 0 or 1");
  }
  return out;
}

}  // namespace cvqc
