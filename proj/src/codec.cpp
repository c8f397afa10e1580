// Copyright 2026 The ntruvfk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ntruvfk/codec.hpp"

#include <openssl/evp.h>

#include <limits>
#include <memory>

namespace ntruvfk {

Bytes encode(const Poly& a) {
  const std::int64_t m = a.context().modulus();
  Bytes out;
  out.reserve(2 * a.size());
  for (std::int64_t c : a.coeffs()) {
    const std::int64_t v = m ? centered(c, m) : c;
    if (v < std::numeric_limits<std::int16_t>::min() ||
        v > std::numeric_limits<std::int16_t>::max()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "coefficient does not fit the 16-bit encoding");
    }
    const auto u = static_cast<std::uint16_t>(static_cast<std::int16_t>(v));
    out.push_back(static_cast<std::uint8_t>(u & 0xff));
    out.push_back(static_cast<std::uint8_t>(u >> 8));
  }
  return out;
}

Poly decode(std::span<const std::uint8_t> bytes, const RingContext& ctx) {
  if (bytes.size() != 2 * static_cast<std::size_t>(ctx.degree())) {
    throw Error(ErrorCode::kInvalidArgument,
                "encoded length does not match the ring degree");
  }
  std::vector<std::int64_t> c(ctx.degree());
  for (int i = 0; i < ctx.degree(); ++i) {
    const auto u = static_cast<std::uint16_t>(bytes[2 * i] |
                                              (bytes[2 * i + 1] << 8));
    c[i] = static_cast<std::int16_t>(u);
  }
  return Poly(ctx, std::move(c));
}

Digest sha256_concat(
    std::initializer_list<std::span<const std::uint8_t>> parts) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> md(EVP_MD_CTX_new(),
                                                             EVP_MD_CTX_free);
  Digest out{};
  unsigned int len = 0;
  if (!md || EVP_DigestInit_ex(md.get(), EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::kNumerical, "SHA-256 initialisation failed");
  }
  for (auto part : parts) {
    if (EVP_DigestUpdate(md.get(), part.data(), part.size()) != 1) {
      throw Error(ErrorCode::kNumerical, "SHA-256 update failed");
    }
  }
  if (EVP_DigestFinal_ex(md.get(), out.data(), &len) != 1 || len != 32) {
    throw Error(ErrorCode::kNumerical, "SHA-256 finalisation failed");
  }
  return out;
}

Digest sha256(std::span<const std::uint8_t> data) {
  return sha256_concat({data});
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  s.reserve(2 * bytes.size());
  for (auto b : bytes) {
    s.push_back(kDigits[b >> 4]);
    s.push_back(kDigits[b & 0xf]);
  }
  return s;
}

Bytes from_hex(std::string_view hex) {
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw Error(ErrorCode::kInvalidArgument, "invalid hex digit");
  };
  if (hex.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "odd-length hex string");
  }
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 |
                                       nibble(hex[2 * i + 1]));
  }
  return out;
}

}  // namespace ntruvfk
