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

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ntruvfk/ring.hpp"

namespace ntruvfk {

using Digest = std::array<std::uint8_t, 32>;
using Bytes = std::vector<std::uint8_t>;

// Each coefficient (centered when the polynomial carries a modulus) as a
// signed 16-bit little-endian value, in degree order.
Bytes encode(const Poly& a);

// Inverse of encode for a given context. Values are reduced into the
// context's modulus, if any.
Poly decode(std::span<const std::uint8_t> bytes, const RingContext& ctx);

Digest sha256(std::span<const std::uint8_t> data);

// SHA-256 over the concatenation of the given parts.
Digest sha256_concat(std::initializer_list<std::span<const std::uint8_t>> parts);

std::string to_hex(std::span<const std::uint8_t> bytes);
Bytes from_hex(std::string_view hex);

}  // namespace ntruvfk
