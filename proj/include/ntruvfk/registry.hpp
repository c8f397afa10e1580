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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ntruvfk/ntru_hps.hpp"
#include "ntruvfk/ntru_prime.hpp"
#include "ntruvfk/vfk.hpp"

namespace ntruvfk {

enum class SetVariant {
  kHps,
  kPrime,
  kLattice,  // bare L_k, no KEM attached
};

struct ParamSet {
  std::string name;
  SetVariant variant = SetVariant::kLattice;
  int n = 0;  // N or p
  std::int64_t q = 0;
  int w = 0;  // Prime weight
  std::int64_t k = 0;
  std::int64_t P = 0;

  hps::HpsParams hps() const;        // throws unless kHps
  prime::PrimeParams prime() const;  // throws unless kPrime
  VfkLattice lattice() const { return VfkLattice::build(n, q, k, P); }

  // Variant invariants plus obtuseness of (k, q, P).
  void validate() const;
};

std::string_view variant_name(SetVariant v);

// Named parameter sets read from a small INI-style text file:
//
//   # comment
//   [ntruhps2048509]
//   variant = hps        # hps | prime | lattice
//   n = 509
//   q = 2048
//   w = 286              # prime only
//   k = 64               # optional, with P; default max_k(q)
//   P = 31
class ParamRegistry {
 public:
  static ParamRegistry builtin();
  static ParamRegistry parse(std::string_view text);
  static ParamRegistry load(const std::string& path);

  // Throws Error(kUnknownSet) listing the known names.
  const ParamSet& get(std::string_view name) const;
  const std::vector<ParamSet>& entries() const { return entries_; }
  std::vector<std::string> names() const;

  // The text builtin() is parsed from.
  static std::string_view builtin_text();

 private:
  std::vector<ParamSet> entries_;
};

}  // namespace ntruvfk
