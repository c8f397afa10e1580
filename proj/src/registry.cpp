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

#include "ntruvfk/registry.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "params_builtin.hpp"

namespace ntruvfk {
namespace {

constexpr std::string_view kBuiltin = kBuiltinRegistryText;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(std::string_view v, int line) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "line " + std::to_string(line) + ": expected an integer, got '" +
                    std::string(v) + "'");
  }
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument,
              "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

std::string_view variant_name(SetVariant v) {
  switch (v) {
    case SetVariant::kHps:
      return "hps";
    case SetVariant::kPrime:
      return "prime";
    case SetVariant::kLattice:
      return "lattice";
  }
  return "?";
}

hps::HpsParams ParamSet::hps() const {
  if (variant != SetVariant::kHps) {
    throw Error(ErrorCode::kInvalidArgument, name + " is not an HPS set");
  }
  return hps::HpsParams{n, q};
}

prime::PrimeParams ParamSet::prime() const {
  if (variant != SetVariant::kPrime) {
    throw Error(ErrorCode::kInvalidArgument, name + " is not an NTRU Prime set");
  }
  return prime::PrimeParams{n, q, w};
}

void ParamSet::validate() const {
  if (variant == SetVariant::kHps) hps().validate();
  if (variant == SetVariant::kPrime) prime().validate();
  VfkLattice::build(n, q, k, P);
}

ParamRegistry ParamRegistry::builtin() { return parse(kBuiltin); }

std::string_view ParamRegistry::builtin_text() { return kBuiltin; }

ParamRegistry ParamRegistry::parse(std::string_view text) {
  struct Pending {
    ParamSet set;
    bool has_variant = false, has_k = false, has_p = false;
    int line = 0;
  };
  ParamRegistry reg;
  std::optional<Pending> cur;

  auto finish = [&] {
    if (!cur) return;
    Pending& p = *cur;
    if (!p.has_variant) fail(p.line, "[" + p.set.name + "] has no variant");
    if (p.has_k != p.has_p) fail(p.line, "k and P must be given together");
    if (!p.has_k) {
      const KAndP kp = max_k(p.set.q);
      p.set.k = kp.k;
      p.set.P = kp.P;
    }
    try {
      p.set.validate();
    } catch (const Error& e) {
      fail(p.line, "[" + p.set.name + "] " + e.what());
    }
    reg.entries_.push_back(std::move(p.set));
    cur.reset();
  };

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail(line_no, "unterminated section header");
      finish();
      const std::string name(trim(line.substr(1, line.size() - 2)));
      if (name.empty()) fail(line_no, "empty set name");
      for (const auto& e : reg.entries_) {
        if (e.name == name) fail(line_no, "duplicate set " + name);
      }
      cur = Pending{};
      cur->set.name = name;
      cur->line = line_no;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    if (!cur) fail(line_no, "key outside of a [set] section");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    ParamSet& s = cur->set;
    if (key == "variant") {
      if (value == "hps") {
        s.variant = SetVariant::kHps;
      } else if (value == "prime") {
        s.variant = SetVariant::kPrime;
      } else if (value == "lattice") {
        s.variant = SetVariant::kLattice;
      } else {
        fail(line_no, "unknown variant '" + std::string(value) + "'");
      }
      cur->has_variant = true;
    } else if (key == "n") {
      s.n = static_cast<int>(parse_int(value, line_no));
    } else if (key == "q") {
      s.q = parse_int(value, line_no);
    } else if (key == "w") {
      s.w = static_cast<int>(parse_int(value, line_no));
    } else if (key == "k") {
      s.k = parse_int(value, line_no);
      cur->has_k = true;
    } else if (key == "P") {
      s.P = parse_int(value, line_no);
      cur->has_p = true;
    } else {
      fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  finish();
  return reg;
}

ParamRegistry ParamRegistry::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open registry file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

const ParamSet& ParamRegistry::get(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e;
  }
  std::string known;
  for (const auto& e : entries_) known += (known.empty() ? "" : ", ") + e.name;
  throw Error(ErrorCode::kUnknownSet, "unknown parameter set '" +
                                          std::string(name) +
                                          "'; known sets: " + known);
}

std::vector<std::string> ParamRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.name);
  return out;
}

}  // namespace ntruvfk
