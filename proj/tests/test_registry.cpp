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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ntruvfk/registry.hpp"

namespace ntruvfk {
namespace {

const std::string kDataFile = std::string(NTRUVFK_SOURCE_DIR) + "/data/params.conf";

TEST(Registry, BuiltinSets) {
  const ParamRegistry reg = ParamRegistry::builtin();
  const std::vector<std::string> expect{
      "ntruhps2048509", "ntruhps2048677", "ntruhps4096821",
      "sntrup653",      "sntrup761",      "sntrup857",
      "hps-surrogate-101", "toy-2-8",     "toy-3-32"};
  EXPECT_EQ(reg.names(), expect);
  for (const auto& s : reg.entries()) EXPECT_NO_THROW(s.validate()) << s.name;

  const ParamSet& h = reg.get("ntruhps2048509");
  EXPECT_EQ(h.variant, SetVariant::kHps);
  EXPECT_EQ(h.k, 64);
  EXPECT_EQ(h.P, 31);
  EXPECT_EQ(h.hps().n, 509);
  EXPECT_THROW(h.prime(), Error);

  const ParamSet& p = reg.get("sntrup857");
  EXPECT_EQ(p.prime().w, 322);
  EXPECT_EQ(p.k, 106);
  EXPECT_EQ(p.P, 48);
  EXPECT_THROW(p.hps(), Error);

  EXPECT_EQ(reg.get("toy-3-32").k, 8);
  EXPECT_EQ(reg.get("toy-3-32").P, 3);
  EXPECT_EQ(reg.get("toy-2-8").lattice().dimension(), 4);
  EXPECT_EQ(variant_name(SetVariant::kLattice), "lattice");
}

TEST(Registry, BuiltinEqualsDataFile) {
  std::ifstream in(kDataFile);
  ASSERT_TRUE(in) << kDataFile;
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), ParamRegistry::builtin_text());
  EXPECT_EQ(ParamRegistry::load(kDataFile).names(),
            ParamRegistry::builtin().names());
}

TEST(Registry, UnknownSetListsKnownNames) {
  const ParamRegistry reg = ParamRegistry::builtin();
  try {
    reg.get("ntruhps9999");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownSet);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("sntrup761"), std::string::npos);
    EXPECT_NE(msg.find("ntruhps2048509"), std::string::npos);
  }
}

TEST(Registry, MissingFile) {
  try {
    ParamRegistry::load("/nonexistent/params.conf");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(Registry, ParsesCommentsAndDefaults) {
  const ParamRegistry reg = ParamRegistry::parse(
      "  # leading comment\n"
      "[a]   # trailing\n"
      " variant = lattice \n"
      "n=4\r\n"
      "q = 70\n"
      "k = 10\n"
      "P = 6\n"
      "[b]\n"
      "variant = lattice\n"
      "n = 2\n"
      "q = 2048\n");
  ASSERT_EQ(reg.entries().size(), 2u);
  EXPECT_EQ(reg.get("a").k, 10);
  EXPECT_EQ(reg.get("b").k, 64);
  EXPECT_EQ(reg.get("b").P, 31);
}

TEST(Registry, ParseErrors) {
  const char* bad[] = {
      "variant = hps\n",                                   // outside a set
      "[x]\nn = 5\nq = 32\n",                              // no variant
      "[x]\nvariant = other\n",                            // unknown variant
      "[x]\nvariant = lattice\nn = 2\nq = 8\nk = 3\n",     // k without P
      "[x]\nvariant = lattice\nn = 2\nq = 8\nk = 4\nP = 2\n",  // not obtuse
      "[x]\nvariant = lattice\nn = two\n",                 // not an integer
      "[x]\nvariant = lattice\ncolour = red\n",            // unknown key
      "[x\n",                                              // bad header
      "[x]\nvariant = lattice\nn = 2\nq = 8\n[x]\n",       // duplicate
      "[x]\nvariant = hps\nn = 509\nq = 2000\n",           // invalid HPS
      "[x]\nvariant = lattice\nn 2\n",                     // no '='
  };
  for (const char* text : bad) {
    EXPECT_THROW(ParamRegistry::parse(text), Error) << text;
  }
}

}  // namespace
}  // namespace ntruvfk
