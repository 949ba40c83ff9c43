// tests/test_archive.cpp

// Copyright 2026  The Vocalid Authors

// See COPYING in the project root for clarification regarding multiple authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "support/test_util.hpp"
#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"
#include "vocalid/nn/archive.hpp"

using namespace vocalid;
using namespace vocalid::nn;

namespace {

Network small_net(uint64_t seed) {
  Rng rng(seed);
  Network net;
  net.add(LayerSpec::conv1d(3, 6, 3, 1, true), "conv1", &rng);
  net.add(LayerSpec::batchnorm(6), "bn1");
  net.add(LayerSpec::relu(), "relu1");
  net.add(LayerSpec::attentive_stats_pool(6, 4), "pool", &rng);
  net.add(LayerSpec::dense(12, 4), "fc", &rng);
  return net;
}

}  // namespace

TEST_CASE("save -> load -> save produces byte-identical archives") {
  testing::TempDir tmp;
  Network net = small_net(31);
  std::string p1 = tmp.file("a.vpw"), p2 = tmp.file("b.vpw");
  save_weights(net, p1);

  Network fresh = small_net(32);  // different init, same structure
  load_weights(fresh, p1);
  save_weights(fresh, p2);

  CHECK(read_binary_file(p1) == read_binary_file(p2));

  // Loaded values match the saved ones (to float32 precision).
  auto sa = net.state();
  auto sb = fresh.state();
  REQUIRE(sa.size() == sb.size());
  for (size_t i = 0; i < sa.size(); ++i)
    for (int64_t v = 0; v < sa[i].second->size(); ++v)
      CHECK(float((*sa[i].second)[v]) == float((*sb[i].second)[v]));
}

TEST_CASE("truncated archives are rejected") {
  testing::TempDir tmp;
  Network net = small_net(33);
  std::string path = tmp.file("t.vpw");
  save_weights(net, path);
  auto bytes = read_binary_file(path);
  bytes.resize(bytes.size() / 2);
  try {
    parse_archive(bytes);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCorruptArchive);
  }
}

TEST_CASE("a flipped byte fails the checksum") {
  Network net = small_net(34);
  auto bytes = serialize_weights(net);
  bytes[bytes.size() / 3] ^= 0x40;
  try {
    parse_archive(bytes);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCorruptArchive);
    CHECK(std::string(e.what()).find("checksum") != std::string::npos);
  }
}

TEST_CASE("bad magic is reported as a corrupt archive") {
  std::vector<uint8_t> bytes = {'X', 'Y', 'Z', 'W', 1, 0, 0, 0, 0, 0, 0, 0, 0};
  try {
    parse_archive(bytes);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCorruptArchive);
  }
}

TEST_CASE("loading weights into the wrong architecture names the mismatch") {
  testing::TempDir tmp;
  Network a = small_net(35);
  std::string path = tmp.file("a.vpw");
  save_weights(a, path);

  // Same depth, different first layer width.
  Rng rng(36);
  Network b;
  b.add(LayerSpec::conv1d(3, 8, 3, 1, true), "conv1", &rng);
  b.add(LayerSpec::batchnorm(8), "bn1");
  b.add(LayerSpec::relu(), "relu1");
  b.add(LayerSpec::attentive_stats_pool(8, 4), "pool", &rng);
  b.add(LayerSpec::dense(16, 4), "fc", &rng);
  try {
    load_weights(b, path);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompatibleWeights);
    CHECK(std::string(e.what()).find("conv1/weight") != std::string::npos);
  }

  // Entirely different architecture: tensor count differs.
  Network c;
  c.add(LayerSpec::dense(4, 2), "fc", &rng);
  try {
    load_weights(c, path);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompatibleWeights);
  }
}

TEST_CASE("fingerprint changes with the weights") {
  Network a = small_net(37);
  Network b = small_net(38);
  uint32_t fa = weights_fingerprint(a);
  uint32_t fb = weights_fingerprint(b);
  CHECK(fa != fb);
  CHECK(fa == weights_fingerprint(a));

  // Fingerprint equals the archive's embedded checksum.
  auto bytes = serialize_weights(a);
  uint32_t stored = 0;
  for (int i = 0; i < 4; ++i)
    stored |= uint32_t(bytes[bytes.size() - 4 + i]) << (8 * i);
  CHECK(stored == fa);
}
