// core/src/nn/archive.cpp

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

#include "vocalid/nn/archive.hpp"

#include <cstring>

#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

namespace vocalid::nn {

namespace {

constexpr char kMagic[4] = {'V', 'P', 'W', '1'};
constexpr uint8_t kVersion = 1;

}  // namespace

std::vector<uint8_t> serialize_weights(Network& net) {
  auto state = net.state();
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  append_u32le(&out, static_cast<uint32_t>(state.size()));
  for (auto& [name, tensor] : state) {
    append_u32le(&out, static_cast<uint32_t>(name.size()));
    out.insert(out.end(), name.begin(), name.end());
    append_u32le(&out, static_cast<uint32_t>(tensor->rank()));
    for (int d : tensor->shape())
      append_u64le(&out, static_cast<uint64_t>(d));
    for (int64_t i = 0; i < tensor->size(); ++i)
      append_f32le(&out, static_cast<float>((*tensor)[i]));
  }
  append_u32le(&out, crc32(out));
  return out;
}

std::vector<NamedTensor> parse_archive(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 13)
    throw Error(ErrorCode::kCorruptArchive, "file too small");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(ErrorCode::kCorruptArchive, "bad magic (not a VPW1 archive)");

  // Checksum covers everything before the trailing CRC32.
  uint32_t stored = 0;
  for (int i = 0; i < 4; ++i)
    stored |= uint32_t(bytes[bytes.size() - 4 + i]) << (8 * i);
  uint32_t computed = crc32(bytes.data(), bytes.size() - 4);
  if (stored != computed)
    throw Error(ErrorCode::kCorruptArchive, "checksum mismatch");

  ByteReader r(bytes.data(), bytes.size() - 4);
  r.bytes(4);  // magic
  uint8_t version = r.u8();
  if (version != kVersion)
    throw Error(ErrorCode::kCorruptArchive,
                "unsupported version " + std::to_string(version));
  uint32_t count = r.u32le();
  std::vector<NamedTensor> tensors;
  tensors.reserve(count);
  for (uint32_t i = 0; i < count; ++i) {
    NamedTensor t;
    uint32_t name_len = r.u32le();
    t.name = r.bytes(name_len);
    uint32_t rank = r.u32le();
    if (rank > 8)
      throw Error(ErrorCode::kCorruptArchive, "implausible tensor rank");
    int64_t n = 1;
    for (uint32_t d = 0; d < rank; ++d) {
      uint64_t dim = r.u64le();
      if (dim > (1ull << 32))
        throw Error(ErrorCode::kCorruptArchive, "implausible dimension");
      t.shape.push_back(static_cast<int>(dim));
      n *= static_cast<int64_t>(dim);
    }
    if (static_cast<uint64_t>(n) * 4 > r.remaining())
      throw Error(ErrorCode::kCorruptArchive, "tensor data truncated");
    t.values.resize(static_cast<size_t>(n));
    for (int64_t v = 0; v < n; ++v)
      t.values[static_cast<size_t>(v)] = r.f32le();
    tensors.push_back(std::move(t));
  }
  if (r.remaining() != 0)
    throw Error(ErrorCode::kCorruptArchive, "trailing bytes after tensors");
  return tensors;
}

std::vector<NamedTensor> read_archive(const std::string& path) {
  return parse_archive(read_binary_file(path));
}

void load_weights(Network& net, const std::vector<NamedTensor>& archive) {
  auto state = net.state();
  if (archive.size() != state.size())
    throw Error(ErrorCode::kIncompatibleWeights,
                "archive holds " + std::to_string(archive.size()) +
                    " tensors, network expects " +
                    std::to_string(state.size()));
  for (size_t i = 0; i < state.size(); ++i) {
    auto& [name, tensor] = state[i];
    const NamedTensor& src = archive[i];
    if (src.name != name)
      throw Error(ErrorCode::kIncompatibleWeights,
                  "tensor " + std::to_string(i) + " is '" + src.name +
                      "', network expects '" + name + "'");
    if (src.shape != tensor->shape())
      throw Error(ErrorCode::kIncompatibleWeights,
                  name + ": archive shape " + shape_to_string(src.shape) +
                      " vs network shape " + tensor->shape_str());
    for (int64_t v = 0; v < tensor->size(); ++v)
      (*tensor)[v] = static_cast<double>(src.values[static_cast<size_t>(v)]);
  }
}

void save_weights(Network& net, const std::string& path) {
  write_file_atomic(path, serialize_weights(net));
}

void load_weights(Network& net, const std::string& path) {
  load_weights(net, read_archive(path));
}

uint32_t weights_fingerprint(Network& net) {
  std::vector<uint8_t> bytes = serialize_weights(net);
  // The file's trailing CRC, i.e. the CRC of everything before it.
  return crc32(bytes.data(), bytes.size() - 4);
}

}  // namespace vocalid::nn
