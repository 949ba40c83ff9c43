// core/include/vocalid/nn/archive.hpp

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

#ifndef VOCALID_NN_ARCHIVE_HPP_
#define VOCALID_NN_ARCHIVE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "vocalid/nn/network.hpp"

namespace vocalid::nn {

/// Weight archive ("VPW1"): magic, version byte, u32 tensor count, then per
/// tensor: u32 name length + bytes, u32 rank, u64 little-endian dims, raw
/// little-endian float32 values; the file ends with a CRC32 of everything
/// before it.  Values are stored in network state order (parameters then
/// buffers per layer).
struct NamedTensor {
  std::string name;
  std::vector<int> shape;
  std::vector<float> values;
};

std::vector<uint8_t> serialize_weights(Network& net);

/// Errors: kCorruptArchive for bad magic/version/truncation/checksum.
std::vector<NamedTensor> parse_archive(const std::vector<uint8_t>& bytes);
std::vector<NamedTensor> read_archive(const std::string& path);

/// Copies archive values into the network.  Entry order, names and shapes
/// must all match; the error names the first mismatched tensor.
/// Errors: kIncompatibleWeights.
void load_weights(Network& net, const std::vector<NamedTensor>& archive);

void save_weights(Network& net, const std::string& path);
void load_weights(Network& net, const std::string& path);

/// CRC32 of the serialized archive; identifies a trained model.  Equals the
/// checksum embedded in a file written by save_weights.
uint32_t weights_fingerprint(Network& net);

}  // namespace vocalid::nn

#endif  // VOCALID_NN_ARCHIVE_HPP_
