// core/include/vocalid/common/io.hpp

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

#ifndef VOCALID_COMMON_IO_HPP_
#define VOCALID_COMMON_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace vocalid {

/// CRC-32 (IEEE 802.3, reflected, poly 0xEDB88320).
uint32_t crc32(const uint8_t* data, size_t len, uint32_t seed = 0);
uint32_t crc32(const std::vector<uint8_t>& data);

std::vector<uint8_t> read_binary_file(const std::string& path);

/// Writes to a temp file in the same directory then renames, so readers
/// never observe a partially written file.
void write_file_atomic(const std::string& path,
                       const std::vector<uint8_t>& bytes);
void write_file_atomic(const std::string& path, const std::string& text);

// Little-endian scalar append/read helpers shared by the binary formats.
void append_u32le(std::vector<uint8_t>* out, uint32_t v);
void append_u64le(std::vector<uint8_t>* out, uint64_t v);
void append_f32le(std::vector<uint8_t>* out, float v);

/// Cursor over a byte buffer; all reads throw kCorruptArchive on overrun.
class ByteReader {
 public:
  ByteReader(const uint8_t* data, size_t len) : data_(data), len_(len) {}
  explicit ByteReader(const std::vector<uint8_t>& v)
      : data_(v.data()), len_(v.size()) {}

  uint8_t u8();
  uint32_t u32le();
  uint64_t u64le();
  float f32le();
  std::string bytes(size_t n);
  size_t pos() const { return pos_; }
  size_t remaining() const { return len_ - pos_; }

 private:
  const uint8_t* data_;
  size_t len_;
  size_t pos_ = 0;
};

}  // namespace vocalid

#endif  // VOCALID_COMMON_IO_HPP_
