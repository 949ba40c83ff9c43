// core/include/vocalid/identity/profile_db.hpp

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

#ifndef VOCALID_IDENTITY_PROFILE_DB_HPP_
#define VOCALID_IDENTITY_PROFILE_DB_HPP_

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "vocalid/identity/embedding.hpp"

namespace vocalid::identity {

/// Enrolled reference: the unit-normalized mean of a singer's track
/// embeddings.
struct SingerProfile {
  std::string singer_id;
  std::vector<double> reference;  // unit norm
  uint32_t enrollment_count = 0;
  std::vector<std::string> track_ids;  // in-memory only, not persisted
};

/// Database of known vocalist likeness profiles.  Many concurrent readers;
/// enrollment takes an exclusive lock and replaces the profile atomically.
///
/// File format ("VPD1"): magic, version byte, u32 embedder fingerprint,
/// u64 dim, u64 profile count, then per profile: u32 singer_id length +
/// bytes, u32 enrollment count, dim float32 reference values; trailing
/// CRC32 (same endianness rules as the weight archive).
class ProfileDb {
 public:
  ProfileDb() = default;
  ProfileDb(uint32_t fingerprint, int dim)
      : fingerprint_(fingerprint), dim_(dim) {}

  ProfileDb(const ProfileDb& other);
  ProfileDb& operator=(const ProfileDb&) = delete;

  uint32_t fingerprint() const { return fingerprint_; }
  int dim() const { return dim_; }
  bool empty() const;
  size_t size() const;

  /// Replaces (or creates) the singer's profile from per-track embeddings:
  /// reference = mean of embeddings, then unit-normalized.
  /// Errors: kIncompatibleDb on fingerprint/dim mismatch, kInvalidArgument
  /// on an empty enrollment set, kUndefinedDistance on a zero-norm mean.
  SingerProfile enroll(const std::string& singer_id,
                       const std::vector<Embedding>& embeddings);

  /// All profiles scored against the query, ascending distance, ties
  /// broken by singer id.  Errors: kNoReferences on an empty db,
  /// kIncompatibleDb on fingerprint mismatch.
  std::vector<std::pair<std::string, double>> rank(
      const Embedding& query) const;

  std::vector<SingerProfile> profiles() const;  // sorted by singer id

  void save(const std::string& path) const;
  /// Errors: kCorruptArchive on bad magic/checksum/truncation.
  static ProfileDb load(const std::string& path);
  std::vector<uint8_t> serialize() const;
  static ProfileDb deserialize(const std::vector<uint8_t>& bytes);

 private:
  mutable std::shared_mutex mu_;
  uint32_t fingerprint_ = 0;
  int dim_ = 0;
  std::map<std::string, SingerProfile> profiles_;
};

}  // namespace vocalid::identity

#endif  // VOCALID_IDENTITY_PROFILE_DB_HPP_
