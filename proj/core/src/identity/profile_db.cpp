// core/src/identity/profile_db.cpp

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

#include "vocalid/identity/profile_db.hpp"

#include <algorithm>
#include <cstring>

#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

namespace vocalid::identity {

namespace {
constexpr char kMagic[4] = {'V', 'P', 'D', '1'};
constexpr uint8_t kVersion = 1;
}  // namespace

ProfileDb::ProfileDb(const ProfileDb& other) {
  std::shared_lock lock(other.mu_);
  fingerprint_ = other.fingerprint_;
  dim_ = other.dim_;
  profiles_ = other.profiles_;
}

bool ProfileDb::empty() const {
  std::shared_lock lock(mu_);
  return profiles_.empty();
}

size_t ProfileDb::size() const {
  std::shared_lock lock(mu_);
  return profiles_.size();
}

SingerProfile ProfileDb::enroll(const std::string& singer_id,
                                const std::vector<Embedding>& embeddings) {
  if (embeddings.empty())
    throw Error(ErrorCode::kInvalidArgument,
                singer_id + ": nothing to enroll");
  const int dim = static_cast<int>(embeddings.front().v.size());
  const uint32_t fp = embeddings.front().model_fingerprint;
  for (const auto& e : embeddings) {
    if (static_cast<int>(e.v.size()) != dim)
      throw Error(ErrorCode::kInvalidArgument,
                  singer_id + ": embeddings of mixed dimension");
    if (e.model_fingerprint != fp)
      throw Error(ErrorCode::kIncompatibleDb,
                  singer_id + ": embeddings from different model weights");
  }

  SingerProfile profile;
  profile.singer_id = singer_id;
  profile.reference.assign(static_cast<size_t>(dim), 0.0);
  for (const auto& e : embeddings) {
    for (int i = 0; i < dim; ++i) profile.reference[size_t(i)] += e.v[size_t(i)];
    profile.track_ids.push_back(e.track_id);
  }
  for (double& x : profile.reference)
    x /= static_cast<double>(embeddings.size());
  double norm = l2_norm(profile.reference);
  if (norm == 0.0)
    throw Error(ErrorCode::kUndefinedDistance,
                singer_id + ": mean embedding has zero norm");
  for (double& x : profile.reference) x /= norm;
  profile.enrollment_count = static_cast<uint32_t>(embeddings.size());

  std::unique_lock lock(mu_);
  if (profiles_.empty() && dim_ == 0) {
    dim_ = dim;
    fingerprint_ = fp;
  } else {
    if (fp != fingerprint_)
      throw Error(ErrorCode::kIncompatibleDb,
                  singer_id + ": db built with fingerprint " +
                      std::to_string(fingerprint_) + ", embeddings carry " +
                      std::to_string(fp));
    if (dim != dim_)
      throw Error(ErrorCode::kIncompatibleDb,
                  singer_id + ": db dim " + std::to_string(dim_) +
                      " vs embedding dim " + std::to_string(dim));
  }
  profiles_[singer_id] = profile;  // atomic swap under the write lock
  return profile;
}

std::vector<std::pair<std::string, double>> ProfileDb::rank(
    const Embedding& query) const {
  std::shared_lock lock(mu_);
  if (profiles_.empty())
    throw Error(ErrorCode::kNoReferences, "profile database is empty");
  if (fingerprint_ != 0 && query.model_fingerprint != 0 &&
      query.model_fingerprint != fingerprint_)
    throw Error(ErrorCode::kIncompatibleDb,
                "query embedding fingerprint does not match the database");
  std::vector<std::pair<std::string, double>> out;
  out.reserve(profiles_.size());
  for (const auto& [id, profile] : profiles_)
    out.emplace_back(id, cosine_distance(query.v, profile.reference));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return out;
}

std::vector<SingerProfile> ProfileDb::profiles() const {
  std::shared_lock lock(mu_);
  std::vector<SingerProfile> out;
  out.reserve(profiles_.size());
  for (const auto& [id, p] : profiles_) out.push_back(p);
  return out;
}

std::vector<uint8_t> ProfileDb::serialize() const {
  std::shared_lock lock(mu_);
  std::vector<uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  append_u32le(&out, fingerprint_);
  append_u64le(&out, static_cast<uint64_t>(dim_));
  append_u64le(&out, static_cast<uint64_t>(profiles_.size()));
  for (const auto& [id, p] : profiles_) {
    append_u32le(&out, static_cast<uint32_t>(id.size()));
    out.insert(out.end(), id.begin(), id.end());
    append_u32le(&out, p.enrollment_count);
    for (double x : p.reference) append_f32le(&out, static_cast<float>(x));
  }
  append_u32le(&out, crc32(out));
  return out;
}

ProfileDb ProfileDb::deserialize(const std::vector<uint8_t>& bytes) {
  if (bytes.size() < 29)
    throw Error(ErrorCode::kCorruptArchive, "profile db too small");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0)
    throw Error(ErrorCode::kCorruptArchive, "bad magic (not a VPD1 db)");
  uint32_t stored = 0;
  for (int i = 0; i < 4; ++i)
    stored |= uint32_t(bytes[bytes.size() - 4 + i]) << (8 * i);
  if (stored != crc32(bytes.data(), bytes.size() - 4))
    throw Error(ErrorCode::kCorruptArchive, "profile db checksum mismatch");

  ByteReader r(bytes.data(), bytes.size() - 4);
  r.bytes(4);
  uint8_t version = r.u8();
  if (version != kVersion)
    throw Error(ErrorCode::kCorruptArchive,
                "unsupported profile db version " + std::to_string(version));
  ProfileDb db;
  db.fingerprint_ = r.u32le();
  db.dim_ = static_cast<int>(r.u64le());
  uint64_t count = r.u64le();
  for (uint64_t i = 0; i < count; ++i) {
    SingerProfile p;
    uint32_t id_len = r.u32le();
    p.singer_id = r.bytes(id_len);
    p.enrollment_count = r.u32le();
    p.reference.resize(static_cast<size_t>(db.dim_));
    for (int d = 0; d < db.dim_; ++d)
      p.reference[size_t(d)] = static_cast<double>(r.f32le());
    db.profiles_[p.singer_id] = std::move(p);
  }
  if (r.remaining() != 0)
    throw Error(ErrorCode::kCorruptArchive, "trailing bytes in profile db");
  return db;
}

void ProfileDb::save(const std::string& path) const {
  write_file_atomic(path, serialize());
}

ProfileDb ProfileDb::load(const std::string& path) {
  return deserialize(read_binary_file(path));
}

}  // namespace vocalid::identity
