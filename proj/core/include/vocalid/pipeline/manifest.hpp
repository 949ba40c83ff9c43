// core/include/vocalid/pipeline/manifest.hpp

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

#ifndef VOCALID_PIPELINE_MANIFEST_HPP_
#define VOCALID_PIPELINE_MANIFEST_HPP_

#include <optional>
#include <string>
#include <vector>

namespace vocalid::pipeline {

/// One audio file.  A "track" may appear once per variant (fullmix and
/// separated vocals share a track id and must share a split).
struct ManifestRow {
  std::string path;       // as written in the manifest
  std::string singer_id;  // likeness target; for deepfakes, the cloned singer
  bool deepfake = false;
  std::string algorithm;  // generation tag; empty iff authentic
  std::string split;      // train | val | test
  std::string variant;    // fullmix | vocals

  /// Path stem with any trailing "_fullmix"/"_vocals" marker stripped.
  std::string track_id() const;
};

/// CSV with the exact header
///   path,singer_id,authenticity,algorithm,split,variant
/// where authenticity is "authentic" or "deepfake".  Relative paths resolve
/// against the manifest's directory.
struct Manifest {
  std::vector<ManifestRow> rows;
  std::string base_dir;

  static Manifest load(const std::string& path);
  void save(const std::string& path) const;

  /// Errors (kConfig): duplicate paths, splits differing across one track's
  /// variants, algorithm tags on authentic rows or missing on deepfakes,
  /// unknown split/variant values.
  void validate() const;

  std::string resolve_path(const ManifestRow& row) const;

  std::vector<const ManifestRow*> select(
      const std::string& split, const std::string& variant,
      std::optional<bool> deepfake = std::nullopt) const;

  /// Sorted unique singer ids over authentic rows of a split ("" = all).
  std::vector<std::string> singers(const std::string& split = "") const;
};

}  // namespace vocalid::pipeline

#endif  // VOCALID_PIPELINE_MANIFEST_HPP_
