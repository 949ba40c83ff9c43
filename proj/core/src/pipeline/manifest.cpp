// core/src/pipeline/manifest.cpp

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

#include "vocalid/pipeline/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "vocalid/common/error.hpp"
#include "vocalid/common/io.hpp"

namespace vocalid::pipeline {

namespace {

constexpr const char* kHeader =
    "path,singer_id,authenticity,algorithm,split,variant";

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void check_no_comma(const std::string& field, const std::string& what) {
  if (field.find(',') != std::string::npos)
    throw Error(ErrorCode::kConfig, what + " may not contain a comma: " + field);
}

}  // namespace

std::string ManifestRow::track_id() const {
  std::string stem = std::filesystem::path(path).stem().string();
  for (const char* suffix : {"_fullmix", "_vocals"}) {
    size_t n = std::string(suffix).size();
    if (stem.size() > n && stem.compare(stem.size() - n, n, suffix) == 0)
      return stem.substr(0, stem.size() - n);
  }
  return stem;
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open manifest " + path);
  Manifest m;
  m.base_dir = std::filesystem::path(path).parent_path().string();

  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::kConfig, path + ": empty manifest");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw Error(ErrorCode::kConfig,
                path + ": bad header, expected '" + std::string(kHeader) + "'");

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv(line);
    if (fields.size() != 6)
      throw Error(ErrorCode::kConfig,
                  path + ":" + std::to_string(line_no) + ": expected 6 fields, got " +
                      std::to_string(fields.size()));
    ManifestRow row;
    row.path = fields[0];
    row.singer_id = fields[1];
    if (fields[2] == "authentic")
      row.deepfake = false;
    else if (fields[2] == "deepfake")
      row.deepfake = true;
    else
      throw Error(ErrorCode::kConfig,
                  path + ":" + std::to_string(line_no) +
                      ": authenticity must be authentic|deepfake");
    row.algorithm = fields[3];
    row.split = fields[4];
    row.variant = fields[5];
    m.rows.push_back(std::move(row));
  }
  m.validate();
  return m;
}

void Manifest::save(const std::string& path) const {
  validate();
  std::ostringstream os;
  os << kHeader << "\n";
  for (const auto& r : rows) {
    check_no_comma(r.path, "path");
    check_no_comma(r.singer_id, "singer_id");
    check_no_comma(r.algorithm, "algorithm");
    os << r.path << "," << r.singer_id << ","
       << (r.deepfake ? "deepfake" : "authentic") << "," << r.algorithm << ","
       << r.split << "," << r.variant << "\n";
  }
  write_file_atomic(path, os.str());
}

void Manifest::validate() const {
  std::set<std::string> seen_paths;
  std::map<std::string, std::string> track_split;
  for (const auto& r : rows) {
    if (!seen_paths.insert(r.path).second)
      throw Error(ErrorCode::kConfig, "duplicate path: " + r.path);
    if (r.split != "train" && r.split != "val" && r.split != "test")
      throw Error(ErrorCode::kConfig, r.path + ": unknown split " + r.split);
    if (r.variant != "fullmix" && r.variant != "vocals")
      throw Error(ErrorCode::kConfig,
                  r.path + ": unknown variant " + r.variant);
    if (r.deepfake && r.algorithm.empty())
      throw Error(ErrorCode::kConfig,
                  r.path + ": deepfake rows need an algorithm tag");
    if (!r.deepfake && !r.algorithm.empty())
      throw Error(ErrorCode::kConfig,
                  r.path + ": authentic rows may not carry an algorithm tag");
    auto [it, inserted] = track_split.emplace(r.track_id(), r.split);
    if (!inserted && it->second != r.split)
      throw Error(ErrorCode::kConfig,
                  "track " + r.track_id() + " appears in splits " +
                      it->second + " and " + r.split);
  }
}

std::string Manifest::resolve_path(const ManifestRow& row) const {
  std::filesystem::path p(row.path);
  if (p.is_absolute() || base_dir.empty()) return row.path;
  return (std::filesystem::path(base_dir) / p).string();
}

std::vector<const ManifestRow*> Manifest::select(
    const std::string& split, const std::string& variant,
    std::optional<bool> deepfake) const {
  std::vector<const ManifestRow*> out;
  for (const auto& r : rows) {
    if (!split.empty() && r.split != split) continue;
    if (!variant.empty() && r.variant != variant) continue;
    if (deepfake && r.deepfake != *deepfake) continue;
    out.push_back(&r);
  }
  return out;
}

std::vector<std::string> Manifest::singers(const std::string& split) const {
  std::set<std::string> ids;
  for (const auto& r : rows) {
    if (r.deepfake) continue;
    if (!split.empty() && r.split != split) continue;
    ids.insert(r.singer_id);
  }
  return {ids.begin(), ids.end()};
}

}  // namespace vocalid::pipeline
