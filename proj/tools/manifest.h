// Copyright 2026 The lorahop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LORAHOP_TOOLS_MANIFEST_H_
#define LORAHOP_TOOLS_MANIFEST_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lorahop/digest.h"

namespace lorahop::cli {

/// Provenance record written next to a command's outputs. The digest covers
/// the command, every input file and every result-relevant flag, so equal
/// digests mean equal inputs. The duration makes the manifest itself
/// non-reproducible; it is never part of a determinism check.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void input(std::string_view name, std::string_view content);
  void input_file(std::string_view name, const std::filesystem::path& path);
  void seed(std::string_view name, std::uint64_t value);
  void output(const std::filesystem::path& path);

  std::string digest() const { return digest_.hex(); }
  void write(const std::filesystem::path& path) const;

 private:
  std::string command_;
  Fnv1a digest_;
  std::vector<std::pair<std::string, std::uint64_t>> seeds_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace lorahop::cli

#endif  // LORAHOP_TOOLS_MANIFEST_H_
