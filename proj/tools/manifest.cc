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

#include "manifest.h"

#include <json.hpp>

#include "lorahop/io.h"

namespace lorahop::cli {

RunManifest::RunManifest(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {
  digest_.field("command").field(command_);
}

void RunManifest::input(std::string_view name, std::string_view content) {
  digest_.field(name).field(content);
}

void RunManifest::input_file(std::string_view name,
                             const std::filesystem::path& path) {
  input(name, read_text_file(path));
}

void RunManifest::seed(std::string_view name, std::uint64_t value) {
  seeds_.emplace_back(name, value);
  digest_.field(name).field(std::to_string(value));
}

void RunManifest::output(const std::filesystem::path& path) {
  outputs_.push_back(path.string());
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json seeds = nlohmann::json::object();
  for (const auto& [name, value] : seeds_) seeds[name] = value;
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
  const nlohmann::json j = {{"command", command_},
                            {"digest", digest_.hex()},
                            {"seeds", seeds},
                            {"version", LORAHOP_VERSION},
                            {"outputs", outputs_},
                            {"duration_s", seconds}};
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace lorahop::cli
