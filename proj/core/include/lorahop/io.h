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

#ifndef LORAHOP_IO_H_
#define LORAHOP_IO_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorahop {

// File helpers that throw InputError naming the path on failure.
std::string read_text_file(const std::filesystem::path& path);
std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
void write_binary_file(const std::filesystem::path& path,
                       std::span<const std::uint8_t> bytes);

// Shortest text that parses back to exactly `value`; "nan" for NaN.
std::string format_number(double value);

}  // namespace lorahop

#endif  // LORAHOP_IO_H_
