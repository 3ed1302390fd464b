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

#include "lorahop/ratings.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop::rec {

RatingsMatrix::RatingsMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  require(rows >= 0 && cols >= 0, "matrix dimensions must be >= 0");
  values_.assign(static_cast<std::size_t>(rows) * cols, kMissing);
}

void RatingsMatrix::set(int i, int j, int value) {
  require(i >= 0 && i < rows_ && j >= 0 && j < cols_,
          "rating index out of range");
  require(value == kMissing || (value >= kMinRating && value <= kMaxRating),
          "rating " + std::to_string(value) + " outside [1, 5]");
  values_[index(i, j)] = static_cast<Rating>(value);
}

long long RatingsMatrix::missing_count() const {
  return std::count(values_.begin(), values_.end(), kMissing);
}

long long RatingsMatrix::present_in_row(int i) const {
  const auto r = row(i);
  return static_cast<long long>(r.size()) -
         std::count(r.begin(), r.end(), kMissing);
}

double RatingsMatrix::sparsity() const {
  if (values_.empty()) return 0.0;
  return static_cast<double>(missing_count()) /
         static_cast<double>(values_.size());
}

RatingsMatrix RatingsMatrix::parse_csv(std::string_view text) {
  std::vector<std::vector<int>> grid;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // A blank line is a one-column row with a missing entry, except at EOF.
    if (line.empty() && start >= text.size()) continue;
    std::vector<int> values;
    std::size_t at = 0;
    while (true) {
      std::size_t comma = line.find(',', at);
      std::string_view field = line.substr(
          at, comma == std::string_view::npos ? std::string_view::npos
                                              : comma - at);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      int v = kMissing;
      if (!field.empty()) {
        const auto res =
            std::from_chars(field.data(), field.data() + field.size(), v);
        if (res.ec != std::errc() || res.ptr != field.data() + field.size() ||
            v < kMinRating || v > kMaxRating) {
          throw InputError("ratings line " + std::to_string(line_no) +
                           ": '" + std::string(field) +
                           "' is not a rating in [1, 5]");
        }
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      at = comma + 1;
    }
    if (!grid.empty() && values.size() != grid.front().size()) {
      throw InputError("ratings line " + std::to_string(line_no) + " has " +
                       std::to_string(values.size()) + " fields, expected " +
                       std::to_string(grid.front().size()));
    }
    grid.push_back(std::move(values));
  }
  require(!grid.empty(), "ratings file is empty");
  RatingsMatrix m(static_cast<int>(grid.size()),
                  static_cast<int>(grid.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, grid[i][j]);
  }
  return m;
}

RatingsMatrix RatingsMatrix::load(const std::filesystem::path& path) {
  return parse_csv(read_text_file(path));
}

std::string RatingsMatrix::to_csv() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ',';
      if (present(i, j)) out << static_cast<int>(at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace lorahop::rec
