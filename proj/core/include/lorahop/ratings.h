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

#ifndef LORAHOP_RATINGS_H_
#define LORAHOP_RATINGS_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorahop::rec {

using Rating = std::int8_t;
inline constexpr Rating kMissing = 0;
inline constexpr int kMinRating = 1;
inline constexpr int kMaxRating = 5;
inline constexpr int kRatingLevels = kMaxRating - kMinRating + 1;

/// Soils x plants grid of ratings in [1, 5], kMissing for an absent entry.
///
/// CSV form: one row per line, comma-separated integers, an empty field for a
/// missing entry, no header.
class RatingsMatrix {
 public:
  RatingsMatrix() = default;
  RatingsMatrix(int rows, int cols);

  static RatingsMatrix parse_csv(std::string_view text);
  static RatingsMatrix load(const std::filesystem::path& path);
  std::string to_csv() const;

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rating at(int i, int j) const { return values_[index(i, j)]; }
  bool present(int i, int j) const { return at(i, j) != kMissing; }
  // Throws InputError unless value is kMissing or in [1, 5].
  void set(int i, int j, int value);
  std::span<const Rating> row(int i) const {
    return {values_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  long long missing_count() const;
  long long present_in_row(int i) const;
  double sparsity() const;

  friend bool operator==(const RatingsMatrix&, const RatingsMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rating> values_;
};

}  // namespace lorahop::rec

#endif  // LORAHOP_RATINGS_H_
