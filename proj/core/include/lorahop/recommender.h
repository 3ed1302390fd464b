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

// Neighbourhood collaborative filtering over soil rows: cosine similarity,
// similarity-weighted imputation, and the sparsity study around it.

#ifndef LORAHOP_RECOMMENDER_H_
#define LORAHOP_RECOMMENDER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lorahop/ratings.h"

namespace lorahop::rec {

inline constexpr int kDefaultNeighbors = 20;

// kCommonSupport compares two rows on the columns both rated; kAsZero reads
// a missing entry as 0 and uses every column.
enum class MissingMode { kCommonSupport, kAsZero };

// Nullopt when there is no common support or a norm is zero.
std::optional<double> cosine(std::span<const Rating> x,
                             std::span<const Rating> y,
                             MissingMode mode = MissingMode::kCommonSupport);

// Removes exactly floor(rows * cols * pct / 100) uniformly chosen entries,
// never the last entry of a row. Throws InputError if `full` has missing
// entries, pct is outside [0, 99] or the count cannot be met.
RatingsMatrix sparsify(const RatingsMatrix& full, int pct, std::uint64_t seed);

struct ImputeOptions {
  int neighbors = kDefaultNeighbors;
  MissingMode mode = MissingMode::kCommonSupport;
  int threads = 1;  // the result does not depend on this
};

// Fills every missing entry from the `neighbors` most similar rows that rate
// the column (positive similarity only, ties to the lower row), rounding the
// weighted mean half-up and clamping to [1, 5]. Without such a row the
// entry takes the rounded row mean. Present entries are copied unchanged.
// Throws InputError if some row has no entries.
RatingsMatrix impute(const RatingsMatrix& sparse,
                     const ImputeOptions& options = {});

using Confusion = std::array<std::array<long long, kRatingLevels>,
                             kRatingLevels>;

struct Evaluation {
  Confusion confusion{};  // [true - 1][predicted - 1]
  // Diagonal over row sum; nullopt for a class with no compared cells.
  std::array<std::optional<double>, kRatingLevels> per_class{};
  double mean_accuracy = 0.0;  // over classes that occur
  long long compared = 0;
};

// Scores `imputed` against `truth` on the entries missing from `sparse`.
Evaluation evaluate(const RatingsMatrix& truth, const RatingsMatrix& imputed,
                    const RatingsMatrix& sparse);
// Pools confusion counts and recomputes the accuracies.
Evaluation merge(std::span<const Evaluation> parts);

std::array<long long, kRatingLevels> rating_distribution(
    const RatingsMatrix& m);

struct StudyConfig {
  std::vector<int> sparsities = {10, 30, 50, 70, 90};
  int seeds = 5;
  std::uint64_t base_seed = 1;
  ImputeOptions impute;
  int jobs = 1;  // parallel (sparsity, seed) runs
};

struct StudyRun {
  int sparsity = 0;
  int seed_index = 0;
  std::uint64_t seed = 0;
  Evaluation evaluation;
};

struct StudyLevel {
  int sparsity = 0;
  Evaluation pooled;        // all seeds' confusion counts summed
  double mean_accuracy = 0.0;  // average of the per-seed mean accuracies
};

struct StudyResult {
  std::vector<StudyRun> runs;  // sparsity-major, then seed
  std::vector<StudyLevel> levels;
  std::array<long long, kRatingLevels> distribution{};
};

StudyResult run_study(const RatingsMatrix& truth, const StudyConfig& config);
std::string study_to_json(const StudyResult& result);

}  // namespace lorahop::rec

#endif  // LORAHOP_RECOMMENDER_H_
