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


#include "lorahop/recommender.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lorahop/error.h"
#include "lorahop/synthetic_ratings.h"

namespace lorahop::rec {
namespace {

RatingsMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RatingsMatrix m(static_cast<int>(rows.size()),
                  static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

RatingsMatrix random_complete(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> r(1, 5);
  RatingsMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m.set(i, j, r(rng));
  }
  return m;
}

// Straight transcription of the imputation rule, written independently of
// the library: full sort, explicit sums.
int reference_fill(const RatingsMatrix& m, int i, int j, int k) {
  struct Cand {
    double sim;
    int row;
  };
  std::vector<Cand> cands;
  for (int r = 0; r < m.rows(); ++r) {
    if (r == i || !m.present(r, j)) continue;
    double dot = 0, xx = 0, yy = 0;
    int common = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (!m.present(i, c) || !m.present(r, c)) continue;
      ++common;
      dot += m.at(i, c) * m.at(r, c);
      xx += m.at(i, c) * m.at(i, c);
      yy += m.at(r, c) * m.at(r, c);
    }
    if (common == 0) continue;
    const double s = dot / (std::sqrt(xx) * std::sqrt(yy));
    if (s > 0) cands.push_back({s, r});
  }
  if (cands.empty()) {
    double sum = 0;
    int n = 0;
    for (int c = 0; c < m.cols(); ++c) {
      if (m.present(i, c)) sum += m.at(i, c), ++n;
    }
    return std::clamp(static_cast<int>(std::floor(sum / n + 0.5)), 1, 5);
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return a.sim != b.sim ? a.sim > b.sim : a.row < b.row;
  });
  double num = 0, den = 0;
  for (int q = 0; q < std::min<int>(k, cands.size()); ++q) {
    num += cands[q].sim * m.at(cands[q].row, j);
    den += cands[q].sim;
  }
  return std::clamp(static_cast<int>(std::floor(num / den + 0.5)), 1, 5);
}

TEST(Cosine, CommonSupportAndZeroFill) {
  const std::vector<Rating> x = {1, 2, kMissing};
  const std::vector<Rating> y = {2, 4, 5};
  EXPECT_DOUBLE_EQ(*cosine(x, y), 1.0);
  const double zero_fill = cosine(x, y, MissingMode::kAsZero).value();
  EXPECT_NEAR(zero_fill, 10.0 / (std::sqrt(5.0) * std::sqrt(45.0)), 1e-12);
  const std::vector<Rating> disjoint = {kMissing, kMissing, 3};
  EXPECT_FALSE(cosine(x, disjoint).has_value());
  const std::vector<Rating> shorter = {1, 2};
  EXPECT_THROW(cosine(x, shorter), InputError);
}

TEST(Cosine, HalfAngleExample) {
  const std::vector<Rating> x = {1, 1, 4};
  const std::vector<Rating> y = {1, 4, 1};
  EXPECT_DOUBLE_EQ(*cosine(x, y), 0.5);
}

TEST(Impute, PerfectNeighbourCopiesItsRating) {
  RatingsMatrix m = from_rows({{3, 2, 4}, {3, 2, 4}});
  m.set(0, 2, kMissing);
  EXPECT_EQ(impute(m).at(0, 2), 4);
}

TEST(Impute, WeightedAverageOfTwoNeighbours) {
  // Similarities 1.0 and 0.5 with ratings 5 and 2: (5 + 1) / 1.5 = 4.
  RatingsMatrix m = from_rows({{1, 1, 4, 1}, {1, 1, 4, 5}, {1, 4, 1, 2}});
  m.set(0, 3, kMissing);
  EXPECT_EQ(impute(m).at(0, 3), 4);
  ImputeOptions nearest;
  nearest.neighbors = 1;
  EXPECT_EQ(impute(m, nearest).at(0, 3), 5);
}

TEST(Impute, FallsBackToTheRowMean) {
  // Row 0 shares no rated column with anyone who rated column 2.
  RatingsMatrix m(2, 3);
  m.set(0, 0, 2);
  m.set(0, 1, 3);
  m.set(1, 2, 5);
  const RatingsMatrix out = impute(m);
  EXPECT_EQ(out.at(0, 2), 3);  // round(2.5) half-up
  EXPECT_EQ(out.at(1, 0), 5);
}

TEST(Impute, RejectsEmptyRows) {
  RatingsMatrix m(2, 2);
  m.set(0, 0, 1);
  EXPECT_THROW(impute(m), InputError);
}

TEST(Sparsify, ExactCountsAndSeeds) {
  const RatingsMatrix full = random_complete(10, 10, 1);
  EXPECT_EQ(sparsify(full, 0, 1), full);
  const RatingsMatrix half = sparsify(full, 50, 3);
  EXPECT_EQ(half.missing_count(), 50);
  EXPECT_EQ(half, sparsify(full, 50, 3));
  EXPECT_NE(half, sparsify(full, 50, 4));
  const RatingsMatrix most = sparsify(full, 90, 3);
  EXPECT_EQ(most.missing_count(), 90);
  for (int i = 0; i < 10; ++i) EXPECT_GE(most.present_in_row(i), 1);
}

TEST(Sparsify, RejectsImpossibleRequests) {
  const RatingsMatrix full = random_complete(4, 2, 1);
  EXPECT_THROW(sparsify(full, 70, 1), InputError);  // 4 of 8 must stay
  EXPECT_EQ(sparsify(full, 50, 1).missing_count(), 4);
  EXPECT_THROW(sparsify(full, 100, 1), InputError);
  EXPECT_THROW(sparsify(sparsify(full, 50, 1), 10, 1), InputError);
}

TEST(Evaluate, PerfectAndConstantPredictions) {
  const RatingsMatrix truth = from_rows({{1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}});
  RatingsMatrix sparse(2, 5);
  sparse.set(0, 0, 1);
  sparse.set(1, 0, 5);
  const Evaluation same = evaluate(truth, truth, sparse);
  EXPECT_EQ(same.compared, 8);
  for (const auto& acc : same.per_class) EXPECT_EQ(acc.value(), 1.0);

  const RatingsMatrix threes =
      from_rows({{3, 3, 3, 3, 3}, {3, 3, 3, 3, 3}});
  const Evaluation flat = evaluate(truth, threes, sparse);
  for (int c = 0; c < kRatingLevels; ++c) {
    if (!flat.per_class[c]) continue;
    EXPECT_EQ(*flat.per_class[c], c == 2 ? 1.0 : 0.0);
    long long row = 0;
    for (long long v : flat.confusion[c]) row += v;
    EXPECT_EQ(flat.confusion[c][2], row);
  }
  EXPECT_THROW(evaluate(truth, RatingsMatrix(2, 4), sparse), InputError);
}

TEST(Distribution, CountsPresentCells) {
  EXPECT_EQ(rating_distribution(RatingsMatrix(3, 3)),
            (std::array<long long, 5>{0, 0, 0, 0, 0}));
  EXPECT_EQ(rating_distribution(from_rows({{3, 3, 3}, {3, 3, 3}, {3, 3, 3}})),
            (std::array<long long, 5>{0, 0, 9, 0, 0}));
}

// Properties over random instances.

TEST(RecommenderProperties, CosineIsSymmetricAndSelfOne) {
  const RatingsMatrix m = sparsify(random_complete(30, 8, 5), 40, 5);
  for (int a = 0; a < m.rows(); ++a) {
    EXPECT_NEAR(*cosine(m.row(a), m.row(a)), 1.0, 1e-12);
    for (int b = 0; b < m.rows(); ++b) {
      EXPECT_EQ(cosine(m.row(a), m.row(b)), cosine(m.row(b), m.row(a)));
    }
  }
}

TEST(RecommenderProperties, ImputeMatchesTheReferenceRule) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const RatingsMatrix sparse =
        sparsify(random_complete(40, 12, seed), 20 + 10 * seed, seed);
    for (int k : {1, 3, 20}) {
      ImputeOptions o;
      o.neighbors = k;
      const RatingsMatrix out = impute(sparse, o);
      for (int i = 0; i < sparse.rows(); ++i) {
        for (int j = 0; j < sparse.cols(); ++j) {
          if (sparse.present(i, j)) {
            EXPECT_EQ(out.at(i, j), sparse.at(i, j));
          } else {
            EXPECT_EQ(out.at(i, j), reference_fill(sparse, i, j, k))
                << seed << " " << k << " " << i << " " << j;
          }
        }
      }
    }
  }
}

TEST(RecommenderProperties, ThreadCountDoesNotChangeTheResult) {
  const RatingsMatrix sparse = sparsify(random_complete(120, 15, 9), 50, 9);
  ImputeOptions one, many;
  many.threads = 4;
  EXPECT_EQ(impute(sparse, one), impute(sparse, many));
}

TEST(Study, LevelsPoolTheirSeeds) {
  SyntheticRatingsConfig g;
  g.soils = 80;
  const RatingsMatrix truth = generate_ratings(g);
  StudyConfig c;
  c.sparsities = {10, 50};
  c.seeds = 3;
  const StudyResult r = run_study(truth, c);
  ASSERT_EQ(r.runs.size(), 6u);
  ASSERT_EQ(r.levels.size(), 2u);
  long long pooled = 0;
  for (int s = 0; s < 3; ++s) pooled += r.runs[s].evaluation.compared;
  EXPECT_EQ(r.levels[0].pooled.compared, pooled);
  EXPECT_EQ(pooled, 3 * (80 * 20 / 10));
  c.jobs = 3;
  EXPECT_EQ(study_to_json(run_study(truth, c)), study_to_json(r));
}

}  // namespace
}  // namespace lorahop::rec
