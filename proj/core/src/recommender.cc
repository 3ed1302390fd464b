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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <json.hpp>
#include <numeric>
#include <random>
#include <thread>

#include "lorahop/error.h"
#include "lorahop/random.h"

namespace lorahop::rec {
namespace {

int round_half_up(double v) { return static_cast<int>(std::floor(v + 0.5)); }

int clamp_rating(int v) { return std::clamp(v, kMinRating, kMaxRating); }

// Runs body(k) for k in [0, count) on up to `threads` workers. Each k must
// write only to its own outputs.
template <typename Body>
void parallel_for(int count, int threads, Body body) {
  threads = std::clamp(threads, 1, std::max(count, 1));
  if (threads == 1) {
    for (int k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (int k = next++; k < count; k = next++) {
        try {
          body(k);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

Evaluation finish(const Confusion& confusion) {
  Evaluation e;
  e.confusion = confusion;
  double sum = 0.0;
  int classes = 0;
  for (int c = 0; c < kRatingLevels; ++c) {
    const long long total =
        std::accumulate(confusion[c].begin(), confusion[c].end(), 0LL);
    e.compared += total;
    if (total == 0) continue;
    const double acc =
        static_cast<double>(confusion[c][c]) / static_cast<double>(total);
    e.per_class[c] = acc;
    sum += acc;
    ++classes;
  }
  e.mean_accuracy = classes ? sum / classes : 0.0;
  return e;
}

}  // namespace

std::optional<double> cosine(std::span<const Rating> x,
                             std::span<const Rating> y, MissingMode mode) {
  require(x.size() == y.size(), "cosine needs vectors of equal length");
  double dot = 0.0, xx = 0.0, yy = 0.0;
  bool common = false;
  for (std::size_t k = 0; k < x.size(); ++k) {
    const bool both = x[k] != kMissing && y[k] != kMissing;
    if (mode == MissingMode::kCommonSupport && !both) continue;
    common |= both;
    dot += static_cast<double>(x[k]) * y[k];
    xx += static_cast<double>(x[k]) * x[k];
    yy += static_cast<double>(y[k]) * y[k];
  }
  if (!common || xx == 0.0 || yy == 0.0) return std::nullopt;
  return dot / (std::sqrt(xx) * std::sqrt(yy));
}

RatingsMatrix sparsify(const RatingsMatrix& full, int pct,
                       std::uint64_t seed) {
  require(pct >= 0 && pct <= 99, "sparsity must be in [0, 99] percent");
  require(full.missing_count() == 0, "sparsify needs a complete matrix");
  const long long cells = static_cast<long long>(full.rows()) * full.cols();
  const long long target = cells * pct / 100;
  if (target > cells - full.rows()) {
    throw InputError("cannot remove " + std::to_string(target) +
                     " entries and keep one per row");
  }
  std::vector<long long> order(cells);
  std::iota(order.begin(), order.end(), 0LL);
  std::mt19937_64 rng(mix64(seed));
  std::shuffle(order.begin(), order.end(), rng);

  RatingsMatrix out = full;
  std::vector<int> left(full.rows(), full.cols());
  long long removed = 0;
  for (long long cell : order) {
    if (removed == target) break;
    const int i = static_cast<int>(cell / full.cols());
    const int j = static_cast<int>(cell % full.cols());
    if (left[i] == 1) continue;
    out.set(i, j, kMissing);
    --left[i];
    ++removed;
  }
  return out;
}

RatingsMatrix impute(const RatingsMatrix& sparse,
                     const ImputeOptions& options) {
  require(options.neighbors >= 1, "neighbours must be >= 1");
  const int m = sparse.rows();
  const int n = sparse.cols();
  for (int i = 0; i < m; ++i) {
    require(sparse.present_in_row(i) > 0,
            "row " + std::to_string(i) + " has no ratings");
  }

  // sim[i * m + r]; NaN marks an undefined similarity.
  std::vector<double> sim(static_cast<std::size_t>(m) * m);
  parallel_for(m, options.threads, [&](int i) {
    for (int r = 0; r < m; ++r) {
      const auto c = cosine(sparse.row(i), sparse.row(r), options.mode);
      sim[static_cast<std::size_t>(i) * m + r] = c ? *c : std::nan("");
    }
  });

  RatingsMatrix out = sparse;
  parallel_for(m, options.threads, [&](int i) {
    std::vector<int> candidates;
    double row_sum = 0.0;
    for (int j = 0; j < n; ++j) row_sum += sparse.at(i, j);
    const int row_mean = clamp_rating(round_half_up(
        row_sum / static_cast<double>(sparse.present_in_row(i))));
    const double* s = &sim[static_cast<std::size_t>(i) * m];
    for (int j = 0; j < n; ++j) {
      if (sparse.present(i, j)) continue;
      candidates.clear();
      for (int r = 0; r < m; ++r) {
        if (r != i && sparse.present(r, j) && s[r] > 0.0) {
          candidates.push_back(r);
        }
      }
      if (candidates.empty()) {
        out.set(i, j, row_mean);
        continue;
      }
      const std::size_t k =
          std::min<std::size_t>(options.neighbors, candidates.size());
      std::partial_sort(candidates.begin(), candidates.begin() + k,
                        candidates.end(), [&](int a, int b) {
                          return s[a] != s[b] ? s[a] > s[b] : a < b;
                        });
      double num = 0.0, den = 0.0;
      for (std::size_t q = 0; q < k; ++q) {
        num += s[candidates[q]] * sparse.at(candidates[q], j);
        den += s[candidates[q]];
      }
      out.set(i, j, clamp_rating(round_half_up(num / den)));
    }
  });
  return out;
}

Evaluation evaluate(const RatingsMatrix& truth, const RatingsMatrix& imputed,
                    const RatingsMatrix& sparse) {
  require(truth.rows() == imputed.rows() && truth.cols() == imputed.cols() &&
              truth.rows() == sparse.rows() && truth.cols() == sparse.cols(),
          "evaluate needs matrices of one shape");
  Confusion confusion{};
  for (int i = 0; i < truth.rows(); ++i) {
    for (int j = 0; j < truth.cols(); ++j) {
      if (sparse.present(i, j)) continue;
      require(truth.present(i, j) && imputed.present(i, j),
              "evaluated cells must be present in truth and imputation");
      ++confusion[truth.at(i, j) - 1][imputed.at(i, j) - 1];
    }
  }
  return finish(confusion);
}

Evaluation merge(std::span<const Evaluation> parts) {
  Confusion total{};
  for (const Evaluation& e : parts) {
    for (int a = 0; a < kRatingLevels; ++a) {
      for (int b = 0; b < kRatingLevels; ++b) {
        total[a][b] += e.confusion[a][b];
      }
    }
  }
  return finish(total);
}

std::array<long long, kRatingLevels> rating_distribution(
    const RatingsMatrix& m) {
  std::array<long long, kRatingLevels> counts{};
  for (int i = 0; i < m.rows(); ++i) {
    for (Rating v : m.row(i)) {
      if (v != kMissing) ++counts[v - 1];
    }
  }
  return counts;
}

StudyResult run_study(const RatingsMatrix& truth, const StudyConfig& config) {
  require(config.seeds >= 1, "study needs at least one seed");
  require(!config.sparsities.empty(), "study needs sparsity levels");
  StudyResult result;
  result.distribution = rating_distribution(truth);
  for (int pct : config.sparsities) {
    for (int s = 0; s < config.seeds; ++s) {
      StudyRun run;
      run.sparsity = pct;
      run.seed_index = s;
      run.seed = mix64(config.base_seed ^
                       mix64((static_cast<std::uint64_t>(pct) << 32) |
                             static_cast<std::uint64_t>(s)));
      result.runs.push_back(run);
    }
  }
  ImputeOptions inner = config.impute;
  inner.threads = 1;
  parallel_for(static_cast<int>(result.runs.size()), config.jobs, [&](int k) {
    StudyRun& run = result.runs[k];
    const RatingsMatrix sparse = sparsify(truth, run.sparsity, run.seed);
    run.evaluation = evaluate(truth, impute(sparse, inner), sparse);
  });
  for (std::size_t at = 0; at < result.runs.size();
       at += static_cast<std::size_t>(config.seeds)) {
    StudyLevel level;
    level.sparsity = result.runs[at].sparsity;
    std::vector<Evaluation> parts;
    double sum = 0.0;
    for (int s = 0; s < config.seeds; ++s) {
      parts.push_back(result.runs[at + s].evaluation);
      sum += result.runs[at + s].evaluation.mean_accuracy;
    }
    level.pooled = merge(parts);
    level.mean_accuracy = sum / config.seeds;
    result.levels.push_back(level);
  }
  return result;
}

std::string study_to_json(const StudyResult& result) {
  using nlohmann::json;
  auto eval_json = [](const Evaluation& e) {
    json per_class = json::array();
    for (const auto& acc : e.per_class) {
      per_class.push_back(acc ? json(*acc) : json(nullptr));
    }
    return json{{"confusion", e.confusion},
                {"per_class_accuracy", per_class},
                {"mean_accuracy", e.mean_accuracy},
                {"compared", e.compared}};
  };
  json runs = json::array();
  for (const StudyRun& r : result.runs) {
    runs.push_back({{"sparsity", r.sparsity},
                    {"seed_index", r.seed_index},
                    {"seed", r.seed},
                    {"evaluation", eval_json(r.evaluation)}});
  }
  json levels = json::array();
  for (const StudyLevel& l : result.levels) {
    levels.push_back({{"sparsity", l.sparsity},
                      {"mean_accuracy", l.mean_accuracy},
                      {"pooled", eval_json(l.pooled)}});
  }
  const json j = {{"distribution", result.distribution},
                  {"levels", levels},
                  {"runs", runs}};
  return j.dump(2);
}

}  // namespace lorahop::rec
