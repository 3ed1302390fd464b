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

#include "lorahop/telemetry.h"

#include <json.hpp>

#include "lorahop/error.h"

namespace lorahop::telemetry {

TelemetryWindow::TelemetryWindow(int window_slots, int frequencies)
    : window_slots_(window_slots), frequencies_(frequencies) {
  require(window_slots >= 1, "telemetry window needs at least one slot");
  require(frequencies >= 1, "telemetry window needs at least one frequency");
}

void TelemetryWindow::record(std::span<const int> availability, double rssi,
                             double snr) {
  if (static_cast<int>(availability.size()) != frequencies_) {
    throw InputError("telemetry: availability vector has " +
                     std::to_string(availability.size()) +
                     " entries, expected " + std::to_string(frequencies_));
  }
  availability_.emplace_back(availability.begin(), availability.end());
  rssi_.push_back(rssi);
  snr_.push_back(snr);
  if (size() > window_slots_) {
    availability_.pop_front();
    rssi_.pop_front();
    snr_.pop_front();
  }
}

std::vector<double> TelemetryWindow::snapshot() const {
  const int pad = window_slots_ - size();
  std::vector<double> out;
  out.reserve(feature_length(window_slots_, frequencies_));
  out.insert(out.end(), static_cast<std::size_t>(pad) * frequencies_, 0.0);
  for (const auto& counts : availability_) {
    for (int c : counts) out.push_back(static_cast<double>(c));
  }
  out.insert(out.end(), pad, kPaddingRssi / kRssiScale);
  for (double r : rssi_) out.push_back(r / kRssiScale);
  out.insert(out.end(), pad, kPaddingSnr / kSnrScale);
  for (double s : snr_) out.push_back(s / kSnrScale);
  return out;
}

std::string dataset_to_json(const Dataset& dataset) {
  using nlohmann::json;
  json out = json::array();
  out.push_back({{"ts", dataset.window_slots},
                 {"F", dataset.frequencies},
                 {"normalization", dataset.normalization}});
  for (const auto& row : dataset.rows) {
    out.push_back({{"features", row.features}, {"label", row.label}});
  }
  return out.dump();
}

Dataset dataset_from_json(std::string_view text) {
  using nlohmann::json;
  Dataset dataset;
  try {
    const json j = json::parse(text);
    if (!j.is_array() || j.empty()) {
      throw InputError("dataset: expected a non-empty JSON array");
    }
    const json& header = j.front();
    dataset.window_slots = header.at("ts").get<int>();
    dataset.frequencies = header.at("F").get<int>();
    dataset.normalization = header.at("normalization").get<std::string>();
    require(dataset.window_slots >= 1 && dataset.frequencies >= 1,
            "dataset: ts and F must be positive");
    const auto width = static_cast<std::size_t>(dataset.feature_length());
    dataset.rows.reserve(j.size() - 1);
    for (std::size_t k = 1; k < j.size(); ++k) {
      DatasetRow row;
      row.features = j[k].at("features").get<std::vector<double>>();
      row.label = j[k].at("label").get<int>();
      if (row.features.size() != width) {
        throw InputError("dataset: row " + std::to_string(k - 1) + " has " +
                         std::to_string(row.features.size()) +
                         " features, expected " + std::to_string(width));
      }
      if (row.label < 0 || row.label >= dataset.frequencies) {
        throw InputError("dataset: row " + std::to_string(k - 1) +
                         " label out of range");
      }
      dataset.rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("dataset json: ") + e.what());
  }
  return dataset;
}

}  // namespace lorahop::telemetry
