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

// End-node telemetry store: the last `ts` gateway control messages, each a
// per-frequency user count plus the RSSI/SNR of the previous transmission.

#ifndef LORAHOP_TELEMETRY_H_
#define LORAHOP_TELEMETRY_H_

#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lorahop::telemetry {

inline constexpr int kDefaultWindowSlots = 8;

// Cold-start padding: the worst channel a node could observe.
inline constexpr double kPaddingRssi = -120.0;
inline constexpr double kPaddingSnr = 0.0;

// Feature normalisation "v1": rssi / -120, snr / 10, counts raw.
inline constexpr double kRssiScale = -120.0;
inline constexpr double kSnrScale = 10.0;
inline constexpr std::string_view kNormalization = "v1";

constexpr int feature_length(int window_slots, int frequencies) {
  return window_slots * (frequencies + 2);
}

class TelemetryWindow {
 public:
  TelemetryWindow(int window_slots, int frequencies);

  // Appends one control message and evicts the oldest past capacity.
  // Throws InputError when availability.size() != frequencies().
  void record(std::span<const int> availability, double rssi, double snr);

  // Flattened features, oldest first: availability (slot-major), then
  // normalised rssi, then normalised snr. Missing history is left-padded.
  std::vector<double> snapshot() const;

  int window_slots() const { return window_slots_; }
  int frequencies() const { return frequencies_; }
  int size() const { return static_cast<int>(rssi_.size()); }
  bool empty() const { return rssi_.empty(); }
  bool full() const { return size() == window_slots_; }

  // Most recent entries. Precondition: !empty().
  const std::vector<int>& latest_availability() const {
    return availability_.back();
  }
  double latest_rssi() const { return rssi_.back(); }
  double latest_snr() const { return snr_.back(); }

  const std::deque<std::vector<int>>& availability() const {
    return availability_;
  }
  const std::deque<double>& rssi() const { return rssi_; }
  const std::deque<double>& snr() const { return snr_; }

 private:
  int window_slots_;
  int frequencies_;
  std::deque<std::vector<int>> availability_;
  std::deque<double> rssi_;
  std::deque<double> snr_;
};

struct DatasetRow {
  std::vector<double> features;
  int label = 0;
  friend bool operator==(const DatasetRow&, const DatasetRow&) = default;
};

/// Labelled feature rows plus the layout they were produced with.
///
/// File form: a JSON array whose first element is the metadata header and
/// whose remaining elements are rows:
///
///   [{"ts": 8, "F": 3, "normalization": "v1"},
///    {"features": [...], "label": 1}, ...]
struct Dataset {
  int window_slots = kDefaultWindowSlots;
  int frequencies = 0;
  std::string normalization = std::string(kNormalization);
  std::vector<DatasetRow> rows;

  int feature_length() const {
    return telemetry::feature_length(window_slots, frequencies);
  }
  friend bool operator==(const Dataset&, const Dataset&) = default;
};

std::string dataset_to_json(const Dataset& dataset);
// Throws InputError for malformed files, wrong feature lengths or labels.
Dataset dataset_from_json(std::string_view text);

}  // namespace lorahop::telemetry

#endif  // LORAHOP_TELEMETRY_H_
