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

#ifndef LORAHOP_TRACE_H_
#define LORAHOP_TRACE_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace lorahop::sim {

struct TraceStats {
  double mean_rssi = 0.0;  // dBm
  double mean_snr = 0.0;   // dB
  double pdr = 0.0;        // delivered fraction
  int sample_count = 0;    // packets received in the measurement
};

/// Measured link quality per (source, carrier, payload size). Frequencies are
/// keyed at 1 kHz resolution so 868, 868.0 and 868.000 name the same carrier.
///
/// CSV form, one row per cell, all cells of the source x freq x size grid
/// required:
///
///   source,freq_mhz,size_bytes,rssi,snr,count,pdr
///   A,869.0,30,-71.5,9.3,50,1.0
class ChannelTrace {
 public:
  static ChannelTrace parse_csv(std::string_view text);
  static ChannelTrace load(const std::filesystem::path& path);

  bool contains(std::string_view source, double freq_mhz, int size) const;
  // Throws InputError for an unknown cell.
  const TraceStats& at(std::string_view source, double freq_mhz,
                       int size) const;

  const std::vector<std::string>& sources() const { return sources_; }
  const std::vector<double>& frequencies() const { return frequencies_; }
  const std::vector<int>& sizes() const { return sizes_; }

  std::string to_csv() const;

 private:
  using Key = std::tuple<std::string, long long, int>;
  static long long freq_key(double mhz);

  std::map<Key, TraceStats, std::less<>> cells_;
  std::vector<std::string> sources_;
  std::vector<double> frequencies_;  // ascending
  std::vector<int> sizes_;           // ascending
};

}  // namespace lorahop::sim

#endif  // LORAHOP_TRACE_H_
