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

#include "lorahop/trace.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop::sim {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, int line_no, const char* what) {
  T value{};
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end || field.empty()) {
    std::ostringstream msg;
    msg << "trace line " << line_no << ": bad " << what << " '" << field
        << "'";
    throw InputError(msg.str());
  }
  return value;
}

}  // namespace

long long ChannelTrace::freq_key(double mhz) {
  return std::llround(mhz * 1000.0);
}

ChannelTrace ChannelTrace::parse_csv(std::string_view text) {
  ChannelTrace trace;
  std::set<std::string> sources;
  std::set<long long> freqs;
  std::set<int> sizes;
  int line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line);
    if (!header_seen) {
      const std::vector<std::string_view> expected = {
          "source", "freq_mhz", "size_bytes", "rssi", "snr", "count", "pdr"};
      if (fields != expected) {
        throw InputError(
            "trace: header must be source,freq_mhz,size_bytes,rssi,snr,count,"
            "pdr");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 7) {
      std::ostringstream msg;
      msg << "trace line " << line_no << ": expected 7 fields, got "
          << fields.size();
      throw InputError(msg.str());
    }
    if (fields[0].empty()) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": empty source");
    }
    const std::string source(fields[0]);
    const double freq = parse_number<double>(fields[1], line_no, "freq_mhz");
    const int size = parse_number<int>(fields[2], line_no, "size_bytes");
    TraceStats stats;
    stats.mean_rssi = parse_number<double>(fields[3], line_no, "rssi");
    stats.mean_snr = parse_number<double>(fields[4], line_no, "snr");
    stats.sample_count = parse_number<int>(fields[5], line_no, "count");
    stats.pdr = parse_number<double>(fields[6], line_no, "pdr");
    if (!(stats.pdr >= 0.0 && stats.pdr <= 1.0)) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": pdr outside [0, 1]");
    }
    if (stats.mean_rssi > 0.0) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": rssi above 0 dBm");
    }
    if (size <= 0 || stats.sample_count < 0) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": size and count must be nonnegative");
    }
    Key key{source, freq_key(freq), size};
    if (!trace.cells_.emplace(key, stats).second) {
      throw InputError("trace line " + std::to_string(line_no) +
                       ": duplicate (source, freq, size)");
    }
    sources.insert(source);
    freqs.insert(freq_key(freq));
    sizes.insert(size);
  }
  if (!header_seen) throw InputError("trace: empty input");
  if (trace.cells_.size() != sources.size() * freqs.size() * sizes.size()) {
    for (const auto& s : sources) {
      for (long long f : freqs) {
        for (int z : sizes) {
          if (!trace.cells_.count(Key{s, f, z})) {
            std::ostringstream msg;
            msg << "trace: missing cell (" << s << ", " << f / 1000.0
                << " MHz, " << z << " bytes)";
            throw InputError(msg.str());
          }
        }
      }
    }
  }
  trace.sources_.assign(sources.begin(), sources.end());
  for (long long f : freqs) trace.frequencies_.push_back(f / 1000.0);
  trace.sizes_.assign(sizes.begin(), sizes.end());
  return trace;
}

ChannelTrace ChannelTrace::load(const std::filesystem::path& path) {
  return parse_csv(read_text_file(path));
}

bool ChannelTrace::contains(std::string_view source, double freq_mhz,
                            int size) const {
  return cells_.count(Key{std::string(source), freq_key(freq_mhz), size}) > 0;
}

const TraceStats& ChannelTrace::at(std::string_view source, double freq_mhz,
                                   int size) const {
  const auto it =
      cells_.find(Key{std::string(source), freq_key(freq_mhz), size});
  if (it == cells_.end()) {
    std::ostringstream msg;
    msg << "trace has no cell (" << source << ", " << freq_mhz << " MHz, "
        << size << " bytes)";
    throw InputError(msg.str());
  }
  return it->second;
}

std::string ChannelTrace::to_csv() const {
  std::ostringstream out;
  out << "source,freq_mhz,size_bytes,rssi,snr,count,pdr\n";
  for (const auto& [key, stats] : cells_) {
    out << std::get<0>(key) << ',' << std::get<1>(key) / 1000.0 << ','
        << std::get<2>(key) << ',' << stats.mean_rssi << ',' << stats.mean_snr
        << ',' << stats.sample_count << ',' << stats.pdr << '\n';
  }
  return out.str();
}

}  // namespace lorahop::sim
