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

#include "lorahop/compare.h"

#include <cmath>
#include <map>
#include <sstream>

#include "lorahop/error.h"
#include "lorahop/io.h"

namespace lorahop::sim {
namespace {

struct Aggregate {
  double rssi_sum = 0.0;
  double snr_sum = 0.0;
  int rows = 0;
  long long sent = 0;
  long long delivered = 0;
};

std::map<int, Aggregate> aggregate(const SimReport& r, Metric metric) {
  std::map<int, Aggregate> out;
  for (const ReportRow& row : r.rows) {
    Aggregate& a = out[row.size];
    a.rssi_sum +=
        metric == Metric::kObserved ? row.observed_rssi : row.mean_rssi;
    a.snr_sum += metric == Metric::kObserved ? row.observed_snr : row.mean_snr;
    ++a.rows;
    a.sent += row.sent;
    a.delivered += row.delivered;
  }
  return out;
}

double relative(double gain, double base, bool equal) {
  if (base == 0.0) return equal ? 0.0 : std::nan("");
  return gain / std::abs(base) * 100.0;
}

}  // namespace

std::string_view metric_name(Metric m) {
  return m == Metric::kDelivered ? "delivered" : "observed";
}

Metric parse_metric(std::string_view name) {
  if (name == "observed") return Metric::kObserved;
  if (name == "delivered") return Metric::kDelivered;
  throw InputError("metric must be observed or delivered");
}

std::vector<SizeComparison> compare_strategies(const SimReport& a,
                                               const SimReport& b,
                                               Metric metric) {
  const auto aa = aggregate(a, metric);
  const auto bb = aggregate(b, metric);
  bool same = aa.size() == bb.size();
  for (auto ia = aa.begin(), ib = bb.begin(); same && ia != aa.end();
       ++ia, ++ib) {
    same = ia->first == ib->first;
  }
  require(same && !aa.empty(), "reports cover different payload sizes");

  std::vector<SizeComparison> out;
  for (const auto& [size, x] : aa) {
    const Aggregate& y = bb.at(size);
    SizeComparison c;
    c.size = size;
    c.rssi_a = x.rssi_sum / x.rows;
    c.rssi_b = y.rssi_sum / y.rows;
    c.snr_a = x.snr_sum / x.rows;
    c.snr_b = y.snr_sum / y.rows;
    c.pdr_a = static_cast<double>(x.delivered) / static_cast<double>(x.sent);
    c.pdr_b = static_cast<double>(y.delivered) / static_cast<double>(y.sent);
    c.rssi_improvement_pct =
        relative(std::abs(c.rssi_b) - std::abs(c.rssi_a), c.rssi_b,
                 c.rssi_a == c.rssi_b);
    c.snr_improvement_pct =
        relative(c.snr_a - c.snr_b, c.snr_b, c.snr_a == c.snr_b);
    c.pdr_delta = c.pdr_a - c.pdr_b;
    out.push_back(c);
  }
  return out;
}

std::string comparison_to_csv(const std::vector<SizeComparison>& table) {
  std::ostringstream out;
  out << "size,rssi_a,rssi_b,rssi_improvement_pct,snr_a,snr_b,"
         "snr_improvement_pct,pdr_a,pdr_b,pdr_delta\n";
  for (const SizeComparison& c : table) {
    out << c.size << ',' << format_number(c.rssi_a) << ','
        << format_number(c.rssi_b) << ','
        << format_number(c.rssi_improvement_pct) << ','
        << format_number(c.snr_a) << ',' << format_number(c.snr_b) << ','
        << format_number(c.snr_improvement_pct) << ','
        << format_number(c.pdr_a) << ',' << format_number(c.pdr_b) << ','
        << format_number(c.pdr_delta) << '\n';
  }
  return out.str();
}

}  // namespace lorahop::sim
