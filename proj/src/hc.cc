// Copyright 2026 The hcauthor Authors.
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

#include "hcauthor/hc.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hcauthor/errors.h"

namespace hcauthor {

namespace {

constexpr double kDenominatorFloor = 1e-12;

void CheckOptions(const HcOptions &options) {
  if (!(options.gamma0 > 0.0 && options.gamma0 < 1.0)) {
    throw ArgumentError("gamma0 must lie in (0, 1), got " +
                        std::to_string(options.gamma0));
  }
}

void CheckPValues(std::span<const double> p_values) {
  if (p_values.empty()) throw ArgumentError("HC of an empty p-value list");
  for (double p : p_values) {
    if (!(p > 0.0 && p <= 1.0)) {
      throw ArgumentError("p-value " + std::to_string(p) + " outside (0, 1]");
    }
  }
}

// Scans a sorted prefix of length `range` out of n p-values.
HcResult Scan(std::span<const double> sorted_prefix, std::size_t n,
              const HcOptions &options) {
  const double dn = static_cast<double>(n);
  const double root_n = std::sqrt(dn);
  const double min_p = 1.0 / dn;

  HcResult result;
  result.gamma0 = options.gamma0;
  result.n = n;
  for (int pass = 0; pass < 2; ++pass) {
    const bool restrict = options.hc_plus && pass == 0;
    bool found = false;
    double best = -std::numeric_limits<double>::infinity();
    std::size_t best_i = 1;
    for (std::size_t i = 1; i <= sorted_prefix.size(); ++i) {
      const double p = sorted_prefix[i - 1];
      if (restrict && p < min_p) continue;
      const double u = static_cast<double>(i) / dn;
      const double denom = std::max(std::sqrt(u * (1.0 - u)), kDenominatorFloor);
      const double z = root_n * (u - p) / denom;
      if (!found || z > best) {
        best = z;
        best_i = i;
        found = true;
      }
    }
    if (found) {
      result.hc = best;
      result.i_star = best_i;
      return result;
    }
  }
  return result;  // unreachable: the plain pass always finds i = 1
}

}  // namespace

std::size_t HcSearchRange(std::size_t n, double gamma0) {
  // The slack absorbs representation error in products like 0.35 * 100.
  const auto range = static_cast<std::size_t>(
      std::floor(gamma0 * static_cast<double>(n) + 1e-9));
  return std::clamp<std::size_t>(range, 1, std::max<std::size_t>(n, 1));
}

HcResult HcStatisticInPlace(std::span<double> p_values,
                            const HcOptions &options) {
  CheckOptions(options);
  CheckPValues(p_values);
  const std::size_t n = p_values.size();
  const std::size_t range = HcSearchRange(n, options.gamma0);
  if (range < n) {
    std::nth_element(p_values.begin(), p_values.begin() + range,
                     p_values.end());
  }
  std::sort(p_values.begin(), p_values.begin() + range);
  return Scan(p_values.first(range), n, options);
}

HcResult HcStatistic(std::span<const double> p_values,
                     const HcOptions &options) {
  std::vector<double> copy(p_values.begin(), p_values.end());
  return HcStatisticInPlace(copy, options);
}

HcResult HctSelect(std::span<const BinomialTestRecord> records,
                   const HcOptions &options) {
  CheckOptions(options);
  if (records.empty()) throw ArgumentError("HC thresholding of no records");

  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), 0);
  // Stable on feature order for equal p-values.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return records[a].p_value < records[b].p_value;
                   });
  std::vector<double> sorted(records.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    sorted[i] = records[order[i]].p_value;
  }
  CheckPValues(sorted);

  const std::size_t n = records.size();
  const std::size_t range = HcSearchRange(n, options.gamma0);
  HcResult result = Scan(std::span<const double>(sorted).first(range), n, options);

  std::size_t take = result.i_star;
  while (take < range && sorted[take] == sorted[result.i_star - 1]) ++take;
  result.i_star = take;
  result.selected.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const BinomialTestRecord &r = records[order[i]];
    result.selected.push_back({r.feature, r.p_value, r.sign});
  }
  return result;
}

}  // namespace hcauthor
