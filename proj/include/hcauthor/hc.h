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

// Higher Criticism of a collection of p-values and HC thresholding.
//
// With p-values sorted ascending, p_(1) <= ... <= p_(N),
//
//   z_i = sqrt(N) (i/N - p_(i)) / sqrt(i/N (1 - i/N)),
//   HC  = max z_i  over  1 <= i <= max(1, floor(gamma0 N)).
//
// The maximizing index i* selects the prefix p_(1..i*) of features that
// drive the discrepancy.

#ifndef HCAUTHOR_HC_H_
#define HCAUTHOR_HC_H_

#include <cstddef>
#include <span>
#include <vector>

#include "hcauthor/binom.h"
#include "hcauthor/corpus.h"

namespace hcauthor {

inline constexpr double kDefaultGamma0 = 0.35;

struct HcOptions {
  double gamma0 = kDefaultGamma0;
  // Only indices with p_(i) >= 1/N take part in the maximum. If no index in
  // the range qualifies, the plain range is used.
  bool hc_plus = false;
};

struct SelectedFeature {
  FeatureToken feature;
  double p_value = 1.0;
  int sign = 0;
};

struct HcResult {
  double hc = 0.0;
  double gamma0 = kDefaultGamma0;
  std::size_t n = 0;       // number of p-values
  std::size_t i_star = 1;  // 1-based maximizing index
  std::vector<SelectedFeature> selected;  // ascending p-value; hct only
};

// Number of sorted indices searched: max(1, floor(gamma0 * n)).
std::size_t HcSearchRange(std::size_t n, double gamma0);

// Throws ArgumentError for an empty list, a p-value outside (0, 1] or
// gamma0 outside (0, 1).
HcResult HcStatistic(std::span<const double> p_values,
                     const HcOptions &options = {});

// Same as HcStatistic but reorders the caller's buffer (only the searched
// prefix ends up sorted). Used on hot paths to avoid a copy.
HcResult HcStatisticInPlace(std::span<double> p_values,
                            const HcOptions &options = {});

// HC over the records' p-values plus the selected set: the i* smallest
// p-values, widened to every record tied with p_(i*) as long as the search
// range allows. i_star reports the size of the widened set.
HcResult HctSelect(std::span<const BinomialTestRecord> records,
                   const HcOptions &options = {});

}  // namespace hcauthor

#endif  // HCAUTHOR_HC_H_
