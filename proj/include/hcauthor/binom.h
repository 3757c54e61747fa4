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

// Per-feature exact binomial allocation test between two texts.
//
// For a feature w with counts c1 in text 1 and c2 in text 2, the null
// model says each of the n_w = c1 + c2 occurrences falls in text 1
// independently with probability
//
//   q_w = (tokens of text 1 other than w) / (tokens of both other than w).
//
// The p-value is P(|K - n_w q_w| >= |c1 - n_w q_w|) for K ~ Bin(n_w, q_w),
// summed exactly in log space.

#ifndef HCAUTHOR_BINOM_H_
#define HCAUTHOR_BINOM_H_

#include <cstdint>
#include <vector>

#include "hcauthor/corpus.h"

namespace hcauthor {

// Smallest p-value ever returned. Keeps downstream z-scores finite when a
// degenerate allocation (q_w of 0 or 1) makes the observed count impossible.
inline constexpr double kPValueFloor = 1e-300;

struct BinomialTestRecord {
  FeatureToken feature;
  std::int64_t n_w = 0;      // pooled count
  double q_w = 0.0;          // allocation probability of text 1
  std::int64_t count_1 = 0;  // count in text 1
  double p_value = 1.0;
  int sign = 0;  // sign(count_1 - n_w q_w); +1 = over-represented in text 1
};

std::int64_t PooledCount(const FrequencyTable &t1, const FrequencyTable &t2,
                         const FeatureToken &w);

// Throws DegenerateRateError when no token other than w exists in either
// table.
double LeaveOutRate(const FrequencyTable &t1, const FrequencyTable &t2,
                    const FeatureToken &w);

// P(|Bin(n_w, q_w) - n_w q_w| >= |count_1 - n_w q_w|). Returns exactly 1
// when the observed deviation is zero and never less than kPValueFloor.
// Throws ArgumentError for q_w outside [0, 1] or count_1 outside [0, n_w].
double ExactBinomialP(std::int64_t count_1, std::int64_t n_w, double q_w);

// Allocation p-value of one feature from its counts and the two text
// totals. The computation is oriented canonically, so swapping the roles
// of the two texts gives a bit-identical result. Returns 1 for a
// degenerate rate.
double AllocationPValue(std::int64_t count_1, std::int64_t count_2,
                        std::int64_t total_1, std::int64_t total_2);

// Sign of count_1 - n_w * q_w, decided in integer arithmetic.
int AllocationSign(std::int64_t count_1, std::int64_t count_2,
                   std::int64_t total_1, std::int64_t total_2);

// One record per feature of the union vocabulary, in feature order.
// Throws DataError when both tables are empty.
std::vector<BinomialTestRecord> TestAll(const FrequencyTable &t1,
                                        const FrequencyTable &t2);

}  // namespace hcauthor

#endif  // HCAUTHOR_BINOM_H_
