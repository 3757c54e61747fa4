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

#include "hcauthor/binom.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "hcauthor/errors.h"
#include "hcauthor/ingest.h"

namespace hcauthor {

namespace {

// Outcomes whose deviation matches the observed one up to this relative
// slack count as ties (n_w * q_w carries rounding error).
constexpr double kTieSlack = 1e-9;

// Stop extending a tail once the next term is below this fraction of the
// running sum.
constexpr double kTailEpsilon = 1e-18;

// log(k!) for k <= n, grown on demand. One table per thread.
double LogFactorial(std::int64_t k) {
  thread_local std::vector<double> table{0.0};
  if (k >= static_cast<std::int64_t>(table.size())) {
    const std::size_t old = table.size();
    table.resize(static_cast<std::size_t>(k) + 1);
    for (std::size_t i = old; i < table.size(); ++i) {
      table[i] = std::lgamma(static_cast<double>(i) + 1.0);
    }
  }
  return table[static_cast<std::size_t>(k)];
}

double LogPmf(std::int64_t k, std::int64_t n, double log_q, double log_1mq) {
  return LogFactorial(n) - LogFactorial(k) - LogFactorial(n - k) +
         static_cast<double>(k) * log_q + static_cast<double>(n - k) * log_1mq;
}

// log P(K <= lo), summed from lo downwards. lo must not exceed the mode.
double LogLowerTail(std::int64_t lo, std::int64_t n, double q) {
  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  const double odds = (1.0 - q) / q;  // pmf(k-1)/pmf(k) = k/(n-k+1) * odds
  double term = 1.0;
  double sum = 1.0;
  for (std::int64_t k = lo; k > 0; --k) {
    term *= static_cast<double>(k) / static_cast<double>(n - k + 1) * odds;
    sum += term;
    if (term < kTailEpsilon * sum) break;
  }
  return LogPmf(lo, n, log_q, log_1mq) + std::log(sum);
}

// log P(K >= hi), summed from hi upwards. hi must not be below the mode.
double LogUpperTail(std::int64_t hi, std::int64_t n, double q) {
  const double log_q = std::log(q);
  const double log_1mq = std::log1p(-q);
  const double odds = q / (1.0 - q);  // pmf(k+1)/pmf(k) = (n-k)/(k+1) * odds
  double term = 1.0;
  double sum = 1.0;
  for (std::int64_t k = hi; k < n; ++k) {
    term *= static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
    sum += term;
    if (term < kTailEpsilon * sum) break;
  }
  return LogPmf(hi, n, log_q, log_1mq) + std::log(sum);
}

}  // namespace

std::int64_t PooledCount(const FrequencyTable &t1, const FrequencyTable &t2,
                         const FeatureToken &w) {
  return t1.count(w) + t2.count(w);
}

double LeaveOutRate(const FrequencyTable &t1, const FrequencyTable &t2,
                    const FeatureToken &w) {
  const std::int64_t other_1 = t1.total() - t1.count(w);
  const std::int64_t other_2 = t2.total() - t2.count(w);
  if (other_1 + other_2 == 0) {
    throw DegenerateRateError("feature '" + w.str() +
                              "' is the only feature of both texts");
  }
  return static_cast<double>(other_1) / static_cast<double>(other_1 + other_2);
}

double ExactBinomialP(std::int64_t count_1, std::int64_t n_w, double q_w) {
  if (!(q_w >= 0.0 && q_w <= 1.0)) {
    throw ArgumentError("binomial rate " + std::to_string(q_w) +
                        " outside [0, 1]");
  }
  if (n_w < 0 || count_1 < 0 || count_1 > n_w) {
    throw ArgumentError("binomial count " + std::to_string(count_1) +
                        " outside [0, " + std::to_string(n_w) + "]");
  }
  const double n = static_cast<double>(n_w);
  const double mean = n * q_w;
  const double deviation = std::abs(static_cast<double>(count_1) - mean);
  const double slack = kTieSlack * std::max(1.0, mean);
  if (deviation <= slack) return 1.0;

  // Point masses: the only possible outcome is 0 (q = 0) or n (q = 1), and
  // the observed count differs from it.
  if (q_w == 0.0 || q_w == 1.0) return kPValueFloor;

  const auto lo = static_cast<std::int64_t>(std::floor(mean - deviation + slack));
  const auto hi = static_cast<std::int64_t>(std::ceil(mean + deviation - slack));
  double p = 0.0;
  if (lo >= 0) p += std::exp(LogLowerTail(lo, n_w, q_w));
  if (hi <= n_w) p += std::exp(LogUpperTail(hi, n_w, q_w));
  return std::clamp(p, kPValueFloor, 1.0);
}

double AllocationPValue(std::int64_t count_1, std::int64_t count_2,
                        std::int64_t total_1, std::int64_t total_2) {
  const std::int64_t other_1 = total_1 - count_1;
  const std::int64_t other_2 = total_2 - count_2;
  if (other_1 + other_2 == 0) return 1.0;
  if (AllocationSign(count_1, count_2, total_1, total_2) == 0) return 1.0;
  // Orient on the side with fewer other tokens (ties: the smaller count) so
  // that (T1, T2) and (T2, T1) run the same arithmetic.
  const bool keep = other_1 < other_2 || (other_1 == other_2 && count_1 <= count_2);
  const std::int64_t count = keep ? count_1 : count_2;
  const std::int64_t other = keep ? other_1 : other_2;
  const double q = static_cast<double>(other) /
                   static_cast<double>(other_1 + other_2);
  return ExactBinomialP(count, count_1 + count_2, q);
}

int AllocationSign(std::int64_t count_1, std::int64_t count_2,
                   std::int64_t total_1, std::int64_t total_2) {
  // count_1 - n q  has the sign of  count_1 * other_2 - count_2 * other_1.
  const __int128 lhs = static_cast<__int128>(count_1) * (total_2 - count_2);
  const __int128 rhs = static_cast<__int128>(count_2) * (total_1 - count_1);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

std::vector<BinomialTestRecord> TestAll(const FrequencyTable &t1,
                                        const FrequencyTable &t2) {
  const std::vector<FeatureToken> vocab = Vocabulary(t1, t2);
  if (vocab.empty()) {
    throw DataError("cannot compare two empty frequency tables");
  }
  std::vector<BinomialTestRecord> records;
  records.reserve(vocab.size());
  for (const FeatureToken &w : vocab) {
    BinomialTestRecord r;
    r.feature = w;
    r.count_1 = t1.count(w);
    const std::int64_t count_2 = t2.count(w);
    r.n_w = r.count_1 + count_2;
    const std::int64_t other_1 = t1.total() - r.count_1;
    const std::int64_t other_2 = t2.total() - count_2;
    r.q_w = other_1 + other_2 == 0
                ? 0.5
                : static_cast<double>(other_1) /
                      static_cast<double>(other_1 + other_2);
    r.p_value = AllocationPValue(r.count_1, count_2, t1.total(), t2.total());
    r.sign = AllocationSign(r.count_1, count_2, t1.total(), t2.total());
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace hcauthor
