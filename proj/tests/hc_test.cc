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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "hcauthor/binom.h"
#include "hcauthor/errors.h"
#include "oracles.h"

namespace hcauthor {
namespace {

using testing::DirectHc;

BinomialTestRecord Rec(const std::string &w, double p, int sign = 1) {
  BinomialTestRecord r;
  r.feature = FeatureToken::Lemma(w);
  r.p_value = p;
  r.sign = sign;
  return r;
}

TEST(HcStatisticTest, UniformQuantilesGiveZero) {
  for (std::size_t n : {4u, 10u, 100u}) {
    std::vector<double> p;
    for (std::size_t i = 1; i <= n; ++i) p.push_back(static_cast<double>(i) / n);
    EXPECT_NEAR(HcStatistic(p).hc, 0.0, 1e-12) << n;
  }
}

TEST(HcStatisticTest, FourPointExample) {
  const std::vector<double> p{0.9, 0.01, 0.5, 0.2};
  const HcResult r = HcStatistic(p, {.gamma0 = 0.35});
  EXPECT_NEAR(r.hc, 2.0 * (0.25 - 0.01) / std::sqrt(0.25 * 0.75), 1e-12);
  EXPECT_NEAR(r.hc, 1.1085, 1e-4);
  EXPECT_EQ(r.i_star, 1u);
  EXPECT_EQ(r.n, 4u);
  EXPECT_EQ(HcSearchRange(4, 0.35), 1u);
}

TEST(HcStatisticTest, DefaultGamma) {
  EXPECT_EQ(HcOptions{}.gamma0, 0.35);
  EXPECT_EQ(HcStatistic(std::vector<double>{0.5}).gamma0, 0.35);
}

TEST(HcStatisticTest, SinglePValue) {
  const HcResult r = HcStatistic(std::vector<double>{1.0});
  EXPECT_TRUE(std::isfinite(r.hc));
  EXPECT_EQ(r.i_star, 1u);
}

TEST(HcStatisticTest, Errors) {
  EXPECT_THROW(HcStatistic(std::vector<double>{}), ArgumentError);
  EXPECT_THROW(HcStatistic(std::vector<double>{0.0}), ArgumentError);
  EXPECT_THROW(HcStatistic(std::vector<double>{1.5}), ArgumentError);
  EXPECT_THROW(HcStatistic(std::vector<double>{0.5}, {.gamma0 = 0.0}),
               ArgumentError);
  EXPECT_THROW(HcStatistic(std::vector<double>{0.5}, {.gamma0 = 1.0}),
               ArgumentError);
}

TEST(HcStatisticTest, MatchesDirectEvaluationAndIsOrderInvariant) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + gen() % 400;
    std::vector<double> p(n);
    for (double &x : p) {
      x = std::max(1e-12, std::pow(u(gen), 1.0 + trial % 3));
      if (gen() % 5 == 0) x = 1.0;
    }
    const double gamma0 = 0.1 + 0.8 * u(gen);
    std::size_t arg = 0;
    const double want = DirectHc(p, gamma0, &arg);
    const HcResult r = HcStatistic(p, {.gamma0 = gamma0});
    EXPECT_NEAR(r.hc, want, 1e-9 * std::max(1.0, std::fabs(want)));
    EXPECT_EQ(r.i_star, arg);
    std::shuffle(p.begin(), p.end(), gen);
    const HcResult s = HcStatistic(p, {.gamma0 = gamma0});
    EXPECT_EQ(s.hc, r.hc);
    EXPECT_EQ(s.i_star, r.i_star);
    std::vector<double> buf = p;
    const HcResult t = HcStatisticInPlace(buf, {.gamma0 = gamma0});
    EXPECT_EQ(t.hc, r.hc);
    EXPECT_EQ(t.i_star, r.i_star);
  }
}

TEST(HcStatisticTest, IStarWithinRange) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(1e-9, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 100;
    std::vector<double> p(n);
    for (double &x : p) x = u(gen);
    const HcResult r = HcStatistic(p);
    EXPECT_GE(r.i_star, 1u);
    EXPECT_LE(r.i_star, HcSearchRange(n, 0.35));
  }
}

TEST(HcStatisticTest, TiesGoToSmallestIndex) {
  // z_1 == z_3 exactly: same denominator and the same gap of 0.125.
  const std::vector<double> p{0.125, 0.5, 0.625, 0.9};
  const HcResult r = HcStatistic(p, {.gamma0 = 0.8});
  EXPECT_EQ(r.i_star, 1u);
  EXPECT_NEAR(r.hc, 2.0 * 0.125 / std::sqrt(0.1875), 1e-12);
}

TEST(HcStatisticTest, FlatPValuesPeakAtRangeEnd) {
  const std::vector<double> p(10, 1.0);
  EXPECT_EQ(HcStatistic(p, {.gamma0 = 0.5}).i_star, 5u);
}

TEST(HcStatisticTest, HcPlusSkipsTinyPValues) {
  // N = 10: only p >= 0.1 may enter the maximum.
  std::vector<double> p{1e-8, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  const HcResult plain = HcStatistic(p);
  const HcResult plus = HcStatistic(p, {.gamma0 = 0.35, .hc_plus = true});
  EXPECT_EQ(plain.i_star, 1u);
  EXPECT_GT(plain.hc, plus.hc);
  EXPECT_EQ(plus.i_star, 2u);
}

TEST(HcStatisticTest, UniformNullPercentileIsStable) {
  auto p95 = [](std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> hcs;
    std::vector<double> p(1000);
    for (int t = 0; t < 2000; ++t) {
      for (double &x : p) x = std::max(u(gen), 1e-300);
      hcs.push_back(HcStatisticInPlace(p).hc);
    }
    std::sort(hcs.begin(), hcs.end());
    return hcs[hcs.size() * 95 / 100];
  };
  const double a = p95(1), b = p95(2);
  EXPECT_TRUE(std::isfinite(a));
  EXPECT_NEAR(a, b, 0.1 * a);
}

TEST(HctSelectTest, PrefixOfSmallestPValues) {
  const std::vector<BinomialTestRecord> recs{Rec("w1", 0.01), Rec("w2", 0.2),
                                             Rec("w3", 0.5), Rec("w4", 0.9)};
  const HcResult r = HctSelect(recs);
  ASSERT_EQ(r.selected.size(), 1u);
  EXPECT_EQ(r.selected[0].feature, FeatureToken::Lemma("w1"));
  EXPECT_EQ(r.selected[0].p_value, 0.01);
  EXPECT_EQ(r.selected[0].sign, 1);
}

TEST(HctSelectTest, AllOnesGiveNonPositiveHcAndOneEntry) {
  std::vector<BinomialTestRecord> recs;
  for (int i = 0; i < 5; ++i) recs.push_back(Rec("w" + std::to_string(i), 1.0));
  const HcResult r = HctSelect(recs);
  EXPECT_LE(r.hc, 0.0);
  EXPECT_EQ(r.selected.size(), 1u);
  EXPECT_EQ(r.i_star, 1u);
}

TEST(HctSelectTest, TiedBlockEndsTheSelection) {
  // N = 10, range 3. Four equal smallest p-values: the maximum sits at the
  // end of the range and the remaining tie stays out.
  std::vector<BinomialTestRecord> recs;
  for (int i = 0; i < 4; ++i) recs.push_back(Rec("a" + std::to_string(i), 1e-4));
  for (int i = 0; i < 6; ++i) recs.push_back(Rec("z" + std::to_string(i), 0.9));
  const HcResult r = HctSelect(recs);
  EXPECT_EQ(r.i_star, 3u);
  EXPECT_EQ(r.selected.size(), 3u);
  for (const SelectedFeature &f : r.selected) EXPECT_EQ(f.p_value, 1e-4);

  recs.erase(recs.begin() + 2, recs.begin() + 4);
  recs.push_back(Rec("z6", 0.9));
  recs.push_back(Rec("z7", 0.9));
  const HcResult s = HctSelect(recs);
  EXPECT_EQ(s.i_star, 2u);
  EXPECT_EQ(s.selected.size(), 2u);
}

TEST(HctSelectTest, SelectionIsSortedPrefixProperty) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(1e-6, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<BinomialTestRecord> recs;
    const std::size_t n = 1 + gen() % 80;
    for (std::size_t i = 0; i < n; ++i) {
      recs.push_back(Rec("w" + std::to_string(i), u(gen)));
    }
    const HcResult r = HctSelect(recs);
    ASSERT_EQ(r.selected.size(), r.i_star);
    std::vector<double> sorted;
    for (const auto &x : recs) sorted.push_back(x.p_value);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < r.selected.size(); ++i) {
      EXPECT_EQ(r.selected[i].p_value, sorted[i]);
    }
  }
}

}  // namespace
}  // namespace hcauthor
