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

#include "hcauthor/attribution.h"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "hcauthor/errors.h"

namespace hcauthor {

namespace {

void CheckAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ArgumentError("alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
}

// Profiles of a corpus and a query sharing one feature space.
struct Interned {
  FeatureSpace space;
  std::vector<CorpusProfile> corpora;
  Profile query;
};

Interned InternAll(const Document &query, std::span<const Corpus> corpora,
                   const DiscrepancyOptions &options) {
  Interned out{FeatureSpace(options.ngram, options.ngram_options), {}, {}};
  ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.ngram, options.ngram_options);
  out.space = std::move(pc.space);
  out.corpora = std::move(pc.corpora);
  out.query = out.space.Intern(query);
  if (out.query.empty()) {
    throw DataError("query '" + query.doc_id + "' is empty at n-gram order " +
                    std::to_string(options.ngram));
  }
  return out;
}

}  // namespace

LooModel MakeLooModel(std::string corpus_id, std::vector<double> scores) {
  if (scores.size() < 2) {
    throw DataError("a leave-one-out model needs at least two scores");
  }
  LooModel m;
  m.corpus_id = std::move(corpus_id);
  m.n_docs = scores.size();
  const double n = static_cast<double>(scores.size());
  m.mean = std::accumulate(scores.begin(), scores.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : scores) ss += (x - m.mean) * (x - m.mean);
  m.sd = std::sqrt(ss / (n - 1.0));
  m.scores = std::move(scores);
  return m;
}

VerificationResult TTest(double x_prime, const LooModel &model, double alpha) {
  CheckAlpha(alpha);
  if (model.n_docs < 2) throw DataError("model has fewer than two scores");
  if (model.degenerate_spread()) {
    throw DegenerateSpreadError("leave-one-out scores of '" + model.corpus_id +
                                "' have zero spread");
  }
  VerificationResult r;
  r.corpus_id = model.corpus_id;
  r.x_prime = x_prime;
  r.alpha = alpha;
  r.df = model.n_docs - 1;
  const double n = static_cast<double>(model.n_docs);
  r.t_stat = (x_prime - model.mean) / (model.sd * std::sqrt(1.0 + 1.0 / n));
  const boost::math::students_t_distribution<double> dist(
      static_cast<double>(r.df));
  if (std::isinf(r.t_stat)) {
    r.p_value = r.t_stat > 0 ? 0.0 : 1.0;
  } else {
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.t_stat));
  }
  r.rejected = r.p_value <= alpha;
  return r;
}

Decision Decide(std::span<const double> p_values,
                std::span<const std::string> ids, double alpha) {
  CheckAlpha(alpha);
  if (p_values.empty()) throw ArgumentError("no candidates to decide between");
  if (!ids.empty() && ids.size() != p_values.size()) {
    throw ArgumentError("candidate ids and p-values differ in length");
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < p_values.size(); ++j) {
    if (p_values[j] > p_values[best]) best = j;
  }
  Decision d;
  for (std::size_t j = 0; j < p_values.size(); ++j) {
    if (j != best && p_values[j] == p_values[best]) d.tie = true;
  }
  if (p_values[best] > alpha) {
    d.attributed = true;
    d.index = best;
    if (!ids.empty()) d.corpus_id = ids[best];
  }
  return d;
}

Attributor::Attributor(AttributionOptions options)
    : options_(options), scorer_(options.discrepancy.hc) {
  CheckAlpha(options_.alpha);
}

LooModel Attributor::Fit(const CorpusProfile &c, const Profile &query) const {
  if (c.size() < 2) {
    throw DataError("corpus '" + c.corpus_id +
                    "' needs at least two documents for a leave-one-out model");
  }
  const Profile extended = c.sum + query;
  std::vector<double> scores;
  scores.reserve(c.size());
  for (const Profile &doc : c.docs) {
    scores.push_back(scorer_.Score(doc, extended - doc));
  }
  return MakeLooModel(c.corpus_id, std::move(scores));
}

VerificationResult Attributor::Verify(const Profile &query,
                                      const CorpusProfile &c) const {
  const LooModel model = Fit(c, query);
  const double x_prime = scorer_.Score(query, c.sum);
  if (!model.degenerate_spread()) return TTest(x_prime, model, options_.alpha);

  VerificationResult r;
  r.corpus_id = c.corpus_id;
  r.x_prime = x_prime;
  r.alpha = options_.alpha;
  r.df = model.n_docs - 1;
  r.degenerate_spread = true;
  if (x_prime <= model.mean) {
    r.t_stat = x_prime < model.mean ? -std::numeric_limits<double>::infinity()
                                    : 0.0;
    r.p_value = 1.0;
  } else {
    r.t_stat = std::numeric_limits<double>::infinity();
    r.p_value = 0.0;
  }
  r.rejected = r.p_value <= options_.alpha;
  return r;
}

AttributionReport Attributor::Attribute(const std::string &doc_id,
                                        const Profile &query,
                                        std::span<const CorpusProfile> candidates,
                                        const FeatureSpace *space) const {
  if (candidates.size() < 2) {
    throw DataError("attribution needs at least two candidate corpora");
  }
  if (options_.explain && space == nullptr) {
    throw ArgumentError("explanations need the feature space");
  }
  AttributionReport report;
  report.doc_id = doc_id;
  std::vector<double> p_values;
  std::vector<std::string> ids;
  for (const CorpusProfile &c : candidates) {
    report.verifications.push_back(Verify(query, c));
    p_values.push_back(report.verifications.back().p_value);
    ids.push_back(c.corpus_id);
    if (options_.explain) {
      const DiscrepancyResult detail = scorer_.Detail(query, c.sum, *space);
      report.discriminating.push_back(detail.d_hc > 0.0
                                          ? detail.hc_detail.selected
                                          : std::vector<SelectedFeature>{});
    }
  }
  report.decision = Decide(p_values, ids, options_.alpha);
  return report;
}

LooModel FitLooModel(const Corpus &c, const Document &query,
                     const DiscrepancyOptions &options) {
  const Interned in = InternAll(query, std::span<const Corpus>(&c, 1), options);
  AttributionOptions ao;
  ao.discrepancy = options;
  return Attributor(ao).Fit(in.corpora.front(), in.query);
}

VerificationResult Verify(const Document &query, const Corpus &c,
                          const AttributionOptions &options) {
  const Interned in =
      InternAll(query, std::span<const Corpus>(&c, 1), options.discrepancy);
  return Attributor(options).Verify(in.query, in.corpora.front());
}

AttributionReport Attribute(const Document &query,
                            std::span<const Corpus> candidates,
                            const AttributionOptions &options) {
  if (candidates.size() < 2) {
    throw DataError("attribution needs at least two candidate corpora");
  }
  const Interned in = InternAll(query, candidates, options.discrepancy);
  return Attributor(options).Attribute(query.doc_id, in.query, in.corpora,
                                       &in.space);
}

std::size_t LooSummary::correct() const {
  return std::accumulate(correct_by_corpus.begin(), correct_by_corpus.end(),
                         std::size_t{0});
}

std::size_t LooSummary::attributable() const {
  return std::accumulate(attributable_by_corpus.begin(),
                         attributable_by_corpus.end(), std::size_t{0});
}

double LooSummary::accuracy() const {
  const std::size_t a = attributable();
  return a == 0 ? 0.0 : static_cast<double>(correct()) / static_cast<double>(a);
}

LooSummary AttributeLeaveOneOut(const ProfiledCorpora &data,
                                const AttributionOptions &options) {
  return AttributeLeaveOneOut(data.corpora, options, &data.space);
}

LooSummary AttributeLeaveOneOut(std::span<const CorpusProfile> corpora,
                                const AttributionOptions &options,
                                const FeatureSpace *space) {
  if (corpora.size() < 2) {
    throw DataError("leave-one-out attribution needs at least two corpora");
  }
  for (const CorpusProfile &c : corpora) {
    if (c.size() < 3) {
      throw DataError("corpus '" + c.corpus_id +
                      "' needs at least three documents for leave-one-out "
                      "attribution");
    }
  }
  const Attributor attributor(options);
  LooSummary summary;
  const std::size_t m = corpora.size();
  summary.correct_by_corpus.assign(m, 0);
  summary.attributable_by_corpus.assign(m, 0);
  summary.total_by_corpus.assign(m, 0);
  for (const CorpusProfile &c : corpora) summary.corpus_ids.push_back(c.corpus_id);

  std::vector<CorpusProfile> candidates(corpora.begin(), corpora.end());
  for (std::size_t h = 0; h < m; ++h) {
    const CorpusProfile &home = corpora[h];
    for (std::size_t i = 0; i < home.size(); ++i) {
      candidates[h] = home.Without(i);
      LooOutcome outcome;
      outcome.home = h;
      outcome.report = attributor.Attribute(home.doc_ids[i], home.docs[i],
                                            candidates, space);
      outcome.correct =
          outcome.report.decision.attributed && outcome.report.decision.index == h;
      ++summary.total_by_corpus[h];
      if (outcome.report.decision.attributed) ++summary.attributable_by_corpus[h];
      if (outcome.correct) ++summary.correct_by_corpus[h];
      summary.outcomes.push_back(std::move(outcome));
    }
    candidates[h] = home;
  }
  return summary;
}

JarqueBeraResult JarqueBera(std::span<const double> scores) {
  if (scores.size() < 4) {
    throw DataError("Jarque-Bera needs at least four scores");
  }
  const double n = static_cast<double>(scores.size());
  const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (double x : scores) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  if (!(m2 > 0.0)) {
    throw DataError("Jarque-Bera is undefined for constant scores");
  }
  const double skew = m3 / std::pow(m2, 1.5);
  const double kurt = m4 / (m2 * m2) - 3.0;
  JarqueBeraResult r;
  r.statistic = n / 6.0 * (skew * skew + kurt * kurt / 4.0);
  // Chi-square with two degrees of freedom: P(X > x) = exp(-x / 2).
  r.p_value = std::exp(-r.statistic / 2.0);
  return r;
}

}  // namespace hcauthor
