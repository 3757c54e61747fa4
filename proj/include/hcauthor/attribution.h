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

// Authorship verification and attribution.
//
// Verification of a query T' against a corpus C:
//   1. x_i = d_HC(T_i, (C u {T'}) \ {T_i}) for every T_i in C.
//   2. x'  = d_HC(T', C).
//   3. t = (x' - mean(x)) / (s sqrt(1 + 1/|C|)), s the sample deviation.
//   4. p = P(T_{|C|-1} > t); the same-author hypothesis is rejected when
//      p <= alpha.
// Attribution picks the candidate with the largest p, unless every
// candidate is rejected.

#ifndef HCAUTHOR_ATTRIBUTION_H_
#define HCAUTHOR_ATTRIBUTION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcauthor/corpus.h"
#include "hcauthor/discrepancy.h"
#include "hcauthor/feature_space.h"
#include "hcauthor/hc.h"

namespace hcauthor {

inline constexpr double kDefaultAlpha = 0.05;

struct AttributionOptions {
  DiscrepancyOptions discrepancy;
  double alpha = kDefaultAlpha;
  // Attach the HCT feature set of the query against every candidate.
  bool explain = true;
};

struct LooModel {
  std::string corpus_id;
  std::vector<double> scores;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation (n - 1)
  std::size_t n_docs = 0;

  bool degenerate_spread() const { return !(sd > 0.0); }
};

// Mean and sample deviation of the scores. Throws DataError for fewer than
// two scores.
LooModel MakeLooModel(std::string corpus_id, std::vector<double> scores);

struct VerificationResult {
  std::string corpus_id;
  double x_prime = 0.0;
  double t_stat = 0.0;
  double p_value = 1.0;
  std::size_t df = 0;
  bool rejected = false;
  double alpha = kDefaultAlpha;
  // The model had zero spread; p was set to 1 (x' <= mean) or 0 (x' > mean).
  bool degenerate_spread = false;
};

// Upper-tail t-test of x' against the model. Throws DegenerateSpreadError
// when the model's sd is zero.
VerificationResult TTest(double x_prime, const LooModel &model,
                         double alpha = kDefaultAlpha);

struct Decision {
  bool attributed = false;
  std::size_t index = 0;  // candidate index when attributed
  std::string corpus_id;  // empty when unattributable
  bool tie = false;       // another candidate shared the maximal p-value

  friend bool operator==(const Decision &, const Decision &) = default;
};

// Attributed(argmax p) when max p > alpha, else unattributable. Ties go to
// the first candidate and set `tie`. ids may be empty.
Decision Decide(std::span<const double> p_values,
                std::span<const std::string> ids, double alpha = kDefaultAlpha);

struct AttributionReport {
  std::string doc_id;
  std::vector<VerificationResult> verifications;  // candidate order
  Decision decision;
  // HCT features of the query against each candidate (empty when the HC
  // score is not positive, or when explanation was not requested).
  std::vector<std::vector<SelectedFeature>> discriminating;
};

// Profile-level engine shared by the document-level functions below and
// by the robustness harness.
class Attributor {
 public:
  explicit Attributor(AttributionOptions options = {});

  const AttributionOptions &options() const { return options_; }
  const HcScorer &scorer() const { return scorer_; }

  // Scores against the extended corpus. Throws DataError if |c| < 2.
  LooModel Fit(const CorpusProfile &c, const Profile &query) const;
  // Applies the zero-spread fallback instead of throwing.
  VerificationResult Verify(const Profile &query, const CorpusProfile &c) const;
  // space is required only when options().explain is set.
  AttributionReport Attribute(const std::string &doc_id, const Profile &query,
                              std::span<const CorpusProfile> candidates,
                              const FeatureSpace *space = nullptr) const;

 private:
  AttributionOptions options_;
  HcScorer scorer_;
};

LooModel FitLooModel(const Corpus &c, const Document &query,
                     const DiscrepancyOptions &options = {});
VerificationResult Verify(const Document &query, const Corpus &c,
                          const AttributionOptions &options = {});
// Throws DataError for fewer than two candidates.
AttributionReport Attribute(const Document &query,
                            std::span<const Corpus> candidates,
                            const AttributionOptions &options = {});

// Leave-one-out attribution of every document of every corpus: the
// document is removed from its home corpus and attributed against all
// corpora.
struct LooOutcome {
  std::size_t home = 0;
  AttributionReport report;
  bool correct = false;
};

struct LooSummary {
  std::vector<LooOutcome> outcomes;
  std::vector<std::string> corpus_ids;
  std::vector<std::size_t> correct_by_corpus;
  std::vector<std::size_t> attributable_by_corpus;
  std::vector<std::size_t> total_by_corpus;

  std::size_t correct() const;
  std::size_t attributable() const;
  std::size_t total() const { return outcomes.size(); }
  // Correct among attributable documents; 0 when none is attributable.
  double accuracy() const;
};

// Every home corpus needs at least three documents, so that it keeps two
// after the held-out one is removed.
LooSummary AttributeLeaveOneOut(const ProfiledCorpora &data,
                                const AttributionOptions &options = {});
// Same over bare profiles; space is needed only for explanations.
LooSummary AttributeLeaveOneOut(std::span<const CorpusProfile> corpora,
                                const AttributionOptions &options,
                                const FeatureSpace *space = nullptr);

struct JarqueBeraResult {
  double statistic = 0.0;
  double p_value = 1.0;
};

// JB = n/6 (S^2 + K^2/4) with sample skewness S and excess kurtosis K;
// p from the chi-square(2) upper tail. Throws DataError for fewer than four
// scores and for zero variance.
JarqueBeraResult JarqueBera(std::span<const double> scores);

}  // namespace hcauthor

#endif  // HCAUTHOR_ATTRIBUTION_H_
