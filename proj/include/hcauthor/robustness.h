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

// Accuracy analyses of the attribution pipeline (bootstrap, k-fold cross
// validation, query-length and gamma0 sweeps) and a generator of synthetic
// authors for ground-truth experiments.
//
// Accuracy always means correct attributions among attributable documents;
// unattributable documents are counted separately in `flagged` where the
// mode says so. Every procedure is a pure function of its inputs and seed:
// trial t draws from its own stream MixSeed(seed, t).

#ifndef HCAUTHOR_ROBUSTNESS_H_
#define HCAUTHOR_ROBUSTNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcauthor/attribution.h"
#include "hcauthor/corpus.h"

namespace hcauthor {

// --- Synthetic authors ------------------------------------------------------

struct SyntheticAuthorSpec {
  std::size_t vocab_size = 0;
  std::vector<double> base_weights;  // nonnegative, length vocab_size
  std::vector<std::size_t> perturbed_features;
  double intensity = 1.0;  // frequency ratio applied to perturbed features
  std::uint64_t seed = 0;

  // Base weights scaled on the perturbed features and renormalised.
  // Throws ArgumentError on an inconsistent spec.
  std::vector<double> Weights() const;
};

// p_k proportional to 1 / (k + 1)^exponent.
std::vector<double> ZipfWeights(std::size_t vocab_size, double exponent = 1.0);

// n_docs documents of doc_len i.i.d. draws; lemma ids are "w0000" style.
Corpus GenerateAuthor(const SyntheticAuthorSpec &spec, std::size_t n_docs,
                      std::size_t doc_len, const std::string &corpus_id);

struct SyntheticSuiteOptions {
  std::size_t authors = 3;
  std::size_t vocab_size = 1000;
  std::size_t perturbed = 20;
  double intensity = 2.0;
  std::size_t docs = 15;
  std::size_t doc_len = 600;
  double zipf_exponent = 1.0;
  // Perturbed features are drawn from ranks [band_begin, band_end) of the
  // base distribution; band_end = 0 means the whole vocabulary. The default
  // keeps them among the common words: a Zipf tail word shows up less than
  // once per 600-token document, so doubling it is invisible.
  std::size_t band_begin = 0;
  std::size_t band_end = 100;
  std::uint64_t seed = 1;
};

// Author specs sharing one Zipf base; each author perturbs its own feature
// set, disjoint from the other authors'.
std::vector<SyntheticAuthorSpec> SyntheticAuthors(
    const SyntheticSuiteOptions &options);
// One corpus per author, named "A0", "A1", ...
std::vector<Corpus> SyntheticSuite(const SyntheticSuiteOptions &options);

// --- Reports ----------------------------------------------------------------

enum class RobustnessMode { kBootstrap, kKfold, kLengthSweep, kGammaSweep };

const char *ModeName(RobustnessMode mode);
// Accepts "bootstrap", "kfold", "length"/"length_sweep", "gamma"/"gamma_sweep".
std::optional<RobustnessMode> ParseMode(const std::string &name);

struct CurvePoint {
  double x = 0.0;  // verse budget or gamma0
  double accuracy_mean = 0.0;
  double accuracy_sd = 0.0;
  std::size_t flagged = 0;  // budget exceeded the document (length sweep)
  std::optional<double> stability;  // gamma sweep: agreement with baseline
};

struct RobustnessReport {
  RobustnessMode mode = RobustnessMode::kBootstrap;
  double accuracy_mean = 0.0;
  double accuracy_sd = 0.0;  // sample deviation over per_trial
  std::size_t trials = 0;
  std::vector<double> per_trial;  // sweeps: point-major, trials per point
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CurvePoint> curve;
  std::size_t invalid_trials = 0;  // excluded from per_trial
  std::size_t flagged = 0;
};

// Mean and sample standard deviation (0 for fewer than two values).
std::pair<double, double> MeanAndSd(std::span<const double> values);

// Plain leave-one-out attribution accuracy.
double LooAccuracy(std::span<const Corpus> corpora,
                   const AttributionOptions &options = {});

struct BootstrapOptions {
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
  bool resample = true;
  // Resample each document from its own occurrences instead of from the
  // pooled dataset.
  bool per_document = false;
};

// Each iteration draws as many occurrences as the dataset holds, with
// replacement, returns each to the document it came from and reruns the
// leave-one-out attribution. An iteration in which some corpus keeps fewer
// than three nonempty documents is counted in invalid_trials.
RobustnessReport BootstrapAccuracy(std::span<const Corpus> corpora,
                                   const BootstrapOptions &bootstrap,
                                   const AttributionOptions &options = {});

struct KfoldOptions {
  std::size_t k = 4;
  std::size_t splits = 130;
  std::uint64_t seed = 0;
  // Evaluate every fold of a split rather than one random held-out fold.
  bool all_folds = false;
};

// Throws ArgumentError for k < 2 or fewer documents than k. A split that
// leaves some reference corpus with fewer than two documents is counted in
// invalid_trials.
RobustnessReport KfoldAccuracy(std::span<const Corpus> corpora,
                               const KfoldOptions &kfold,
                               const AttributionOptions &options = {});

struct LengthSweepOptions {
  std::vector<double> budgets;  // in verses
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  // Tokens per verse for documents without verse segmentation, used when
  // no document of the dataset reports a verse count.
  double default_tokens_per_verse = 21.0;
};

// Tokens per verse used to turn verse budgets into token budgets: the
// median of tokens / verse_count over documents with a verse count, else
// the default.
double TokensPerVerse(std::span<const Corpus> corpora,
                      double default_tokens_per_verse);

// For every budget and trial, each query document is cut to a random
// contiguous window of the budget (whole verses when the document has
// verse breaks) and attributed leave-one-out against the full corpora.
RobustnessReport LengthSweep(std::span<const Corpus> corpora,
                             const LengthSweepOptions &sweep,
                             const AttributionOptions &options = {});

struct GammaSweepOptions {
  std::vector<double> gammas = {0.2, 0.35, 0.5};
  double baseline = kDefaultGamma0;
};

RobustnessReport GammaSweep(std::span<const Corpus> corpora,
                            const GammaSweepOptions &sweep,
                            const AttributionOptions &options = {});

}  // namespace hcauthor

#endif  // HCAUTHOR_ROBUSTNESS_H_
