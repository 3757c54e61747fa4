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

// HC-discrepancy between texts. A corpus enters every comparison as the
// concatenation of its documents, so only its pooled counts matter.

#ifndef HCAUTHOR_DISCREPANCY_H_
#define HCAUTHOR_DISCREPANCY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcauthor/binom.h"
#include "hcauthor/corpus.h"
#include "hcauthor/feature_space.h"
#include "hcauthor/hc.h"
#include "hcauthor/ingest.h"

namespace hcauthor {

struct DiscrepancyOptions {
  std::size_t ngram = 1;
  NgramOptions ngram_options;
  HcOptions hc;
};

struct DiscrepancyResult {
  double d_hc = 0.0;
  std::vector<BinomialTestRecord> records;  // union vocabulary, feature order
  HcResult hc_detail;
  std::int64_t left_total = 0;
  std::int64_t right_total = 0;
};

// Scores pairs of profiles. Score() is the hot path used by leave-one-out
// loops; Detail() also returns per-feature records and the HCT set.
// Thread-safe: scratch buffers are thread-local.
class HcScorer {
 public:
  explicit HcScorer(HcOptions options = {}) : options_(options) {}

  const HcOptions &options() const { return options_; }

  // Throws DataError if either side is empty.
  double Score(const Profile &left, const Profile &right) const;
  DiscrepancyResult Detail(const Profile &left, const Profile &right,
                           const FeatureSpace &space) const;

 private:
  HcOptions options_;
};

DiscrepancyResult DocDoc(const Document &t1, const Document &t2,
                         const DiscrepancyOptions &options = {});
// t must not be a member of c.
DiscrepancyResult DocCorpus(const Document &t, const Corpus &c,
                            const DiscrepancyOptions &options = {});
DiscrepancyResult CorpusCorpus(const Corpus &c1, const Corpus &c2,
                               const DiscrepancyOptions &options = {});

// x_i = d_HC(T_i, C \ {T_i}). Throws DataError if |c| < 2.
double LeaveOneOut(const Corpus &c, std::size_t i,
                   const DiscrepancyOptions &options = {});
// The whole vector X(C), computed with one shared feature space.
std::vector<double> LeaveOneOutScores(const Corpus &c,
                                      const DiscrepancyOptions &options = {});

// One corpus holding every document of the inputs. Document ids are
// prefixed with "<corpus_id>/" to keep them unique.
Corpus UnionCorpus(std::span<const Corpus> corpora, const std::string &id);

// One row of the document-by-corpus discrepancy matrix.
struct EmbeddingRow {
  std::string doc_id;
  std::optional<std::size_t> home;  // index of the corpus holding the doc
  std::vector<double> d_hc;         // one entry per reference corpus
};

// d_HC of every corpus document against every corpus, removing the
// document from its home corpus first, followed by one row per query
// (compared against the full corpora). Throws DataError if a home corpus
// has fewer than two documents.
std::vector<EmbeddingRow> DiscrepancyMatrix(
    std::span<const Corpus> corpora, std::span<const Document> queries,
    const DiscrepancyOptions &options = {});

}  // namespace hcauthor

#endif  // HCAUTHOR_DISCREPANCY_H_
