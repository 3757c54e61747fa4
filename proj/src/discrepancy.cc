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

#include "hcauthor/discrepancy.h"

#include <algorithm>

#include "hcauthor/errors.h"

namespace hcauthor {

namespace {

void CheckSides(const Profile &left, const Profile &right) {
  if (left.empty() || right.empty()) {
    throw DataError("HC-discrepancy needs two nonempty texts");
  }
}

DiscrepancyResult DocDocImpl(FeatureSpace &space, const Profile &a,
                             const Profile &b, const DiscrepancyOptions &options) {
  return HcScorer(options.hc).Detail(a, b, space);
}

Profile InternCorpus(FeatureSpace &space, const Corpus &c) {
  c.Validate();
  Profile sum;
  for (const Document &d : c.documents) sum += space.Intern(d);
  return sum;
}

}  // namespace

double HcScorer::Score(const Profile &left, const Profile &right) const {
  CheckSides(left, right);
  thread_local std::vector<double> p_values;
  p_values.clear();
  const std::size_t extent = std::max(left.extent(), right.extent());
  for (std::size_t id = 0; id < extent; ++id) {
    const std::int64_t c1 = left.count(id);
    const std::int64_t c2 = right.count(id);
    if (c1 == 0 && c2 == 0) continue;
    p_values.push_back(AllocationPValue(c1, c2, left.total(), right.total()));
  }
  return HcStatisticInPlace(p_values, options_).hc;
}

DiscrepancyResult HcScorer::Detail(const Profile &left, const Profile &right,
                                   const FeatureSpace &space) const {
  CheckSides(left, right);
  DiscrepancyResult result;
  result.left_total = left.total();
  result.right_total = right.total();
  const std::int64_t other_total = left.total() + right.total();
  const std::size_t extent = std::max(left.extent(), right.extent());
  for (std::size_t id = 0; id < extent; ++id) {
    const std::int64_t c1 = left.count(id);
    const std::int64_t c2 = right.count(id);
    if (c1 == 0 && c2 == 0) continue;
    BinomialTestRecord r;
    r.feature = space.feature(id);
    r.count_1 = c1;
    r.n_w = c1 + c2;
    const std::int64_t other = other_total - r.n_w;
    r.q_w = other == 0 ? 0.5
                       : static_cast<double>(left.total() - c1) /
                             static_cast<double>(other);
    r.p_value = AllocationPValue(c1, c2, left.total(), right.total());
    r.sign = AllocationSign(c1, c2, left.total(), right.total());
    result.records.push_back(std::move(r));
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const BinomialTestRecord &a, const BinomialTestRecord &b) {
              return a.feature < b.feature;
            });
  result.hc_detail = HctSelect(result.records, options_);
  result.d_hc = result.hc_detail.hc;
  return result;
}

DiscrepancyResult DocDoc(const Document &t1, const Document &t2,
                         const DiscrepancyOptions &options) {
  FeatureSpace space(options.ngram, options.ngram_options);
  const Profile a = space.Intern(t1);
  const Profile b = space.Intern(t2);
  return DocDocImpl(space, a, b, options);
}

DiscrepancyResult DocCorpus(const Document &t, const Corpus &c,
                            const DiscrepancyOptions &options) {
  FeatureSpace space(options.ngram, options.ngram_options);
  const Profile a = space.Intern(t);
  const Profile b = InternCorpus(space, c);
  return DocDocImpl(space, a, b, options);
}

DiscrepancyResult CorpusCorpus(const Corpus &c1, const Corpus &c2,
                               const DiscrepancyOptions &options) {
  FeatureSpace space(options.ngram, options.ngram_options);
  const Profile a = InternCorpus(space, c1);
  const Profile b = InternCorpus(space, c2);
  return DocDocImpl(space, a, b, options);
}

double LeaveOneOut(const Corpus &c, std::size_t i,
                   const DiscrepancyOptions &options) {
  if (c.size() < 2) {
    throw DataError("leave-one-out on corpus '" + c.corpus_id +
                    "' needs at least two documents");
  }
  if (i >= c.size()) throw ArgumentError("document index out of range");
  return LeaveOneOutScores(c, options)[i];
}

std::vector<double> LeaveOneOutScores(const Corpus &c,
                                      const DiscrepancyOptions &options) {
  if (c.size() < 2) {
    throw DataError("leave-one-out on corpus '" + c.corpus_id +
                    "' needs at least two documents");
  }
  const ProfiledCorpora pc = ProfiledCorpora::Build(
      std::span<const Corpus>(&c, 1), options.ngram, options.ngram_options);
  const CorpusProfile &cp = pc.corpora.front();
  const HcScorer scorer(options.hc);
  std::vector<double> scores;
  scores.reserve(cp.size());
  for (std::size_t i = 0; i < cp.size(); ++i) {
    scores.push_back(scorer.Score(cp.docs[i], cp.sum - cp.docs[i]));
  }
  return scores;
}

Corpus UnionCorpus(std::span<const Corpus> corpora, const std::string &id) {
  Corpus out;
  out.corpus_id = id;
  for (const Corpus &c : corpora) {
    for (const Document &d : c.documents) {
      Document copy = d;
      copy.doc_id = c.corpus_id + "/" + d.doc_id;
      out.documents.push_back(std::move(copy));
    }
  }
  out.Validate();
  return out;
}

std::vector<EmbeddingRow> DiscrepancyMatrix(
    std::span<const Corpus> corpora, std::span<const Document> queries,
    const DiscrepancyOptions &options) {
  ProfiledCorpora pc =
      ProfiledCorpora::Build(corpora, options.ngram, options.ngram_options);
  for (const CorpusProfile &c : pc.corpora) {
    if (c.size() < 2) {
      throw DataError("corpus '" + c.corpus_id +
                      "' needs at least two documents for leave-one-out");
    }
  }
  const HcScorer scorer(options.hc);
  std::vector<EmbeddingRow> rows;
  for (std::size_t h = 0; h < pc.corpora.size(); ++h) {
    const CorpusProfile &home = pc.corpora[h];
    for (std::size_t i = 0; i < home.size(); ++i) {
      EmbeddingRow row;
      row.doc_id = home.doc_ids[i];
      row.home = h;
      for (std::size_t j = 0; j < pc.corpora.size(); ++j) {
        const Profile &ref = pc.corpora[j].sum;
        row.d_hc.push_back(j == h ? scorer.Score(home.docs[i], ref - home.docs[i])
                                  : scorer.Score(home.docs[i], ref));
      }
      rows.push_back(std::move(row));
    }
  }
  for (const Document &q : queries) {
    const Profile p = pc.space.Intern(q);
    EmbeddingRow row;
    row.doc_id = q.doc_id;
    for (const CorpusProfile &c : pc.corpora) {
      row.d_hc.push_back(scorer.Score(p, c.sum));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace hcauthor
