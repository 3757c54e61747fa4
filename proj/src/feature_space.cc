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

#include "hcauthor/feature_space.h"

#include <algorithm>

#include "hcauthor/errors.h"

namespace hcauthor {

void Profile::Add(std::size_t id, std::int64_t k) {
  if (id >= counts_.size()) counts_.resize(id + 1, 0);
  if (counts_[id] + k < 0) throw DataError("profile count below zero");
  counts_[id] += k;
  total_ += k;
}

Profile &Profile::operator+=(const Profile &other) {
  if (other.counts_.size() > counts_.size()) {
    counts_.resize(other.counts_.size(), 0);
  }
  for (std::size_t i = 0; i < other.counts_.size(); ++i) {
    counts_[i] += other.counts_[i];
  }
  total_ += other.total_;
  return *this;
}

Profile &Profile::operator-=(const Profile &other) {
  for (std::size_t i = 0; i < other.counts_.size(); ++i) {
    if (other.counts_[i] > count(i)) {
      throw DataError("profile subtraction below zero");
    }
  }
  for (std::size_t i = 0; i < other.counts_.size(); ++i) {
    if (other.counts_[i] != 0) counts_[i] -= other.counts_[i];
  }
  total_ -= other.total_;
  return *this;
}

bool operator==(const Profile &a, const Profile &b) {
  if (a.total_ != b.total_) return false;
  const std::size_t n = std::max(a.counts_.size(), b.counts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.count(i) != b.count(i)) return false;
  }
  return true;
}

FeatureSpace::FeatureSpace(std::size_t ngram, NgramOptions options)
    : ngram_(ngram), options_(options) {
  if (ngram == 0) throw ArgumentError("n-gram order must be positive");
}

std::optional<std::size_t> FeatureSpace::Find(const FeatureToken &t) const {
  auto it = ids_.find(t);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Profile FeatureSpace::InternTokens(std::span<const FeatureToken> tokens) {
  Profile p;
  for (const FeatureToken &t : tokens) {
    auto [it, inserted] = ids_.try_emplace(t, features_.size());
    if (inserted) features_.push_back(t);
    p.Add(it->second);
  }
  return p;
}

Profile FeatureSpace::Intern(const Document &doc) {
  if (ngram_ == 1) return InternTokens(doc.tokens);
  return InternTokens(ExpandNgrams(doc, ngram_, options_).tokens);
}

Profile FeatureSpace::Lookup(const Document &doc) const {
  const Document expanded =
      ngram_ == 1 ? Document{} : ExpandNgrams(doc, ngram_, options_);
  const std::vector<FeatureToken> &tokens =
      ngram_ == 1 ? doc.tokens : expanded.tokens;
  Profile p;
  for (const FeatureToken &t : tokens) {
    auto it = ids_.find(t);
    if (it == ids_.end()) {
      throw DataError("feature '" + t.str() + "' of '" + doc.doc_id +
                      "' is not in the feature space");
    }
    p.Add(it->second);
  }
  return p;
}

FrequencyTable FeatureSpace::ToTable(const Profile &p) const {
  FrequencyTable table;
  for (std::size_t id = 0; id < p.extent(); ++id) {
    if (p.count(id) > 0) table.Add(features_.at(id), p.count(id));
  }
  return table;
}

CorpusProfile CorpusProfile::Without(std::size_t i) const {
  if (i >= docs.size()) throw ArgumentError("document index out of range");
  CorpusProfile out;
  out.corpus_id = corpus_id;
  out.doc_ids.reserve(docs.size() - 1);
  out.docs.reserve(docs.size() - 1);
  for (std::size_t j = 0; j < docs.size(); ++j) {
    if (j == i) continue;
    out.doc_ids.push_back(doc_ids[j]);
    out.docs.push_back(docs[j]);
  }
  out.sum = sum - docs[i];
  return out;
}

CorpusProfile CorpusProfile::Subset(std::span<const std::size_t> indices) const {
  CorpusProfile out;
  out.corpus_id = corpus_id;
  for (std::size_t i : indices) out.Append(doc_ids.at(i), docs.at(i));
  return out;
}

void CorpusProfile::Append(std::string doc_id, Profile p) {
  sum += p;
  doc_ids.push_back(std::move(doc_id));
  docs.push_back(std::move(p));
}

ProfiledCorpora ProfiledCorpora::Build(std::span<const Corpus> corpora,
                                       std::size_t ngram,
                                       NgramOptions options) {
  ProfiledCorpora out(ngram, options);
  for (const Corpus &c : corpora) {
    c.Validate();
    CorpusProfile cp;
    cp.corpus_id = c.corpus_id;
    for (const Document &d : c.documents) {
      Profile p = out.space.Intern(d);
      if (p.empty()) {
        throw DataError("document '" + d.doc_id + "' of corpus '" +
                        c.corpus_id + "' is empty at n-gram order " +
                        std::to_string(ngram));
      }
      cp.Append(d.doc_id, std::move(p));
    }
    out.corpora.push_back(std::move(cp));
  }
  return out;
}

std::size_t ProfiledCorpora::document_count() const {
  std::size_t n = 0;
  for (const CorpusProfile &c : corpora) n += c.size();
  return n;
}

}  // namespace hcauthor
