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

#include "hcauthor/corpus.h"

#include <unordered_set>

#include "hcauthor/errors.h"

namespace hcauthor {

FeatureToken FeatureToken::Lemma(std::string lemma_id) {
  FeatureToken t;
  t.kind_ = FeatureKind::kLemma;
  t.lemma_id_ = std::move(lemma_id);
  return t;
}

FeatureToken FeatureToken::ProperName() {
  FeatureToken t;
  t.kind_ = FeatureKind::kProperName;
  return t;
}

FeatureToken FeatureToken::Gentilic() {
  FeatureToken t;
  t.kind_ = FeatureKind::kGentilic;
  return t;
}

FeatureToken FeatureToken::Ngram(std::span<const FeatureToken> parts) {
  if (parts.empty()) throw ArgumentError("n-gram needs at least one part");
  if (parts.size() == 1) return parts.front();
  FeatureToken t;
  t.parts_.reserve(parts.size());
  for (const FeatureToken &p : parts) {
    if (p.arity() != 1) throw ArgumentError("n-gram parts must be unigrams");
    t.parts_.push_back(p);
  }
  return t;
}

FeatureToken FeatureToken::FromString(const std::string &text) {
  if (text == kProperNameCode) return ProperName();
  if (text == kGentilicCode) return Gentilic();
  return Lemma(text);
}

std::string FeatureToken::str() const {
  if (!parts_.empty()) {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += '|';
      out += parts_[i].str();
    }
    return out;
  }
  switch (kind_) {
    case FeatureKind::kProperName:
      return kProperNameCode;
    case FeatureKind::kGentilic:
      return kGentilicCode;
    case FeatureKind::kLemma:
      break;
  }
  return lemma_id_;
}

std::strong_ordering operator<=>(const FeatureToken &a,
                                 const FeatureToken &b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.lemma_id_.compare(b.lemma_id_); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  const std::size_t n = std::min(a.parts_.size(), b.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.parts_[i] <=> b.parts_[i]; c != 0) return c;
  }
  return a.parts_.size() <=> b.parts_.size();
}

std::size_t FeatureToken::Hash() const {
  // boost::hash_combine mixing.
  std::size_t h = std::hash<int>()(static_cast<int>(kind_));
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(std::hash<std::string>()(lemma_id_));
  for (const FeatureToken &p : parts_) mix(p.Hash());
  return h;
}

void Corpus::Validate() const {
  if (corpus_id.empty()) throw DataError("corpus id is empty");
  if (documents.empty()) {
    throw DataError("corpus '" + corpus_id + "' has no documents");
  }
  std::unordered_set<std::string> seen;
  for (const Document &d : documents) {
    if (d.doc_id.empty()) {
      throw DataError("corpus '" + corpus_id + "' has a document without id");
    }
    if (!seen.insert(d.doc_id).second) {
      throw DataError("duplicate doc_id '" + d.doc_id + "' in corpus '" +
                      corpus_id + "'");
    }
  }
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const Document &d : documents) n += d.tokens.size();
  return n;
}

void FrequencyTable::Add(const FeatureToken &w, std::int64_t k) {
  if (k < 0) throw ArgumentError("negative count added to frequency table");
  if (k == 0) return;
  counts_[w] += k;
  total_ += k;
}

void FrequencyTable::Merge(const FrequencyTable &other) {
  for (const auto &[w, k] : other.counts_) Add(w, k);
}

void FrequencyTable::Subtract(const FrequencyTable &other) {
  for (const auto &[w, k] : other.counts_) {
    auto it = counts_.find(w);
    if (it == counts_.end() || it->second < k) {
      throw DataError("frequency table subtraction below zero for '" +
                      w.str() + "'");
    }
  }
  for (const auto &[w, k] : other.counts_) {
    auto it = counts_.find(w);
    it->second -= k;
    total_ -= k;
    if (it->second == 0) counts_.erase(it);
  }
}

std::int64_t FrequencyTable::count(const FeatureToken &w) const {
  auto it = counts_.find(w);
  return it == counts_.end() ? 0 : it->second;
}

}  // namespace hcauthor
