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

// Interned feature ids and dense count profiles. The discrepancy and
// attribution code runs on these instead of FeatureToken-keyed maps so that
// leave-one-out loops reduce to integer vector arithmetic.

#ifndef HCAUTHOR_FEATURE_SPACE_H_
#define HCAUTHOR_FEATURE_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcauthor/corpus.h"
#include "hcauthor/ingest.h"

namespace hcauthor {

// Counts indexed by feature id. Ids past the end of `counts` are zero, so
// profiles created before the space grew stay valid.
class Profile {
 public:
  Profile() = default;

  std::int64_t count(std::size_t id) const {
    return id < counts_.size() ? counts_[id] : 0;
  }
  std::int64_t total() const { return total_; }
  // One past the largest id that may be nonzero.
  std::size_t extent() const { return counts_.size(); }
  bool empty() const { return total_ == 0; }

  void Add(std::size_t id, std::int64_t k = 1);

  Profile &operator+=(const Profile &other);
  // Throws DataError if a count would go negative.
  Profile &operator-=(const Profile &other);

  friend Profile operator+(Profile a, const Profile &b) { return a += b; }
  friend Profile operator-(Profile a, const Profile &b) { return a -= b; }
  // Equal when every count matches (trailing zeros are ignored).
  friend bool operator==(const Profile &a, const Profile &b);

 private:
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

class FeatureSpace {
 public:
  explicit FeatureSpace(std::size_t ngram = 1, NgramOptions options = {});

  std::size_t ngram() const { return ngram_; }
  const NgramOptions &ngram_options() const { return options_; }
  std::size_t size() const { return features_.size(); }
  const FeatureToken &feature(std::size_t id) const { return features_[id]; }
  std::optional<std::size_t> Find(const FeatureToken &t) const;

  // Expands the document to n-grams, interns new features and returns the
  // profile.
  Profile Intern(const Document &doc);
  // Like Intern but never grows the space; throws DataError on a feature
  // the space has not seen.
  Profile Lookup(const Document &doc) const;
  // Profile of an already expanded token sequence, interning new features.
  Profile InternTokens(std::span<const FeatureToken> tokens);

  FrequencyTable ToTable(const Profile &p) const;

 private:
  std::size_t ngram_;
  NgramOptions options_;
  std::vector<FeatureToken> features_;
  std::unordered_map<FeatureToken, std::size_t, FeatureTokenHash> ids_;
};

// Per-document profiles of one corpus plus their sum.
struct CorpusProfile {
  std::string corpus_id;
  std::vector<std::string> doc_ids;
  std::vector<Profile> docs;
  Profile sum;

  std::size_t size() const { return docs.size(); }
  // Copy with document i removed; the sum is updated by subtraction.
  CorpusProfile Without(std::size_t i) const;
  // Copy restricted to the given document indices.
  CorpusProfile Subset(std::span<const std::size_t> indices) const;
  void Append(std::string doc_id, Profile p);
};

// Profiles of several corpora over one shared feature space.
struct ProfiledCorpora {
  FeatureSpace space;
  std::vector<CorpusProfile> corpora;

  explicit ProfiledCorpora(std::size_t ngram = 1, NgramOptions options = {})
      : space(ngram, options) {}

  // Validates and interns every corpus. Throws DataError for a document
  // that is empty after n-gram expansion.
  static ProfiledCorpora Build(std::span<const Corpus> corpora,
                               std::size_t ngram = 1,
                               NgramOptions options = {});

  std::size_t document_count() const;
};

}  // namespace hcauthor

#endif  // HCAUTHOR_FEATURE_SPACE_H_
