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

// Core value types: features, documents, corpora and frequency tables.

#ifndef HCAUTHOR_CORPUS_H_
#define HCAUTHOR_CORPUS_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hcauthor {

enum class FeatureKind : std::uint8_t {
  kLemma = 0,
  kProperName = 1,  // rendered "<Np>"
  kGentilic = 2,    // rendered "<Ng>"
};

inline constexpr const char kProperNameCode[] = "<Np>";
inline constexpr const char kGentilicCode[] = "<Ng>";

// The unit of counting. A unigram is a lemma id or one of the two collapse
// codes; an n-gram (arity > 1) holds its unigram parts in order and has
// kind kLemma with an empty lemma id.
class FeatureToken {
 public:
  FeatureToken() = default;

  static FeatureToken Lemma(std::string lemma_id);
  static FeatureToken ProperName();
  static FeatureToken Gentilic();
  // Builds an n-gram from consecutive unigrams. A single part yields that
  // part unchanged.
  static FeatureToken Ngram(std::span<const FeatureToken> parts);
  // Inverse of str() for unigrams: "<Np>" and "<Ng>" map to the codes.
  static FeatureToken FromString(const std::string &text);

  FeatureKind kind() const { return kind_; }
  const std::string &lemma_id() const { return lemma_id_; }
  const std::vector<FeatureToken> &parts() const { return parts_; }
  std::size_t arity() const { return parts_.empty() ? 1 : parts_.size(); }
  bool is_code() const { return kind_ != FeatureKind::kLemma; }

  // "8085", "<Np>", or parts joined with '|' for n-grams.
  std::string str() const;

  friend bool operator==(const FeatureToken &, const FeatureToken &) = default;
  friend std::strong_ordering operator<=>(const FeatureToken &a,
                                          const FeatureToken &b);

  std::size_t Hash() const;

 private:
  FeatureKind kind_ = FeatureKind::kLemma;
  std::string lemma_id_;
  std::vector<FeatureToken> parts_;
};

struct FeatureTokenHash {
  std::size_t operator()(const FeatureToken &t) const { return t.Hash(); }
};

// One text. Tokens are unigrams in reading order. morphs is either empty
// or aligned 1:1 with tokens. verse_breaks, when present, holds the token
// offset at which each verse starts (first entry 0).
struct Document {
  std::string doc_id;
  std::vector<FeatureToken> tokens;
  std::vector<std::string> morphs;
  std::vector<std::size_t> verse_breaks;
  std::size_t verse_count = 0;  // 0 = unknown
  std::string source_ref;

  friend bool operator==(const Document &, const Document &) = default;
};

// A named group of documents of homogeneous authorship.
struct Corpus {
  std::string corpus_id;
  std::vector<Document> documents;

  // Throws DataError unless the id is nonempty, there is at least one
  // document, every doc id is nonempty and the ids are unique.
  void Validate() const;

  std::size_t size() const { return documents.size(); }
  // Sum of token counts over all documents.
  std::size_t token_count() const;

  friend bool operator==(const Corpus &, const Corpus &) = default;
};

// Feature -> positive count. Zero entries are never stored.
class FrequencyTable {
 public:
  using Map = std::map<FeatureToken, std::int64_t>;

  FrequencyTable() = default;

  void Add(const FeatureToken &w, std::int64_t k = 1);
  void Merge(const FrequencyTable &other);
  // Removes other's counts. Throws DataError if any count would go
  // negative.
  void Subtract(const FrequencyTable &other);

  std::int64_t count(const FeatureToken &w) const;
  std::int64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }
  const Map &counts() const { return counts_; }

  Map::const_iterator begin() const { return counts_.begin(); }
  Map::const_iterator end() const { return counts_.end(); }

  friend bool operator==(const FrequencyTable &,
                         const FrequencyTable &) = default;

 private:
  Map counts_;
  std::int64_t total_ = 0;
};

}  // namespace hcauthor

template <>
struct std::hash<hcauthor::FeatureToken> {
  std::size_t operator()(const hcauthor::FeatureToken &t) const {
    return t.Hash();
  }
};

#endif  // HCAUTHOR_CORPUS_H_
