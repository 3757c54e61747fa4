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

// Reading lemmatized corpora and turning documents into frequency tables.
//
// Two input formats are supported:
//
//   * JSON lines, one document per line:
//       {"doc_id": "Gen.1", "tokens": [{"lemma": "430", "morph": "HNcmpa"}],
//        "verse_count": 31, "verse_breaks": [0, 11], "source_ref": "..."}
//     Only doc_id and tokens are required. A lemma of "<Np>" or "<Ng>" is
//     read back as the corresponding collapse code.
//
//   * OSHB-style morphology XML. Every <chapter> becomes one document; each
//     <w lemma="b/1121" morph="HR/Ncmsa"> yields one token per '/'-separated
//     lemma part. Words inside <note> elements (textual variants) are skipped.

#ifndef HCAUTHOR_INGEST_H_
#define HCAUTHOR_INGEST_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hcauthor/corpus.h"

namespace hcauthor {

Corpus ParseJsonl(std::istream &in, const std::string &corpus_id);
void EmitJsonl(const Corpus &corpus, std::ostream &out);

Corpus ParseMorphXml(std::istream &in, const std::string &corpus_id);

enum class MorphClass { kOther, kProperName, kGentilic };

// Classifies an OSHB morphology code such as "HNpm" or "Ng". An optional
// leading language letter (H or A) is accepted. Anything unrecognised is
// kOther.
MorphClass ClassifyMorph(const std::string &code);

// Replaces proper-name and gentilic lemmas by their collapse codes.
// morphs must be aligned with doc.tokens.
Document CollapseNames(const Document &doc,
                       std::span<const std::string> morphs);
// Uses doc.morphs. A document without morphology is returned unchanged.
Document CollapseNames(const Document &doc);
Corpus CollapseNames(const Corpus &corpus);

struct NgramOptions {
  // Restrict windows to a single verse. Requires doc.verse_breaks; ignored
  // for documents without them.
  bool within_verse = false;
};

// Contiguous windows of n unigrams. n = 1 is the identity. The result keeps
// doc_id and metadata; morphs are dropped for n > 1.
Document ExpandNgrams(const Document &doc, std::size_t n,
                      const NgramOptions &options = {});

FrequencyTable MakeFrequencyTable(std::span<const FeatureToken> tokens);
// Frequency table of a whole corpus after n-gram expansion of each document
// (windows never cross documents).
FrequencyTable MakeFrequencyTable(const Corpus &corpus, std::size_t n = 1,
                                  const NgramOptions &options = {});

// Sorted union of the keys of both tables.
std::vector<FeatureToken> Vocabulary(const FrequencyTable &t1,
                                     const FrequencyTable &t2);

}  // namespace hcauthor

#endif  // HCAUTHOR_INGEST_H_
