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

#include "hcauthor/ingest.h"

#include <expat.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <unordered_set>

#include "hcauthor/errors.h"
#include "json.hpp"

namespace hcauthor {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string Trim(const std::string &s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(Trim(s.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

void CheckVerseBreaks(const Document &doc, std::size_t line) {
  const auto &b = doc.verse_breaks;
  if (b.empty()) return;
  if (b.front() != 0) {
    throw ParseError("verse_breaks of '" + doc.doc_id + "' must start at 0",
                     line);
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] >= doc.tokens.size() || (i > 0 && b[i] <= b[i - 1])) {
      throw ParseError("verse_breaks of '" + doc.doc_id +
                           "' must be increasing token offsets",
                       line);
    }
  }
}

Document DocumentFromJson(const json &j, std::size_t line) {
  if (!j.is_object()) throw ParseError("expected a JSON object", line);
  Document doc;
  auto id = j.find("doc_id");
  if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw ParseError("missing or empty doc_id", line);
  }
  doc.doc_id = id->get<std::string>();

  auto tokens = j.find("tokens");
  if (tokens == j.end() || !tokens->is_array()) {
    throw ParseError("document '" + doc.doc_id + "' has no tokens array",
                     line);
  }
  if (tokens->empty()) {
    throw ParseError("document '" + doc.doc_id + "' has an empty tokens list",
                     line);
  }
  bool any_morph = false;
  for (const json &t : *tokens) {
    if (!t.is_object() || !t.contains("lemma") || !t["lemma"].is_string()) {
      throw ParseError("document '" + doc.doc_id +
                           "': every token needs a string lemma",
                       line);
    }
    doc.tokens.push_back(FeatureToken::FromString(t["lemma"].get<std::string>()));
    std::string morph;
    if (auto m = t.find("morph"); m != t.end() && !m->is_null()) {
      if (!m->is_string()) {
        throw ParseError("document '" + doc.doc_id + "': morph must be a string",
                         line);
      }
      morph = m->get<std::string>();
      any_morph = any_morph || !morph.empty();
    }
    doc.morphs.push_back(std::move(morph));
  }
  if (!any_morph) doc.morphs.clear();

  if (auto v = j.find("verse_count"); v != j.end() && !v->is_null()) {
    if (!v->is_number_unsigned() && !(v->is_number_integer() && *v >= 0)) {
      throw ParseError("verse_count must be a nonnegative integer", line);
    }
    doc.verse_count = v->get<std::size_t>();
  }
  if (auto v = j.find("verse_breaks"); v != j.end() && !v->is_null()) {
    if (!v->is_array()) throw ParseError("verse_breaks must be an array", line);
    for (const json &b : *v) {
      if (!b.is_number_integer() || b < 0) {
        throw ParseError("verse_breaks entries must be nonnegative", line);
      }
      doc.verse_breaks.push_back(b.get<std::size_t>());
    }
    CheckVerseBreaks(doc, line);
  }
  if (auto v = j.find("source_ref"); v != j.end() && v->is_string()) {
    doc.source_ref = v->get<std::string>();
  }
  return doc;
}

// --- OSHB XML ---------------------------------------------------------------

std::string LocalName(const XML_Char *name) {
  std::string s(name);
  const auto colon = s.rfind(':');
  return colon == std::string::npos ? s : s.substr(colon + 1);
}

const XML_Char *Attribute(const XML_Char **attrs, const char *key) {
  for (int i = 0; attrs[i] != nullptr; i += 2) {
    if (LocalName(attrs[i]) == key) return attrs[i + 1];
  }
  return nullptr;
}

struct XmlState {
  XML_Parser parser = nullptr;
  Corpus corpus;
  std::optional<Document> chapter;
  std::size_t note_depth = 0;
  std::size_t chapter_index = 0;
  std::unordered_set<std::string> ids;
  std::optional<ParseError> error;

  std::size_t line() const { return XML_GetCurrentLineNumber(parser); }
  std::size_t column() const { return XML_GetCurrentColumnNumber(parser) + 1; }

  void Fail(const std::string &what) {
    if (!error) error.emplace(what, line(), column());
    XML_StopParser(parser, XML_FALSE);
  }

  void OnStart(const std::string &name, const XML_Char **attrs) {
    if (name == "note") {
      ++note_depth;
      return;
    }
    if (note_depth > 0) return;
    if (name == "chapter") {
      if (chapter) return Fail("nested chapter element");
      ++chapter_index;
      chapter.emplace();
      const XML_Char *id = Attribute(attrs, "osisID");
      chapter->doc_id = id != nullptr ? std::string(id)
                                      : "chapter-" + std::to_string(chapter_index);
      chapter->source_ref = corpus.corpus_id;
    } else if (name == "verse") {
      if (!chapter) return;
      ++chapter->verse_count;
      chapter->verse_breaks.push_back(chapter->tokens.size());
    } else if (name == "w") {
      OnWord(attrs);
    }
  }

  void OnWord(const XML_Char **attrs) {
    const XML_Char *lemma = Attribute(attrs, "lemma");
    const XML_Char *id = Attribute(attrs, "id");
    const std::string label =
        id != nullptr ? "word '" + std::string(id) + "'" : "word element";
    if (lemma == nullptr) return Fail(label + " is missing the lemma attribute");
    if (!chapter) return Fail(label + " appears outside any chapter");

    const std::vector<std::string> lemmas = Split(lemma, '/');
    std::vector<std::string> morphs;
    if (const XML_Char *morph = Attribute(attrs, "morph"); morph != nullptr) {
      morphs = Split(morph, '/');
      // The language letter prefixes only the first segment ("HR/Ncfsa").
      if (!morphs.empty() && !morphs.front().empty()) {
        const char lang = morphs.front().front();
        if (lang == 'H' || lang == 'A') {
          for (std::size_t i = 1; i < morphs.size(); ++i) {
            if (!morphs[i].empty()) morphs[i] = lang + morphs[i];
          }
        }
      }
    }
    for (std::size_t i = 0; i < lemmas.size(); ++i) {
      if (lemmas[i].empty()) return Fail(label + " has an empty lemma part");
      chapter->tokens.push_back(FeatureToken::FromString(lemmas[i]));
      chapter->morphs.push_back(i < morphs.size() ? morphs[i] : "");
    }
  }

  void OnEnd(const std::string &name) {
    if (name == "note") {
      if (note_depth > 0) --note_depth;
      return;
    }
    if (note_depth > 0 || name != "chapter" || !chapter) return;
    Document doc = std::move(*chapter);
    chapter.reset();
    if (doc.tokens.empty()) return Fail("chapter '" + doc.doc_id + "' has no words");
    if (!ids.insert(doc.doc_id).second) {
      return Fail("duplicate chapter id '" + doc.doc_id + "'");
    }
    // A chapter whose first verse starts after leading words keeps those
    // words in an implicit first verse.
    if (!doc.verse_breaks.empty() && doc.verse_breaks.front() != 0) {
      doc.verse_breaks.insert(doc.verse_breaks.begin(), 0);
    }
    // Empty trailing verses would repeat an offset; drop duplicates.
    doc.verse_breaks.erase(
        std::unique(doc.verse_breaks.begin(), doc.verse_breaks.end()),
        doc.verse_breaks.end());
    while (!doc.verse_breaks.empty() &&
           doc.verse_breaks.back() >= doc.tokens.size()) {
      doc.verse_breaks.pop_back();
    }
    if (std::all_of(doc.morphs.begin(), doc.morphs.end(),
                    [](const std::string &m) { return m.empty(); })) {
      doc.morphs.clear();
    }
    corpus.documents.push_back(std::move(doc));
  }
};

void XMLCALL StartElement(void *data, const XML_Char *name,
                          const XML_Char **attrs) {
  auto *state = static_cast<XmlState *>(data);
  state->OnStart(LocalName(name), attrs);
}

void XMLCALL EndElement(void *data, const XML_Char *name) {
  static_cast<XmlState *>(data)->OnEnd(LocalName(name));
}

struct ParserDeleter {
  void operator()(XML_ParserStruct *p) const { XML_ParserFree(p); }
};

}  // namespace

Corpus ParseJsonl(std::istream &in, const std::string &corpus_id) {
  Corpus corpus;
  corpus.corpus_id = corpus_id;
  std::unordered_set<std::string> ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (Trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error &e) {
      throw ParseError(std::string("malformed JSON: ") + e.what(), line_no);
    }
    Document doc = DocumentFromJson(j, line_no);
    if (!ids.insert(doc.doc_id).second) {
      throw ParseError("duplicate doc_id '" + doc.doc_id + "'", line_no);
    }
    corpus.documents.push_back(std::move(doc));
  }
  corpus.Validate();
  return corpus;
}

void EmitJsonl(const Corpus &corpus, std::ostream &out) {
  for (const Document &doc : corpus.documents) {
    ordered_json j;
    j["doc_id"] = doc.doc_id;
    ordered_json tokens = ordered_json::array();
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      ordered_json t;
      t["lemma"] = doc.tokens[i].str();
      if (i < doc.morphs.size() && !doc.morphs[i].empty()) {
        t["morph"] = doc.morphs[i];
      }
      tokens.push_back(std::move(t));
    }
    j["tokens"] = std::move(tokens);
    if (doc.verse_count > 0) j["verse_count"] = doc.verse_count;
    if (!doc.verse_breaks.empty()) j["verse_breaks"] = doc.verse_breaks;
    if (!doc.source_ref.empty()) j["source_ref"] = doc.source_ref;
    out << j.dump() << '\n';
  }
}

Corpus ParseMorphXml(std::istream &in, const std::string &corpus_id) {
  std::unique_ptr<XML_ParserStruct, ParserDeleter> parser(
      XML_ParserCreate("UTF-8"));
  if (!parser) throw Error("cannot allocate XML parser");
  XmlState state;
  state.parser = parser.get();
  state.corpus.corpus_id = corpus_id;
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), StartElement, EndElement);

  char buffer[1 << 16];
  bool done = false;
  while (!done) {
    in.read(buffer, sizeof(buffer));
    const std::streamsize got = in.gcount();
    done = got < static_cast<std::streamsize>(sizeof(buffer));
    if (XML_Parse(parser.get(), buffer, static_cast<int>(got),
                  done ? XML_TRUE : XML_FALSE) == XML_STATUS_ERROR) {
      if (state.error) throw *state.error;
      throw ParseError(std::string("malformed XML: ") +
                           XML_ErrorString(XML_GetErrorCode(parser.get())),
                       XML_GetCurrentLineNumber(parser.get()),
                       XML_GetCurrentColumnNumber(parser.get()) + 1);
    }
  }
  if (state.error) throw *state.error;
  if (state.corpus.documents.empty()) {
    throw DataError("XML input contains no chapter elements with words");
  }
  state.corpus.Validate();
  return std::move(state.corpus);
}

MorphClass ClassifyMorph(const std::string &code) {
  std::size_t pos = 0;
  if (code.size() >= 2 && (code[0] == 'H' || code[0] == 'A') &&
      code[1] == 'N') {
    pos = 1;
  }
  if (pos + 1 >= code.size() || code[pos] != 'N') return MorphClass::kOther;
  switch (code[pos + 1]) {
    case 'p':
      return MorphClass::kProperName;
    case 'g':
      return MorphClass::kGentilic;
    default:
      return MorphClass::kOther;
  }
}

Document CollapseNames(const Document &doc,
                       std::span<const std::string> morphs) {
  if (morphs.size() != doc.tokens.size()) {
    throw ArgumentError("document '" + doc.doc_id + "': " +
                        std::to_string(morphs.size()) + " morphology codes for " +
                        std::to_string(doc.tokens.size()) + " tokens");
  }
  Document out = doc;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    FeatureToken &t = out.tokens[i];
    if (t.arity() != 1 || t.is_code()) continue;
    switch (ClassifyMorph(morphs[i])) {
      case MorphClass::kProperName:
        t = FeatureToken::ProperName();
        break;
      case MorphClass::kGentilic:
        t = FeatureToken::Gentilic();
        break;
      case MorphClass::kOther:
        break;
    }
  }
  return out;
}

Document CollapseNames(const Document &doc) {
  if (doc.morphs.empty()) return doc;
  return CollapseNames(doc, doc.morphs);
}

Corpus CollapseNames(const Corpus &corpus) {
  Corpus out;
  out.corpus_id = corpus.corpus_id;
  out.documents.reserve(corpus.documents.size());
  for (const Document &d : corpus.documents) {
    out.documents.push_back(CollapseNames(d));
  }
  return out;
}

Document ExpandNgrams(const Document &doc, std::size_t n,
                      const NgramOptions &options) {
  if (n == 0) throw ArgumentError("n-gram order must be positive");
  if (n == 1) return doc;

  Document out;
  out.doc_id = doc.doc_id;
  out.verse_count = doc.verse_count;
  out.source_ref = doc.source_ref;

  // Segments [begin, end) inside which windows may be taken.
  std::vector<std::pair<std::size_t, std::size_t>> segments;
  if (options.within_verse && !doc.verse_breaks.empty()) {
    for (std::size_t v = 0; v < doc.verse_breaks.size(); ++v) {
      const std::size_t end = v + 1 < doc.verse_breaks.size()
                                  ? doc.verse_breaks[v + 1]
                                  : doc.tokens.size();
      segments.emplace_back(doc.verse_breaks[v], end);
    }
  } else {
    segments.emplace_back(0, doc.tokens.size());
  }

  std::span<const FeatureToken> tokens(doc.tokens);
  for (const auto &[begin, end] : segments) {
    if (end - begin < n) continue;
    for (std::size_t i = begin; i + n <= end; ++i) {
      out.tokens.push_back(FeatureToken::Ngram(tokens.subspan(i, n)));
    }
  }
  return out;
}

FrequencyTable MakeFrequencyTable(std::span<const FeatureToken> tokens) {
  FrequencyTable table;
  for (const FeatureToken &t : tokens) table.Add(t);
  return table;
}

FrequencyTable MakeFrequencyTable(const Corpus &corpus, std::size_t n,
                                  const NgramOptions &options) {
  FrequencyTable table;
  for (const Document &d : corpus.documents) {
    if (n == 1) {
      for (const FeatureToken &t : d.tokens) table.Add(t);
    } else {
      for (const FeatureToken &t : ExpandNgrams(d, n, options).tokens) {
        table.Add(t);
      }
    }
  }
  return table;
}

std::vector<FeatureToken> Vocabulary(const FrequencyTable &t1,
                                     const FrequencyTable &t2) {
  std::vector<FeatureToken> out;
  out.reserve(t1.size() + t2.size());
  auto a = t1.begin();
  auto b = t2.begin();
  while (a != t1.end() || b != t2.end()) {
    if (b == t2.end() || (a != t1.end() && a->first < b->first)) {
      out.push_back((a++)->first);
    } else if (a == t1.end() || b->first < a->first) {
      out.push_back((b++)->first);
    } else {
      out.push_back(a->first);
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace hcauthor
