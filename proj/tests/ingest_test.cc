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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "hcauthor/errors.h"

namespace hcauthor {
namespace {

std::vector<FeatureToken> Lemmas(std::initializer_list<const char *> ids) {
  std::vector<FeatureToken> out;
  for (const char *id : ids) out.push_back(FeatureToken::Lemma(id));
  return out;
}

Document Doc(std::string id, std::initializer_list<const char *> ids) {
  Document d;
  d.doc_id = std::move(id);
  d.tokens = Lemmas(ids);
  return d;
}

Corpus ReadXml(const std::string &name, const std::string &id = "mini") {
  std::ifstream in(std::string(HCAUTHOR_TESTDATA) + "/" + name);
  EXPECT_TRUE(in.good());
  return ParseMorphXml(in, id);
}

TEST(FeatureTokenTest, CodesRenderAndCarryNoLemma) {
  EXPECT_EQ(FeatureToken::ProperName().str(), "<Np>");
  EXPECT_EQ(FeatureToken::Gentilic().str(), "<Ng>");
  EXPECT_EQ(FeatureToken::ProperName().lemma_id(), "");
  EXPECT_EQ(FeatureToken::FromString("<Np>"), FeatureToken::ProperName());
  EXPECT_EQ(FeatureToken::FromString("<Ng>"), FeatureToken::Gentilic());
  EXPECT_EQ(FeatureToken::FromString("430"), FeatureToken::Lemma("430"));
}

TEST(FeatureTokenTest, OrderIsKindThenLemmaThenParts) {
  const FeatureToken a = FeatureToken::Lemma("1");
  const FeatureToken b = FeatureToken::Lemma("2");
  EXPECT_LT(a, b);
  EXPECT_LT(b, FeatureToken::ProperName());
  EXPECT_LT(FeatureToken::ProperName(), FeatureToken::Gentilic());
  const std::vector<FeatureToken> ab{a, b}, ba{b, a};
  EXPECT_LT(FeatureToken::Ngram(ab), FeatureToken::Ngram(ba));
  EXPECT_EQ(FeatureToken::Ngram(ab).arity(), 2u);
  EXPECT_EQ(FeatureToken::Ngram(ab).str(), "1|2");
  EXPECT_EQ(a.arity(), 1u);
  EXPECT_TRUE(a.parts().empty());
  EXPECT_EQ(FeatureTokenHash{}(FeatureToken::Ngram(ab)),
            FeatureTokenHash{}(FeatureToken::Ngram(std::vector{a, b})));
}

TEST(ParseJsonlTest, SingleTokenPassthrough) {
  std::istringstream in(
      R"({"doc_id":"Gen1","tokens":[{"lemma":"430","morph":"HNcmpa"}]})");
  const Corpus c = ParseJsonl(in, "c");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.documents[0].doc_id, "Gen1");
  EXPECT_EQ(c.documents[0].tokens, Lemmas({"430"}));
  EXPECT_EQ(c.documents[0].morphs, std::vector<std::string>{"HNcmpa"});
}

TEST(ParseJsonlTest, KeepsFileOrderAndMetadata) {
  std::ifstream in(std::string(HCAUTHOR_TESTDATA) + "/small.jsonl");
  const Corpus c = ParseJsonl(in, "small");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.documents[0].doc_id, "Gen1");
  EXPECT_EQ(c.documents[1].doc_id, "Gen2");
  EXPECT_EQ(c.documents[2].doc_id, "Gen3");
  EXPECT_EQ(c.documents[1].verse_count, 2u);
  EXPECT_EQ(c.documents[1].verse_breaks, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(c.documents[2].source_ref, "Gen 3:1-2");
  EXPECT_TRUE(c.documents[2].morphs.empty());
  EXPECT_EQ(c.token_count(), 6u);
}

TEST(ParseJsonlTest, DuplicateIdIsAnError) {
  std::istringstream in(
      "{\"doc_id\":\"A\",\"tokens\":[{\"lemma\":\"1\"}]}\n"
      "{\"doc_id\":\"A\",\"tokens\":[{\"lemma\":\"2\"}]}\n");
  try {
    ParseJsonl(in, "c");
    FAIL() << "expected a ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("A"), std::string::npos);
  }
}

TEST(ParseJsonlTest, EmptyTokensNamesTheDocument) {
  std::istringstream in("{\"doc_id\":\"Lev9\",\"tokens\":[]}\n");
  try {
    ParseJsonl(in, "c");
    FAIL() << "expected a ParseError";
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("Lev9"), std::string::npos);
  }
}

TEST(ParseJsonlTest, MalformedLineReportsLineNumber) {
  std::ifstream in(std::string(HCAUTHOR_TESTDATA) + "/bad.jsonl");
  try {
    ParseJsonl(in, "bad");
    FAIL() << "expected a ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseJsonlTest, SkipsBlankLines) {
  std::istringstream in("\n{\"doc_id\":\"A\",\"tokens\":[{\"lemma\":\"1\"}]}\n\n");
  EXPECT_EQ(ParseJsonl(in, "c").size(), 1u);
}

TEST(JsonlRoundTripTest, EmitThenParseIsIdentity) {
  std::ifstream in(std::string(HCAUTHOR_TESTDATA) + "/small.jsonl");
  const Corpus c = ParseJsonl(in, "small");
  std::ostringstream out;
  EmitJsonl(c, out);
  std::istringstream back(out.str());
  EXPECT_EQ(ParseJsonl(back, "small").documents, c.documents);

  const Corpus x = ReadXml("mini.xml");
  std::ostringstream out2;
  EmitJsonl(CollapseNames(x), out2);
  std::istringstream back2(out2.str());
  const Corpus y = ParseJsonl(back2, "mini");
  EXPECT_EQ(y.documents, CollapseNames(x).documents);
}

TEST(ParseMorphXmlTest, ChaptersBecomeDocuments) {
  const Corpus c = ReadXml("mini.xml");
  ASSERT_EQ(c.size(), 2u);
  const Document &d = c.documents[0];
  EXPECT_EQ(d.doc_id, "Mini.1");
  // Multi-part lemmas give one token per part; the word inside the note is
  // not part of the text.
  EXPECT_EQ(d.tokens, Lemmas({"b", "7225", "1254 a", "430", "c", "d", "4872",
                              "3669", "8085"}));
  EXPECT_EQ(d.morphs,
            (std::vector<std::string>{"HR", "HNcfsa", "HVqp3ms", "HNcmpa", "HC",
                                      "HTd", "HNp", "HNgmsa", "HVqp3cp"}));
  EXPECT_EQ(d.verse_count, 2u);
  EXPECT_EQ(d.verse_breaks, (std::vector<std::size_t>{0, 4}));
  EXPECT_EQ(c.documents[1].tokens, Lemmas({"430", "8085"}));
  EXPECT_EQ(c.documents[1].verse_count, 1u);
}

TEST(ParseMorphXmlTest, TwoAndThreePartLemmas) {
  std::istringstream two(
      "<osis><chapter osisID=\"a\"><w lemma=\"b/1121\"/></chapter></osis>");
  EXPECT_EQ(ParseMorphXml(two, "x").documents[0].tokens, Lemmas({"b", "1121"}));
  std::istringstream three(
      "<osis><chapter osisID=\"a\"><w lemma=\"c/b/1121\"/></chapter></osis>");
  EXPECT_EQ(ParseMorphXml(three, "x").documents[0].tokens.size(), 3u);
}

TEST(ParseMorphXmlTest, CountsWordsAndVerses) {
  std::string xml = "<osis><chapter osisID=\"c\">";
  for (int v = 0; v < 5; ++v) {
    xml += "<verse>";
    for (int w = 0; w < 16; ++w) xml += "<w lemma=\"" + std::to_string(w) + "\"/>";
    xml += "</verse>";
  }
  xml += "</chapter></osis>";
  std::istringstream in(xml);
  const Corpus c = ParseMorphXml(in, "x");
  EXPECT_EQ(c.documents[0].tokens.size(), 80u);
  EXPECT_EQ(c.documents[0].verse_count, 5u);
}

TEST(ParseMorphXmlTest, MissingLemmaNamesTheWord) {
  try {
    ReadXml("nolemma.xml");
    FAIL() << "expected a ParseError";
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("07c"), std::string::npos);
    EXPECT_EQ(e.line(), 1u);
  }
}

TEST(ParseMorphXmlTest, MalformedXmlHasLocation) {
  std::istringstream in("<osis>\n<chapter osisID=\"a\"><w lemma=\"1\">\n</osis>");
  try {
    ParseMorphXml(in, "x");
    FAIL() << "expected a ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(ClassifyMorphTest, NounTypeLetters) {
  EXPECT_EQ(ClassifyMorph("HNp"), MorphClass::kProperName);
  EXPECT_EQ(ClassifyMorph("Npm"), MorphClass::kProperName);
  EXPECT_EQ(ClassifyMorph("HNgmsa"), MorphClass::kGentilic);
  EXPECT_EQ(ClassifyMorph("ANgmsa"), MorphClass::kGentilic);
  EXPECT_EQ(ClassifyMorph("HNcmpa"), MorphClass::kOther);
  EXPECT_EQ(ClassifyMorph("HVqp3ms"), MorphClass::kOther);
  EXPECT_EQ(ClassifyMorph(""), MorphClass::kOther);
  EXPECT_EQ(ClassifyMorph("zzz"), MorphClass::kOther);
}

TEST(CollapseNamesTest, ReplacesNamesAndGentilics) {
  const Document d = Doc("d", {"85", "8085", "x"});
  const std::vector<std::string> morphs{"HNp", "HVqp3ms", "HNgmsa"};
  const Document c = CollapseNames(d, morphs);
  EXPECT_EQ(c.tokens, (std::vector<FeatureToken>{FeatureToken::ProperName(),
                                                 FeatureToken::Lemma("8085"),
                                                 FeatureToken::Gentilic()}));
}

TEST(CollapseNamesTest, IdempotentAndLengthPreserving) {
  const Corpus c = ReadXml("mini.xml");
  const Corpus once = CollapseNames(c);
  const Corpus twice = CollapseNames(once);
  EXPECT_EQ(once.documents, twice.documents);
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(once.documents[i].tokens.size(), c.documents[i].tokens.size());
  }
  EXPECT_EQ(once.documents[0].tokens[6], FeatureToken::ProperName());
  EXPECT_EQ(once.documents[0].tokens[7], FeatureToken::Gentilic());
}

TEST(CollapseNamesTest, LengthMismatchThrows) {
  const Document d = Doc("d", {"1", "2"});
  const std::vector<std::string> morphs{"HNp"};
  EXPECT_THROW(CollapseNames(d, morphs), ArgumentError);
}

TEST(ExpandNgramsTest, SlidingWindows) {
  const Document abc = Doc("d", {"a", "b", "c"});
  const Document bi = ExpandNgrams(abc, 2);
  ASSERT_EQ(bi.tokens.size(), 2u);
  EXPECT_EQ(bi.tokens[0], FeatureToken::Ngram(Lemmas({"a", "b"})));
  EXPECT_EQ(bi.tokens[1], FeatureToken::Ngram(Lemmas({"b", "c"})));
  EXPECT_TRUE(ExpandNgrams(Doc("d", {"a"}), 2).tokens.empty());
  const Document tri = ExpandNgrams(Doc("d", {"a", "b", "c", "d"}), 3);
  EXPECT_EQ(tri.tokens,
            (std::vector<FeatureToken>{FeatureToken::Ngram(Lemmas({"a", "b", "c"})),
                                       FeatureToken::Ngram(Lemmas({"b", "c", "d"}))}));
  EXPECT_THROW(ExpandNgrams(abc, 0), ArgumentError);
}

TEST(ExpandNgramsTest, WithinVerseWindows) {
  Document d = Doc("d", {"a", "b", "c", "d", "e"});
  d.verse_breaks = {0, 3};
  d.verse_count = 2;
  NgramOptions opts;
  opts.within_verse = true;
  const Document bi = ExpandNgrams(d, 2, opts);
  // (c, d) crosses the break.
  EXPECT_EQ(bi.tokens.size(), 3u);
  EXPECT_EQ(ExpandNgrams(d, 2).tokens.size(), 4u);
}

TEST(ExpandNgramsTest, LengthProperty) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    Document d;
    d.doc_id = "d";
    const std::size_t len = gen() % 12;
    for (std::size_t i = 0; i < len; ++i) {
      d.tokens.push_back(FeatureToken::Lemma(std::to_string(gen() % 4)));
    }
    EXPECT_EQ(ExpandNgrams(d, 1).tokens, d.tokens);
    for (std::size_t n = 1; n <= 4; ++n) {
      const std::size_t expect = len >= n ? len - n + 1 : 0;
      EXPECT_EQ(ExpandNgrams(d, n).tokens.size(), expect);
    }
  }
}

TEST(FrequencyTableTest, CountsAndTotal) {
  const FrequencyTable t = MakeFrequencyTable(Lemmas({"a", "b", "a"}));
  EXPECT_EQ(t.count(FeatureToken::Lemma("a")), 2);
  EXPECT_EQ(t.count(FeatureToken::Lemma("b")), 1);
  EXPECT_EQ(t.count(FeatureToken::Lemma("z")), 0);
  EXPECT_EQ(t.total(), 3);
  EXPECT_EQ(t.size(), 2u);
  const FrequencyTable e = MakeFrequencyTable(std::vector<FeatureToken>{});
  EXPECT_TRUE(e.empty());
  EXPECT_EQ(e.total(), 0);
}

TEST(FrequencyTableTest, MultisetRoundTrip) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FeatureToken> tokens;
    const std::size_t len = gen() % 30;
    for (std::size_t i = 0; i < len; ++i) {
      tokens.push_back(FeatureToken::Lemma(std::to_string(gen() % 6)));
    }
    const FrequencyTable t = MakeFrequencyTable(tokens);
    EXPECT_EQ(t.total(), static_cast<std::int64_t>(len));
    std::vector<FeatureToken> rebuilt;
    for (const auto &[w, k] : t) {
      EXPECT_GT(k, 0);
      rebuilt.insert(rebuilt.end(), k, w);
    }
    std::sort(tokens.begin(), tokens.end());
    EXPECT_EQ(rebuilt, tokens);
  }
}

TEST(FrequencyTableTest, SubtractBelowZeroThrows) {
  FrequencyTable a = MakeFrequencyTable(Lemmas({"a"}));
  const FrequencyTable b = MakeFrequencyTable(Lemmas({"a", "a"}));
  EXPECT_THROW(a.Subtract(b), DataError);
}

TEST(FrequencyTableTest, CorpusTableDoesNotCrossDocuments) {
  Corpus c;
  c.corpus_id = "c";
  c.documents = {Doc("1", {"a", "b"}), Doc("2", {"c", "d"})};
  const FrequencyTable t = MakeFrequencyTable(c, 2);
  EXPECT_EQ(t.total(), 2);
  EXPECT_EQ(t.count(FeatureToken::Ngram(Lemmas({"b", "c"}))), 0);
}

TEST(VocabularyTest, SortedUnion) {
  const FrequencyTable a = MakeFrequencyTable(Lemmas({"a"}));
  const FrequencyTable b = MakeFrequencyTable(Lemmas({"b", "b"}));
  const FrequencyTable a3 = MakeFrequencyTable(Lemmas({"a", "a", "a"}));
  EXPECT_EQ(Vocabulary(a, b), Lemmas({"a", "b"}));
  EXPECT_EQ(Vocabulary(b, a), Lemmas({"a", "b"}));
  EXPECT_EQ(Vocabulary(a, a3), Lemmas({"a"}));
  EXPECT_TRUE(Vocabulary(FrequencyTable{}, FrequencyTable{}).empty());
}

TEST(CorpusTest, ValidateRejectsBadCorpora) {
  Corpus c;
  c.corpus_id = "c";
  EXPECT_THROW(c.Validate(), DataError);
  c.documents = {Doc("1", {"a"}), Doc("1", {"b"})};
  EXPECT_THROW(c.Validate(), DataError);
  c.documents[1].doc_id = "2";
  EXPECT_NO_THROW(c.Validate());
  c.corpus_id = "";
  EXPECT_THROW(c.Validate(), DataError);
}

}  // namespace
}  // namespace hcauthor
