// Copyright 2026 The symnet Authors
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

#include "symnet/corpus.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "symnet/error.hpp"

namespace symnet::corpus {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("symnet_corpus_" + std::to_string(std::random_device{}()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path write(const std::string& name, const std::string& bytes) const {
    auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << bytes;
    return p;
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<std::string> lemmas(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) out.push_back(t.lemma);
  return out;
}

TEST(LoadText, ReadsPlainFile) {
  TempDir dir;
  EXPECT_EQ(load_text(dir.write("book.txt", "It was.\n")), "It was.\n");
  EXPECT_EQ(load_text(dir.write("empty.txt", "")), "");
}

TEST(LoadText, NormalizesLineEndings) {
  const std::string raw = "one\r\ntwo\rthree\n\r\nfour";
  // Hand-written reference: every CR becomes LF, a CR directly followed by LF
  // collapses into that LF.
  std::string expected;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r' && i + 1 < raw.size() && raw[i + 1] == '\n') continue;
    expected += raw[i] == '\r' ? '\n' : raw[i];
  }
  ASSERT_EQ(expected, "one\ntwo\nthree\n\nfour");
  TempDir dir;
  EXPECT_EQ(load_text(dir.write("crlf.txt", raw)), expected);
}

TEST(LoadText, ReportsDecodeOffset) {
  TempDir dir;
  const auto p = dir.write("bad.txt", std::string("abc\xff" "def"));
  try {
    load_text(p);
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 3u);
  }
  // Truncated multi-byte sequence at the end.
  EXPECT_THROW(load_text(dir.write("cut.txt", std::string("ok\xE2\x80"))), DecodeError);
  EXPECT_NO_THROW(load_text(dir.write("good.txt", "caf\xC3\xA9 \xE2\x80\x94 ok")));
}

TEST(LoadText, MissingFileAndEncoding) {
  EXPECT_THROW(load_text("/nonexistent/book.txt"), IoError);
  TempDir dir;
  EXPECT_THROW(load_text(dir.write("a.txt", "x"), "latin-1"), InvalidArgument);
}

TEST(StripBoilerplate, KeepsTextBetweenMarkers) {
  EXPECT_EQ(strip_boilerplate("HEADER *** START OF X *** body *** END OF X *** FOOTER"), " body ");
  const std::string gutenberg =
      "Title page\n*** START OF THE PROJECT GUTENBERG EBOOK SALLY ***\nChapter one.\n"
      "*** END OF THE PROJECT GUTENBERG EBOOK SALLY ***\nlicense";
  EXPECT_EQ(strip_boilerplate(gutenberg), "\nChapter one.\n");
}

TEST(StripBoilerplate, PassesThroughWithoutBothMarkers) {
  EXPECT_EQ(strip_boilerplate("plain text"), "plain text");
  EXPECT_EQ(strip_boilerplate("x *** START OF Y *** body"), "x *** START OF Y *** body");
  EXPECT_EQ(strip_boilerplate("body *** END OF Y ***"), "body *** END OF Y ***");
}

TEST(Tokenize, SplitsSentences) {
  const std::vector<RawToken> want = {{"the", 0}, {"cat", 0}, {"sat", 0},
                                      {"a", 1},   {"dog", 1}, {"ran", 1}};
  EXPECT_EQ(tokenize("The cat sat. A dog ran!"), want);
  EXPECT_TRUE(tokenize("").empty());
}

TEST(Tokenize, KeepsInternalApostrophesAndHyphens) {
  EXPECT_EQ(tokenize("don't stop"), (std::vector<RawToken>{{"don't", 0}, {"stop", 0}}));
  EXPECT_EQ(tokenize("\"Well-known,\" she said."),
            (std::vector<RawToken>{{"well-known", 0}, {"she", 0}, {"said", 0}}));
}

TEST(Tokenize, DashesSeparateWordsAndNumbersSurvive) {
  EXPECT_EQ(tokenize("yes--no \xE2\x80\x9Cwait\xE2\x80\x9D 1914"),
            (std::vector<RawToken>{{"yes", 0}, {"no", 0}, {"wait", 0}, {"1914", 0}}));
}

TEST(Tokenize, StandalonePunctuationClosesSentenceOnce) {
  EXPECT_EQ(tokenize("Go . . . now ?! Then"),
            (std::vector<RawToken>{{"go", 0}, {"now", 1}, {"then", 2}}));
  EXPECT_EQ(tokenize("Go. Now.", false), (std::vector<RawToken>{{"go", 0}, {"now", 0}}));
}

TEST(Preprocess, LemmatizesAndDropsStopwords) {
  PreprocessConfig c;
  c.stopword_list = {"the"};
  c.lemma_map = {{"cats", "cat"}, {"ran", "run"}};
  EXPECT_EQ(lemmas(preprocess("the cats ran", c)), (std::vector<std::string>{"cat", "run"}));
}

TEST(Preprocess, AllStopwordsGiveNothing) {
  PreprocessConfig c;
  c.stopword_list = {"the", "of", "and"};
  EXPECT_TRUE(preprocess("The of AND the.", c).empty());
}

TEST(Preprocess, KeepsSentenceIndices) {
  PreprocessConfig c;
  c.lemma_map = {{"heals", "heal"}, {"flies", "fly"}};
  const auto t = preprocess("Time heals; time flies.", c);
  EXPECT_EQ(lemmas(t), (std::vector<std::string>{"time", "heal", "time", "fly"}));
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t[i].position, i);
    EXPECT_EQ(t[i].sentence_index, 0u);
  }
}

TEST(Preprocess, StopwordMatchesSurfaceOrLemma) {
  PreprocessConfig c;
  c.stopword_list = {"be", "Were"};
  c.lemma_map = {{"is", "be"}};
  // "is" goes via its lemma, "were" via its surface form.
  EXPECT_EQ(lemmas(preprocess("It is what they were", c)),
            (std::vector<std::string>{"it", "what", "they"}));
}

// Random texts over a small vocabulary with punctuation.
std::string random_text(std::mt19937_64& rng, std::size_t words) {
  static const std::vector<std::string> vocab = {"The", "cat", "cats", "ran", "run", "a",
                                                 "dog", "of",  "And", "time", "x-ray", "don't"};
  static const std::vector<std::string> tails = {"", "", "", ",", ".", "!", "?", ";"};
  std::uniform_int_distribution<std::size_t> w(0, vocab.size() - 1), t(0, tails.size() - 1);
  std::string out;
  for (std::size_t i = 0; i < words; ++i) out += vocab[w(rng)] + tails[t(rng)] + " ";
  return out;
}

PreprocessConfig sample_config() {
  PreprocessConfig c;
  c.stopword_list = {"the", "a", "of", "and"};
  c.lemma_map = {{"cats", "cat"}, {"ran", "run"}};
  return c;
}

TEST(PreprocessProperties, RandomTexts) {
  std::mt19937_64 rng(99);
  const auto c = sample_config();
  PreprocessConfig no_stop = c;
  no_stop.stopword_list.clear();
  for (int trial = 0; trial < 100; ++trial) {
    const auto text = random_text(rng, 60);
    const auto tokens = preprocess(text, c);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      EXPECT_FALSE(c.is_stopword(tokens[i].lemma));
      EXPECT_FALSE(c.is_stopword(tokens[i].surface));
      EXPECT_FALSE(tokens[i].lemma.empty());
      EXPECT_EQ(tokens[i].lemma, ascii_lower(tokens[i].lemma));
      EXPECT_EQ(tokens[i].position, i);
      if (i > 0) EXPECT_GE(tokens[i].sentence_index, tokens[i - 1].sentence_index);
    }
    // Removing k stopword occurrences shortens the list by exactly k.
    const auto all = preprocess(text, no_stop);
    std::size_t stops = 0;
    for (const auto& t : all) stops += c.is_stopword(t.lemma) || c.is_stopword(t.surface);
    EXPECT_EQ(tokens.size(), all.size() - stops);
    // Idempotence on the re-serialized lemma sequence.
    std::string again;
    for (const auto& t : tokens) again += t.lemma + " ";
    EXPECT_EQ(lemmas(preprocess(again, c)), lemmas(tokens));
  }
}

TEST(PreprocessTagged, ReadsSurfaceLemmaPairs) {
  PreprocessConfig c;
  c.stopword_list = {"the"};
  const auto t = preprocess_tagged("The\tthe\nCats\tcat\nran\trun\n.\t.\n\nDogs\tdog\n", c);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(lemmas(t), (std::vector<std::string>{"cat", "run", "dog"}));
  EXPECT_EQ(t[1].sentence_index, 0u);
  EXPECT_EQ(t[2].sentence_index, 1u);
  EXPECT_EQ(t[0].surface, "cats");
  EXPECT_THROW(preprocess_tagged("no tab here\n", c), FormatError);
}

TEST(ConfigFiles, StopwordsAndLemmaMap) {
  const auto stop = parse_stopwords("# articles\nThe\n a  # inline\n\nof\n");
  EXPECT_EQ(stop, (std::unordered_set<std::string>{"the", "a", "of"}));
  const auto lm = parse_lemma_map("Cats\tcat\n# comment\nran\tRun\n");
  EXPECT_EQ(lm.at("cats"), "cat");
  EXPECT_EQ(lm.at("ran"), "run");
  EXPECT_THROW(parse_lemma_map("broken line\n"), FormatError);
}

TEST(Manifest, ParsesQuotedFieldsAndResolvesPaths) {
  const auto m = parse_manifest(
      "id,author,title,path\n"
      "b1,Doyle,\"A Study in Scarlet, Part 1\",books/b1.txt\n"
      "b2,Hardy,\"The \"\"Return\"\"\",/abs/b2.txt\n",
      "/corpus");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].title, "A Study in Scarlet, Part 1");
  EXPECT_EQ(m[0].path, fs::path("/corpus/books/b1.txt"));
  EXPECT_EQ(m[1].title, "The \"Return\"");
  EXPECT_EQ(m[1].path, fs::path("/abs/b2.txt"));
  EXPECT_EQ(m[1].row, 2u);
}

TEST(Manifest, RejectsBadInput) {
  EXPECT_THROW(parse_manifest("name,path\nx,y\n"), FormatError);
  EXPECT_THROW(parse_manifest("id,author,title,path\nx,y\n"), FormatError);
  EXPECT_THROW(parse_manifest(""), FormatError);
}

TEST(LoadDocument, StripsBoilerplateAndPreprocesses) {
  TempDir dir;
  const auto p = dir.write("b.txt",
                           "Junk words\r\n*** START OF THIS EBOOK ***\r\nThe cats ran.\r\n"
                           "*** END OF THIS EBOOK ***\r\nlicense text");
  auto c = sample_config();
  const auto doc = load_document({"b", "Anon", "Book", p, 1}, c);
  EXPECT_EQ(doc.author, "Anon");
  EXPECT_EQ(lemmas(doc.tokens), (std::vector<std::string>{"cat", "run"}));
}

}  // namespace
}  // namespace symnet::corpus
