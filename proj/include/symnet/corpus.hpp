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

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace symnet::corpus {

struct Token {
  std::string surface;
  std::string lemma;
  std::size_t sentence_index = 0;
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

// One book after preprocessing.
struct Document {
  std::string id;
  std::string author;
  std::string title;
  std::vector<Token> tokens;
};

struct PreprocessConfig {
  // Compared case-insensitively.
  std::unordered_set<std::string> stopword_list;
  std::unordered_map<std::string, std::string> lemma_map;
  bool strip_boilerplate = true;
  bool cross_sentence_edges = false;
  // When false the whole text is treated as a single sentence.
  bool keep_punctuation_as_boundary = true;

  bool is_stopword(std::string_view word) const;
};

// A raw token from `tokenize`: lowercased surface and its sentence number.
struct RawToken {
  std::string surface;
  std::size_t sentence_index = 0;

  bool operator==(const RawToken&) const = default;
};

// Reads a UTF-8 file, drops a leading byte-order mark, and normalizes CRLF and
// lone CR line endings to LF. Invalid UTF-8 raises DecodeError with the byte
// offset. Only "utf-8" (any case, with or without the dash) is accepted as
// encoding.
std::string load_text(const std::filesystem::path& path, std::string_view encoding = "utf-8");

// Validates UTF-8; returns the offset of the first invalid byte or npos.
std::size_t find_invalid_utf8(std::string_view bytes);

// Normalizes CRLF / CR line endings to LF.
std::string normalize_newlines(std::string_view text);

// Keeps only the text strictly between a "*** START OF" marker and a later
// "*** END OF" marker. The start marker extends to its closing "***" (or the
// end of its line); text without both markers is returned unchanged.
std::string strip_boilerplate(std::string_view text);

// Splits on whitespace (and on "--" / em dash runs), strips leading and
// trailing punctuation, lowercases ASCII letters. A token whose trailing
// punctuation contains '.', '!' or '?' closes the current sentence.
std::vector<RawToken> tokenize(std::string_view text, bool punctuation_as_boundary = true);

// tokenize -> lemmatize (identity fallback) -> drop stopwords matched on the
// lemma or the surface form -> contiguous positions.
std::vector<Token> preprocess(std::string_view text, const PreprocessConfig& config);

// Pre-lemmatized input: one `surface<TAB>lemma` pair per line, a blank line
// or a terminal-punctuation surface closes a sentence. Stopword filtering and
// position assignment follow `preprocess`; the lemma map is not applied.
std::vector<Token> preprocess_tagged(std::string_view text, const PreprocessConfig& config);

// One word per line, '#' starts a comment, blank lines ignored.
std::unordered_set<std::string> parse_stopwords(std::string_view text);
std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path);

// `surface<TAB>lemma` per line; both sides lowercased.
std::unordered_map<std::string, std::string> parse_lemma_map(std::string_view text);
std::unordered_map<std::string, std::string> load_lemma_map(const std::filesystem::path& path);

struct ManifestEntry {
  std::string id;
  std::string author;
  std::string title;
  // Resolved against the manifest's directory when relative.
  std::filesystem::path path;
  // 1-based data row number, for error messages.
  std::size_t row = 0;
};

// CSV with header `id,author,title,path`; fields may be double-quoted.
std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir = {});
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

// Loads one manifest entry into a Document. Files ending in `.tsv` are read
// as pre-lemmatized input, everything else as plain text.
Document load_document(const ManifestEntry& entry, const PreprocessConfig& config);

// Lowercases ASCII letters; other bytes are left alone.
std::string ascii_lower(std::string_view s);

}  // namespace symnet::corpus
