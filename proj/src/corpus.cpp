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

#include <algorithm>
#include <array>
#include <cctype>

#include "symnet/error.hpp"
#include "symnet/io.hpp"

namespace symnet::corpus {
namespace {

constexpr std::string_view kStartMarker = "*** START OF";
constexpr std::string_view kEndMarker = "*** END OF";

// Multi-byte punctuation common in public-domain e-texts.
constexpr std::array<std::string_view, 12> kUnicodePunctuation = {
    "“", "”", "‘", "’", "«", "»",
    "–", "—", "…", "¡", "¿", "―"};

bool is_space(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Length of the punctuation character starting at s[i], or 0.
std::size_t punct_at(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUnicodePunctuation) {
    if (s.substr(i, p.size()) == p) return p.size();
  }
  return 0;
}

// Length of the punctuation character ending just before s[end], or 0.
std::size_t punct_before(std::string_view s, std::size_t end) {
  const auto c = static_cast<unsigned char>(s[end - 1]);
  if (c < 0x80) return std::ispunct(c) ? 1 : 0;
  for (auto p : kUnicodePunctuation) {
    if (p.size() <= end && s.substr(end - p.size(), p.size()) == p) return p.size();
  }
  return 0;
}

bool has_terminal(std::string_view punct) {
  return punct.find_first_of(".!?") != std::string_view::npos;
}

// Word separators inside a whitespace-delimited chunk.
std::size_t separator_at(std::string_view s, std::size_t i) {
  if (s.substr(i, 2) == "--") return 2;
  if (s.substr(i, 3) == "—" || s.substr(i, 3) == "―") return 3;
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, ++line_no);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

// Lowercased copy of the stopword list, so hand-built configs still compare
// case-insensitively.
std::unordered_set<std::string> lowered(const std::unordered_set<std::string>& words) {
  std::unordered_set<std::string> out;
  for (const auto& w : words) out.insert(ascii_lower(w));
  return out;
}

std::vector<Token> filter_and_number(std::vector<Token> tokens, const PreprocessConfig& config) {
  const auto stopwords = lowered(config.stopword_list);
  const auto is_stop = [&](const std::string& w) { return stopwords.count(ascii_lower(w)) > 0; };
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (auto& t : tokens) {
    if (t.lemma.empty()) continue;
    if (is_stop(t.lemma) || is_stop(t.surface)) continue;
    t.position = out.size();
    out.push_back(std::move(t));
  }
  return out;
}

// Splits one CSV record; quotes may wrap fields and "" escapes a quote.
std::vector<std::string> split_csv_record(std::string_view line, std::size_t row) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
    } else if (c == '"' && field.empty() && !quoted) {
      in_quotes = quoted = true;
    } else if (c == ',') {
      fields.push_back(quoted ? field : std::string(trim(field)));
      field.clear();
      quoted = false;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) throw FormatError("manifest row " + std::to_string(row) + ": unterminated quote");
  fields.push_back(quoted ? field : std::string(trim(field)));
  return fields;
}

}  // namespace

bool PreprocessConfig::is_stopword(std::string_view word) const {
  const auto lower = ascii_lower(word);
  for (const auto& s : stopword_list) {
    if (ascii_lower(s) == lower) return true;
  }
  return false;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::size_t find_invalid_utf8(std::string_view bytes) {
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t n = bytes.size();
  std::size_t i = 0;
  while (i < n) {
    const unsigned char c = p[i];
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((p[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (p[i + k] & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range code points.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF) {
      return i;
    }
    i += len;
  }
  return std::string_view::npos;
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

std::string load_text(const std::filesystem::path& path, std::string_view encoding) {
  auto enc = ascii_lower(encoding);
  if (enc != "utf-8" && enc != "utf8") {
    throw InvalidArgument("unsupported encoding '" + std::string(encoding) + "'");
  }
  std::string bytes = io::read_file(path);
  if (const auto bad = find_invalid_utf8(bytes); bad != std::string_view::npos) {
    throw DecodeError(path.string(), bad);
  }
  std::string_view view(bytes);
  if (view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
  return normalize_newlines(view);
}

std::string strip_boilerplate(std::string_view text) {
  const auto start = text.find(kStartMarker);
  if (start == std::string_view::npos) return std::string(text);
  const auto after_start = start + kStartMarker.size();
  const auto line_end = std::min(text.find('\n', after_start), text.size());
  auto close = text.find("***", after_start);
  std::size_t body_begin = 0;
  if (close != std::string_view::npos && close < line_end) {
    body_begin = close + 3;
  } else {
    body_begin = line_end;
  }
  const auto end = text.find(kEndMarker, body_begin);
  if (end == std::string_view::npos) return std::string(text);
  return std::string(text.substr(body_begin, end - body_begin));
}

std::vector<RawToken> tokenize(std::string_view text, bool punctuation_as_boundary) {
  std::vector<RawToken> out;
  std::size_t sentence = 0;
  bool sentence_open = false;

  auto emit_chunk = [&](std::string_view chunk) {
    std::size_t b = 0;
    std::size_t e = chunk.size();
    while (b < e) {
      const auto len = punct_at(chunk, b);
      if (len == 0) break;
      b += len;
    }
    const auto core_begin = b;
    while (e > core_begin) {
      const auto len = punct_before(chunk, e);
      if (len == 0) break;
      e -= len;
    }
    const auto core = chunk.substr(core_begin, e - core_begin);
    if (!core.empty()) {
      out.push_back({ascii_lower(core), sentence});
      sentence_open = true;
    }
    const auto trailing = core.empty() ? chunk : chunk.substr(e);
    if (punctuation_as_boundary && sentence_open && has_terminal(trailing)) {
      ++sentence;
      sentence_open = false;
    }
  };

  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_space(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t chunk_begin = i;
    while (i < n && !is_space(static_cast<unsigned char>(text[i]))) {
      if (const auto sep = separator_at(text, i); sep > 0) {
        emit_chunk(text.substr(chunk_begin, i - chunk_begin));
        i += sep;
        chunk_begin = i;
      } else {
        ++i;
      }
    }
    if (i > chunk_begin) emit_chunk(text.substr(chunk_begin, i - chunk_begin));
  }
  return out;
}

std::vector<Token> preprocess(std::string_view text, const PreprocessConfig& config) {
  const auto raw = tokenize(text, config.keep_punctuation_as_boundary);
  std::vector<Token> tokens;
  tokens.reserve(raw.size());
  for (const auto& r : raw) {
    Token t;
    t.surface = r.surface;
    const auto it = config.lemma_map.find(r.surface);
    t.lemma = it != config.lemma_map.end() ? it->second : r.surface;
    t.sentence_index = r.sentence_index;
    tokens.push_back(std::move(t));
  }
  return filter_and_number(std::move(tokens), config);
}

std::vector<Token> preprocess_tagged(std::string_view text, const PreprocessConfig& config) {
  std::vector<Token> tokens;
  std::size_t sentence = 0;
  bool sentence_open = false;
  auto close_sentence = [&] {
    if (config.keep_punctuation_as_boundary && sentence_open) {
      ++sentence;
      sentence_open = false;
    }
  };
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (trim(line).empty()) {
      close_sentence();
      return;
    }
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError("tagged input line " + std::to_string(line_no) +
                        ": expected surface<TAB>lemma");
    }
    const auto surface = ascii_lower(trim(line.substr(0, tab)));
    const auto lemma = ascii_lower(trim(line.substr(tab + 1)));
    bool all_punct = !surface.empty();
    for (std::size_t i = 0; i < surface.size() && all_punct;) {
      const auto len = punct_at(surface, i);
      if (len == 0) all_punct = false;
      i += std::max<std::size_t>(len, 1);
    }
    if (all_punct) {
      if (has_terminal(surface)) close_sentence();
      return;
    }
    if (lemma.empty()) return;
    tokens.push_back(Token{surface, lemma, sentence, 0});
    sentence_open = true;
  });
  return filter_and_number(std::move(tokens), config);
}

std::unordered_set<std::string> parse_stopwords(std::string_view text) {
  std::unordered_set<std::string> out;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.insert(ascii_lower(line));
  });
  return out;
}

std::unordered_set<std::string> load_stopwords(const std::filesystem::path& path) {
  return parse_stopwords(load_text(path));
}

std::unordered_map<std::string, std::string> parse_lemma_map(std::string_view text) {
  std::unordered_map<std::string, std::string> out;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (trim(line).empty() || trim(line).front() == '#') return;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw FormatError("lemma map line " + std::to_string(line_no) +
                        ": expected surface<TAB>lemma");
    }
    auto surface = ascii_lower(trim(line.substr(0, tab)));
    auto lemma = ascii_lower(trim(line.substr(tab + 1)));
    if (surface.empty() || lemma.empty()) {
      throw FormatError("lemma map line " + std::to_string(line_no) + ": empty field");
    }
    out[std::move(surface)] = std::move(lemma);
  });
  return out;
}

std::unordered_map<std::string, std::string> load_lemma_map(const std::filesystem::path& path) {
  return parse_lemma_map(load_text(path));
}

std::vector<ManifestEntry> parse_manifest(std::string_view text,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> entries;
  bool header_seen = false;
  std::size_t row = 0;
  for_each_line(text, [&](std::string_view line, std::size_t) {
    if (trim(line).empty()) return;
    if (!header_seen) {
      auto header = split_csv_record(line, 0);
      if (header != std::vector<std::string>{"id", "author", "title", "path"}) {
        throw FormatError("manifest header must be 'id,author,title,path'");
      }
      header_seen = true;
      return;
    }
    ++row;
    auto fields = split_csv_record(line, row);
    if (fields.size() != 4) {
      throw FormatError("manifest row " + std::to_string(row) + ": expected 4 fields, got " +
                        std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[3].empty()) {
      throw FormatError("manifest row " + std::to_string(row) + ": empty id or path");
    }
    std::filesystem::path p(fields[3]);
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    entries.push_back({fields[0], fields[1], fields[2], p, row});
  });
  if (!header_seen) throw FormatError("manifest is empty");
  return entries;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  return parse_manifest(load_text(path), path.parent_path());
}

Document load_document(const ManifestEntry& entry, const PreprocessConfig& config) {
  Document doc{entry.id, entry.author, entry.title, {}};
  auto text = load_text(entry.path);
  if (entry.path.extension() == ".tsv") {
    doc.tokens = preprocess_tagged(text, config);
  } else {
    if (config.strip_boilerplate) text = strip_boilerplate(text);
    doc.tokens = preprocess(text, config);
  }
  return doc;
}

}  // namespace symnet::corpus
