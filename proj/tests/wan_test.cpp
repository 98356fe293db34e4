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

#include "symnet/wan.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>

#include "symnet/error.hpp"
#include "symnet/io.hpp"

namespace symnet::wan {
namespace {

namespace fs = std::filesystem;

std::vector<corpus::Token> sentence_tokens(const std::vector<std::pair<std::string, std::size_t>>& seq) {
  std::vector<corpus::Token> out;
  for (const auto& [lemma, sentence] : seq) {
    out.push_back({lemma, lemma, sentence, out.size()});
  }
  return out;
}

std::vector<corpus::Token> tokens_of(const std::vector<std::string>& lemmas) {
  std::vector<std::pair<std::string, std::size_t>> seq;
  for (const auto& l : lemmas) seq.emplace_back(l, 0);
  return sentence_tokens(seq);
}

TEST(BuildWan, CountsRepeatedAdjacency) {
  const auto net = build_wan(tokens_of({"cat", "run", "cat"}));
  ASSERT_EQ(net.node_count(), 2u);
  EXPECT_EQ(net.lemmas(), (std::vector<std::string>{"cat", "run"}));
  ASSERT_EQ(net.edge_count(), 1u);
  EXPECT_EQ(net.edges().front(), (WeightedEdge{0, 1, 2}));
  EXPECT_EQ(net.frequency(*net.find("cat")), 2u);
  EXPECT_EQ(net.frequency(*net.find("run")), 1u);
}

TEST(BuildWan, EmptyInput) {
  const auto net = build_wan({});
  EXPECT_TRUE(net.empty());
  EXPECT_EQ(net.edge_count(), 0u);
}

TEST(BuildWan, SentenceBoundaries) {
  const auto tokens = sentence_tokens({{"a", 0}, {"b", 0}, {"c", 1}});
  const auto within = build_wan(tokens, false);
  EXPECT_EQ(within.edges(), (std::vector<WeightedEdge>{{0, 1, 1}}));
  const auto across = build_wan(tokens, true);
  EXPECT_EQ(across.edges(), (std::vector<WeightedEdge>{{0, 1, 1}, {1, 2, 1}}));
  EXPECT_EQ(within.degree(2), 0u);
}

TEST(BuildWan, NoSelfLoops) {
  const auto net = build_wan(tokens_of({"a", "a", "b", "b", "a"}));
  EXPECT_EQ(net.edges(), (std::vector<WeightedEdge>{{0, 1, 2}}));
  EXPECT_EQ(net.strength(0), 2u);
}

std::vector<std::string> random_lemmas(std::mt19937_64& rng, std::size_t n, std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> pick(0, vocab - 1);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(pick(rng)));
  return out;
}

TEST(BuildWan, StructuralInvariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto seq = random_lemmas(rng, 1 + rng() % 80, 1 + rng() % 20);
    const auto net = build_wan(tokens_of(seq));
    const std::set<std::string> distinct(seq.begin(), seq.end());
    EXPECT_EQ(net.node_count(), distinct.size());
    EXPECT_LE(net.edge_count(), seq.size() - 1);
    std::uint64_t total = 0;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      EXPECT_GE(net.frequency(v), 1u);
      total += net.frequency(v);
      const auto nb = net.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (std::size_t i = 0; i < nb.size(); ++i) {
        EXPECT_NE(nb[i], v);
        // Symmetric: v appears in its neighbor's list with the same weight.
        const auto back = net.neighbors(nb[i]);
        const auto it = std::lower_bound(back.begin(), back.end(), v);
        ASSERT_TRUE(it != back.end() && *it == v);
        EXPECT_EQ(net.weights(nb[i])[static_cast<std::size_t>(it - back.begin())],
                  net.weights(v)[i]);
      }
    }
    EXPECT_EQ(total, seq.size());

    // Permuting tokens keeps nodes and frequencies.
    auto shuffled = seq;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const auto other = build_wan(tokens_of(shuffled));
    EXPECT_EQ(other.lemmas(), net.lemmas());
    for (NodeId v = 0; v < net.node_count(); ++v) EXPECT_EQ(other.frequency(v), net.frequency(v));
  }
}

TEST(BuildWan, OrderChangesEdges) {
  const auto a = build_wan(tokens_of({"x", "y", "z"}));
  const auto b = build_wan(tokens_of({"y", "x", "z"}));
  EXPECT_EQ(a.lemmas(), b.lemmas());
  EXPECT_NE(a.edges(), b.edges());
}

TEST(SharedVocabulary, Intersections) {
  const std::vector<WordNetwork> nets = {build_wan(tokens_of({"a", "b", "c"})),
                                         build_wan(tokens_of({"d", "c", "b"}))};
  EXPECT_EQ(shared_vocabulary(std::span<const WordNetwork>(nets)),
            (std::vector<std::string>{"b", "c"}));
  EXPECT_EQ(shared_vocabulary(std::span<const WordNetwork>(nets.data(), 1)),
            (std::vector<std::string>{"a", "b", "c"}));
  const std::vector<WordNetwork> disjoint = {build_wan(tokens_of({"a"})),
                                             build_wan(tokens_of({"b"}))};
  EXPECT_TRUE(shared_vocabulary(std::span<const WordNetwork>(disjoint)).empty());
}

TEST(EdgeList, FormatAndEmpty) {
  const auto net = build_wan(tokens_of({"run", "cat", "run"}));
  EXPECT_EQ(to_edge_list(net), "cat\trun\t2\n");
  EXPECT_EQ(to_edge_list(WordNetwork{}), "");
}

TEST(EdgeList, ParseErrors) {
  EXPECT_THROW(parse_edge_list("a\tb\n"), FormatError);
  EXPECT_THROW(parse_edge_list("a\tb\t0\n"), FormatError);
  EXPECT_THROW(parse_edge_list("a\ta\t1\n"), FormatError);
  EXPECT_THROW(parse_edge_list("a\tb\tx\n"), FormatError);
}

WordNetwork random_network(std::mt19937_64& rng) {
  const std::size_t n = 1 + rng() % 30;
  std::vector<std::string> lemmas;
  for (std::size_t i = 0; i < n; ++i) lemmas.push_back("l" + std::to_string(rng() % 1000) + "_" + std::to_string(i));
  std::vector<WeightedEdge> edges;
  for (std::size_t e = 0; e < rng() % 60; ++e) {
    const auto a = static_cast<NodeId>(rng() % n);
    const auto b = static_cast<NodeId>(rng() % n);
    if (a != b) edges.push_back({a, b, static_cast<std::uint32_t>(1 + rng() % 5)});
  }
  std::vector<std::uint64_t> freq(n);
  for (auto& f : freq) f = 1 + rng() % 9;
  return WordNetwork::from_parts(std::move(lemmas), std::move(freq), edges);
}

TEST(RoundTrip, EdgeListAndJsonAreIdentity) {
  std::mt19937_64 rng(11);
  const auto dir = fs::temp_directory_path() / ("symnet_wan_" + std::to_string(rng()));
  fs::create_directories(dir);
  for (int trial = 0; trial < 100; ++trial) {
    const auto net = random_network(rng);
    export_network(net, dir / "net.tsv");
    const auto back = import_network(dir / "net.tsv");
    EXPECT_EQ(to_edge_list(back), to_edge_list(net));
    EXPECT_EQ(back.edges().size(), net.edge_count());

    export_json(net, dir / "net.json");
    EXPECT_EQ(load_network(dir / "net.json"), net);
  }
  fs::remove_all(dir);
}

TEST(Json, LayoutAndUnknownFrequencies) {
  const auto net = build_wan(tokens_of({"cat", "run", "cat"}));
  EXPECT_EQ(to_json(net),
            "{\"edges\":[[0,1,2]],\"nodes\":[{\"freq\":2,\"lemma\":\"cat\"},{\"freq\":1,\"lemma\":"
            "\"run\"}]}\n");
  const auto imported = parse_edge_list("cat\trun\t2\n");
  EXPECT_FALSE(imported.has_frequencies());
  EXPECT_NE(to_json(imported).find("\"freq\":null"), std::string::npos);
  EXPECT_THROW(parse_json("{\"nodes\":[]}"), FormatError);
}

TEST(Export, UnwritablePath) {
  EXPECT_THROW(export_network(WordNetwork{}, "/nonexistent/dir/net.tsv"), IoError);
}

}  // namespace
}  // namespace symnet::wan
