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

#include "symnet/concentric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "support/oracle.hpp"
#include "symnet/error.hpp"

namespace symnet::concentric {
namespace {

using ::symnet::testing::BruteForceOracle;
using ::symnet::testing::make_network;

WordNetwork path5() { return make_network(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}); }

// c=0 joined to a=1, b=2; a-x (3), a-y (4), b-z (5).
WordNetwork uneven_tree() { return make_network(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}); }

// c=0 joined to a=1, b=2; a-b intra edge; a-x (3), a-y (4), b-y.
WordNetwork merge_example() {
  return make_network(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}});
}

std::map<std::pair<int, std::vector<NodeId>>, double> keyed(const TransformedPattern& tp,
                                                           const TransitionDistribution& d) {
  std::map<std::pair<int, std::vector<NodeId>>, double> out;
  for (const auto& o : d.terminal_mass) {
    out[{o.level, tp.super_nodes[static_cast<std::size_t>(o.level)][o.super_node]}] += o.mass;
  }
  return out;
}

TEST(ExtractPattern, PathCenterLevels) {
  const auto p = extract_pattern(path5(), 2, 2);
  EXPECT_EQ(p.levels[0], (std::vector<NodeId>{2}));
  EXPECT_EQ(p.levels[1], (std::vector<NodeId>{1, 3}));
  EXPECT_EQ(p.levels[2], (std::vector<NodeId>{0, 4}));
  for (const auto& e : p.intra_edges) EXPECT_TRUE(e.empty());
  EXPECT_EQ(p.inter_edges[0], (std::vector<Edge>{{2, 1}, {2, 3}}));
  EXPECT_EQ(p.inter_edges[1], (std::vector<Edge>{{1, 0}, {3, 4}}));
}

TEST(ExtractPattern, StarLeavesFormFirstLevel) {
  const auto star = make_network(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const auto p = extract_pattern(star, 0, 1);
  EXPECT_EQ(p.levels[1], (std::vector<NodeId>{1, 2, 3, 4}));
}

TEST(ExtractPattern, TriangleHasIntraEdgeAndEmptySecondLevel) {
  const auto tri = make_network(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto p = extract_pattern(tri, 0, 2);
  EXPECT_EQ(p.levels[1], (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(p.intra_edges[1], (std::vector<Edge>{{1, 2}}));
  EXPECT_TRUE(p.levels[2].empty());
}

TEST(ExtractPattern, RejectsUnknownNodeAndBadLevel) {
  EXPECT_THROW(extract_pattern(path5(), 9, 2), InvalidArgument);
  EXPECT_THROW(extract_pattern(path5(), 0, 0), InvalidArgument);
}

TEST(BackboneTransform, TriangleLeavesTwoDeadEnds) {
  const auto tri = make_network(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto tp = backbone_transform(extract_pattern(tri, 0, 2));
  EXPECT_EQ(tp.super_nodes[1].size(), 2u);
  EXPECT_EQ(tp.dead_end_count, (std::vector<std::size_t>{0, 2}));
  const auto d = propagate(tp);
  ASSERT_EQ(d.terminal_mass.size(), 2u);
  EXPECT_DOUBLE_EQ(d.terminal_mass[0].mass, 0.5);
  EXPECT_DOUBLE_EQ(symmetry_of(tp).value(), 1.0);
}

TEST(BackboneTransform, DropsIntraLevelEdges) {
  // Two-level pattern with intra edges at both levels.
  const auto net = make_network(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 5}, {5, 6}});
  const auto p = extract_pattern(net, 0, 2);
  std::size_t original = 0;
  for (const auto& e : p.intra_edges) original += e.size();
  for (const auto& e : p.inter_edges) original += e.size();
  const auto tp = backbone_transform(p);
  std::size_t kept = 0;
  for (const auto& links : tp.weighted_inter_edges) kept += links.size();
  EXPECT_LT(kept, original);
  for (const auto& level : tp.super_nodes)
    for (const auto& s : level) EXPECT_EQ(s.size(), 1u);
}

TEST(MergedTransform, MergesConnectedPairWithEdgeWeights) {
  const auto tp = merged_transform(extract_pattern(merge_example(), 0, 2));
  ASSERT_EQ(tp.super_nodes[1].size(), 1u);
  EXPECT_EQ(tp.super_nodes[1][0], (std::vector<NodeId>{1, 2}));
  EXPECT_EQ(tp.super_nodes[2], (std::vector<std::vector<NodeId>>{{3}, {4}}));
  EXPECT_EQ(tp.weighted_inter_edges[0], (std::vector<SuperLink>{{0, 0, 2}}));
  EXPECT_EQ(tp.weighted_inter_edges[1], (std::vector<SuperLink>{{0, 0, 1}, {0, 1, 2}}));
  const auto d = propagate(tp);
  ASSERT_EQ(d.terminal_mass.size(), 2u);
  EXPECT_NEAR(d.terminal_mass[0].mass, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(d.terminal_mass[1].mass, 2.0 / 3.0, 1e-15);
}

TEST(MergedTransform, SeparatePairsStaySeparate) {
  const auto net = make_network(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
  const auto tp = merged_transform(extract_pattern(net, 0, 1));
  EXPECT_EQ(tp.super_nodes[1], (std::vector<std::vector<NodeId>>{{1, 2}, {3, 4}}));
}

TEST(MergedTransform, FixedPointWithoutIntraEdges) {
  const auto p = extract_pattern(uneven_tree(), 0, 2);
  const auto merged = merged_transform(p);
  const auto backbone = backbone_transform(p);
  EXPECT_EQ(merged.super_nodes, backbone.super_nodes);
  EXPECT_EQ(merged.weighted_inter_edges, backbone.weighted_inter_edges);
  for (const auto& links : merged.weighted_inter_edges)
    for (const auto& l : links) EXPECT_EQ(l.weight, 1u);
}

TEST(Propagate, PathSplitsEvenly) {
  const auto tp = backbone_transform(extract_pattern(path5(), 2, 2));
  const auto d = propagate(tp);
  ASSERT_EQ(d.terminal_mass.size(), 2u);
  EXPECT_DOUBLE_EQ(d.terminal_mass[0].mass, 0.5);
  EXPECT_DOUBLE_EQ(d.terminal_mass[1].mass, 0.5);
}

TEST(Propagate, UnevenTreeMatchesEnumeration) {
  const auto net = uneven_tree();
  const auto tp = backbone_transform(extract_pattern(net, 0, 2));
  const auto got = keyed(tp, propagate(tp));
  const auto want = BruteForceOracle(net, 0, 2, false).result().masses;
  ASSERT_EQ(got.size(), want.size());
  for (const auto& [key, p] : want) EXPECT_NEAR(got.at(key), p, 1e-15);
  // x and y split a's half; z takes all of b's.
  EXPECT_DOUBLE_EQ(got.at({2, {3}}), 0.25);
  EXPECT_DOUBLE_EQ(got.at({2, {4}}), 0.25);
  EXPECT_DOUBLE_EQ(got.at({2, {5}}), 0.5);
}

TEST(Symmetry, ReferenceValues) {
  EXPECT_DOUBLE_EQ(*symmetry(path5(), 2, 2, SymmetryKind::backbone).value, 1.0);
  const double expected = 2.0 * std::sqrt(2.0) / 3.0;
  const auto net = uneven_tree();
  EXPECT_NEAR(*symmetry(net, 0, 2, SymmetryKind::backbone).value, expected, 1e-12);
  EXPECT_NEAR(BruteForceOracle(net, 0, 2, false).result().symmetry(), expected, 1e-12);
  EXPECT_NEAR(*symmetry(net, 0, 2, SymmetryKind::backbone).value, 0.9428090415820634, 1e-12);
}

TEST(Symmetry, DeadEndAtFirstLevel) {
  const auto edge = make_network(2, {{0, 1}});
  const auto p = extract_pattern(edge, 0, 2);
  const auto tp = backbone_transform(p);
  EXPECT_EQ(tp.dead_end_count, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(tp.super_nodes[2].empty());
  EXPECT_DOUBLE_EQ(*symmetry_of(tp), 1.0);
  EXPECT_DOUBLE_EQ(*symmetry(edge, 0, 2, SymmetryKind::merged).value, 1.0);
}

TEST(Symmetry, MergedExampleValue) {
  // Outcomes 1/3 and 2/3 over two level-2 super-nodes.
  const double h = -(1.0 / 3.0) * std::log(1.0 / 3.0) - (2.0 / 3.0) * std::log(2.0 / 3.0);
  EXPECT_NEAR(*symmetry(merge_example(), 0, 2, SymmetryKind::merged).value, std::exp(h) / 2.0,
              1e-12);
}

TEST(Symmetry, IsolatedNodeIsUndefined) {
  const auto net = make_network(3, {{0, 1}});
  const auto s = symmetry(net, 2, 1, SymmetryKind::backbone);
  EXPECT_FALSE(s.defined());
  EXPECT_FALSE(symmetry_of(backbone_transform(extract_pattern(net, 2, 3))).has_value());
}

TEST(Symmetry, UnknownNodeThrows) {
  EXPECT_THROW(symmetry(path5(), 5, 2, SymmetryKind::merged), InvalidArgument);
  EXPECT_THROW(symmetry(path5(), 0, 0, SymmetryKind::merged), InvalidArgument);
}

TEST(SymmetryAll, PathOfFiveIsPerfectlySymmetric) {
  const auto values = symmetry_all(path5(), 2, SymmetryKind::backbone, 1);
  ASSERT_EQ(values.size(), 5u);
  for (const auto& v : values) EXPECT_DOUBLE_EQ(*v.value, 1.0);
}

TEST(SymmetryAll, EmptyNetwork) {
  EXPECT_TRUE(symmetry_all(WordNetwork{}, 2, SymmetryKind::merged).empty());
}

TEST(SymmetryAll, ThreadCountDoesNotChangeBits) {
  std::mt19937_64 rng(7);
  const auto net = testing::random_graph(200, 0.03, rng);
  for (auto kind : {SymmetryKind::backbone, SymmetryKind::merged}) {
    const auto one = symmetry_all(net, 3, kind, 1);
    const auto many = symmetry_all(net, 3, kind, 4);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      ASSERT_EQ(one[i].value.has_value(), many[i].value.has_value());
      if (one[i].value) EXPECT_EQ(*one[i].value, *many[i].value);
    }
  }
}

// Structural properties over many random graphs.
class RandomPatterns : public ::testing::TestWithParam<int> {};

TEST_P(RandomPatterns, InvariantsHold) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(GetParam()));
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  const auto net = testing::random_graph(static_cast<std::size_t>(size(rng)), density(rng), rng);
  SymmetryEngine engine(net);
  for (int h = 1; h <= 3; ++h) {
    const auto all_b = symmetry_all(net, h, SymmetryKind::backbone, 2);
    const auto all_m = symmetry_all(net, h, SymmetryKind::merged, 2);
    for (NodeId v = 0; v < net.node_count(); ++v) {
      const auto p = extract_pattern(net, v, h);
      bool has_intra = false;
      for (const auto& e : p.intra_edges) has_intra = has_intra || !e.empty();
      const auto b = backbone_transform(p);
      const auto m = merged_transform(p);
      for (const auto* tp : {&b, &m}) {
        const auto d = propagate(*tp);
        if (p.levels[1].empty()) continue;
        EXPECT_NEAR(d.total(), 1.0, 1e-12);
        std::size_t positive = 0;
        for (const auto& o : d.terminal_mass) positive += o.mass > 0.0 ? 1 : 0;
        std::size_t denominator = tp->super_nodes[static_cast<std::size_t>(h)].size();
        for (auto x : tp->dead_end_count) denominator += x;
        EXPECT_EQ(positive, denominator);
        EXPECT_EQ(tp->dead_end_count[0], 0u);
        const auto s = symmetry_of(*tp);
        ASSERT_TRUE(s.has_value());
        EXPECT_GT(*s, 0.0);
        EXPECT_LE(*s, 1.0 + 1e-15);
      }
      // Merging preserves the total inter-level weight.
      for (int r = 0; r < h; ++r) {
        std::uint64_t merged_weight = 0;
        for (const auto& l : m.weighted_inter_edges[r]) merged_weight += l.weight;
        EXPECT_EQ(merged_weight, p.inter_edges[r].size());
      }
      if (!has_intra) {
        EXPECT_EQ(symmetry_of(b), symmetry_of(m));
      }
      // Fast engine, structural path and symmetry_all agree.
      const auto fast = engine.evaluate(v, h, true, true);
      ASSERT_EQ(fast.backbone.has_value(), symmetry_of(b).has_value());
      if (fast.backbone) {
        EXPECT_NEAR(*fast.backbone, *symmetry_of(b), 1e-12);
        EXPECT_NEAR(*fast.merged, *symmetry_of(m), 1e-12);
        EXPECT_EQ(*all_b[v].value, *fast.backbone);
        EXPECT_EQ(*all_m[v].value, *fast.merged);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPatterns, ::testing::Range(0, 100));

TEST(OracleEquivalence, RandomGraphsBothKinds) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(2, 12);
  std::uniform_real_distribution<double> density(0.2, 0.6);
  for (int trial = 0; trial < 60; ++trial) {
    const auto net = testing::random_graph(static_cast<std::size_t>(size(rng)), density(rng), rng);
    for (int h = 1; h <= 3; ++h) {
      for (NodeId v = 0; v < net.node_count(); ++v) {
        for (bool merged : {false, true}) {
          const BruteForceOracle oracle(net, v, h, merged);
          const auto tp = transform(extract_pattern(net, v, h),
                                    merged ? SymmetryKind::merged : SymmetryKind::backbone);
          const auto s = symmetry_of(tp);
          if (oracle.result().isolated) {
            EXPECT_FALSE(s.has_value());
            continue;
          }
          const auto got = keyed(tp, propagate(tp));
          const auto& want = oracle.result().masses;
          ASSERT_EQ(got.size(), want.size());
          for (const auto& [key, p] : want) {
            ASSERT_TRUE(got.count(key));
            EXPECT_NEAR(got.at(key), p, 1e-10);
          }
          EXPECT_NEAR(*s, oracle.result().symmetry(), 1e-10);
        }
      }
    }
  }
}

TEST(PerfectTrees, CenterIsPerfectlySymmetric) {
  for (int k : {2, 3}) {
    for (int h = 1; h <= 4; ++h) {
      const auto tree = testing::kary_tree(k, h + 1);
      EXPECT_NEAR(*symmetry(tree, 0, h, SymmetryKind::backbone).value, 1.0, 1e-12);
      EXPECT_NEAR(*symmetry(tree, 0, h, SymmetryKind::merged).value, 1.0, 1e-12);
    }
  }
}

TEST(Kind, ParseAndPrint) {
  EXPECT_EQ(parse_kind("merged"), SymmetryKind::merged);
  EXPECT_EQ(to_string(SymmetryKind::backbone), "backbone");
  EXPECT_THROW(parse_kind("radial"), InvalidArgument);
}

}  // namespace
}  // namespace symnet::concentric
