#include "shortcycles/cycle_space.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "fixtures.hpp"
#include "shortcycles/error.hpp"
#include "shortcycles/oracle.hpp"

namespace shortcycles {
namespace {

using testing::complete_graph;
using testing::cycle_graph;

// Checks the Cycle invariants against the graph directly.
void expect_valid_cycle(const Graph& g, const Cycle& c) {
  ASSERT_FALSE(c.edge_ids.empty());
  EXPECT_TRUE(std::is_sorted(c.edge_ids.begin(), c.edge_ids.end()));
  EXPECT_EQ(std::adjacent_find(c.edge_ids.begin(), c.edge_ids.end()), c.edge_ids.end());

  std::map<VertexId, int> degree;
  for (EdgeId e : c.edge_ids) {
    ++degree[g.endpoints(e).u];
    ++degree[g.endpoints(e).v];
  }
  for (const auto& [v, d] : degree) EXPECT_EQ(d, 2) << "vertex " << v;
  EXPECT_EQ(degree.size(), c.length());

  ASSERT_EQ(c.vertex_walk.size(), c.length() + 1);
  EXPECT_EQ(c.vertex_walk.front(), c.vertex_walk.back());
  EXPECT_EQ(c.vertex_walk.front(), degree.begin()->first);
  EXPECT_LT(c.vertex_walk[1], c.vertex_walk[c.length() - 1]);
  EdgeSet walked;
  for (std::size_t i = 0; i + 1 < c.vertex_walk.size(); ++i) {
    const EdgeId e = g.find_edge(c.vertex_walk[i], c.vertex_walk[i + 1]);
    ASSERT_NE(e, kNoEdge);
    walked.push_back(e);
  }
  std::sort(walked.begin(), walked.end());
  EXPECT_EQ(walked, c.edge_ids);
}

TEST(SymmetricDifference, Examples) {
  EXPECT_EQ(symmetric_difference(EdgeSet{1, 2}, EdgeSet{2, 3}), (EdgeSet{1, 3}));
  EXPECT_TRUE(symmetric_difference(EdgeSet{1, 4, 7}, EdgeSet{1, 4, 7}).empty());
  EXPECT_EQ(symmetric_difference(EdgeSet{1, 4, 7}, EdgeSet{}), (EdgeSet{1, 4, 7}));
}

TEST(AsSingleCycle, Examples) {
  const Graph k4 = complete_graph(4);
  const auto tri = as_single_cycle(k4, EdgeSet{0, 1, 3});
  ASSERT_TRUE(tri);
  EXPECT_EQ(tri->length(), 3u);
  EXPECT_EQ(tri->vertex_walk, (std::vector<VertexId>{0, 1, 2, 0}));

  // Two disjoint triangles 0-1-2 and 3-4-5.
  const Graph two = build_graph(6, testing::EdgeList{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(as_single_cycle(two, EdgeSet{0, 1, 2, 3, 4, 5}));
  EXPECT_FALSE(as_single_cycle(k4, EdgeSet{0, 3}));
  EXPECT_FALSE(as_single_cycle(k4, EdgeSet{}));
}

TEST(AsSingleCycle, BowtieIsNotOneCycle) {
  // Two triangles sharing vertex 0: degree 4 there.
  const Graph g = build_graph(5, testing::EdgeList{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
  EXPECT_FALSE(as_single_cycle(g, EdgeSet{0, 1, 2, 3, 4, 5}));
}

TEST(AsSingleCycle, DuplicatesCancel) {
  const Graph k4 = complete_graph(4);
  const auto c = as_single_cycle(k4, std::vector<EdgeId>{3, 0, 5, 1, 5});
  ASSERT_TRUE(c);
  EXPECT_EQ(c->edge_ids, (EdgeSet{0, 1, 3}));
}

TEST(FundamentalCycle, K4TriangleAtRoot) {
  const Graph k4 = complete_graph(4);
  const BfsTree t = bfs_tree(k4, 0);
  const Cycle c = fundamental_cycle(k4, t, 5);  // edge (2,3)
  EXPECT_EQ(c.edge_ids, (EdgeSet{1, 2, 5}));
  EXPECT_EQ(c.length(), 3u);
  ASSERT_EQ(c.provenance.size(), 1u);
  EXPECT_EQ(std::get<FundamentalTag>(c.provenance[0]), (FundamentalTag{0, 5}));
  expect_valid_cycle(k4, c);
}

TEST(FundamentalCycle, WholeCycle) {
  const Graph c5 = cycle_graph(5);
  for (VertexId root = 0; root < 5; ++root) {
    const BfsTree t = bfs_tree(c5, root);
    EdgeId cotree = kNoEdge;
    for (EdgeId e = 0; e < 5; ++e)
      if (!t.contains_edge(e)) cotree = e;
    EXPECT_EQ(fundamental_cycle(c5, t, cotree).edge_ids, (EdgeSet{0, 1, 2, 3, 4}));
  }
}

TEST(FundamentalCycle, TreeEdgeRejected) {
  const Graph k4 = complete_graph(4);
  try {
    fundamental_cycle(k4, bfs_tree(k4, 0), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::edge_in_tree);
  }
}

TEST(FundamentalCycle, PetersenLengths) {
  const Graph g = testing::petersen_graph();
  for (VertexId root = 0; root < 10; ++root) {
    const BfsTree t = bfs_tree(g, root);
    for (EdgeId e = 0; e < 15; ++e) {
      if (t.contains_edge(e)) continue;
      const Cycle c = fundamental_cycle(g, t, e);
      EXPECT_TRUE(c.length() == 5 || c.length() == 6);
      // Girth 5 and BFS depth at most 2 pin the length to exactly 5.
      EXPECT_EQ(c.length(), 5u);
      const auto [u, v] = g.endpoints(e);
      EXPECT_LE(c.length(), static_cast<std::size_t>(t.depth(u) + t.depth(v) + 1));
    }
  }
}

TEST(GenerateC1, TreeGivesNothing) {
  EXPECT_TRUE(generate_c1(testing::path_graph(5)).empty());
  EXPECT_TRUE(generate_c1(build_graph(1, testing::EdgeList{})).empty());
}

TEST(GenerateC1, FiveCycleFromEveryRoot) {
  const CandidateSet c1 = generate_c1(cycle_graph(5));
  ASSERT_EQ(c1.size(), 1u);
  const auto& prov = c1.cycles[0].provenance;
  ASSERT_EQ(prov.size(), 5u);
  std::set<VertexId> roots;
  for (const auto& p : prov) roots.insert(std::get<FundamentalTag>(p).root);
  EXPECT_EQ(roots, (std::set<VertexId>{0, 1, 2, 3, 4}));
}

TEST(GenerateC1, K4IsTheFourTriangles) {
  // Every BFS tree of K4 is a star, so each fundamental cycle is a triangle.
  const CandidateSet c1 = generate_c1(complete_graph(4));
  std::vector<EdgeSet> got;
  for (const Cycle& c : c1.cycles) got.push_back(c.edge_ids);
  EXPECT_EQ(got, (std::vector<EdgeSet>{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5}}));
  std::size_t tags = 0;
  for (const Cycle& c : c1.cycles) tags += c.provenance.size();
  EXPECT_EQ(tags, 4u * 3u);  // n * (m - n + 1) before dedup
}

TEST(GenerateC2, SingleMemberGivesNothing) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(generate_c2(c5, generate_c1(c5)).empty());
}

TEST(GenerateC2, K4TrianglesSumToFourCycles) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(symmetric_difference(EdgeSet{0, 1, 3}, EdgeSet{0, 2, 4}), (EdgeSet{1, 2, 3, 4}));
  const CandidateSet c2 = generate_c2(k4, generate_c1(k4));
  std::vector<EdgeSet> got;
  for (const Cycle& c : c2.cycles) got.push_back(c.edge_ids);
  EXPECT_EQ(got, (std::vector<EdgeSet>{{0, 1, 4, 5}, {0, 2, 3, 5}, {1, 2, 3, 4}}));
  const Cycle* four = c2.find(EdgeSet{1, 2, 3, 4});
  ASSERT_NE(four, nullptr);
  ASSERT_FALSE(four->provenance.empty());
  const auto tag = std::get<SumTag>(four->provenance.front());
  EXPECT_LT(tag.first, tag.second);
}

TEST(CandidateC, Examples) {
  EXPECT_TRUE(candidate_c(testing::path_graph(4)).empty());
  EXPECT_EQ(candidate_c(cycle_graph(5)).size(), 1u);

  const Graph k4 = complete_graph(4);
  const CandidateSet c = candidate_c(k4);
  const auto oracle = enumerate_simple_cycles(k4);
  ASSERT_EQ(c.size(), oracle.size());
  for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(c.cycles[i].edge_ids, oracle[i].edge_ids);
  EXPECT_EQ(c.origin, CandidateOrigin::c);
}

TEST(CandidateC, PetersenCandidates) {
  // Independently enumerated: C1 = the twelve 5-cycles; C2 adds the ten
  // 6-cycles and fifteen 8-cycles.
  const CandidatePool pool = build_candidates(testing::petersen_graph());
  EXPECT_EQ(pool.c1.size(), 12u);
  EXPECT_EQ(pool.c2.size(), 25u);
  EXPECT_EQ(pool.c.size(), 37u);
}

TEST(CandidateC, RejectsDisconnected) {
  const Graph g = build_graph(4, testing::EdgeList{{0, 1}, {2, 3}});
  EXPECT_THROW(generate_c1(g), Error);
}

// Properties.

TEST(CandidateProperty, EveryCycleValidAndOrdered) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_instance({8, 1 + seed % 8, 0.0, false, seed});
    const Graph& g = inst.graph;
    const CandidatePool pool = build_candidates(g);
    for (const CandidateSet* set : {&pool.c1, &pool.c2, &pool.c}) {
      for (std::size_t i = 0; i < set->size(); ++i) {
        expect_valid_cycle(g, set->cycles[i]);
        if (i > 0) EXPECT_TRUE(canonical_less(set->cycles[i - 1].edge_ids, set->cycles[i].edge_ids));
      }
    }
    for (const Cycle& c : pool.c1.cycles) {
      for (const auto& p : c.provenance) {
        const auto tag = std::get<FundamentalTag>(p);
        const BfsTree t = bfs_tree(g, tag.root);
        // Exactly one cotree edge of the generating tree, and the rest is the
        // sum of the two root paths.
        std::size_t cotree = 0;
        for (EdgeId e : c.edge_ids) cotree += t.contains_edge(e) ? 0 : 1;
        EXPECT_EQ(cotree, 1u);
        const auto [u, v] = g.endpoints(tag.cotree_edge);
        EdgeSet pu = tree_path(t, u), pv = tree_path(t, v);
        std::sort(pu.begin(), pu.end());
        std::sort(pv.begin(), pv.end());
        EdgeSet rest = c.edge_ids;
        rest.erase(std::find(rest.begin(), rest.end(), tag.cotree_edge));
        EXPECT_EQ(rest, symmetric_difference(pu, pv));
      }
    }
    for (const Cycle& c : pool.c2.cycles) {
      for (const auto& p : c.provenance) {
        const auto tag = std::get<SumTag>(p);
        EXPECT_EQ(symmetric_difference(pool.c1.cycles[tag.first].edge_ids, pool.c1.cycles[tag.second].edge_ids),
                  c.edge_ids);
      }
    }
  }
}

TEST(CandidateProperty, C1SizeBeforeDedup) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = testing::small_instance(seed);
    const Graph& g = inst.graph;
    std::size_t tags = 0;
    for (const Cycle& c : generate_c1(g).cycles) tags += c.provenance.size();
    EXPECT_EQ(tags, g.vertex_count() * g.cyclomatic_number());
  }
}

TEST(CandidateProperty, IndependentOfThreadsAndPrefilter) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = random_instance({14, 10, 0.0, false, seed});
    const CandidatePool base = build_candidates(inst.graph);
    for (unsigned threads : {2u, 3u, 8u}) {
      for (bool prefilter : {false, true}) {
        const CandidatePool other = build_candidates(inst.graph, {threads, prefilter});
        ASSERT_EQ(other.c.size(), base.c.size());
        for (std::size_t i = 0; i < base.c.size(); ++i) {
          EXPECT_EQ(other.c.cycles[i].edge_ids, base.c.cycles[i].edge_ids);
          EXPECT_EQ(other.c.cycles[i].provenance, base.c.cycles[i].provenance);
          EXPECT_EQ(other.c.cycles[i].vertex_walk, base.c.cycles[i].vertex_walk);
        }
      }
    }
  }
}

TEST(CandidateProperty, RelabelledEdgeOrderGivesSameCycleSpace) {
  // Shuffling input edge order changes ids but not which vertex sets appear
  // among the shortest candidates.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = testing::small_instance(seed);
    const Graph& g = inst.graph;
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u, v);
    Random rng(seed);
    rng.shuffle(edges);
    const Graph h = build_graph(g.vertex_count(), edges);
    const auto gc = candidate_c(g);
    const auto hc = candidate_c(h);
    ASSERT_EQ(gc.empty(), hc.empty());
    if (!gc.empty()) EXPECT_EQ(gc.cycles.front().length(), hc.cycles.front().length());
  }
}

TEST(CandidateProperty, GirthMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance inst = testing::small_instance(seed);
    const auto cycles = enumerate_simple_cycles(inst.graph);
    const auto c = candidate_c(inst.graph);
    ASSERT_EQ(c.empty(), cycles.empty());
    if (!c.empty()) EXPECT_EQ(c.cycles.front().length(), cycles.front().length());
  }
}

}  // namespace
}  // namespace shortcycles
