#include "ringgraph/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ringgraph/errors.hpp"
#include "ringgraph/graph_io.hpp"

namespace ringgraph {
namespace {

// Plain permutation search used as the reference.
bool isomorphic_reference(const LoopGraph& g, const LoopGraph& h) {
  if (g.size() != h.size()) return false;
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (permute(h, perm) == g) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

LoopGraph random_graph(std::size_t n, double density, std::mt19937& rng) {
  std::bernoulli_distribution coin(density);
  LoopGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v)
      if (coin(rng)) g.connect(u, v);
  return g;
}

LoopGraph clique_join(std::size_t universal, const std::vector<std::size_t>& cliques) {
  LoopGraph rest;
  for (auto c : cliques) rest = disjoint_union(rest, complete_with_loops(c));
  return join(complete_with_loops(universal), rest);
}

TEST(LoopGraph, Basics) {
  LoopGraph g(70);
  g.connect(0, 69);
  g.connect(3, 3);
  EXPECT_TRUE(g.adjacent(69, 0));
  EXPECT_TRUE(g.has_loop(3));
  EXPECT_FALSE(g.has_loop(0));
  EXPECT_EQ(g.degree(3), 0u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.loop_count(), 1u);
  EXPECT_EQ(g.neighbors(69), (std::vector<std::size_t>{0}));
  g.disconnect(69, 0);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_THROW(g.set_labels({"a"}), std::invalid_argument);
}

TEST(Operations, CompleteAndUnion) {
  const auto k4 = complete_with_loops(4);
  EXPECT_EQ(k4.edge_count(), 6u);
  EXPECT_EQ(k4.loop_count(), 4u);
  const auto u = disjoint_union(k4, complete_with_loops(2));
  EXPECT_EQ(u.size(), 6u);
  EXPECT_EQ(u.edge_count(), 7u);
  EXPECT_FALSE(u.adjacent(0, 4));
}

TEST(Operations, Join) {
  const auto g = join(complete_with_loops(1), disjoint_union(complete_with_loops(2), complete_with_loops(3)));
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.degree(0), 5u);
  EXPECT_EQ(g.edge_count(), 5u + 1u + 3u);
  EXPECT_FALSE(g.adjacent(1, 3));
}

TEST(Operations, Tensor) {
  LoopGraph path(2);
  path.connect(0, 1);
  const auto k2 = complete_with_loops(2);
  const auto t = tensor_product(path, k2);
  ASSERT_EQ(t.size(), 4u);
  // (0,h) ~ (1,h') for all h, h'; nothing within a fibre.
  EXPECT_TRUE(t.adjacent(0, 2));
  EXPECT_TRUE(t.adjacent(0, 3));
  EXPECT_FALSE(t.adjacent(0, 1));
  EXPECT_EQ(t.loop_count(), 0u);
  EXPECT_EQ(tensor_product(k2, complete_with_loops(3)), complete_with_loops(6));
}

TEST(Operations, RemoveLoopsAndInduced) {
  const auto k3 = complete_with_loops(3);
  EXPECT_EQ(remove_loops(k3).loop_count(), 0u);
  EXPECT_EQ(remove_loops(k3).edge_count(), 3u);
  const auto sub = induced_subgraph(clique_join(1, {2, 2}), {1, 2, 3});
  EXPECT_EQ(sub.edge_count(), 1u);
  EXPECT_EQ(sub.loop_count(), 3u);
}

TEST(StructuralExpr, RealizeAndPrint) {
  const auto e = StructuralExpr::join(
      StructuralExpr::kcirc(2),
      StructuralExpr::disjoint({{StructuralExpr::kcirc(3), 2}, {StructuralExpr::kcirc(1), 1}}));
  EXPECT_EQ(e.vertex_count(), 9u);
  EXPECT_EQ(e.realize(), clique_join(2, {3, 3, 1}));
  EXPECT_EQ(e.to_string(), "K2° v (2 K3° u 1 K1°)");
  const auto t = StructuralExpr::tensor(StructuralExpr::kcirc(2), StructuralExpr::kcirc(3));
  EXPECT_EQ(t.vertex_count(), 6u);
  EXPECT_EQ(t.realize(), complete_with_loops(6));
}

TEST(Decompose, CliqueJoin) {
  const auto form = clique_join_decompose(clique_join(3, {4, 1, 4}));
  EXPECT_EQ(form, (CliqueJoinForm{3, {1, 4, 4}}));
  EXPECT_EQ(form.to_string(), "K3° v (2 K4° u 1 K1°)");
  EXPECT_EQ(clique_join_decompose(complete_with_loops(5)), (CliqueJoinForm{5, {}}));
  EXPECT_THROW(clique_join_decompose(remove_loops(complete_with_loops(3))), NotInFamilyError);
  LoopGraph path(3);
  for (int i = 0; i < 3; ++i) path.connect(i, i);
  path.connect(0, 1);
  path.connect(1, 2);
  EXPECT_EQ(clique_join_decompose(path), (CliqueJoinForm{1, {1, 1}}));
  path.disconnect(1, 1);
  EXPECT_THROW(clique_join_decompose(path), NotInFamilyError);
  LoopGraph p4(4);
  for (int i = 0; i < 4; ++i) p4.connect(i, i);
  p4.connect(0, 1), p4.connect(1, 2), p4.connect(2, 3);
  EXPECT_THROW(clique_join_decompose(p4), NotInFamilyError);
}

TEST(Decompose, CliqueUnion) {
  const auto g = remove_loops(disjoint_union(complete_with_loops(3), complete_with_loops(2)));
  EXPECT_EQ(clique_union_decompose(g), (std::vector<std::size_t>{2, 3}));
  EXPECT_THROW(clique_union_decompose(complete_with_loops(2)), NotInFamilyError);
}

TEST(Isomorphism, FamilyAndBruteForce) {
  const auto g = clique_join(2, {3, 1, 1});
  auto perm = std::vector<std::size_t>{6, 0, 5, 1, 4, 2, 3};
  EXPECT_TRUE(is_isomorphic(g, permute(g, perm)));
  EXPECT_FALSE(is_isomorphic(g, clique_join(1, {3, 2, 1})));
  EXPECT_TRUE(is_isomorphic(clique_join(40, {50, 50, 7}), clique_join(40, {7, 50, 50})));
  EXPECT_FALSE(is_isomorphic(remove_loops(complete_with_loops(20)), LoopGraph(20)));
  LoopGraph a(20), b(20);
  a.connect(0, 1), a.connect(1, 2);
  b.connect(0, 1), b.connect(1, 2);
  EXPECT_THROW(is_isomorphic(a, b), UndecidedError);
  EXPECT_FALSE(is_isomorphic(LoopGraph(3), LoopGraph(4)));
}

TEST(Isomorphism, BruteForceMatchesReference) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto g = random_graph(n, 0.4, rng);
    auto h = random_graph(n, 0.4, rng);
    if (trial % 3 == 0) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      h = permute(g, perm);
    }
    ASSERT_EQ(is_isomorphic_brute_force(g, h), isomorphic_reference(g, h)) << "trial " << trial;
    ASSERT_EQ(is_isomorphic(g, h), isomorphic_reference(g, h)) << "trial " << trial;
  }
}

TEST(Io, JsonRoundTrip) {
  auto g = clique_join(1, {2});
  g.set_labels({"a", "b", "c"});
  const auto j = to_json(g, {1, 2, 3});
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["loops"], nlohmann::json({0, 1, 2}));
  EXPECT_EQ(j["edges"], nlohmann::json({{0, 1}, {0, 2}, {1, 2}}));
  const auto back = weighted_from_json(j);
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.graph.labels(), g.labels());
  EXPECT_EQ(back.weights, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_FALSE(to_json(LoopGraph(2)).contains("weights"));
}

TEST(Io, Dot) {
  LoopGraph g(2);
  g.connect(0, 0);
  g.connect(0, 1);
  EXPECT_EQ(to_dot(g, {4, 1}), "graph G {\n  0 [label=\"w=4\"];\n  1 [label=\"w=1\"];\n  0 -- 0;\n  0 -- 1;\n}\n");
}

}  // namespace
}  // namespace ringgraph
