#include <doctest.h>

#include <random>

#include "commdom/commuting.hpp"
#include "commdom/families.hpp"
#include "commdom/graph.hpp"
#include "support.hpp"

using namespace commdom;

TEST_SUITE("graph-core") {

TEST_CASE("dominating vertices") {
  CHECK(dominating_vertices(complete_graph(4)).count() == 4);
  const auto star = dominating_vertices(star_graph(3));
  CHECK(star.count() == 1);
  CHECK(star.test(0));
  CHECK(dominating_vertices(cycle_graph(5)).none());
}

TEST_CASE("induced subgraphs") {
  const SimpleGraph c5 = cycle_graph(5);
  CHECK(same_edges(induced_subgraph(c5, SubsetMask::full(5)), c5));
  SubsetMask keep = SubsetMask::full(4);
  keep.reset(2);
  CHECK(same_edges(induced_subgraph(complete_graph(4), keep), complete_graph(3)));
  keep = SubsetMask::full(4);
  keep.reset(0);
  const SimpleGraph leaves = induced_subgraph(star_graph(3), keep);
  CHECK(leaves.vertex_count() == 3);
  CHECK(leaves.edge_count() == 0);
  CHECK(leaves.origin(0) == 1);
}

TEST_CASE("proper graphs") {
  auto p = proper_graph(star_graph(3));
  CHECK(p.graph.vertex_count() == 3);
  CHECK(p.graph.edge_count() == 0);
  CHECK_FALSE(p.degenerate);
  p = proper_graph(complete_graph(4));
  CHECK(p.degenerate);
  CHECK(p.graph.vertex_count() == 0);
  p = proper_graph(cycle_graph(5));
  CHECK(same_edges(p.graph, cycle_graph(5)));
}

TEST_CASE("strong products") {
  CHECK(same_edges(strong_product(complete_graph(2), complete_graph(2)), complete_graph(4)));
  const SimpleGraph two = strong_product(edgeless_graph(2), complete_graph(2));
  CHECK(two.edge_count() == 2);
  CHECK(two.adjacent(0, 1));
  CHECK(two.adjacent(2, 3));
}

TEST_CASE("strong products match the definition and keep Dom multiplicative") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto oa = oracle::random_graph(rng, 2 + rng() % 7, 0.6), ob = oracle::random_graph(rng, 2 + rng() % 7, 0.6);
    const SimpleGraph p = strong_product(from_oracle(oa), from_oracle(ob));
    bool ok = true;
    for (std::size_t i1 = 0; i1 < oa.n; ++i1)
      for (std::size_t j1 = 0; j1 < ob.n; ++j1)
        for (std::size_t i2 = 0; i2 < oa.n; ++i2)
          for (std::size_t j2 = 0; j2 < ob.n; ++j2)
            ok = ok && p.adjacent(i1 * ob.n + j1, i2 * ob.n + j2) == oracle::strong_adjacent(oa, ob, i1, j1, i2, j2);
    CHECK(ok);

    std::vector<std::size_t> expected;
    for (auto i : oracle::universal_vertices(oa))
      for (auto j : oracle::universal_vertices(ob)) expected.push_back(i * ob.n + j);
    std::sort(expected.begin(), expected.end());
    CHECK(dominating_vertices(p).members() == expected);
  }
}

TEST_CASE("connected components") {
  const auto comps = connected_components(proper_commuting_graph(symmetric(3)).graph);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 1, 1, 2});
  CHECK(connected_components(cycle_graph(6)).size() == 1);
  CHECK(connected_components(edgeless_graph(5)).size() == 5);
}

TEST_CASE("cliques") {
  SubsetMask one(3);
  one.set(1);
  CHECK(is_clique(edgeless_graph(3), one));
  SubsetMask two(3);
  two.set(0);
  two.set(2);
  CHECK_FALSE(is_clique(edgeless_graph(3), two));

  // Rotations of the dihedral group of order 10 form a clique.
  const GroupTable d10 = dihedral(10);
  const SimpleGraph pg = proper_commuting_graph(d10).graph;
  SubsetMask rotations(pg.vertex_count());
  for (std::size_t v = 0; v < pg.vertex_count(); ++v)
    if (pg.origin(v) < 5) rotations.set(v);
  CHECK(rotations.count() == 4);
  CHECK(is_clique(pg, rotations));
}

}  // TEST_SUITE
