#pragma once

#include <algorithm>
#include <string>

#include "commdom/graph.hpp"
#include "commdom/group.hpp"
#include "oracles.hpp"

inline oracle::Graph to_oracle(const commdom::SimpleGraph& g) {
  oracle::Graph o{g.vertex_count(), std::vector<std::uint64_t>(g.vertex_count(), 0)};
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) { o.adj[u] |= std::uint64_t{1} << v; });
  return o;
}

inline commdom::SimpleGraph from_oracle(const oracle::Graph& o) {
  commdom::SimpleGraph g(o.n, "oracle");
  for (std::size_t u = 0; u < o.n; ++u)
    for (std::size_t v = u + 1; v < o.n; ++v)
      if (o.edge(u, v)) g.add_edge(u, v);
  return g;
}

inline commdom::Element by_label(const commdom::GroupTable& g, const std::string& label) {
  const auto& l = g.labels();
  return static_cast<commdom::Element>(std::find(l.begin(), l.end(), label) - l.begin());
}

inline oracle::Group oracle_group(const std::vector<oracle::Perm>& gens) { return {oracle::closure(gens)}; }
