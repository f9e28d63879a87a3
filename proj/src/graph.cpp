#include "commdom/graph.hpp"

#include <numeric>

#include "commdom/error.hpp"

namespace commdom {

SimpleGraph::SimpleGraph(std::size_t n, std::string provenance)
    : rows_(n, SubsetMask(n)), origin_(n), provenance_(std::move(provenance)) {
  std::iota(origin_.begin(), origin_.end(), std::size_t{0});
  labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw PreconditionError("self-loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

void SimpleGraph::remove_edge(std::size_t u, std::size_t v) {
  rows_[u].reset(v);
  rows_[v].reset(u);
}

SubsetMask SimpleGraph::closed_neighborhood(std::size_t v) const {
  SubsetMask m = rows_[v];
  m.set(v);
  return m;
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

void SimpleGraph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != rows_.size()) throw PreconditionError("label count does not match vertex count");
  labels_ = std::move(labels);
}

void SimpleGraph::set_origins(std::vector<std::size_t> origins) {
  if (origins.size() != rows_.size()) throw PreconditionError("origin count does not match vertex count");
  origin_ = std::move(origins);
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n, "complete(" + std::to_string(n) + ")");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph edgeless_graph(std::size_t n) { return SimpleGraph(n, "edgeless(" + std::to_string(n) + ")"); }

SimpleGraph cycle_graph(std::size_t n) {
  SimpleGraph g(n, "cycle(" + std::to_string(n) + ")");
  if (n >= 3)
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

SimpleGraph star_graph(std::size_t leaves) {
  SimpleGraph g(leaves + 1, "star(" + std::to_string(leaves) + ")");
  for (std::size_t v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

bool is_complete(const SimpleGraph& g) {
  return dominating_vertices(g).count() == g.vertex_count();
}

VertexSet dominating_vertices(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  VertexSet out(n);
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) + 1 == n) out.set(v);
  return out;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep) {
  const auto kept = keep.members();
  std::vector<std::size_t> local(g.vertex_count(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) local[kept[i]] = i;
  SimpleGraph out(kept.size(), g.provenance());
  std::vector<std::string> labels;
  std::vector<std::size_t> origins;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    labels.push_back(g.label(kept[i]));
    origins.push_back(g.origin(kept[i]));
    (g.neighbors(kept[i]) & keep).for_each([&](std::size_t w) {
      if (local[w] > i) out.add_edge(i, local[w]);
    });
  }
  out.set_labels(std::move(labels));
  out.set_origins(std::move(origins));
  return out;
}

ProperGraph proper_graph(const SimpleGraph& g) {
  const VertexSet dom = dominating_vertices(g);
  ProperGraph out{induced_subgraph(g, dom.complement()), false};
  out.degenerate = g.vertex_count() > 0 && out.graph.empty();
  out.graph.set_provenance("proper(" + g.provenance() + ")");
  return out;
}

SimpleGraph strong_product(const SimpleGraph& a, const SimpleGraph& b, std::size_t cap) {
  const std::size_t na = a.vertex_count(), nb = b.vertex_count(), n = na * nb;
  if (n > cap)
    throw SizeLimitError("strong product has " + std::to_string(n) + " vertices, cap is " +
                         std::to_string(cap));
  SimpleGraph out(n, "strong(" + a.provenance() + "," + b.provenance() + ")");
  for (std::size_t i = 0; i < na; ++i) {
    const SubsetMask ni = a.closed_neighborhood(i);
    for (std::size_t j = 0; j < nb; ++j) {
      const SubsetMask nj = b.closed_neighborhood(j);
      const std::size_t u = i * nb + j;
      ni.for_each([&](std::size_t k) {
        nj.for_each([&](std::size_t l) {
          const std::size_t v = k * nb + l;
          if (v > u) out.add_edge(u, v);
        });
      });
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  out.set_labels(std::move(labels));
  return out;
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> out;
  VertexSet unseen = SubsetMask::full(n);
  while (unseen.any()) {
    VertexSet comp(n), frontier(n);
    frontier.set(unseen.first());
    while (frontier.any()) {
      comp |= frontier;
      unseen -= frontier;
      VertexSet next(n);
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      next &= unseen;
      frontier = std::move(next);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_clique(const SimpleGraph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) {
    if (!ok) return;
    VertexSet others = s;
    others.reset(v);
    ok = others.is_subset_of(g.neighbors(v));
  });
  return ok;
}

}  // namespace commdom
