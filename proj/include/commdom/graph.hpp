#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commdom/subset_mask.hpp"

namespace commdom {

inline constexpr std::size_t kDefaultGraphCap = 20000;

using VertexSet = SubsetMask;

/// Undirected simple graph stored as packed adjacency rows.
///
/// Each vertex also carries an origin index: the element (or vertex) of the
/// object it was derived from. Induced subgraphs keep the origin of every
/// surviving vertex, so a witness set on a proper commuting graph can always
/// be reported as group elements.
class SimpleGraph {
public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n, std::string provenance = {});

  std::size_t vertex_count() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }

  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  void add_edge(std::size_t u, std::size_t v);
  void remove_edge(std::size_t u, std::size_t v);

  /// Open neighbourhood N(v).
  const SubsetMask& neighbors(std::size_t v) const { return rows_[v]; }
  /// Closed neighbourhood N[v].
  SubsetMask closed_neighborhood(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  std::size_t edge_count() const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  void set_labels(std::vector<std::string> labels);

  const std::vector<std::size_t>& origins() const { return origin_; }
  std::size_t origin(std::size_t v) const { return origin_[v]; }
  void set_origins(std::vector<std::size_t> origins);

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

  friend bool same_edges(const SimpleGraph& a, const SimpleGraph& b) { return a.rows_ == b.rows_; }

private:
  std::vector<SubsetMask> rows_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> origin_;
  std::string provenance_;
};

SimpleGraph complete_graph(std::size_t n);
SimpleGraph edgeless_graph(std::size_t n);
SimpleGraph cycle_graph(std::size_t n);
/// K_{1,leaves}; the center is vertex 0.
SimpleGraph star_graph(std::size_t leaves);

bool is_complete(const SimpleGraph& g);

/// Universal vertices: v with N[v] = V.
VertexSet dominating_vertices(const SimpleGraph& g);

/// Subgraph on the kept vertices, re-indexed in ascending original order.
SimpleGraph induced_subgraph(const SimpleGraph& g, const VertexSet& keep);

struct ProperGraph {
  SimpleGraph graph;
  /// Set when every vertex was removed (complete input, or abelian group).
  bool degenerate = false;
};

/// The graph with its dominating vertices deleted.
ProperGraph proper_graph(const SimpleGraph& g);

/// Strong product; vertex (i, j) has index i * |b| + j. Origins of the
/// product are product indices; labels are "(la,lb)".
SimpleGraph strong_product(const SimpleGraph& a, const SimpleGraph& b,
                           std::size_t cap = kDefaultGraphCap);

/// Connected components ordered by least vertex.
std::vector<VertexSet> connected_components(const SimpleGraph& g);

bool is_clique(const SimpleGraph& g, const VertexSet& s);

}  // namespace commdom
