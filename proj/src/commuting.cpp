#include "commdom/commuting.hpp"

namespace commdom {

namespace {

SimpleGraph element_graph(const GroupTable& g, std::string provenance) {
  SimpleGraph out(g.order(), std::move(provenance));
  out.set_labels(g.labels());
  return out;
}

}  // namespace

SimpleGraph commuting_graph(const GroupTable& g) {
  SimpleGraph out = element_graph(g, "commuting(" + g.descriptor() + ")");
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = x + 1; y < g.order(); ++y)
      if (g.commute(x, y)) out.add_edge(x, y);
  return out;
}

ProperGraph proper_commuting_graph(const GroupTable& g) {
  const SimpleGraph full = commuting_graph(g);
  ProperGraph out{induced_subgraph(full, center(g).complement()), false};
  out.degenerate = out.graph.empty();
  out.graph.set_provenance("proper_commuting(" + g.descriptor() + ")");
  return out;
}

SimpleGraph enhanced_power_graph(const GroupTable& g) {
  SimpleGraph out = element_graph(g, "enhanced_power(" + g.descriptor() + ")");
  for (const auto& m : maximal_cyclic_subgroups(g).subgroups) {
    const auto mem = m.members();
    for (std::size_t i = 0; i < mem.size(); ++i)
      for (std::size_t j = i + 1; j < mem.size(); ++j) out.add_edge(mem[i], mem[j]);
  }
  return out;
}

ProperGraph proper_enhanced_power_graph(const GroupTable& g) {
  ProperGraph out = proper_graph(enhanced_power_graph(g));
  out.graph.set_provenance("proper_enhanced_power(" + g.descriptor() + ")");
  return out;
}

bool generates_cyclic(const GroupTable& g, Element x, Element y) {
  SubsetMask gens(g.order());
  gens.set(x);
  gens.set(y);
  const SubsetMask h = subgroup_closure(g, gens);
  const std::size_t size = h.count();
  bool cyclic = false;
  h.for_each([&](std::size_t z) {
    if (!cyclic && element_order(g, static_cast<Element>(z)) == size) cyclic = true;
  });
  return cyclic;
}

}  // namespace commdom
