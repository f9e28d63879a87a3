#pragma once

#include "commdom/graph.hpp"
#include "commdom/group.hpp"

namespace commdom {

// Graphs derived from a group. Vertex i is element i; labels are element
// labels and origins are element indices, so both survive into proper graphs.

/// x ~ y iff xy = yx (x != y).
SimpleGraph commuting_graph(const GroupTable& g);

/// Commuting graph restricted to G \ Z(G). For abelian G the result is empty
/// and flagged degenerate.
ProperGraph proper_commuting_graph(const GroupTable& g);

/// x ~ y iff <x, y> is cyclic, i.e. x and y lie in a common maximal cyclic
/// subgroup.
SimpleGraph enhanced_power_graph(const GroupTable& g);

/// Enhanced power graph minus its dominating vertices (not minus Z(G)).
ProperGraph proper_enhanced_power_graph(const GroupTable& g);

/// Direct test: the subgroup generated by {x, y} is cyclic. Quadratic in the
/// closure size; used to cross-check enhanced_power_graph.
bool generates_cyclic(const GroupTable& g, Element x, Element y);

}  // namespace commdom
