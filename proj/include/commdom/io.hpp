#pragma once

#include <string>

#include <json.hpp>

#include "commdom/graph.hpp"
#include "commdom/group.hpp"

namespace commdom {

// Group files: {"name", "order", "table" (n x n, 0-based, row-major),
// optional "labels"}. Loading always validates.

nlohmann::ordered_json group_to_json(const GroupTable& g);
/// Throws FormatError on a malformed object or a table that is not a group;
/// the message lists every violation found.
GroupTable group_from_json(const nlohmann::ordered_json& j);

GroupTable load_group_file(const std::string& path);
void save_group_file(const GroupTable& g, const std::string& path);

/// {"n", "edges" ([u, v] with u < v), "labels"}.
nlohmann::ordered_json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json invariants_to_json(const GroupInvariants& inv);
GroupInvariants invariants_from_json(const nlohmann::ordered_json& j, std::size_t order);

nlohmann::ordered_json read_json_file(const std::string& path);
/// Writes indented JSON with a trailing newline.
void write_json_file(const nlohmann::ordered_json& j, const std::string& path);

}  // namespace commdom
