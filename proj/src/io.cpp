#include "commdom/io.hpp"

#include <fstream>

#include "commdom/error.hpp"

namespace commdom {

using json = nlohmann::ordered_json;

json group_to_json(const GroupTable& g) {
  json j;
  j["name"] = g.descriptor();
  j["order"] = g.order();
  json rows = json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.mul(static_cast<Element>(a), static_cast<Element>(b)));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  j["labels"] = g.labels();
  return j;
}

GroupTable group_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("group file must hold an object");
  for (const char* key : {"name", "order", "table"})
    if (!j.contains(key)) throw FormatError(std::string("group file lacks '") + key + "'");
  if (!j["order"].is_number_unsigned() || j["order"].get<std::size_t>() == 0)
    throw FormatError("'order' must be a positive integer");
  const std::size_t n = j["order"].get<std::size_t>();
  if (n > kDefaultOrderCap) throw SizeLimitError("group file order " + std::to_string(n) + " exceeds cap");
  const json& t = j["table"];
  if (!t.is_array() || t.size() != n) throw FormatError("'table' must have " + std::to_string(n) + " rows");
  std::vector<Element> mul;
  mul.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!t[a].is_array() || t[a].size() != n)
      throw FormatError("table row " + std::to_string(a) + " must have " + std::to_string(n) + " entries");
    for (const auto& v : t[a]) {
      if (!v.is_number_unsigned()) throw FormatError("table entries must be non-negative integers");
      mul.push_back(static_cast<Element>(v.get<std::size_t>()));
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null()) {
    labels = j["labels"].get<std::vector<std::string>>();
    if (labels.size() != n) throw FormatError("'labels' must have " + std::to_string(n) + " entries");
  }
  if (auto problems = validate(n, mul); !problems.empty()) {
    std::string msg = "not a group:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw FormatError(msg);
  }
  return GroupTable(n, std::move(mul), std::move(labels), j["name"].get<std::string>());
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << j.dump(2) << '\n';
}

GroupTable load_group_file(const std::string& path) { return group_from_json(read_json_file(path)); }

void save_group_file(const GroupTable& g, const std::string& path) { write_json_file(group_to_json(g), path); }

json graph_to_json(const SimpleGraph& g) {
  json j;
  j["n"] = g.vertex_count();
  json edges = json::array();
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) edges.push_back(json::array({u, v}));
    });
  j["edges"] = std::move(edges);
  j["labels"] = g.labels();
  return j;
}

SimpleGraph graph_from_json(const json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  SimpleGraph g(n, "file");
  for (const auto& e : j.at("edges")) {
    const auto u = e.at(0).get<std::size_t>(), v = e.at(1).get<std::size_t>();
    if (u >= v || v >= n) throw FormatError("edge [" + std::to_string(u) + ", " + std::to_string(v) + "] invalid");
    g.add_edge(u, v);
  }
  if (j.contains("labels") && !j["labels"].is_null()) g.set_labels(j["labels"].get<std::vector<std::string>>());
  return g;
}

json invariants_to_json(const GroupInvariants& inv) {
  json j;
  j["order"] = inv.order;
  json z = json::array();
  inv.center.for_each([&](std::size_t x) { z.push_back(x); });
  j["center"] = z;
  j["center_size"] = inv.center_size;
  j["abelian"] = inv.is_abelian;
  j["least_prime"] = inv.least_prime;
  j["cent"] = inv.cent_count;
  j["nacent"] = inv.nacent_count;
  j["t"] = inv.order2_centralizers;
  j["T"] = inv.max_cyclic_total;
  j["U"] = inv.max_cyclic_central;
  j["M"] = inv.max_excess;
  j["d"] = inv.min_excess;
  j["ac_group"] = inv.is_ac_group;
  j["nilpotent"] = inv.is_nilpotent;
  return j;
}

GroupInvariants invariants_from_json(const json& j, std::size_t order) {
  GroupInvariants inv;
  inv.order = j.at("order").get<std::size_t>();
  if (inv.order != order) throw FormatError("invariants belong to a group of another order");
  inv.center = SubsetMask(order);
  for (const auto& x : j.at("center")) inv.center.set(x.get<std::size_t>());
  inv.center_size = j.at("center_size").get<std::size_t>();
  inv.is_abelian = j.at("abelian").get<bool>();
  inv.least_prime = j.at("least_prime").get<std::size_t>();
  inv.cent_count = j.at("cent").get<std::size_t>();
  inv.nacent_count = j.at("nacent").get<std::size_t>();
  inv.order2_centralizers = j.at("t").get<std::size_t>();
  inv.max_cyclic_total = j.at("T").get<std::size_t>();
  inv.max_cyclic_central = j.at("U").get<std::size_t>();
  inv.max_excess = j.at("M").get<std::size_t>();
  inv.min_excess = j.at("d").get<std::size_t>();
  inv.is_ac_group = j.at("ac_group").get<bool>();
  inv.is_nilpotent = j.at("nilpotent").get<bool>();
  return inv;
}

}  // namespace commdom
