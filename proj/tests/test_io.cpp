#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "commdom/cache.hpp"
#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/io.hpp"
#include "commdom/verify.hpp"

using namespace commdom;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("commdom-test-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("group files round-trip and are validated") {
  TempDir dir;
  const std::string file = (dir.path / "q8.json").string();
  const GroupTable q8 = generalized_quaternion(8);
  save_group_file(q8, file);
  const GroupTable back = load_group_file(file);
  CHECK(back.table() == q8.table());
  CHECK(back.labels() == q8.labels());
  CHECK(back.descriptor() == "generalized_quaternion(8)");

  auto j = group_to_json(cyclic(3));
  j["table"][0][0] = 1;
  CHECK_THROWS_AS(group_from_json(j), FormatError);
  j = group_to_json(cyclic(3));
  j["table"] = nlohmann::ordered_json::parse("[[0,1,2],[1,2,0],[2,1,0]]");
  CHECK_THROWS_AS(group_from_json(j), FormatError);
  j = group_to_json(cyclic(3));
  j.erase("order");
  CHECK_THROWS_AS(group_from_json(j), FormatError);
  CHECK_THROWS_AS(load_group_file((dir.path / "missing.json").string()), FormatError);
}

TEST_CASE("graph export") {
  const SimpleGraph g = proper_commuting_graph(symmetric(3)).graph;
  const auto j = graph_to_json(g);
  CHECK(j["n"] == 5);
  CHECK(j["edges"].size() == 1);
  const auto e = j["edges"][0];
  CHECK(e[0].get<int>() < e[1].get<int>());
  const SimpleGraph back = graph_from_json(j);
  CHECK(same_edges(back, g));
  CHECK(back.labels() == g.labels());
}

TEST_CASE("invariants round-trip") {
  const GroupTable g = heisenberg(3);
  const auto j = invariants_to_json(compute_invariants(g));
  CHECK(invariants_to_json(invariants_from_json(j, g.order())).dump() == j.dump());
}

TEST_CASE("result cache") {
  TempDir dir;
  ResultCache off;
  CHECK_FALSE(off.enabled());
  CHECK_FALSE(off.get({"x", "gamma", 1}));

  ResultCache cache(dir.path.string());
  const CacheKey key{"symmetric(3)", "gamma", 60};
  CHECK_FALSE(cache.get(key));

  const SimpleGraph g = proper_commuting_graph(symmetric(3)).graph;
  const DominationResult r = exact_domination_number(g);
  cache.put(key, to_json(r, {}, true));
  const auto hit = cache.get(key);
  REQUIRE(hit);
  const DominationResult back = result_from_json(*hit, {}, g.vertex_count());
  CHECK(to_json(back, g.labels(), true).dump() == to_json(r, g.labels(), true).dump());

  // A different budget is a different key.
  CHECK_FALSE(cache.get({"symmetric(3)", "gamma", 1}));

  // Corrupted entry: a miss, then overwritten by the next put.
  { std::ofstream(cache.path_for(key)) << "{not json"; }
  CHECK_FALSE(cache.get(key));
  cache.put(key, to_json(r, {}, true));
  CHECK(cache.get(key));

  // Entry from another tool version: ignored.
  auto entry = read_json_file(cache.path_for(key));
  entry["tool_version"] = "0.0.0";
  write_json_file(entry, cache.path_for(key));
  CHECK_FALSE(cache.get(key));
}

TEST_CASE("cache on an unwritable path switches off") {
  ResultCache cache("/proc/commdom-no-such-dir");
  CHECK_FALSE(cache.enabled());
  cache.put({"x", "gamma", 1}, 1);
  CHECK_FALSE(cache.get({"x", "gamma", 1}));
}

TEST_CASE("fnv hashing") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

}  // TEST_SUITE
