#include <doctest.h>

#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/group.hpp"
#include "support.hpp"

using namespace commdom;

TEST_SUITE("group-core") {

TEST_CASE("validate") {
  CHECK(validate(cyclic(6)).empty());

  // mul[0][0] = 1 with 0 declared the identity.
  const std::vector<Element> bad{1, 1, 1, 0};
  const auto v = validate(2, bad, Element{0});
  REQUIRE_FALSE(v.empty());
  CHECK(std::find(v.begin(), v.end(), "identity violated at 0") != v.end());

  // Latin square, not associative.
  const std::vector<Element> quasi{0, 1, 2, 1, 2, 0, 2, 1, 0};
  CHECK_FALSE(validate(3, quasi).empty());
}

TEST_CASE("constructor rejects tables without identity or above the cap") {
  CHECK_THROWS_AS(GroupTable(2, {0, 0, 1, 1}, {}, "x"), FormatError);
  CHECK_THROWS_AS(cyclic(kDefaultOrderCap + 1), SizeLimitError);
}

TEST_CASE("centralizers and center") {
  const GroupTable s3 = symmetric(3);
  const Element t = by_label(s3, "(0 1)");
  const SubsetMask c = centralizer(s3, t);
  CHECK(c.count() == 2);
  CHECK(c.test(s3.identity()));
  CHECK(c.test(t));
  CHECK(center(s3).count() == 1);

  const GroupTable q8 = generalized_quaternion(8);
  CHECK(centralizer(q8, by_label(q8, "a")).count() == 4);
  CHECK(center(q8).count() == 2);

  const GroupTable c12 = cyclic(12);
  CHECK(center(c12).count() == 12);
  CHECK(centralizer(c12, 5).count() == 12);
}

TEST_CASE("element orders") {
  const GroupTable q8 = generalized_quaternion(8);
  CHECK(element_order(q8, q8.identity()) == 1);
  CHECK(element_order(q8, by_label(q8, "a^2")) == 2);
  CHECK(element_order(cyclic(12), 1) == 12);
}

TEST_CASE("maximal cyclic subgroups") {
  auto mc = maximal_cyclic_subgroups(generalized_quaternion(8));
  CHECK(mc.total == 3);
  CHECK(mc.central == 0);
  mc = maximal_cyclic_subgroups(cyclic(6));
  CHECK(mc.total == 1);
  CHECK(mc.central == 1);
  CHECK(maximal_cyclic_subgroups(dihedral(8)).total == 5);
  CHECK(maximal_cyclic_subgroups(symmetric(3)).total == 4);
  // Exponent 3: every subgroup of order 3 is maximal cyclic, the center included.
  mc = maximal_cyclic_subgroups(heisenberg(3));
  CHECK(mc.total == 13);
  CHECK(mc.central == 1);
}

TEST_CASE("distinct centralizers") {
  CHECK(distinct_centralizers(symmetric(3)).size() == 5);
  CHECK(distinct_centralizers(cyclic(7)).size() == 1);
  CHECK(distinct_centralizers(alternating(4)).size() == 6);
}

TEST_CASE("AC groups") {
  CHECK(is_ac_group(symmetric(3)));
  CHECK(is_ac_group(generalized_quaternion(8)));
  CHECK_FALSE(is_ac_group(symmetric(4)));
}

TEST_CASE("nilpotent decomposition") {
  const auto d = nilpotent_decomposition(make_group("direct(dihedral(8),cyclic(3))"));
  REQUIRE(d);
  REQUIRE(d->size() == 2);
  CHECK((*d)[0].prime == 2);
  CHECK((*d)[0].subgroup.count() == 8);
  CHECK((*d)[1].prime == 3);
  CHECK((*d)[1].subgroup.count() == 3);

  CHECK_FALSE(nilpotent_decomposition(symmetric(3)));

  const auto h = nilpotent_decomposition(heisenberg(3));
  REQUIRE(h);
  REQUIRE(h->size() == 1);
  CHECK((*h)[0].subgroup.count() == 27);
}

TEST_CASE("direct products") {
  const GroupTable c6 = direct_product(cyclic(2), cyclic(3));
  CHECK(validate(c6).empty());
  CHECK(order_histogram(c6) == std::map<std::size_t, std::size_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK(order_histogram(direct_product(cyclic(1), symmetric(3))) == order_histogram(symmetric(3)));

  const GroupTable big = make_group("direct(generalized_quaternion(8),heisenberg(3))");
  CHECK(big.order() == 216);
  CHECK(center(big).count() == 6);
  CHECK(validate(direct_product(dihedral(8), symmetric(3))).empty());
}

TEST_CASE("invariants") {
  auto inv = compute_invariants(symmetric(3));
  CHECK(inv.center_size == 1);
  CHECK(inv.least_prime == 2);
  CHECK(inv.cent_count == 5);
  CHECK(inv.order2_centralizers == 3);
  CHECK(inv.max_cyclic_total == 4);
  CHECK(inv.max_cyclic_central == 0);
  CHECK(inv.max_excess == 2);
  CHECK(inv.min_excess == 1);
  CHECK(inv.is_ac_group);
  CHECK_FALSE(inv.is_nilpotent);

  inv = compute_invariants(generalized_quaternion(8));
  CHECK(inv.center_size == 2);
  CHECK(inv.cent_count == 4);
  CHECK(inv.order2_centralizers == 0);
  CHECK(inv.max_cyclic_total == 3);
  CHECK(inv.max_excess == 2);
  CHECK(inv.min_excess == 2);
  CHECK(inv.is_ac_group);
  CHECK(inv.is_nilpotent);

  inv = compute_invariants(heisenberg(3));
  CHECK(inv.order == 27);
  CHECK(inv.center_size == 3);
  CHECK(inv.max_excess == 6);
  CHECK(inv.min_excess == 6);
  CHECK(inv.least_prime == 3);
}

TEST_CASE("invariants agree with a permutation oracle") {
  // S4 and the dihedral group of order 10 from raw generators.
  const std::vector<std::pair<std::vector<oracle::Perm>, std::string>> cases{
      {{{1, 0, 2, 3}, {1, 2, 3, 0}}, "symmetric(4)"},
      {{{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}, "dihedral(10)"},
      {{{1, 2, 0, 3}, {1, 0, 3, 2}}, "alternating(4)"},
  };
  for (const auto& [gens, desc] : cases) {
    CAPTURE(desc);
    const oracle::Group o = oracle_group(gens);
    const GroupTable g = make_group(desc);
    CHECK(g.order() == o.order());
    CHECK(center(g).count() == oracle::center_size(o));
    CHECK(order_histogram(g) == oracle::order_histogram(o));
  }
}

TEST_CASE("fingerprints separate D8 from Q8") {
  CHECK_FALSE(fingerprint(dihedral(8)) == fingerprint(generalized_quaternion(8)));
  CHECK(fingerprint(dihedral(6)) == fingerprint(symmetric(3)));
}

}  // TEST_SUITE
