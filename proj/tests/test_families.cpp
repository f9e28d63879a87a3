#include <doctest.h>

#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "support.hpp"

using namespace commdom;

namespace {

using Hist = std::map<std::size_t, std::size_t>;

}  // namespace

TEST_SUITE("group-families") {

TEST_CASE("abelian products") {
  CHECK(cyclic(1).order() == 1);
  const GroupTable e9 = abelian_product({3, 3});
  CHECK(order_histogram(e9) == Hist{{1, 1}, {3, 8}});
  CHECK(order_histogram(cyclic(9)) == Hist{{1, 1}, {3, 2}, {9, 6}});
  CHECK(make_group("abelian_product([2,4])").descriptor() == "abelian_product(2,4)");
}

TEST_CASE("generalized dihedral") {
  const GroupTable d3 = generalized_dihedral(cyclic(3));
  CHECK(validate(d3).empty());
  CHECK(order_histogram(d3) == Hist{{1, 1}, {2, 3}, {3, 2}});
  for (std::size_t n : {3, 4, 5}) CHECK(order_histogram(generalized_dihedral(cyclic(n))) == order_histogram(dihedral(2 * n)));

  const GroupTable d33 = generalized_dihedral(abelian_product({3, 3}));
  CHECK(d33.order() == 18);
  std::size_t involutions_outside = 0;
  for (Element x = 9; x < 18; ++x) involutions_outside += element_order(d33, x) == 2;
  CHECK(involutions_outside == 9);
}

TEST_CASE("dihedral and quaternion") {
  CHECK(center(dihedral(8)).count() == 2);
  const GroupTable q8 = generalized_quaternion(8);
  CHECK(order_histogram(q8)[2] == 1);
  CHECK(center(q8).count() == 2);
  CHECK(validate(generalized_quaternion(32)).empty());
  CHECK_THROWS_AS(generalized_quaternion(12), PreconditionError);
}

TEST_CASE("symmetric and alternating") {
  CHECK(symmetric(3).order() == 6);
  CHECK(center(symmetric(3)).count() == 1);
  CHECK(alternating(4).order() == 12);
  CHECK(center(alternating(4)).count() == 1);
  CHECK(order_histogram(symmetric(4)) == Hist{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
}

TEST_CASE("heisenberg") {
  CHECK(heisenberg(3).order() == 27);
  CHECK(center(heisenberg(3)).count() == 3);
  CHECK(order_histogram(heisenberg(2)) == order_histogram(dihedral(8)));
  CHECK(order_histogram(heisenberg(5)) == Hist{{1, 1}, {5, 124}});
}

TEST_CASE("projective groups") {
  CHECK(pgl2(3).order() == 24);
  CHECK(order_histogram(pgl2(3)) == order_histogram(symmetric(4)));
  CHECK(order_histogram(psl2(4)) == order_histogram(alternating(5)));
  CHECK(pgl2(5).order() == 120);
  CHECK(psl2(5).order() == 60);
}

TEST_CASE("permutation closure") {
  CHECK(perm_closure({{1, 0}}).order() == 2);
  CHECK(order_histogram(perm_closure({{1, 2, 0}, {1, 0, 2}})) == order_histogram(symmetric(3)));
  CHECK(order_histogram(perm_closure({{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}})) == order_histogram(dihedral(10)));
  CHECK_THROWS_AS(perm_closure({{0, 0, 1}}), PreconditionError);
}

TEST_CASE("pq groups match a permutation oracle") {
  const GroupTable g = pq_group(3, 7);
  // x -> 2x and x -> x + 1 on Z_7.
  const oracle::Group o = oracle_group({{0, 2, 4, 6, 1, 3, 5}, {1, 2, 3, 4, 5, 6, 0}});
  CHECK(g.order() == 21);
  CHECK(order_histogram(g) == oracle::order_histogram(o));
  CHECK_THROWS_AS(pq_group(3, 5), PreconditionError);
}

TEST_CASE("heisenberg over GF(4) extended by its torus") {
  const GroupTable g = heisenberg_torus(4);
  CHECK(g.order() == 192);
  CHECK(validate(g).empty());
  const auto inv = compute_invariants(g);
  CHECK(inv.center_size == 1);
  CHECK(inv.nacent_count == 2);
  CHECK(heisenberg_torus(2).order() == 8);
}

TEST_CASE("descriptors round-trip") {
  for (const char* d : {"cyclic(5)", "dihedral(12)", "generalized_dihedral(abelian_product(2,4))", "heisenberg(3)",
                        "pq(3,7)", "psl2(4)", "direct(symmetric(3),cyclic(2))", "heisenberg_torus(4)",
                        "direct(cyclic(2),cyclic(3),symmetric(3))"}) {
    CAPTURE(d);
    const GroupTable g = make_group(d);
    CHECK(g.descriptor() == d);
    CHECK(make_group(g.descriptor()).table() == g.table());
  }
  CHECK(make_group(std::vector<std::string>{"heisenberg", "3"}).descriptor() == "heisenberg(3)");
  CHECK_THROWS_AS(make_group("nosuch(3)"), FormatError);
  CHECK_THROWS_AS(make_group("dihedral(8"), FormatError);
}

}  // TEST_SUITE
