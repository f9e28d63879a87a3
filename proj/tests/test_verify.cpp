#include <doctest.h>

#include <algorithm>
#include <set>

#include "commdom/families.hpp"
#include "commdom/io.hpp"
#include "commdom/verify.hpp"

using namespace commdom;

namespace {

const TheoremCheck* find_check(const GroupReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.theorem_id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite on S3") {
  const GroupReport r = run_theorem_suite(symmetric(3));
  CHECK(*r.gamma.value == 4);
  CHECK_FALSE(r.gamma_t.exists());
  for (const char* id : {"haji-amiri", "ac-gamma", "total-existence", "index-two-primes-gamma"}) {
    CAPTURE(id);
    const auto* c = find_check(r, id);
    REQUIRE(c);
    CHECK(c->applicable);
    CHECK(c->status == CheckStatus::pass);
  }
  CHECK(find_check(r, "total-existence")->predicted == "nonexistence");
  // A = Z3 is elementary abelian, so the D(A) formula is only evaluated beyond its gate.
  const auto* gd = find_check(r, "gen-dihedral-gamma");
  REQUIRE(gd);
  CHECK_FALSE(gd->applicable);
  CHECK(gd->beyond_gate == std::optional<std::string>("holds"));
  CHECK(r.ratio == Rational(2, 3));
}

TEST_CASE("suite on heisenberg(5)") {
  const GroupReport r = run_theorem_suite(heisenberg(5));
  CHECK(*r.gamma.value == 6);
  CHECK(*r.gamma_t.value == 12);
  const auto* c = find_check(r, "central-codim2-gamma-t");
  REQUIRE(c);
  CHECK(c->status == CheckStatus::pass);
}

TEST_CASE("suite on pgl2(3) reports the disagreement") {
  const GroupReport r = run_theorem_suite(pgl2(3));
  CHECK(*r.gamma.value == 7);
  CHECK(*r.gamma_t.value == 11);
  CHECK(find_check(r, "pgl2-gamma")->status == CheckStatus::fail);
  CHECK(find_check(r, "pgl2-gamma-t")->status == CheckStatus::fail);
}

TEST_CASE("degraded budgets give bounds_only, never fail") {
  const GroupReport r = run_theorem_suite(symmetric(5), SolverOptions{1e-9});
  for (const auto& c : r.checks) {
    CAPTURE(c.theorem_id);
    if (!r.gamma.exact() && c.target == DominationKind::domination && c.kind == FormulaKind::exact_gamma)
      CHECK(c.status != CheckStatus::fail);
  }
}

TEST_CASE("abelian groups have no checks") { CHECK(run_theorem_suite(cyclic(6)).checks.empty()); }

TEST_CASE("small sweep is deterministic and independent of worker count") {
  Corpus c;
  c.description = "test";
  for (const char* d : {"symmetric(3)", "dihedral(10)", "alternating(4)", "generalized_quaternion(16)", "pq(3,7)"})
    c.groups.push_back({d, std::nullopt});
  const SweepReport one = run_family_sweep(c, SweepOptions{60, 1});
  const SweepReport four = run_family_sweep(c, SweepOptions{60, 4});
  CHECK(to_json(one).dump() == to_json(four).dump());
  CHECK(one.summary.groups == 5);
  CHECK(one.summary.fail == 0);
  CHECK(*one.summary.max_ratio == Rational(2, 3));
  CHECK(one.summary.max_ratio_groups == std::vector<std::string>{"symmetric(3)"});

  std::size_t pass = 0, fail = 0, skipped = 0, bounds = 0;
  for (const auto& g : one.groups)
    for (const auto& ch : g.checks) {
      pass += ch.status == CheckStatus::pass;
      fail += ch.status == CheckStatus::fail;
      skipped += ch.status == CheckStatus::skipped;
      bounds += ch.status == CheckStatus::bounds_only;
    }
  CHECK(one.summary.pass == pass);
  CHECK(one.summary.fail == fail);
  CHECK(one.summary.skipped == skipped);
  CHECK(one.summary.bounds_only == bounds);
}

TEST_CASE("reports round-trip through JSON") {
  Corpus c;
  c.description = "round trip";
  for (const char* d : {"symmetric(3)", "heisenberg(3)", "pgl2(3)", "cyclic(4)"}) c.groups.push_back({d, std::nullopt});
  const SweepReport rep = run_family_sweep(c);
  const auto j = to_json(rep);
  CHECK(to_json(sweep_report_from_json(j)).dump() == j.dump());

  const auto jt = to_json(rep, true);
  CHECK(to_json(sweep_report_from_json(jt), true).dump() == jt.dump());

  const TheoremCheck& ch = rep.groups[0].checks[0];
  CHECK(to_json(check_from_json(to_json(ch))).dump() == to_json(ch).dump());
  CHECK(rational_from_string("4/6") == Rational(2, 3));
}

TEST_CASE("CSV has one row per non-abelian group") {
  Corpus c;
  for (const char* d : {"symmetric(3)", "cyclic(4)", "dihedral(8)"}) c.groups.push_back({d, std::nullopt});
  const std::string csv = to_csv(run_family_sweep(c));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("\"symmetric(3)\",6,4,none,2/3,4,4,,") != std::string::npos);
}

TEST_CASE("default corpus matches the pinned manifest") {
  const Corpus built = default_corpus(200);
  const Corpus pinned = load_corpus(COMMDOM_SOURCE_DIR "/data/corpus.json");
  CHECK(corpus_to_json(built).dump() == corpus_to_json(pinned).dump());
  // No duplicate descriptors, and the equality-case fingerprint only matches S3 copies.
  std::set<std::string> seen;
  const Fingerprint s3 = fingerprint(symmetric(3));
  for (const auto& e : built.groups) {
    CHECK(seen.insert(e.descriptor).second);
    if (e.descriptor.find("direct(generalized_quaternion(8),heisenberg(3))") != std::string::npos) continue;
    const GroupTable g = make_group(e.descriptor);
    if (fingerprint(g) == s3) CHECK(g.order() == 6);
  }
}

TEST_CASE("product laws") {
  const auto two = strong_product_property_tests(11, 30, 2);
  CHECK(two.counterexample_count() == 0);
  CHECK(two.laws.size() == 5);
  const auto three = strong_product_property_tests(12, 5, 3, 5);
  CHECK(three.counterexample_count() == 0);
}

TEST_CASE("planted product: proper gamma is the minimum over factors") {
  // P3 (center 0) and the star K_{1,3}; their proper graphs are 2 and 3 isolated vertices.
  SimpleGraph a(3);
  a.add_edge(0, 1);
  a.add_edge(0, 2);
  const SimpleGraph b = star_graph(3);
  const SimpleGraph prod = strong_product(a, b);
  CHECK(prod.vertex_count() == 12);
  const SimpleGraph proper = proper_graph(prod).graph;
  CHECK(*exhaustive_domination_number(proper, false) == 2);
  CHECK(*exact_domination_number(proper).value == 2);
}

}  // TEST_SUITE
