// Acceptance run: one PASS/FAIL line per criterion, with wall time.
//
// Exit status is 0 when the failing criteria are exactly the ones named by
// --expect-fail, so a known disagreement stays visible without hiding new ones.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commdom/commuting.hpp"
#include "commdom/domination.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/formulas.hpp"
#include "commdom/verify.hpp"
#include "support.hpp"

using namespace commdom;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    pass = false;
    detail << what;
  }
};

std::string show(const DominationResult& r) {
  if (!r.exists()) return "none";
  if (!r.exact()) return "[" + std::to_string(r.lower_bound) + ", " + std::to_string(r.upper_bound) + "]";
  return std::to_string(*r.value);
}

bool is(const DominationResult& r, std::size_t v) { return r.exact() && r.value == v; }

struct Solved {
  DominationResult gamma, gamma_t;
};

Solved solve(const std::string& descriptor, double budget = kDefaultBudgetSeconds) {
  const SimpleGraph g = proper_commuting_graph(make_group(descriptor)).graph;
  return {exact_domination_number(g, {budget}), exact_total_domination_number(g, {budget})};
}

void expect_value(Outcome& o, const std::string& what, const DominationResult& r, std::optional<std::size_t> want) {
  const bool ok = want ? is(r, *want) : (r.exact() && !r.exists());
  o.expect(ok, what + " = " + show(r) + ", expected " + (want ? std::to_string(*want) : "none"));
}

// The corpus sweep is shared by the corpus-wide criteria.
const SweepReport& corpus_sweep() {
  static const SweepReport rep = run_family_sweep(load_corpus(COMMDOM_SOURCE_DIR "/data/corpus.json"));
  return rep;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Outcome equality_triple() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"symmetric(3)", 4}, {"dihedral(8)", 3}, {"generalized_quaternion(8)", 3}};
  for (const auto& [d, want] : cases) {
    const GroupTable g = make_group(d);
    const GroupInvariants inv = compute_invariants(g);
    const auto r = exact_domination_number(proper_commuting_graph(g).graph);
    expect_value(o, "gamma " + d, r, want);
    const Rational bound(static_cast<long long>(inv.order - inv.center_size + inv.order2_centralizers), 2);
    o.expect(r.exact() && Rational(static_cast<long long>(*r.value)) == bound,
             d + ": (|G|-|Z|+t)/2 = " + rational_to_string(bound));
  }
  return o;
}

Outcome heisenberg_family() {
  Outcome o;
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"dihedral(8)", 2}, {"generalized_quaternion(8)", 2}, {"heisenberg(3)", 3}, {"heisenberg(5)", 5}};
  for (const auto& [d, p] : cases) {
    const Solved s = solve(d);
    expect_value(o, "gamma " + d, s.gamma, p + 1);
    expect_value(o, "gamma_t " + d, s.gamma_t, 2 * (p + 1));
  }
  return o;
}

Outcome projective() {
  Outcome o;
  const Solved pgl = solve("pgl2(3)");
  expect_value(o, "gamma PGL(2,3)", pgl.gamma, 13);
  expect_value(o, "gamma_t PGL(2,3)", pgl.gamma_t, 26);
  expect_value(o, "gamma_t A4", solve("alternating(4)").gamma_t, 10);
  const Solved psl = solve("psl2(5)");
  expect_value(o, "gamma PSL(2,5)", psl.gamma, 21);
  expect_value(o, "gamma_t PSL(2,5)", psl.gamma_t, 42);
  return o;
}

Outcome dihedral_formula() {
  Outcome o;
  for (const std::string a : {"cyclic(9)", "cyclic(15)", "abelian_product(2,4)", "abelian_product(3,3)"}) {
    const GroupTable ga = make_group(a);
    std::size_t involutions = 0;  // elements with x^2 = 1, identity included
    for (Element x = 0; x < ga.order(); ++x) involutions += ga.mul(x, x) == ga.identity();
    const std::size_t want = 1 + ga.order() / involutions;
    const std::string d = "generalized_dihedral(" + a + ")";
    expect_value(o, "gamma " + d, solve(d).gamma, want);
    // The library formula, evaluated beyond its gate where A is elementary abelian.
    const FormulaPrediction f = gen_dihedral_gamma(ga);
    const auto v = f.applicable ? f.value : f.beyond_gate;
    o.expect(v && *v == Rational(static_cast<long long>(want)), "formula for " + d);
  }
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto r = domination_ratio(dihedral(4 * k - 2));
    const Rational want(static_cast<long long>(k), static_cast<long long>(2 * k - 1));
    o.expect(r.exact && r.value() == want,
             "ratio dihedral(" + std::to_string(4 * k - 2) + ") = " + rational_to_string(r.value()));
  }
  return o;
}

Outcome pq_groups() {
  Outcome o;
  const Solved a = solve("pq(3,7)");
  expect_value(o, "gamma pq(3,7)", a.gamma, 8);
  expect_value(o, "gamma_t pq(3,7)", a.gamma_t, 16);
  const Solved b = solve("dihedral(10)");
  expect_value(o, "gamma D10", b.gamma, 6);
  expect_value(o, "gamma_t D10", b.gamma_t, std::nullopt);
  return o;
}

Outcome nilpotent() {
  Outcome o;
  struct Case {
    std::string d;
    std::size_t gamma;
    std::optional<std::size_t> gamma_t;
  };
  const std::vector<Case> cases{{"direct(dihedral(8),cyclic(3))", 3, {}},
                                {"direct(heisenberg(3),cyclic(5))", 4, {}},
                                {"direct(generalized_quaternion(8),heisenberg(3))", 3, 4}};
  for (const auto& c : cases) {
    const GroupTable g = make_group(c.d);
    const SimpleGraph pg = proper_commuting_graph(g).graph;
    const auto r = exact_domination_number(pg, {120});
    expect_value(o, "gamma " + c.d, r, c.gamma);
    const auto f = nilpotent_gamma(g);
    o.expect(f.applicable && f.value == Rational(static_cast<long long>(c.gamma)), "formula path " + c.d);
    if (!c.gamma_t) continue;
    expect_value(o, "gamma_t " + c.d, exact_total_domination_number(pg, {120}), c.gamma_t);
    const auto ft = nilpotent_gamma_t(g);
    o.expect(ft.applicable && ft.value == Rational(static_cast<long long>(*c.gamma_t)), "formula path gamma_t " + c.d);
  }
  return o;
}

Outcome total_existence() {
  Outcome o;
  std::size_t groups = 0, absent = 0;
  for (const auto& r : corpus_sweep().groups) {
    if (r.abelian) continue;
    ++groups;
    if (!r.gamma_t.exact()) {
      o.expect(false, r.descriptor + ": gamma_t inexact");
      continue;
    }
    const bool order2 = r.order2.has_value();
    o.expect(r.gamma_t.exists() != order2, r.descriptor + ": existence mismatch");
    if (order2) {
      ++absent;
      o.expect(r.order2->verified, r.descriptor + ": structure check failed (" + r.order2->failure + ")");
    }
  }
  if (o.pass) o.detail << groups << " groups, " << absent << " without gamma_t";
  return o;
}

Outcome bound_sandwich() {
  Outcome o;
  std::size_t groups = 0, log_used = 0;
  for (const auto& r : corpus_sweep().groups) {
    if (r.abelian) continue;
    ++groups;
    if (!r.gamma.exact()) {
      o.expect(false, r.descriptor + ": gamma inexact");
      continue;
    }
    const GroupTable g = make_group(r.descriptor);
    const GroupInvariants inv = compute_invariants(g);
    const std::size_t gamma = *r.gamma.value;
    const std::size_t noncentral = inv.order - inv.center_size;
    const std::size_t lower = std::max({std::size_t{3}, inv.least_prime + 1, ceil_div(noncentral, inv.max_excess)});
    std::size_t upper = std::min(inv.max_cyclic_total - inv.max_cyclic_central,
                                 (noncentral + inv.order2_centralizers) / 2);
    const auto lb = bound_log(inv, r.generalized_dihedral_a.has_value());
    if (lb.applicable && lb.value) {
      ++log_used;
      upper = std::min(upper, static_cast<std::size_t>(numerator(*lb.value)));
    }
    o.expect(lower <= gamma && gamma <= upper, r.descriptor + ": " + std::to_string(lower) + " <= " +
                                                   std::to_string(gamma) + " <= " + std::to_string(upper));
  }
  if (o.pass) o.detail << groups << " groups, log bound applied to " << log_used;
  return o;
}

Outcome ac_iff() {
  Outcome o;
  std::size_t ac = 0;
  for (const auto& r : corpus_sweep().groups) {
    if (r.abelian) continue;
    if (!r.gamma.exact() || !r.gamma_t.exact()) {
      o.expect(false, r.descriptor + ": inexact");
      continue;
    }
    const GroupInvariants inv = compute_invariants(make_group(r.descriptor));
    ac += inv.is_ac_group;
    const bool gamma_eq = *r.gamma.value == inv.cent_count - 1;
    o.expect(gamma_eq == inv.is_ac_group, r.descriptor + ": gamma = " + std::to_string(*r.gamma.value) +
                                              ", |cent| = " + std::to_string(inv.cent_count));
    if (r.generalized_dihedral_a) continue;
    const bool gamma_t_eq = r.gamma_t.exists() && *r.gamma_t.value == 2 * inv.cent_count - 2;
    o.expect(gamma_t_eq == inv.is_ac_group, r.descriptor + ": gamma_t = " + show(r.gamma_t) +
                                                ", |cent| = " + std::to_string(inv.cent_count));
  }
  if (o.pass) o.detail << ac << " AC groups";
  return o;
}

Outcome product_laws() {
  Outcome o;
  const auto two = strong_product_property_tests(1, 200, 2);
  const auto three = strong_product_property_tests(2, 50, 3);
  for (const auto* rep : {&two, &three})
    for (const auto& law : rep->laws)
      o.expect(law.counterexamples.empty(), law.name + " (" + std::to_string(rep->factors) + " factors): " +
                                                std::to_string(law.counterexamples.size()) + " counterexamples");
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"symmetric(3)", "cyclic(2)"}, {"dihedral(8)", "cyclic(3)"}, {"generalized_quaternion(8)", "symmetric(3)"}};
  for (const auto& [a, b] : pairs) {
    const GroupTable ga = make_group(a), gb = make_group(b);
    o.expect(same_edges(commuting_graph(direct_product(ga, gb)),
                        strong_product(commuting_graph(ga), commuting_graph(gb))),
             "commuting graph of " + a + " x " + b);
  }
  return o;
}

Outcome solver_oracle() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 16;
    const double p = std::uniform_real_distribution<double>(0.05, 0.7)(rng);
    const oracle::Graph og = oracle::random_graph(rng, n, p);
    const SimpleGraph g = from_oracle(og);
    const auto d = exact_domination_number(g), t = exact_total_domination_number(g);
    mismatches += d.value != oracle::domination_number(og, false) || !d.exact();
    mismatches += t.value != oracle::domination_number(og, true) || !t.exact();
  }
  o.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
  if (o.pass) o.detail << "300 graphs";
  return o;
}

Outcome ratio_extremum() {
  Outcome o;
  const Fingerprint s3 = fingerprint(symmetric(3));
  std::optional<Rational> best;
  std::vector<std::string> at;
  for (const auto& r : corpus_sweep().groups) {
    if (r.abelian) continue;
    if (!r.ratio) {
      o.expect(false, r.descriptor + ": ratio inexact");
      continue;
    }
    if (!best || *r.ratio > *best) {
      best = r.ratio;
      at.clear();
    }
    if (*r.ratio == *best) at.push_back(r.descriptor);
  }
  o.expect(best && *best == Rational(2, 3), "maximum " + (best ? rational_to_string(*best) : std::string("none")));
  for (const auto& d : at) o.expect(fingerprint(make_group(d)) == s3, d + " attains the maximum");
  if (o.pass) o.detail << "2/3 at " << at.size() << " descriptors of S3";
  return o;
}

Outcome formula_only() {
  Outcome o;
  o.expect(suzuki_gamma(1).value == Rational(4161) && suzuki_gamma_t(1).value == Rational(8322), "Suzuki n = 1");
  for (unsigned n = 1; n <= 6; ++n) {
    const auto terms = oracle::suzuki_terms(n);
    std::vector<BigInt> s;
    try {
      s = suzuki_summands(n);
    } catch (const Error& e) {
      o.expect(false, e.what());
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      BigInt want = BigInt(static_cast<unsigned long long>(terms.terms[i] >> 64)) << 64;
      want += oracle::to_ull(terms.terms[i]);
      o.expect(terms.integral[i] && s.at(i) == want, "Suzuki summand " + std::to_string(i + 1) +
                                                        " for n = " + std::to_string(n));
    }
  }
  for (std::size_t p : {3, 5, 7})
    for (std::size_t c = 1; c <= 10; ++c) {
      const std::size_t want = c <= 6 ? p + 1 : p * p + 1;
      const auto g = p4_gamma(p, c), t = p4_gamma_t(p, c);
      o.expect(g.value == Rational(static_cast<long long>(want)) &&
                   t.value == Rational(static_cast<long long>(2 * want)),
               "p^4 table p = " + std::to_string(p) + ", G" + std::to_string(c));
    }
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "equality triple", 1, equality_triple},
      {2, "heisenberg family", 10, heisenberg_family},
      {3, "PGL/PSL", 30, projective},
      {4, "generalized dihedral", 10, dihedral_formula},
      {5, "pq groups", 5, pq_groups},
      {6, "nilpotent reduction", 120, nilpotent},
      {7, "total-domination existence", 0, total_existence},
      {8, "bound sandwich", 0, bound_sandwich},
      {9, "AC iff", 0, ac_iff},
      {10, "strong-product laws", 60, product_laws},
      {11, "solver oracle equivalence", 120, solver_oracle},
      {12, "ratio extremum", 0, ratio_extremum},
      {13, "formula-only arithmetic", 0, formula_only},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.expect(false, "over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit");
    if (!o.pass) failed.insert(c.id);
    std::printf("%s %2d %-27s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.str().c_str());
  }

  const std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing set differs from --expect-fail\n");
    return 1;
  }
  return 0;
}
