#include "commdom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/number_theory.hpp"

namespace commdom {

using json = nlohmann::ordered_json;

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::bounds_only: return "bounds_only";
  }
  return "?";
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

namespace {

using Clock = std::chrono::steady_clock;

std::string render_result(const DominationResult& r) {
  if (!r.value) return "none";
  if (r.exact()) return std::to_string(*r.value);
  return "[" + std::to_string(r.lower_bound) + ", " + std::to_string(r.upper_bound) + "]";
}

std::string render_prediction(const FormulaPrediction& p) {
  const std::string v = p.value ? rational_to_string(*p.value) : "";
  switch (p.kind) {
    case FormulaKind::exact_gamma:
    case FormulaKind::exact_gamma_t: return v;
    case FormulaKind::lower_bound: return ">= " + v;
    case FormulaKind::upper_bound: {
      std::string s = "<= " + v;
      if (p.equality_expected) s += *p.equality_expected ? " (equality)" : " (strict)";
      return s;
    }
    case FormulaKind::nonexistence: return "nonexistence";
    case FormulaKind::existence: return "exists";
    case FormulaKind::excluded_value: return "!= " + v;
    case FormulaKind::ratio_form: return "<= 1/2 or k/(2k-1)";
  }
  return v;
}

/// Status of one prediction against an exact-or-bounded solver result.
CheckStatus compare(const FormulaPrediction& p, const DominationResult& r, std::size_t order) {
  if (!p.applicable) return CheckStatus::skipped;
  switch (p.kind) {
    case FormulaKind::nonexistence: return r.value ? CheckStatus::fail : CheckStatus::pass;
    case FormulaKind::existence: return r.value ? CheckStatus::pass : CheckStatus::fail;
    default: break;
  }
  if (!r.value) return CheckStatus::fail;  // a value was predicted but none exists
  if (!r.exact()) return CheckStatus::bounds_only;
  const Rational got(static_cast<long long>(*r.value));
  switch (p.kind) {
    case FormulaKind::exact_gamma:
    case FormulaKind::exact_gamma_t: return got == *p.value ? CheckStatus::pass : CheckStatus::fail;
    case FormulaKind::lower_bound: return got >= *p.value ? CheckStatus::pass : CheckStatus::fail;
    case FormulaKind::upper_bound:
      if (got > *p.value) return CheckStatus::fail;
      if (p.equality_expected && (got == *p.value) != *p.equality_expected) return CheckStatus::fail;
      return CheckStatus::pass;
    case FormulaKind::excluded_value: return got != *p.value ? CheckStatus::pass : CheckStatus::fail;
    case FormulaKind::ratio_form: {
      const Rational ratio = got / static_cast<long long>(order);
      return ratio <= Rational(1, 2) || is_spectrum_value(ratio) ? CheckStatus::pass : CheckStatus::fail;
    }
    default: return CheckStatus::fail;
  }
}

}  // namespace

GroupReport run_theorem_suite(const GroupTable& g, const SolverOptions& opts) {
  const auto start = Clock::now();
  GroupReport rep;
  rep.descriptor = g.descriptor();
  const GroupInvariants inv = compute_invariants(g);
  rep.order = inv.order;
  rep.center_size = inv.center_size;
  rep.abelian = inv.is_abelian;
  rep.ac_group = inv.is_ac_group;
  rep.nilpotent = inv.is_nilpotent;
  if (inv.is_abelian) {
    rep.elapsed = Clock::now() - start;
    return rep;
  }
  if (const auto gd = find_generalized_dihedral(g)) rep.generalized_dihedral_a = gd->a_order;
  rep.order2 = classify_order2_centralizer(g);

  const ProperGraph proper = proper_commuting_graph(g);
  rep.gamma = exact_domination_number(proper.graph, opts);
  rep.gamma_t = exact_total_domination_number(proper.graph, opts);
  if (rep.gamma.exact()) rep.ratio = Rational(static_cast<long long>(*rep.gamma.value),
                                              static_cast<long long>(inv.order));

  for (const auto& p : predictions_for(g, opts)) {
    const auto t0 = Clock::now();
    TheoremCheck c;
    c.theorem_id = p.theorem_id;
    c.group_descriptor = rep.descriptor;
    c.applicable = p.applicable;
    c.reason = p.reason;
    c.kind = p.kind;
    c.target = p.target;
    const DominationResult& r = p.target == DominationKind::domination ? rep.gamma : rep.gamma_t;
    c.predicted = p.applicable ? render_prediction(p) : "";
    c.computed = render_result(r);
    c.status = compare(p, r, inv.order);
    if (!p.applicable && p.beyond_gate && r.exact() && r.value) {
      FormulaPrediction q = p;
      q.applicable = true;
      q.value = p.beyond_gate;
      c.predicted = render_prediction(q);
      c.beyond_gate = compare(q, r, inv.order) == CheckStatus::pass ? "holds" : "fails";
    }
    c.elapsed = Clock::now() - t0;
    rep.checks.push_back(std::move(c));
  }

  // Order-2 centralizers force generalized dihedral structure of order 2m,
  // m odd; the check runs the structural verifier.
  {
    TheoremCheck c;
    c.theorem_id = "order2-centralizer-structure";
    c.group_descriptor = rep.descriptor;
    c.kind = FormulaKind::nonexistence;
    c.target = DominationKind::total_domination;
    c.applicable = rep.order2.has_value();
    if (c.applicable) {
      c.reason = "|C(" + g.label(rep.order2->x) + ")| = 2";
      c.predicted = "N of odd order " + std::to_string(rep.order2->n_order) + " inverted by an involution";
      c.computed = rep.order2->verified ? "verified" : rep.order2->failure;
      c.status = rep.order2->verified && !rep.gamma_t.value ? CheckStatus::pass : CheckStatus::fail;
    } else {
      c.reason = "no noncentral element has a centralizer of order 2";
      c.computed = render_result(rep.gamma_t);
      c.status = CheckStatus::skipped;
    }
    rep.checks.push_back(std::move(c));
  }
  rep.elapsed = Clock::now() - start;
  return rep;
}

// ---- corpus -------------------------------------------------------------------

namespace {

/// Primary invariant types of abelian groups of order n, as lists of prime
/// powers in ascending order.
std::vector<std::vector<std::size_t>> abelian_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& [p, e] : factorize(n)) {
    // Partitions of e, each part k giving a factor p^k.
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t left, std::size_t max_part) -> void {
      if (left == 0) {
        parts.push_back(cur);
        return;
      }
      for (std::size_t k = std::min(left, max_part); k >= 1; --k) {
        cur.push_back(k);
        self(self, left - k, k);
        cur.pop_back();
      }
    };
    rec(rec, e, e);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& base : out)
      for (const auto& part : parts) {
        auto t = base;
        for (auto k : part) t.push_back(ipow(p, k));
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  for (auto& t : out) std::sort(t.begin(), t.end());
  return out;
}

std::string join_factors(const std::vector<std::size_t>& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s;
}

}  // namespace

Corpus default_corpus(std::size_t max_order) {
  Corpus c;
  c.description = "non-abelian constructible groups of order <= " + std::to_string(max_order) +
                  " plus selected direct products";
  auto add = [&](std::string d, std::size_t order, std::optional<double> budget = std::nullopt) {
    if (order <= max_order) c.groups.push_back({std::move(d), budget});
  };

  for (std::size_t n = 6; n <= max_order; n += 2) add("dihedral(" + std::to_string(n) + ")", n);
  for (std::size_t a = 4; 2 * a <= max_order && a <= 100; ++a) {
    for (const auto& t : abelian_types(a)) {
      // Cyclic A (pairwise coprime primary factors) gives the dihedral groups above.
      bool cyclic = true;
      for (std::size_t i = 0; i + 1 < t.size() && cyclic; ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j)
          if (std::gcd(t[i], t[j]) != 1) cyclic = false;
      if (cyclic) continue;
      if (std::all_of(t.begin(), t.end(), [](std::size_t f) { return f == 2; })) continue;  // abelian
      add("generalized_dihedral(abelian_product(" + join_factors(t) + "))", 2 * a);
    }
  }
  for (std::size_t n = 8; n <= 128; n *= 2) add("generalized_quaternion(" + std::to_string(n) + ")", n);
  add("symmetric(3)", 6);
  add("symmetric(4)", 24);
  add("symmetric(5)", 120);
  add("alternating(4)", 12);
  add("alternating(5)", 60);
  add("heisenberg(3)", 27);
  add("heisenberg(5)", 125);
  add("heisenberg_torus(4)", 192);
  for (std::size_t p = 3; p * p < max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t q = p + 1; p * q <= max_order; ++q)
      if (is_prime(q) && (q - 1) % p == 0)
        add("pq(" + std::to_string(p) + "," + std::to_string(q) + ")", p * q);
  }
  const std::size_t pgl_orders[] = {0, 0, 6, 24, 60, 120};
  const std::size_t psl_orders[] = {0, 0, 6, 12, 60, 60};
  for (std::size_t q = 2; q <= 5; ++q) {
    add("pgl2(" + std::to_string(q) + ")", pgl_orders[q]);
    add("psl2(" + std::to_string(q) + ")", psl_orders[q]);
  }
  add("direct(dihedral(8),cyclic(3))", 24);
  add("direct(heisenberg(3),cyclic(5))", 135);
  add("direct(generalized_quaternion(8),cyclic(2))", 16);
  add("direct(symmetric(3),symmetric(3))", 36);
  add("direct(symmetric(3),cyclic(3))", 18);
  add("direct(alternating(4),cyclic(2))", 24);
  add("direct(dihedral(8),dihedral(8))", 64);
  add("direct(symmetric(4),cyclic(2))", 48);
  // Explicitly above the order cap; the large nilpotent case.
  if (max_order >= 200) c.groups.push_back({"direct(generalized_quaternion(8),heisenberg(3))", 120.0});
  return c;
}

json corpus_to_json(const Corpus& c) {
  json j;
  j["description"] = c.description;
  j["groups"] = json::array();
  for (const auto& e : c.groups) {
    json g;
    g["descriptor"] = e.descriptor;
    if (e.budget_seconds) g["budget_seconds"] = *e.budget_seconds;
    j["groups"].push_back(g);
  }
  return j;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read corpus manifest " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("corpus manifest " + path + ": " + e.what());
  }
  Corpus c;
  c.description = j.value("description", std::string{});
  if (!j.contains("groups") || !j["groups"].is_array()) throw FormatError("corpus manifest needs a groups array");
  for (const auto& g : j["groups"]) {
    CorpusEntry e;
    if (g.is_string()) {
      e.descriptor = g.get<std::string>();
    } else {
      e.descriptor = g.at("descriptor").get<std::string>();
      if (g.contains("budget_seconds")) e.budget_seconds = g["budget_seconds"].get<double>();
    }
    c.groups.push_back(std::move(e));
  }
  return c;
}

// ---- sweep --------------------------------------------------------------------

SweepSummary summarize(const std::vector<GroupReport>& groups) {
  SweepSummary s;
  for (const auto& g : groups) {
    if (g.abelian) continue;
    ++s.groups;
    for (const auto& c : g.checks) {
      switch (c.status) {
        case CheckStatus::pass: ++s.pass; break;
        case CheckStatus::fail: ++s.fail; break;
        case CheckStatus::skipped: ++s.skipped; break;
        case CheckStatus::bounds_only: ++s.bounds_only; break;
      }
    }
    if (!g.ratio) continue;
    if (!s.max_ratio || *g.ratio > *s.max_ratio) {
      s.max_ratio = *g.ratio;
      s.max_ratio_groups = {g.descriptor};
    } else if (*g.ratio == *s.max_ratio) {
      s.max_ratio_groups.push_back(g.descriptor);
    }
    if (*g.ratio > Rational(1, 2) && *g.ratio < 1) s.spectrum_hits.emplace_back(g.descriptor, *g.ratio);
  }
  return s;
}

SweepReport run_family_sweep(const Corpus& corpus, const SweepOptions& opts) {
  SweepReport rep;
  rep.corpus_description = corpus.description;
  rep.groups.resize(corpus.groups.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < corpus.groups.size();) {
      const auto& e = corpus.groups[i];
      const SolverOptions so{e.budget_seconds.value_or(opts.budget_seconds)};
      rep.groups[i] = run_theorem_suite(make_group(e.descriptor), so);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.workers, corpus.groups.size()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  rep.summary = summarize(rep.groups);
  return rep;
}

// ---- serialisation --------------------------------------------------------------

json to_json(const DominationResult& r, const std::vector<std::string>& labels, bool timings) {
  json j;
  j["kind"] = to_string(r.kind);
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  if (r.witness) {
    json w = json::array();
    r.witness->for_each([&](std::size_t v) { w.push_back(v < labels.size() ? labels[v] : std::to_string(v)); });
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  j["method"] = to_string(r.method);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["node_count"] = r.node_count;
  if (timings) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

json to_json(const FormulaPrediction& p) {
  json j;
  j["theorem_id"] = p.theorem_id;
  j["applicable"] = p.applicable;
  j["reason"] = p.reason;
  j["kind"] = to_string(p.kind);
  j["target"] = to_string(p.target);
  j["value"] = p.value ? json(rational_to_string(*p.value)) : json(nullptr);
  if (p.real) j["real"] = *p.real;
  if (p.equality_expected) j["equality_expected"] = *p.equality_expected;
  j["beyond_gate"] = p.beyond_gate ? json(rational_to_string(*p.beyond_gate)) : json(nullptr);
  return j;
}

json to_json(const TheoremCheck& c, bool timings) {
  json j;
  j["theorem_id"] = c.theorem_id;
  j["group"] = c.group_descriptor;
  j["applicable"] = c.applicable;
  j["reason"] = c.reason;
  j["kind"] = to_string(c.kind);
  j["target"] = to_string(c.target);
  j["predicted"] = c.predicted;
  j["computed"] = c.computed;
  j["status"] = to_string(c.status);
  j["beyond_gate"] = c.beyond_gate ? json(*c.beyond_gate) : json(nullptr);
  if (timings) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(c.elapsed).count();
  return j;
}

TheoremCheck check_from_json(const json& j) {
  TheoremCheck c;
  c.theorem_id = j.at("theorem_id").get<std::string>();
  c.group_descriptor = j.at("group").get<std::string>();
  c.applicable = j.at("applicable").get<bool>();
  c.reason = j.at("reason").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  for (int k = 0; k <= static_cast<int>(FormulaKind::ratio_form); ++k)
    if (to_string(static_cast<FormulaKind>(k)) == kind) c.kind = static_cast<FormulaKind>(k);
  c.target = j.at("target").get<std::string>() == "domination" ? DominationKind::domination
                                                              : DominationKind::total_domination;
  c.predicted = j.at("predicted").get<std::string>();
  c.computed = j.at("computed").get<std::string>();
  const std::string status = j.at("status").get<std::string>();
  for (int s = 0; s <= static_cast<int>(CheckStatus::bounds_only); ++s)
    if (to_string(static_cast<CheckStatus>(s)) == status) c.status = static_cast<CheckStatus>(s);
  if (!j.at("beyond_gate").is_null()) c.beyond_gate = j["beyond_gate"].get<std::string>();
  if (j.contains("elapsed_ms"))
    c.elapsed = std::chrono::nanoseconds(std::llround(j["elapsed_ms"].get<double>() * 1e6));
  return c;
}

namespace {

template <class Enum>
Enum enum_from_string(const std::string& s, Enum last) {
  for (int k = 0; k <= static_cast<int>(last); ++k)
    if (to_string(static_cast<Enum>(k)) == s) return static_cast<Enum>(k);
  throw FormatError("unknown enum value '" + s + "'");
}

std::chrono::nanoseconds read_elapsed(const json& j) {
  if (!j.contains("elapsed_ms")) return std::chrono::nanoseconds{0};
  return std::chrono::nanoseconds(std::llround(j["elapsed_ms"].get<double>() * 1e6));
}

}  // namespace

DominationResult result_from_json(const json& j, const std::vector<std::string>& labels,
                                  std::size_t vertex_count) {
  DominationResult r;
  r.kind = enum_from_string(j.at("kind").get<std::string>(), DominationKind::total_domination);
  if (!j.at("value").is_null()) r.value = j["value"].get<std::size_t>();
  if (j.contains("witness") && !j["witness"].is_null()) {
    VertexSet w(vertex_count);
    for (const auto& l : j["witness"]) {
      const std::string s = l.get<std::string>();
      auto it = std::find(labels.begin(), labels.end(), s);
      std::size_t v = 0;
      if (it != labels.end()) v = static_cast<std::size_t>(it - labels.begin());
      else v = std::stoul(s);
      if (v >= vertex_count) throw FormatError("witness vertex '" + s + "' out of range");
      w.set(v);
    }
    r.witness = w;
  }
  r.method = enum_from_string(j.at("method").get<std::string>(), SolveMethod::formula);
  r.lower_bound = j.at("lower_bound").get<std::size_t>();
  r.upper_bound = j.at("upper_bound").get<std::size_t>();
  r.node_count = j.at("node_count").get<std::uint64_t>();
  r.elapsed = read_elapsed(j);
  return r;
}

json to_json(const GroupReport& r, bool timings) {
  json j;
  j["group"] = r.descriptor;
  j["order"] = r.order;
  j["center_size"] = r.center_size;
  j["abelian"] = r.abelian;
  j["ac_group"] = r.ac_group;
  j["nilpotent"] = r.nilpotent;
  j["generalized_dihedral_a"] = r.generalized_dihedral_a ? json(*r.generalized_dihedral_a) : json(nullptr);
  if (r.order2) {
    json o;
    o["n_order"] = r.order2->n_order;
    o["verified"] = r.order2->verified;
    o["failure"] = r.order2->failure;
    j["order2_centralizer"] = o;
  } else {
    j["order2_centralizer"] = nullptr;
  }
  if (!r.abelian) {
    j["gamma"] = to_json(r.gamma, {}, timings);
    j["gamma_t"] = to_json(r.gamma_t, {}, timings);
    j["gamma"].erase("witness");
    j["gamma_t"].erase("witness");
  }
  j["ratio"] = r.ratio ? json(rational_to_string(*r.ratio)) : json(nullptr);
  j["checks"] = json::array();
  for (const auto& c : r.checks) {
    json cj = to_json(c, timings);
    cj.erase("group");
    j["checks"].push_back(cj);
  }
  if (timings) j["elapsed_ms"] = std::chrono::duration<double, std::milli>(r.elapsed).count();
  return j;
}

GroupReport group_report_from_json(const json& j) {
  GroupReport r;
  r.descriptor = j.at("group").get<std::string>();
  r.order = j.at("order").get<std::size_t>();
  r.center_size = j.at("center_size").get<std::size_t>();
  r.abelian = j.at("abelian").get<bool>();
  r.ac_group = j.at("ac_group").get<bool>();
  r.nilpotent = j.at("nilpotent").get<bool>();
  if (!j.at("generalized_dihedral_a").is_null()) r.generalized_dihedral_a = j["generalized_dihedral_a"].get<std::size_t>();
  if (!j.at("order2_centralizer").is_null()) {
    Order2Structure o;
    o.n_order = j["order2_centralizer"].at("n_order").get<std::size_t>();
    o.verified = j["order2_centralizer"].at("verified").get<bool>();
    o.failure = j["order2_centralizer"].at("failure").get<std::string>();
    r.order2 = o;
  }
  if (j.contains("gamma")) {
    r.gamma = result_from_json(j["gamma"], {}, 0);
    r.gamma_t = result_from_json(j["gamma_t"], {}, 0);
  }
  if (!j.at("ratio").is_null()) r.ratio = rational_from_string(j["ratio"].get<std::string>());
  for (const auto& cj : j.at("checks")) {
    json full = cj;
    full["group"] = r.descriptor;
    r.checks.push_back(check_from_json(full));
  }
  r.elapsed = read_elapsed(j);
  return r;
}

SweepReport sweep_report_from_json(const json& j) {
  SweepReport r;
  r.corpus_description = j.at("corpus").get<std::string>();
  const auto& sj = j.at("summary");
  auto& s = r.summary;
  s.groups = sj.at("groups").get<std::size_t>();
  s.pass = sj.at("pass").get<std::size_t>();
  s.fail = sj.at("fail").get<std::size_t>();
  s.skipped = sj.at("skipped").get<std::size_t>();
  s.bounds_only = sj.at("bounds_only").get<std::size_t>();
  if (!sj.at("max_ratio").is_null()) s.max_ratio = rational_from_string(sj["max_ratio"].get<std::string>());
  s.max_ratio_groups = sj.at("max_ratio_groups").get<std::vector<std::string>>();
  for (const auto& h : sj.at("spectrum_hits"))
    s.spectrum_hits.emplace_back(h.at(0).get<std::string>(), rational_from_string(h.at(1).get<std::string>()));
  for (const auto& g : j.at("groups")) r.groups.push_back(group_report_from_json(g));
  return r;
}

json to_json(const SweepReport& r, bool timings) {
  json j;
  j["corpus"] = r.corpus_description;
  const auto& s = r.summary;
  json sj;
  sj["groups"] = s.groups;
  sj["pass"] = s.pass;
  sj["fail"] = s.fail;
  sj["skipped"] = s.skipped;
  sj["bounds_only"] = s.bounds_only;
  sj["max_ratio"] = s.max_ratio ? json(rational_to_string(*s.max_ratio)) : json(nullptr);
  sj["max_ratio_groups"] = s.max_ratio_groups;
  json hits = json::array();
  for (const auto& [d, q] : s.spectrum_hits) hits.push_back(json::array({d, rational_to_string(q)}));
  sj["spectrum_hits"] = hits;
  j["summary"] = sj;
  j["groups"] = json::array();
  for (const auto& g : r.groups) j["groups"].push_back(to_json(g, timings));
  return j;
}

std::string to_csv(const SweepReport& r) {
  std::ostringstream os;
  os << "group,order,gamma,gamma_t,ratio,gamma_lower,gamma_upper,gamma_t_lower,gamma_t_upper\n";
  for (const auto& g : r.groups) {
    if (g.abelian) continue;
    os << '"' << g.descriptor << "\"," << g.order << ',' << render_result(g.gamma) << ','
       << render_result(g.gamma_t) << ',' << (g.ratio ? rational_to_string(*g.ratio) : "") << ','
       << g.gamma.lower_bound << ',' << g.gamma.upper_bound << ',';
    if (g.gamma_t.value) os << g.gamma_t.lower_bound << ',' << g.gamma_t.upper_bound;
    else os << ',';
    os << '\n';
  }
  return os.str();
}

// ---- strong products ----------------------------------------------------------

std::size_t ProductLawReport::counterexample_count() const {
  std::size_t n = 0;
  for (const auto& l : laws) n += l.counterexamples.size();
  return n;
}

namespace {

SimpleGraph random_factor(std::mt19937_64& rng, std::size_t max_vertices) {
  const std::size_t n = 3 + rng() % (max_vertices - 2);
  SimpleGraph g(n, "random");
  for (std::size_t v = 1; v < n; ++v) g.add_edge(0, v);
  for (std::size_t u = 1; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() & 1) g.add_edge(u, v);
  if (is_complete(g)) {
    const std::size_t u = 1 + rng() % (n - 2);
    g.remove_edge(u, u + 1);
  }
  return g;
}

std::string edge_list(const SimpleGraph& g) {
  std::string s = std::to_string(g.vertex_count()) + ":";
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (u < v) s += " " + std::to_string(u) + "-" + std::to_string(v);
    });
  return s;
}

/// Exact value by exhaustive enumeration when feasible, else the solver.
std::optional<std::size_t> oracle(const SimpleGraph& g, bool total) {
  if (total) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.degree(v) == 0) return std::nullopt;
  }
  if (auto v = exhaustive_domination_number(g, total, 5'000'000)) return v;
  const auto r = total ? exact_total_domination_number(g, {600}) : exact_domination_number(g, {600});
  if (!r.exact()) throw Error("solver hit the budget in a property test");
  return r.value;
}

}  // namespace

ProductLawReport strong_product_property_tests(std::uint64_t seed, std::size_t trials, std::size_t factors,
                                               std::size_t max_vertices) {
  if (factors < 2) throw PreconditionError("product laws need at least two factors");
  if (max_vertices < 3) throw PreconditionError("factors need at least three vertices");
  ProductLawReport rep;
  rep.seed = seed;
  rep.trials = trials;
  rep.factors = factors;
  rep.laws = {{"dom-product", 0, {}},
              {"gamma-product", 0, {}},
              {"proper-gamma-min", 0, {}},
              {"proper-gamma-t", 0, {}},
              {"complete-factor", 0, {}}};
  auto fail = [&](std::size_t law, std::size_t trial, const std::vector<SimpleGraph>& fs, const std::string& what) {
    std::string s = "trial " + std::to_string(trial) + ": " + what + " | factors";
    for (const auto& f : fs) s += " [" + edge_list(f) + "]";
    rep.laws[law].counterexamples.push_back(s);
  };

  std::mt19937_64 rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<SimpleGraph> fs;
    for (std::size_t i = 0; i < factors; ++i) fs.push_back(random_factor(rng, max_vertices));

    SimpleGraph prod = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) prod = strong_product(prod, fs[i]);

    // Dom of the product against the product of Dom sets (row-major indices).
    VertexSet expected(prod.vertex_count());
    {
      std::vector<std::vector<std::size_t>> doms;
      for (const auto& f : fs) doms.push_back(dominating_vertices(f).members());
      std::vector<std::size_t> idx(fs.size(), 0);
      bool any = std::all_of(doms.begin(), doms.end(), [](const auto& d) { return !d.empty(); });
      while (any) {
        std::size_t v = 0;
        for (std::size_t i = 0; i < fs.size(); ++i) v = v * fs[i].vertex_count() + doms[i][idx[i]];
        expected.set(v);
        std::size_t i = fs.size();
        while (i > 0 && ++idx[i - 1] == doms[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
      }
    }
    ++rep.laws[0].checked;
    if (!(dominating_vertices(prod) == expected)) fail(0, trial, fs, "Dom(product) differs");

    std::size_t gamma_prod_bound = 1, min_proper = SIZE_MAX;
    bool strict_everywhere = true, undefined = false;
    for (const auto& f : fs) {
      gamma_prod_bound *= *oracle(f, false);
      const SimpleGraph pf = proper_graph(f).graph;
      const std::size_t gp = *oracle(pf, false);
      min_proper = std::min(min_proper, gp);
      const auto gtp = oracle(pf, true);
      if (!gtp) undefined = true;
      if (!gtp || *gtp <= gp) strict_everywhere = false;
    }

    ++rep.laws[1].checked;
    const std::size_t gamma_prod = *oracle(prod, false);
    if (gamma_prod > gamma_prod_bound)
      fail(1, trial, fs, "gamma = " + std::to_string(gamma_prod) + " > " + std::to_string(gamma_prod_bound));

    const SimpleGraph pp = proper_graph(prod).graph;
    ++rep.laws[2].checked;
    const std::size_t gpp = *oracle(pp, false);
    if (gpp != min_proper)
      fail(2, trial, fs, "gamma(proper) = " + std::to_string(gpp) + ", min = " + std::to_string(min_proper));

    ++rep.laws[3].checked;
    const auto gtpp = oracle(pp, true);
    if (!gtpp || *gtpp > min_proper + 1) {
      fail(3, trial, fs, "gamma_t(proper) = " + (gtpp ? std::to_string(*gtpp) : std::string("none")) +
                             " > min + 1 = " + std::to_string(min_proper + 1));
    } else if (strict_everywhere && *gtpp != min_proper + 1) {
      fail(3, trial, fs, "equality case: gamma_t(proper) = " + std::to_string(*gtpp) + " != " +
                             std::to_string(min_proper + 1));
    }
    if (undefined) {
      ++rep.equality_condition_undefined;
      if (gtpp && *gtpp == min_proper + 1) ++rep.equality_held_when_undefined;
    }

    ++rep.laws[4].checked;
    const std::size_t kn = 1 + rng() % 4;
    const SimpleGraph pk = proper_graph(strong_product(fs[0], complete_graph(kn))).graph;
    const std::size_t lhs = *oracle(pk, false), rhs = *oracle(proper_graph(fs[0]).graph, false);
    if (lhs != rhs)
      fail(4, trial, fs, "K_" + std::to_string(kn) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
  }
  return rep;
}

json to_json(const ProductLawReport& r) {
  json j;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["factors"] = r.factors;
  j["laws"] = json::array();
  for (const auto& l : r.laws) {
    json lj;
    lj["name"] = l.name;
    lj["checked"] = l.checked;
    lj["counterexamples"] = l.counterexamples;
    j["laws"].push_back(lj);
  }
  j["equality_condition_undefined"] = r.equality_condition_undefined;
  j["equality_held_when_undefined"] = r.equality_held_when_undefined;
  return j;
}

}  // namespace commdom
