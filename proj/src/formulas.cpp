#include "commdom/formulas.hpp"

#include <cmath>
#include <regex>

#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/number_theory.hpp"

namespace commdom {

std::string to_string(FormulaKind k) {
  switch (k) {
    case FormulaKind::exact_gamma: return "exact_gamma";
    case FormulaKind::exact_gamma_t: return "exact_gamma_t";
    case FormulaKind::lower_bound: return "lower_bound";
    case FormulaKind::upper_bound: return "upper_bound";
    case FormulaKind::nonexistence: return "nonexistence";
    case FormulaKind::existence: return "existence";
    case FormulaKind::excluded_value: return "excluded_value";
    case FormulaKind::ratio_form: return "ratio_form";
  }
  return "?";
}

namespace {

FormulaPrediction make(std::string id, FormulaKind kind,
                       DominationKind target = DominationKind::domination) {
  FormulaPrediction p;
  p.theorem_id = std::move(id);
  p.kind = kind;
  p.target = target;
  return p;
}

FormulaPrediction gated_out(FormulaPrediction p, std::string reason) {
  p.applicable = false;
  p.reason = std::move(reason);
  p.value.reset();
  return p;
}

FormulaPrediction with_value(FormulaPrediction p, Rational v, std::string reason) {
  p.applicable = true;
  p.value = std::move(v);
  p.reason = std::move(reason);
  return p;
}

Rational integer(std::size_t v) { return Rational(static_cast<long long>(v)); }

std::string str(std::size_t v) { return std::to_string(v); }

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool exponent_at_most_two(const GroupTable& g, const SubsetMask& a) {
  bool ok = true;
  a.for_each([&](std::size_t x) {
    if (ok && g.mul(static_cast<Element>(x), static_cast<Element>(x)) != g.identity()) ok = false;
  });
  return ok;
}

/// Elementary abelian: every nonidentity element has the same prime order.
bool elementary_abelian(const GroupTable& g, const SubsetMask& a) {
  std::size_t common = 0;
  bool ok = true;
  a.for_each([&](std::size_t x) {
    if (!ok || x == g.identity()) return;
    const std::size_t o = element_order(g, static_cast<Element>(x));
    if (!is_prime(o) || (common && o != common)) ok = false;
    common = o;
  });
  return ok;
}

struct Descriptor {
  std::string family;
  std::vector<std::size_t> params;
};

std::optional<Descriptor> simple_descriptor(const std::string& d) {
  static const std::regex re(R"(^([a-z_0-9]+)\((\d+)(?:,(\d+))?\)$)");
  std::smatch m;
  if (!std::regex_match(d, m, re)) return std::nullopt;
  Descriptor out{m[1], {std::stoul(m[2])}};
  if (m[3].matched) out.params.push_back(std::stoul(m[3]));
  return out;
}

}  // namespace

// ---- structure detection -------------------------------------------------

std::optional<GeneralizedDihedral> find_generalized_dihedral(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n % 2 != 0) return std::nullopt;

  // K = <squares>. Index-2 subgroups contain K, and G/K is elementary
  // abelian of some rank r; coordinates over GF(2) label the cosets.
  SubsetMask squares(n);
  for (Element x = 0; x < n; ++x) squares.set(g.mul(x, x));
  SubsetMask current = subgroup_closure(g, squares);
  std::vector<std::uint32_t> coord(n, 0);
  std::size_t rank = 0;
  for (Element x = 0; x < n; ++x) {
    if (current.test(x)) continue;
    if (rank >= 20) return std::nullopt;
    SubsetMask next = current;
    const std::uint32_t bit = std::uint32_t{1} << rank;
    current.for_each([&](std::size_t y) {
      const Element z = g.mul(static_cast<Element>(y), x);
      next.set(z);
      coord[z] = coord[y] ^ bit;
    });
    current = std::move(next);
    ++rank;
  }

  for (std::uint32_t f = 1; f < (std::uint32_t{1} << rank); ++f) {
    SubsetMask a(n);
    for (Element x = 0; x < n; ++x)
      if (std::popcount(coord[x] & f) % 2 == 0) a.set(x);
    bool outside_involutions = true;
    Element involution = 0;
    for (Element x = 0; x < n && outside_involutions; ++x) {
      if (a.test(x)) continue;
      if (g.mul(x, x) != g.identity()) outside_involutions = false;
      else if (involution == 0) involution = x;
    }
    if (!outside_involutions || !is_abelian_subset(g, a)) continue;
    GeneralizedDihedral out;
    out.involution = involution;
    out.a_order = a.count();
    a.for_each([&](std::size_t x) {
      if (g.mul(static_cast<Element>(x), static_cast<Element>(x)) == g.identity()) ++out.a_involutions;
    });
    out.a_elementary_abelian = elementary_abelian(g, a);
    out.a = std::move(a);
    return out;
  }
  return std::nullopt;
}

std::optional<Order2Structure> classify_order2_centralizer(const GroupTable& g) {
  const SubsetMask z = center(g);
  std::optional<Element> witness;
  for (Element x = 0; x < g.order() && !witness; ++x)
    if (!z.test(x) && centralizer(g, x).count() == 2) witness = x;
  if (!witness) return std::nullopt;

  Order2Structure out;
  out.x = *witness;
  out.n = SubsetMask(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (element_order(g, y) % 2 == 1) out.n.set(y);
  out.n_order = out.n.count();

  if (g.mul(out.x, out.x) != g.identity()) {
    out.failure = "x is not an involution";
  } else if (2 * out.n_order != g.order()) {
    out.failure = "odd-order elements do not form half the group";
  } else if (out.n_order % 2 == 0) {
    out.failure = "N has even order";
  } else if (!is_subgroup(g, out.n)) {
    out.failure = "odd-order elements do not form a subgroup";
  } else if (!is_abelian_subset(g, out.n)) {
    out.failure = "N is not abelian";
  } else {
    out.verified = true;
    out.n.for_each([&](std::size_t y) {
      const Element e = static_cast<Element>(y);
      if (out.verified && g.mul(g.mul(out.x, e), g.inverse(out.x)) != g.inverse(e)) {
        out.verified = false;
        out.failure = "x does not invert " + g.label(e);
      }
    });
  }
  return out;
}

// ---- bounds -----------------------------------------------------------------

FormulaPrediction bound_lower(const GroupInvariants& inv) {
  auto p = make("lower-bound", FormulaKind::lower_bound);
  if (inv.is_abelian) return gated_out(p, "abelian");
  const std::size_t m_bound = ceil_div(inv.order - inv.center_size, inv.max_excess);
  const std::size_t prime_bound = inv.least_prime + 1;
  const std::size_t v = std::max({m_bound, prime_bound, std::size_t{3}});
  return with_value(p, integer(v),
                    "max(ceil((|G|-|Z|)/M) = " + str(m_bound) + ", p+1 = " + str(prime_bound) +
                        ", 3)");
}

FormulaPrediction bound_upper_maximal_cyclic(const GroupInvariants& inv) {
  auto p = make("upper-maximal-cyclic", FormulaKind::upper_bound);
  if (inv.is_abelian) return gated_out(p, "abelian");
  return with_value(p, integer(inv.max_cyclic_total - inv.max_cyclic_central),
                    "T - U = " + str(inv.max_cyclic_total) + " - " + str(inv.max_cyclic_central));
}

namespace {

bool matches_named(const Fingerprint& f, const char* descriptor) {
  return f == fingerprint(make_group(std::string(descriptor)));
}

}  // namespace

FormulaPrediction bound_haji_amiri(const GroupTable& g, const GroupInvariants& inv) {
  auto p = make("haji-amiri", FormulaKind::upper_bound);
  if (inv.is_abelian) return gated_out(p, "abelian");
  p = with_value(p, Rational(static_cast<long long>(inv.order - inv.center_size + inv.order2_centralizers), 2),
                 "(|G| - |Z| + t)/2 with t = " + str(inv.order2_centralizers));
  const Fingerprint f = fingerprint(g);
  p.equality_expected = f.order <= 8 && (matches_named(f, "symmetric(3)") ||
                                         matches_named(f, "dihedral(8)") ||
                                         matches_named(f, "generalized_quaternion(8)"));
  return p;
}

FormulaPrediction bound_log(const GroupInvariants& inv, bool is_generalized_dihedral) {
  auto p = make("upper-log", FormulaKind::upper_bound);
  if (inv.is_abelian) return gated_out(p, "abelian");
  if (is_generalized_dihedral) return gated_out(p, "generalized dihedral");
  const double d = static_cast<double>(inv.min_excess);
  const double factor = std::min((1.0 + std::log(d + 1.0)) / (d + 1.0), 0.5);
  const double bound = static_cast<double>(inv.order - inv.center_size) * factor;
  // Guard the floor against rounding just below an integer.
  const auto floored = static_cast<long long>(std::floor(bound + 1e-9));
  p = with_value(p, Rational(floored), "d = " + str(inv.min_excess));
  p.real = bound;
  return p;
}

// ---- generalized dihedral ---------------------------------------------------

FormulaPrediction gen_dihedral_gamma(const GroupTable& a) {
  auto p = make("gen-dihedral-gamma", FormulaKind::exact_gamma);
  if (!is_abelian(a)) throw PreconditionError("gen_dihedral_gamma needs an abelian group");
  const SubsetMask all = SubsetMask::full(a.order());
  if (exponent_at_most_two(a, all)) return gated_out(p, "A has exponent <= 2, D(A) is abelian");
  std::size_t t = 0;
  for (Element x = 0; x < a.order(); ++x)
    if (a.mul(x, x) == a.identity()) ++t;
  const Rational v = 1 + Rational(static_cast<long long>(a.order()), static_cast<long long>(t));
  if (elementary_abelian(a, all)) {
    p = gated_out(p, "A is elementary abelian");
    p.beyond_gate = v;
    return p;
  }
  return with_value(p, v, "1 + |A|/|T| = 1 + " + str(a.order()) + "/" + str(t));
}

// ---- AC groups --------------------------------------------------------------

FormulaPrediction ac_group_gamma(const GroupInvariants& inv) {
  if (inv.is_abelian) return gated_out(make("ac-gamma", FormulaKind::exact_gamma), "abelian");
  const Rational v = integer(inv.cent_count - 1);
  if (inv.is_ac_group)
    return with_value(make("ac-gamma", FormulaKind::exact_gamma), v, "AC-group, |cent| - 1");
  return with_value(make("ac-gamma", FormulaKind::excluded_value), v,
                    "not an AC-group, so gamma != |cent| - 1");
}

FormulaPrediction ac_group_gamma_t(const GroupInvariants& inv, bool is_generalized_dihedral) {
  const auto id = "ac-gamma-t";
  const auto t = DominationKind::total_domination;
  if (inv.is_abelian) return gated_out(make(id, FormulaKind::exact_gamma_t, t), "abelian");
  if (is_generalized_dihedral)
    return gated_out(make(id, FormulaKind::exact_gamma_t, t), "generalized dihedral");
  const Rational v = integer(2 * inv.cent_count - 2);
  if (inv.is_ac_group)
    return with_value(make(id, FormulaKind::exact_gamma_t, t), v, "AC-group, 2|cent| - 2");
  return with_value(make(id, FormulaKind::excluded_value, t), v,
                    "not an AC-group, so gamma_t != 2|cent| - 2");
}

// ---- pq ---------------------------------------------------------------------

namespace {

std::optional<std::string> pq_gate(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q)) return "p and q must be primes";
  if (p >= q) return "need p < q";
  if ((q - 1) % p != 0) return "no non-abelian group of order pq (p does not divide q-1)";
  return std::nullopt;
}

}  // namespace

FormulaPrediction pq_gamma(std::size_t p, std::size_t q) {
  auto f = make("pq-gamma", FormulaKind::exact_gamma);
  if (auto why = pq_gate(p, q)) return gated_out(f, *why);
  return with_value(f, integer(q + 1), "q + 1");
}

FormulaPrediction pq_gamma_t(std::size_t p, std::size_t q) {
  auto f = make("pq-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (auto why = pq_gate(p, q)) return gated_out(f, *why);
  if (p == 2) {
    f.kind = FormulaKind::nonexistence;
    f.applicable = true;
    f.reason = "p = 2: dihedral of order 2q, q odd";
    return f;
  }
  return with_value(f, integer(2 * (q + 1)), "2(q + 1)");
}

// ---- p-groups with |Z| = p^{r-2} ------------------------------------------

namespace {

std::optional<std::string> codim2_gate(const GroupInvariants& inv, std::size_t& p) {
  const auto pp = prime_power(inv.order);
  if (!pp) return "order is not a prime power";
  p = pp->first;
  if (inv.is_abelian) return "abelian";
  const std::size_t r = pp->second;
  if (r < 2 || inv.center_size != ipow(p, r - 2)) return "|Z(G)| != p^(r-2)";
  return std::nullopt;
}

}  // namespace

FormulaPrediction central_codim2_gamma(const GroupInvariants& inv) {
  auto f = make("central-codim2-gamma", FormulaKind::exact_gamma);
  std::size_t p = 0;
  if (auto why = codim2_gate(inv, p)) return gated_out(f, *why);
  return with_value(f, integer(p + 1), "p + 1, p = " + str(p));
}

FormulaPrediction central_codim2_gamma_t(const GroupInvariants& inv) {
  auto f = make("central-codim2-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  std::size_t p = 0;
  if (auto why = codim2_gate(inv, p)) return gated_out(f, *why);
  return with_value(f, integer(2 * (p + 1)), "2(p + 1), p = " + str(p));
}

// ---- formula-only families ------------------------------------------------

namespace {

std::optional<std::string> p4_gate(std::size_t p, std::size_t class_index) {
  if (!is_prime(p) || p == 2) return "p must be an odd prime";
  if (class_index < 1 || class_index > 10) return "class index must be in 1..10";
  return std::nullopt;
}

}  // namespace

FormulaPrediction p4_gamma(std::size_t p, std::size_t class_index) {
  auto f = make("p4-gamma", FormulaKind::exact_gamma);
  if (auto why = p4_gate(p, class_index)) return gated_out(f, *why);
  if (class_index <= 6) return with_value(f, integer(p + 1), "classes 1-6: p + 1");
  return with_value(f, integer(p * p + 1), "classes 7-10: p^2 + 1");
}

FormulaPrediction p4_gamma_t(std::size_t p, std::size_t class_index) {
  auto f = make("p4-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (auto why = p4_gate(p, class_index)) return gated_out(f, *why);
  if (class_index <= 6) return with_value(f, integer(2 * (p + 1)), "classes 1-6: 2(p + 1)");
  return with_value(f, integer(2 * (p * p + 1)), "classes 7-10: 2(p^2 + 1)");
}

FormulaPrediction pgl2_gamma(std::size_t p, std::size_t n) {
  auto f = make("pgl2-gamma", FormulaKind::exact_gamma);
  if (!is_prime(p) || p == 2 || n == 0) return gated_out(f, "need p an odd prime and n >= 1");
  const std::size_t q = ipow(p, n);
  return with_value(f, integer(q * q + q + 1), "q^2 + q + 1, q = " + str(q));
}

FormulaPrediction pgl2_gamma_t(std::size_t p, std::size_t n) {
  auto f = make("pgl2-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (!is_prime(p) || p == 2 || n == 0) return gated_out(f, "need p an odd prime and n >= 1");
  const std::size_t q = ipow(p, n);
  return with_value(f, integer(2 * (q * q + q + 1)), "2(q^2 + q + 1), q = " + str(q));
}

FormulaPrediction psl2_gamma_t(std::size_t q) {
  auto f = make("psl2-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (!prime_power(q)) return gated_out(f, "q must be a prime power");
  if (q == 3) return with_value(f, integer(10), "q = 3");
  if (q == 4 || q == 5) return with_value(f, integer(42), "q = 4 or 5");
  if (q > 5) return with_value(f, integer(2 * (q * q + q + 1)), "2(q^2 + q + 1)");
  return gated_out(f, "q = 2 is not covered");
}

SuzukiParams suzuki_params(std::size_t n) {
  if (n < 1) throw PreconditionError("Suzuki parameter n must be >= 1");
  SuzukiParams s;
  s.n = n;
  s.q = BigInt(1) << (2 * n + 1);
  s.r = BigInt(1) << n;
  s.f_order = s.q * s.q;
  s.a_order = s.q - 1;
  s.b_order = s.q - 2 * s.r + 1;
  s.c_order = s.q + 2 * s.r + 1;
  s.group_order = s.q * s.q * (s.q * s.q + 1) * (s.q - 1);
  return s;
}

std::vector<BigInt> suzuki_summands(std::size_t n) {
  const SuzukiParams s = suzuki_params(n);
  const BigInt q2 = s.q * s.q;
  const BigInt big = q2 * (s.q - 1) * (q2 + 1);
  const std::vector<std::pair<BigInt, BigInt>> fractions = {
      {q2 + 1, 1}, {q2 * (q2 + 1), 2}, {big, 4 * s.b_order}, {big, 4 * s.c_order}};
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const auto& [num, den] = fractions[i];
    if (num % den != 0)
      throw FormulaIntegrityError("Suzuki summand " + std::to_string(i + 1) + " is not integral for n = " +
                                  std::to_string(n));
    out.push_back(num / den);
  }
  return out;
}

FormulaPrediction suzuki_gamma(std::size_t n) {
  auto f = make("suzuki-gamma", FormulaKind::exact_gamma);
  if (n < 1) return gated_out(f, "n must be >= 1");
  BigInt total = 0;
  for (const auto& s : suzuki_summands(n)) total += s;
  return with_value(f, Rational(total), "q = 2^" + str(2 * n + 1));
}

FormulaPrediction suzuki_gamma_t(std::size_t n) {
  auto f = suzuki_gamma(n);
  f.theorem_id = "suzuki-gamma-t";
  f.kind = FormulaKind::exact_gamma_t;
  f.target = DominationKind::total_domination;
  if (f.value) *f.value *= 2;
  return f;
}

// ---- nilpotent --------------------------------------------------------------

namespace {

struct FactorSolve {
  std::size_t prime = 0;
  bool abelian = false;
  DominationResult gamma, gamma_t;
};

std::optional<std::vector<FactorSolve>> solve_sylow_factors(const GroupTable& g, const SolverOptions& opts,
                                                            bool with_total, std::string& why) {
  if (is_abelian(g)) {
    why = "abelian";
    return std::nullopt;
  }
  const auto factors = nilpotent_decomposition(g);
  if (!factors) {
    why = "not nilpotent";
    return std::nullopt;
  }
  if (factors->size() < 2) {
    why = "a p-group (the reduction is trivial)";
    return std::nullopt;
  }
  std::vector<FactorSolve> out;
  for (const auto& f : *factors) {
    FactorSolve s;
    s.prime = f.prime;
    const GroupTable sub = subgroup_table(g, f.subgroup, "sylow" + std::to_string(f.prime));
    s.abelian = is_abelian(sub);
    if (!s.abelian) {
      const ProperGraph pg = proper_commuting_graph(sub);
      s.gamma = exact_domination_number(pg.graph, opts);
      if (with_total) s.gamma_t = exact_total_domination_number(pg.graph, opts);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

FormulaPrediction nilpotent_gamma(const GroupTable& g, const SolverOptions& opts) {
  auto f = make("nilpotent-gamma", FormulaKind::exact_gamma);
  std::string why;
  const auto factors = solve_sylow_factors(g, opts, false, why);
  if (!factors) return gated_out(f, why);
  std::optional<std::size_t> best;
  std::string parts;
  for (const auto& s : *factors) {
    if (s.abelian) continue;
    if (!s.gamma.exact()) return gated_out(f, "Sylow factor solve hit the budget");
    best = best ? std::min(*best, *s.gamma.value) : *s.gamma.value;
    parts += (parts.empty() ? "" : ", ") + ("p=" + str(s.prime) + ": " + str(*s.gamma.value));
  }
  return with_value(f, integer(*best), "min over non-abelian Sylow factors (" + parts + ")");
}

FormulaPrediction nilpotent_gamma_t(const GroupTable& g, const SolverOptions& opts) {
  auto f = make("nilpotent-gamma-t", FormulaKind::upper_bound, DominationKind::total_domination);
  std::string why;
  const auto factors = solve_sylow_factors(g, opts, true, why);
  if (!factors) return gated_out(f, why);
  std::size_t best = 0;
  bool strict_everywhere = true;
  for (const auto& s : *factors) {
    if (s.abelian) return gated_out(f, "a Sylow subgroup is abelian");
    if (!s.gamma.exact() || !s.gamma_t.exact()) return gated_out(f, "Sylow factor solve hit the budget");
    best = best ? std::min(best, *s.gamma.value) : *s.gamma.value;
    // Non-abelian p-groups always admit total domination; a missing value
    // would not satisfy the strict inequality.
    if (!s.gamma_t.value || *s.gamma_t.value <= *s.gamma.value) strict_everywhere = false;
  }
  if (strict_everywhere) {
    f.kind = FormulaKind::exact_gamma_t;
    return with_value(f, integer(best + 1), "min gamma + 1; every factor has gamma_t > gamma");
  }
  return with_value(f, integer(best + 1), "min gamma + 1");
}

// ---- centralizer counts -----------------------------------------------------

FormulaPrediction nacent_two_gamma_t(const GroupTable& g, const GroupInvariants& inv,
                                     bool is_generalized_dihedral) {
  auto f = make("nacent-two-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (inv.is_abelian) return gated_out(f, "abelian");
  if (is_generalized_dihedral) return gated_out(f, "generalized dihedral");
  if (inv.nacent_count != 2) return gated_out(f, "|nacent(G)| = " + str(inv.nacent_count));
  for (const auto& c : distinct_centralizers(g)) {
    if (c.count() == g.order() || is_abelian_subset(g, c)) continue;
    const GroupTable sub = subgroup_table(g, c);
    const std::size_t inner = distinct_centralizers(sub).size();
    return with_value(f, integer(2 * (inv.cent_count - inner)),
                      "2(|cent(G)| - |cent(C(a))|) = 2(" + str(inv.cent_count) + " - " + str(inner) + ")");
  }
  return gated_out(f, "no proper non-abelian centralizer found");
}

namespace {

std::optional<std::string> index_two_primes_gate(const GroupInvariants& inv) {
  if (inv.is_abelian) return "abelian";
  if (omega_total(inv.order / inv.center_size) != 2) return "[G : Z(G)] is not a product of two primes";
  return std::nullopt;
}

}  // namespace

FormulaPrediction index_two_primes_gamma(const GroupInvariants& inv) {
  auto f = make("index-two-primes-gamma", FormulaKind::exact_gamma);
  if (auto why = index_two_primes_gate(inv)) return gated_out(f, *why);
  return with_value(f, integer(inv.cent_count - 1), "|cent| - 1 (index condition read as two prime factors)");
}

FormulaPrediction index_two_primes_gamma_t(const GroupInvariants& inv, bool is_generalized_dihedral) {
  auto f = make("index-two-primes-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  if (auto why = index_two_primes_gate(inv)) return gated_out(f, *why);
  if (is_generalized_dihedral) return gated_out(f, "generalized dihedral");
  return with_value(f, integer(2 * inv.cent_count - 2), "2|cent| - 2");
}

FormulaPrediction gen_quaternion_gamma_t(std::size_t order) {
  auto f = make("gen-quaternion-gamma-t", FormulaKind::exact_gamma_t, DominationKind::total_domination);
  const auto pp = prime_power(order);
  if (!pp || pp->first != 2 || pp->second < 3) return gated_out(f, "order must be 2^m with m >= 3");
  return with_value(f, integer(order / 2 + 2), "2^(m-1) + 2");
}

// ---- ratio ------------------------------------------------------------------

std::pair<std::string, Rational> ratio_spectrum_witness(std::size_t k) {
  if (k < 2) throw PreconditionError("ratio spectrum needs k >= 2");
  return {"dihedral(" + str(4 * k - 2) + ")",
          Rational(static_cast<long long>(k), static_cast<long long>(2 * k - 1))};
}

bool is_spectrum_value(const Rational& r) {
  if (r <= Rational(1, 2) || r >= 1) return false;
  // r = k/(2k-1)  <=>  k = r/(2r-1)
  const Rational k = r / (2 * r - 1);
  return denominator(k) == 1 && k >= 2;
}

// ---- dispatch -----------------------------------------------------------------

std::vector<FormulaPrediction> predictions_for(const GroupTable& g, const SolverOptions& opts) {
  const GroupInvariants inv = compute_invariants(g);
  std::vector<FormulaPrediction> out;
  if (inv.is_abelian) return out;

  const auto gd = find_generalized_dihedral(g);
  const bool is_gd = gd.has_value();

  out.push_back(bound_lower(inv));
  out.push_back(bound_upper_maximal_cyclic(inv));
  out.push_back(bound_haji_amiri(g, inv));
  out.push_back(bound_log(inv, is_gd));

  {
    auto f = make("total-existence",
                  is_gd && gd->a_order % 2 == 1 ? FormulaKind::nonexistence : FormulaKind::existence,
                  DominationKind::total_domination);
    f.applicable = true;
    f.reason = f.kind == FormulaKind::nonexistence ? "generalized dihedral of order 2m, m odd"
                                                   : "not generalized dihedral of order 2m with m odd";
    out.push_back(f);
    if (f.kind == FormulaKind::existence) {
      auto u = make("total-upper-maximal-cyclic", FormulaKind::upper_bound, DominationKind::total_domination);
      out.push_back(with_value(u, integer(2 * (inv.max_cyclic_total - inv.max_cyclic_central)), "2(T - U)"));
    }
  }

  if (is_gd) {
    const GroupTable a = subgroup_table(g, gd->a, "A");
    out.push_back(gen_dihedral_gamma(a));
  }

  out.push_back(ac_group_gamma(inv));
  out.push_back(ac_group_gamma_t(inv, is_gd));

  {
    const auto fac = factorize(inv.order);
    if (fac.size() == 2 && fac.begin()->second == 1 && fac.rbegin()->second == 1) {
      const std::size_t p = fac.begin()->first, q = fac.rbegin()->first;
      out.push_back(pq_gamma(p, q));
      out.push_back(pq_gamma_t(p, q));
    }
  }

  if (auto c = central_codim2_gamma(inv); c.applicable) {
    out.push_back(c);
    out.push_back(central_codim2_gamma_t(inv));
  }
  if (auto c = index_two_primes_gamma(inv); c.applicable) {
    out.push_back(c);
    out.push_back(index_two_primes_gamma_t(inv, is_gd));
  }
  if (inv.nacent_count == 2) out.push_back(nacent_two_gamma_t(g, inv, is_gd));

  if (inv.is_nilpotent) {
    if (auto n = nilpotent_gamma(g, opts); n.applicable) out.push_back(n);
    if (auto n = nilpotent_gamma_t(g, opts); n.applicable) out.push_back(n);
  }

  if (const auto d = simple_descriptor(g.descriptor())) {
    if (d->family == "pgl2" && d->params.size() == 1) {
      if (const auto pp = prime_power(d->params[0]); pp && pp->first != 2) {
        out.push_back(pgl2_gamma(pp->first, pp->second));
        out.push_back(pgl2_gamma_t(pp->first, pp->second));
      }
    }
    if (d->family == "psl2" && d->params.size() == 1) {
      if (auto f = psl2_gamma_t(d->params[0]); f.applicable) out.push_back(f);
    }
    if (d->family == "generalized_quaternion" && d->params.size() == 1)
      out.push_back(gen_quaternion_gamma_t(d->params[0]));
  }

  {
    auto r = make("ratio-max", FormulaKind::upper_bound);
    r = with_value(r, Rational(2 * static_cast<long long>(inv.order), 3), "2|G|/3");
    const Fingerprint f = fingerprint(g);
    r.equality_expected = f.order == 6 && matches_named(f, "symmetric(3)");
    out.push_back(r);
    auto s = make("ratio-spectrum", FormulaKind::ratio_form);
    s.applicable = true;
    s.reason = "gamma/|G| in (1/2, 1) only as k/(2k-1)";
    out.push_back(s);
  }
  return out;
}

std::vector<std::string> formula_ids() {
  return {"lower-bound",          "upper-maximal-cyclic",   "haji-amiri",
          "upper-log",            "gen-dihedral-gamma",     "total-existence",
          "total-upper-maximal-cyclic", "ac-gamma",         "ac-gamma-t",
          "pq-gamma",             "pq-gamma-t",             "central-codim2-gamma",
          "central-codim2-gamma-t", "index-two-primes-gamma", "index-two-primes-gamma-t",
          "nacent-two-gamma-t",   "nilpotent-gamma",        "nilpotent-gamma-t",
          "p4-gamma",             "p4-gamma-t",             "pgl2-gamma",
          "pgl2-gamma-t",         "psl2-gamma-t",           "suzuki-gamma",
          "suzuki-gamma-t",       "gen-quaternion-gamma-t", "ratio-max",
          "ratio-spectrum"};
}

FormulaPrediction evaluate_formula(const std::string& id, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError(id + " expects " + std::to_string(k) + " integer parameter(s)");
  };
  if (id == "suzuki" || id == "suzuki-gamma") {
    need(1);
    return suzuki_gamma(params[0]);
  }
  if (id == "suzuki-gamma-t") {
    need(1);
    return suzuki_gamma_t(params[0]);
  }
  if (id == "p4-gamma") {
    need(2);
    return p4_gamma(params[0], params[1]);
  }
  if (id == "p4-gamma-t") {
    need(2);
    return p4_gamma_t(params[0], params[1]);
  }
  if (id == "pq-gamma") {
    need(2);
    return pq_gamma(params[0], params[1]);
  }
  if (id == "pq-gamma-t") {
    need(2);
    return pq_gamma_t(params[0], params[1]);
  }
  if (id == "pgl2-gamma") {
    need(2);
    return pgl2_gamma(params[0], params[1]);
  }
  if (id == "pgl2-gamma-t") {
    need(2);
    return pgl2_gamma_t(params[0], params[1]);
  }
  if (id == "psl2-gamma-t") {
    need(1);
    return psl2_gamma_t(params[0]);
  }
  if (id == "gen-quaternion-gamma-t") {
    need(1);
    return gen_quaternion_gamma_t(params[0]);
  }
  if (id == "gen-dihedral-gamma") {
    if (params.empty()) throw PreconditionError(id + " expects the invariant factors of A");
    return gen_dihedral_gamma(abelian_product(params));
  }
  if (id == "ratio-spectrum") {
    need(1);
    const auto [desc, r] = ratio_spectrum_witness(params[0]);
    auto f = with_value(make(id, FormulaKind::ratio_form), r, desc);
    return f;
  }
  throw PreconditionError("formula '" + id + "' is not evaluable from integer parameters");
}

}  // namespace commdom
