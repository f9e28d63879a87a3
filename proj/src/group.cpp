#include "commdom/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "commdom/error.hpp"
#include "commdom/number_theory.hpp"

namespace commdom {

namespace {

constexpr std::size_t kExhaustiveAssociativityLimit = 512;
constexpr std::size_t kSampledTriples = 100000;
constexpr std::uint64_t kAssociativitySeed = 0x5eed5eedULL;

void check_index(const GroupTable& g, Element x) {
  if (x >= g.order())
    throw PreconditionError("element index " + std::to_string(x) + " out of range for order " +
                            std::to_string(g.order()));
}

}  // namespace

GroupTable::GroupTable(std::size_t order, std::vector<Element> mul, std::vector<std::string> labels,
                       std::string descriptor, std::size_t cap)
    : order_(order), mul_(std::move(mul)), labels_(std::move(labels)),
      descriptor_(std::move(descriptor)) {
  if (order_ == 0) throw PreconditionError("group order must be positive");
  if (order_ > cap)
    throw SizeLimitError("group order " + std::to_string(order_) + " exceeds cap " +
                         std::to_string(cap));
  if (mul_.size() != order_ * order_) throw FormatError("multiplication table has wrong size");
  for (auto v : mul_)
    if (v >= order_) throw FormatError("multiplication table entry out of range");

  bool found = false;
  for (Element e = 0; e < order_ && !found; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw FormatError("table has no two-sided identity");

  inverse_.assign(order_, 0);
  for (Element x = 0; x < order_; ++x) {
    bool ok = false;
    for (Element y = 0; y < order_; ++y)
      if (this->mul(x, y) == identity_) {
        inverse_[x] = y;
        ok = true;
        break;
      }
    if (!ok) throw FormatError("element " + std::to_string(x) + " has no inverse");
  }

  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != order_) {
    throw FormatError("label count does not match order");
  }
}

void GroupTable::set_labels(std::vector<std::string> labels) {
  if (labels.size() != order_) throw FormatError("label count does not match order");
  labels_ = std::move(labels);
}

std::vector<std::string> validate(std::size_t n, const std::vector<Element>& mul,
                                  std::optional<Element> identity) {
  std::vector<std::string> out;
  if (n == 0) return {"order must be positive"};
  if (mul.size() != n * n) return {"table size is not order x order"};
  auto at = [&](std::size_t a, std::size_t b) { return mul[a * n + b]; };
  for (auto v : mul)
    if (v >= n) return {"table entry out of range"};

  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) seen[at(r, c)] = 1;
    if (std::count(seen.begin(), seen.end(), 0)) out.push_back("row " + std::to_string(r) + " is not a permutation");
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) seen[at(r, c)] = 1;
    if (std::count(seen.begin(), seen.end(), 0)) out.push_back("column " + std::to_string(c) + " is not a permutation");
  }

  Element e = 0;
  if (identity) {
    e = *identity;
    if (e >= n) {
      out.push_back("identity index out of range");
      return out;
    }
  } else {
    bool found = false;
    for (Element c = 0; c < n && !found; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
      if (ok) {
        e = c;
        found = true;
      }
    }
    if (!found) {
      out.push_back("no identity element");
      return out;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (at(e, x) != x || at(x, e) != x) {
      out.push_back("identity violated at " + std::to_string(x));
      break;
    }
  for (std::size_t x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (std::size_t y = 0; y < n && !has_inverse; ++y) has_inverse = at(x, y) == e && at(y, x) == e;
    if (!has_inverse) {
      out.push_back("element " + std::to_string(x) + " has no inverse");
      break;
    }
  }

  auto violation = [&](std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream s;
    s << "associativity violated at (" << a << ", " << b << ", " << c << ")";
    out.push_back(s.str());
  };
  if (n <= kExhaustiveAssociativityLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = at(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c))) {
            violation(a, b, c);
            return out;
          }
      }
  } else {
    std::mt19937_64 rng(kAssociativitySeed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kSampledTriples; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) {
        violation(a, b, c);
        break;
      }
    }
  }
  return out;
}

std::vector<std::string> validate(const GroupTable& g) {
  return validate(g.order(), g.table(), g.identity());
}

SubsetMask centralizer(const GroupTable& g, Element x) {
  check_index(g, x);
  SubsetMask m(g.order());
  for (Element y = 0; y < g.order(); ++y)
    if (g.commute(x, y)) m.set(y);
  return m;
}

SubsetMask center(const GroupTable& g) {
  SubsetMask m(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) m.set(x);
  }
  return m;
}

std::size_t element_order(const GroupTable& g, Element x) {
  check_index(g, x);
  std::size_t k = 1;
  for (Element p = x; p != g.identity(); p = g.mul(p, x)) ++k;
  return k;
}

SubsetMask cyclic_subgroup(const GroupTable& g, Element x) {
  check_index(g, x);
  SubsetMask m(g.order());
  Element p = g.identity();
  do {
    m.set(p);
    p = g.mul(p, x);
  } while (p != g.identity());
  return m;
}

SubsetMask subgroup_closure(const GroupTable& g, const SubsetMask& generators) {
  SubsetMask m(g.order());
  m.set(g.identity());
  std::vector<Element> frontier{g.identity()};
  const auto gens = generators.members();
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (auto a : frontier)
      for (auto s : gens) {
        const Element b = g.mul(a, static_cast<Element>(s));
        if (!m.test(b)) {
          m.set(b);
          next.push_back(b);
        }
      }
    frontier = std::move(next);
  }
  return m;
}

bool is_subgroup(const GroupTable& g, const SubsetMask& s) {
  if (!s.test(g.identity())) return false;
  const auto mem = s.members();
  for (auto a : mem) {
    if (!s.test(g.inverse(static_cast<Element>(a)))) return false;
    for (auto b : mem)
      if (!s.test(g.mul(static_cast<Element>(a), static_cast<Element>(b)))) return false;
  }
  return true;
}

bool is_abelian_subset(const GroupTable& g, const SubsetMask& s) {
  const auto mem = s.members();
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = i + 1; j < mem.size(); ++j)
      if (!g.commute(static_cast<Element>(mem[i]), static_cast<Element>(mem[j]))) return false;
  return true;
}

bool is_abelian(const GroupTable& g) { return is_abelian_subset(g, SubsetMask::full(g.order())); }

std::map<std::size_t, std::size_t> order_histogram(const GroupTable& g) {
  std::map<std::size_t, std::size_t> h;
  for (Element x = 0; x < g.order(); ++x) ++h[element_order(g, x)];
  return h;
}

MaximalCyclic maximal_cyclic_subgroups(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> ord(n);
  for (Element x = 0; x < n; ++x) ord[x] = element_order(g, x);

  // x generates a maximal cyclic subgroup iff x is not a proper power of an
  // element of larger order.
  std::vector<char> dominated(n, 0);
  for (Element y = 0; y < n; ++y) {
    for (Element p = y;; p = g.mul(p, y)) {
      if (ord[p] < ord[y]) dominated[p] = 1;
      if (p == g.identity()) break;
    }
  }

  const SubsetMask z = center(g);
  MaximalCyclic out;
  std::unordered_map<SubsetMask, std::size_t, SubsetMaskHash> seen;
  for (Element x = 0; x < n; ++x) {
    if (dominated[x]) continue;
    SubsetMask c = cyclic_subgroup(g, x);
    if (seen.emplace(c, out.subgroups.size()).second) {
      if (c.is_subset_of(z)) ++out.central;
      out.subgroups.push_back(std::move(c));
    }
  }
  out.total = out.subgroups.size();
  return out;
}

std::vector<SubsetMask> distinct_centralizers(const GroupTable& g) {
  std::vector<SubsetMask> out;
  std::unordered_map<SubsetMask, std::size_t, SubsetMaskHash> seen;
  for (Element x = 0; x < g.order(); ++x) {
    SubsetMask c = centralizer(g, x);
    if (seen.emplace(c, out.size()).second) out.push_back(std::move(c));
  }
  return out;
}

bool is_ac_group(const GroupTable& g) {
  for (const auto& c : distinct_centralizers(g)) {
    if (c.count() == g.order()) continue;
    if (!is_abelian_subset(g, c)) return false;
  }
  return true;
}

std::optional<std::vector<SylowFactor>> nilpotent_decomposition(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> ord(n);
  for (Element x = 0; x < n; ++x) ord[x] = element_order(g, x);
  std::vector<SylowFactor> out;
  for (auto [p, e] : factorize(n)) {
    SubsetMask s(n);
    for (Element x = 0; x < n; ++x)
      if (is_power_of(ord[x], p)) s.set(x);
    if (s.count() != ipow(p, e) || !is_subgroup(g, s)) return std::nullopt;
    out.push_back({p, std::move(s)});
  }
  return out;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::size_t cap) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = na * nb;
  if (n > cap)
    throw SizeLimitError("direct product order " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          mul[(i * nb + j) * n + (k * nb + l)] = static_cast<Element>(
              a.mul(static_cast<Element>(i), static_cast<Element>(k)) * nb +
              b.mul(static_cast<Element>(j), static_cast<Element>(l)));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels.push_back("(" + a.label(static_cast<Element>(i)) + "," +
                       b.label(static_cast<Element>(j)) + ")");
  return GroupTable(n, std::move(mul), std::move(labels),
                    "direct(" + a.descriptor() + "," + b.descriptor() + ")", cap);
}

GroupTable subgroup_table(const GroupTable& g, const SubsetMask& s, std::string descriptor) {
  if (!is_subgroup(g, s)) throw PreconditionError("mask is not a subgroup");
  const auto mem = s.members();
  const std::size_t k = mem.size();
  std::vector<Element> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[mem[i]] = static_cast<Element>(i);
  std::vector<Element> mul(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(g.label(static_cast<Element>(mem[i])));
    for (std::size_t j = 0; j < k; ++j)
      mul[i * k + j] = local[g.mul(static_cast<Element>(mem[i]), static_cast<Element>(mem[j]))];
  }
  if (descriptor.empty()) descriptor = "subgroup(" + g.descriptor() + ")";
  return GroupTable(k, std::move(mul), std::move(labels), std::move(descriptor), g.order());
}

GroupInvariants compute_invariants(const GroupTable& g) {
  GroupInvariants inv;
  const std::size_t n = g.order();
  inv.order = n;
  inv.center = center(g);
  inv.center_size = inv.center.count();
  inv.is_abelian = inv.center_size == n;
  inv.least_prime = n > 1 ? factorize(n).begin()->first : 0;

  const auto cents = distinct_centralizers(g);
  inv.cent_count = cents.size();
  bool have_noncentral = false;
  std::size_t max_c = 0, min_c = n;
  for (const auto& c : cents) {
    const std::size_t size = c.count();
    const bool abelian = is_abelian_subset(g, c);
    if (!abelian) ++inv.nacent_count;
    if (size == n) continue;  // centralizer of a central element
    have_noncentral = true;
    max_c = std::max(max_c, size);
    min_c = std::min(min_c, size);
    if (size == 2) ++inv.order2_centralizers;
  }
  if (have_noncentral) {
    inv.max_excess = max_c - inv.center_size;
    inv.min_excess = min_c - inv.center_size;
  }
  inv.is_ac_group = inv.nacent_count <= 1;

  const auto mc = maximal_cyclic_subgroups(g);
  inv.max_cyclic_total = mc.total;
  inv.max_cyclic_central = mc.central;
  inv.is_nilpotent = nilpotent_decomposition(g).has_value();
  return inv;
}

Fingerprint fingerprint(const GroupTable& g) {
  return Fingerprint{g.order(), order_histogram(g), center(g).count(),
                     distinct_centralizers(g).size()};
}

}  // namespace commdom
