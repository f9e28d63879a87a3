#include "commdom/families.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "commdom/error.hpp"
#include "commdom/number_theory.hpp"

namespace commdom {

namespace {

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

Permutation identity_permutation(std::size_t k) {
  Permutation p(k);
  std::iota(p.begin(), p.end(), 0U);
  return p;
}

/// Tables a list of distinct permutations that is closed under composition.
/// The list order becomes the element order.
GroupTable table_from_permutations(const std::vector<Permutation>& perms, std::string descriptor) {
  const std::size_t n = perms.size();
  std::unordered_map<Permutation, Element, PermutationHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(perms[i], static_cast<Element>(i));
  std::vector<Element> mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(compose(perms[i], perms[j]));
      if (it == index.end()) throw PreconditionError("permutation set is not closed");
      mul[i * n + j] = it->second;
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : perms) labels.push_back(cycle_notation(p));
  return GroupTable(n, std::move(mul), std::move(labels), std::move(descriptor));
}

void check_cap(std::size_t order, const char* what) {
  if (order > kDefaultOrderCap)
    throw SizeLimitError(std::string(what) + " of order " + std::to_string(order) +
                         " exceeds cap " + std::to_string(kDefaultOrderCap));
}

/// GF(q) for a prime power q. Elements are 0..q-1, read as base-p digit
/// vectors of polynomial coefficients (lowest degree first).
class FiniteField {
public:
  explicit FiniteField(std::size_t q) : q_(q) {
    auto pp = prime_power(q);
    if (!pp) throw PreconditionError(std::to_string(q) + " is not a prime power");
    p_ = pp->first;
    k_ = pp->second;
    add_.assign(q * q, 0);
    mul_.assign(q * q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) add_[a * q + b] = digitwise_add(a, b);
    find_modulus();
    inv_.assign(q, 0);
    for (std::size_t a = 1; a < q; ++a)
      for (std::size_t b = 1; b < q; ++b)
        if (mul(a, b) == 1) inv_[a] = b;
    neg_.assign(q, 0);
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        if (add(a, b) == 0) neg_[a] = b;
  }

  std::size_t size() const { return q_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * q_ + b]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg_[b]); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * q_ + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }

private:
  std::size_t digitwise_add(std::size_t a, std::size_t b) const {
    std::size_t r = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  std::vector<std::size_t> digits(std::size_t a) const {
    std::vector<std::size_t> d(k_);
    for (auto& v : d) {
      v = a % p_;
      a /= p_;
    }
    return d;
  }

  // Multiplication modulo the monic polynomial x^k - sum(tail[i] x^i).
  std::size_t poly_mul(std::size_t a, std::size_t b, const std::vector<std::size_t>& tail) const {
    const auto da = digits(a), db = digits(b);
    std::vector<std::size_t> prod(2 * k_, 0);
    for (std::size_t i = 0; i < k_; ++i)
      for (std::size_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (std::size_t deg = 2 * k_ - 1; deg >= k_; --deg) {
      const std::size_t c = prod[deg];
      prod[deg] = 0;
      for (std::size_t i = 0; i < k_; ++i) prod[deg - k_ + i] = (prod[deg - k_ + i] + c * tail[i]) % p_;
      if (deg == k_) break;
    }
    std::size_t r = 0, scale = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      r += prod[i] * scale;
      scale *= p_;
    }
    return r;
  }

  void find_modulus() {
    // Try every monic polynomial of degree k; accept the first whose quotient
    // ring has no zero divisors.
    for (std::size_t code = 0; code < q_; ++code) {
      const std::vector<std::size_t> tail = digits(code);
      bool field = true;
      for (std::size_t a = 1; a < q_ && field; ++a)
        for (std::size_t b = 1; b < q_ && field; ++b) {
          const std::size_t c = poly_mul(a, b, tail);
          mul_[a * q_ + b] = c;
          field = c != 0;
        }
      if (field) return;
    }
    throw PreconditionError("no irreducible polynomial found");
  }

  std::size_t q_, p_ = 0, k_ = 0;
  std::vector<std::size_t> add_, mul_, inv_, neg_;
};

GroupTable projective_group(std::size_t q, bool special) {
  if (q < 2) throw PreconditionError("q must be a prime power >= 2");
  const FiniteField f(q);  // throws for non-prime-powers
  const std::size_t order = q * q * q - q;
  check_cap(special ? order / std::gcd<std::size_t>(2, q - 1) : order, "projective group");

  std::vector<char> is_square(q, 0);
  for (std::size_t a = 1; a < q; ++a) is_square[f.mul(a, a)] = 1;

  const std::size_t inf = q;
  auto act = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::size_t z) {
    if (z == inf) return c == 0 ? inf : f.mul(a, f.inv(c));
    const std::size_t num = f.add(f.mul(a, z), b);
    const std::size_t den = f.add(f.mul(c, z), d);
    return den == 0 ? inf : f.mul(num, f.inv(den));
  };

  std::unordered_map<Permutation, char, PermutationHash> seen;
  std::vector<Permutation> perms;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c)
        for (std::size_t d = 0; d < q; ++d) {
          const std::size_t det = f.sub(f.mul(a, d), f.mul(b, c));
          if (det == 0) continue;
          if (special && !is_square[det]) continue;
          Permutation p(q + 1);
          for (std::size_t z = 0; z <= q; ++z) p[z] = static_cast<std::uint32_t>(act(a, b, c, d, z));
          if (seen.emplace(p, 1).second) perms.push_back(std::move(p));
        }
  std::sort(perms.begin(), perms.end());
  return table_from_permutations(perms, std::string(special ? "psl2(" : "pgl2(") +
                                            std::to_string(q) + ")");
}

// ---- descriptor parsing ----------------------------------------------------

struct Node;

struct Arg {
  enum class Kind { integer, node, list } kind = Kind::integer;
  long long integer = 0;
  std::vector<Node> node;  // exactly one entry when kind == node
  std::vector<long long> list;
};

struct Node {
  std::string name;
  std::vector<Arg> args;
};

class Parser {
public:
  explicit Parser(std::string s) : s_(std::move(s)) {}

  Node parse() {
    Node n = node();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return n;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw FormatError("bad group descriptor '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  Node node() {
    skip();
    Node n;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      n.name += s_[pos_++];
    if (n.name.empty()) fail("expected family name");
    if (!eat('(')) fail("expected '('");
    if (eat(')')) return n;
    do {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n.args.push_back(Arg{Arg::Kind::integer, integer(), {}, {}});
      } else if (eat('[')) {
        std::vector<long long> list;
        if (!eat(']')) {
          do list.push_back(integer());
          while (eat(','));
          if (!eat(']')) fail("expected ']'");
        }
        n.args.push_back(Arg{Arg::Kind::list, 0, {}, std::move(list)});
      } else {
        Arg a{Arg::Kind::node, 0, {}, {}};
        a.node.push_back(node());
        n.args.push_back(std::move(a));
      }
    } while (eat(','));
    if (!eat(')')) fail("expected ')'");
    return n;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::vector<std::size_t> int_args(const Node& n) {
  std::vector<std::size_t> out;
  if (n.args.size() == 1 && n.args[0].kind == Arg::Kind::list) {
    for (auto v : n.args[0].list) out.push_back(static_cast<std::size_t>(v));
    return out;
  }
  for (const auto& a : n.args) {
    if (a.kind != Arg::Kind::integer) throw FormatError(n.name + " expects integer parameters");
    out.push_back(static_cast<std::size_t>(a.integer));
  }
  return out;
}

std::size_t one_int(const Node& n) {
  auto v = int_args(n);
  if (v.size() != 1) throw FormatError(n.name + " expects exactly one parameter");
  return v[0];
}

GroupTable build(const Node& n) {
  const std::string& f = n.name;
  if (f == "cyclic") return cyclic(one_int(n));
  if (f == "abelian_product") return abelian_product(int_args(n));
  if (f == "dihedral") return dihedral(one_int(n));
  if (f == "generalized_quaternion") return generalized_quaternion(one_int(n));
  if (f == "symmetric") return symmetric(one_int(n));
  if (f == "alternating") return alternating(one_int(n));
  if (f == "heisenberg") return heisenberg(one_int(n));
  if (f == "heisenberg_torus") return heisenberg_torus(one_int(n));
  if (f == "pgl2") return pgl2(one_int(n));
  if (f == "psl2") return psl2(one_int(n));
  if (f == "pq") {
    auto v = int_args(n);
    if (v.size() != 2) throw FormatError("pq expects two primes");
    return pq_group(v[0], v[1]);
  }
  if (f == "generalized_dihedral") {
    if (n.args.size() == 1 && n.args[0].kind == Arg::Kind::node)
      return generalized_dihedral(build(n.args[0].node[0]));
    // Bare integers are read as abelian_product factors.
    return generalized_dihedral(abelian_product(int_args(n)));
  }
  if (f == "direct") {
    if (n.args.empty()) throw FormatError("direct expects at least one factor");
    std::vector<GroupTable> factors;
    for (const auto& a : n.args) {
      if (a.kind != Arg::Kind::node) throw FormatError("direct expects group descriptors");
      factors.push_back(build(a.node[0]));
    }
    GroupTable g = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
    if (factors.size() > 2) {
      std::string d = "direct(";
      for (std::size_t i = 0; i < factors.size(); ++i) d += (i ? "," : "") + factors[i].descriptor();
      g.set_descriptor(d + ")");
    }
    return g;
  }
  if (f == "perm_closure") {
    std::vector<Permutation> gens;
    for (const auto& a : n.args) {
      if (a.kind != Arg::Kind::list) throw FormatError("perm_closure expects image lists like [1,0,2]");
      const auto& list = a.list;
      gens.emplace_back(list.begin(), list.end());
    }
    return perm_closure(gens);
  }
  throw FormatError("unknown group family '" + f + "'");
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  std::string out;
  std::vector<char> done(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = 1;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

GroupTable abelian_product(const std::vector<std::size_t>& factors) {
  std::size_t n = 1;
  for (auto f : factors) {
    if (f == 0) throw PreconditionError("abelian_product factors must be >= 1");
    n *= f;
    check_cap(n, "abelian product");
  }
  const std::size_t k = factors.size();
  auto decode = [&](std::size_t x) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = x % factors[i];
      x /= factors[i];
    }
    return d;
  };
  std::vector<std::vector<std::size_t>> digits(n);
  for (std::size_t x = 0; x < n; ++x) digits[x] = decode(x);
  std::vector<Element> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t r = 0;
      for (std::size_t i = 0; i < k; ++i) r = r * factors[i] + (digits[a][i] + digits[b][i]) % factors[i];
      mul[a * n + b] = static_cast<Element>(r);
    }
  std::vector<std::string> labels;
  std::string desc = k == 1 ? "cyclic(" : "abelian_product(";
  for (std::size_t i = 0; i < k; ++i) desc += (i ? "," : "") + std::to_string(factors[i]);
  desc += ")";
  for (std::size_t x = 0; x < n; ++x) {
    if (k == 1) {
      labels.push_back(x == 0 ? "e" : x == 1 ? "a" : "a^" + std::to_string(x));
    } else {
      std::string l = "(";
      for (std::size_t i = 0; i < k; ++i) l += (i ? "," : "") + std::to_string(digits[x][i]);
      labels.push_back(l + ")");
    }
  }
  if (k == 0) desc = "cyclic(1)";
  return GroupTable(n, std::move(mul), std::move(labels), std::move(desc));
}

GroupTable cyclic(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic(n) requires n >= 1");
  return abelian_product({n});
}

GroupTable generalized_dihedral(const GroupTable& a) {
  if (!is_abelian(a)) throw PreconditionError("generalized_dihedral requires an abelian group");
  const std::size_t m = a.order(), n = 2 * m;
  check_cap(n, "generalized dihedral group");
  std::vector<Element> mul(n * n);
  for (std::size_t e = 0; e < 2; ++e)
    for (Element x = 0; x < m; ++x)
      for (std::size_t f = 0; f < 2; ++f)
        for (Element y = 0; y < m; ++y) {
          const Element twisted = e ? a.inverse(y) : y;
          mul[(e * m + x) * n + f * m + y] = static_cast<Element>(((e + f) % 2) * m + a.mul(x, twisted));
        }
  std::vector<std::string> labels;
  for (std::size_t e = 0; e < 2; ++e)
    for (Element x = 0; x < m; ++x) labels.push_back(e ? a.label(x) + "x" : a.label(x));
  return GroupTable(n, std::move(mul), std::move(labels),
                    "generalized_dihedral(" + a.descriptor() + ")");
}

GroupTable dihedral(std::size_t order) {
  if (order < 6 || order % 2) throw PreconditionError("dihedral(2n) requires even order >= 6");
  const std::size_t m = order / 2;
  check_cap(order, "dihedral group");
  std::vector<Element> mul(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = y % m;
      const bool xs = x >= m, ys = y >= m;
      std::size_t r;
      if (!xs && !ys) r = (i + j) % m;
      else if (!xs && ys) r = m + (i + j) % m;
      else if (xs && !ys) r = m + (i + m - j) % m;
      else r = (i + m - j) % m;
      mul[x * order + y] = static_cast<Element>(r);
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % m;
    std::string rot = i == 0 ? "" : i == 1 ? "r" : "r^" + std::to_string(i);
    if (x < m) labels.push_back(i == 0 ? "e" : rot);
    else labels.push_back(rot + "s");
  }
  return GroupTable(order, std::move(mul), std::move(labels), "dihedral(" + std::to_string(order) + ")");
}

GroupTable generalized_quaternion(std::size_t order) {
  if (order < 8 || !is_power_of(order, 2))
    throw PreconditionError("generalized_quaternion requires order 2^m with m >= 3");
  check_cap(order, "generalized quaternion group");
  const std::size_t n = order / 2, half = n / 2;
  std::vector<Element> mul(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % n, j = y % n;
      const bool xb = x >= n, yb = y >= n;
      std::size_t r;
      if (!xb && !yb) r = (i + j) % n;
      else if (!xb && yb) r = n + (i + j) % n;
      else if (xb && !yb) r = n + (i + n - j) % n;
      else r = (i + n - j + half) % n;
      mul[x * order + y] = static_cast<Element>(r);
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % n;
    std::string pw = i == 0 ? "" : i == 1 ? "a" : "a^" + std::to_string(i);
    if (x < n) labels.push_back(i == 0 ? "e" : pw);
    else labels.push_back(pw + "b");
  }
  return GroupTable(order, std::move(mul), std::move(labels),
                    "generalized_quaternion(" + std::to_string(order) + ")");
}

GroupTable symmetric(std::size_t n) {
  if (n == 0) throw PreconditionError("symmetric(n) requires n >= 1");
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  check_cap(order, "symmetric group");
  std::vector<Permutation> perms;
  Permutation p = identity_permutation(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return table_from_permutations(perms, "symmetric(" + std::to_string(n) + ")");
}

GroupTable alternating(std::size_t n) {
  if (n == 0) throw PreconditionError("alternating(n) requires n >= 1");
  std::size_t order = 1;
  for (std::size_t i = 3; i <= n; ++i) order *= i;
  check_cap(order, "alternating group");
  std::vector<Permutation> perms;
  Permutation p = identity_permutation(n);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return table_from_permutations(perms, "alternating(" + std::to_string(n) + ")");
}

GroupTable heisenberg(std::size_t p) {
  if (!is_prime(p)) throw PreconditionError("heisenberg(p) requires p prime");
  const std::size_t n = p * p * p;
  check_cap(n, "Heisenberg group");
  auto idx = [p](std::size_t a, std::size_t b, std::size_t c) { return (a * p + b) * p + c; };
  std::vector<Element> mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < p; ++c) {
        labels[idx(a, b, c)] = "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
        for (std::size_t a2 = 0; a2 < p; ++a2)
          for (std::size_t b2 = 0; b2 < p; ++b2)
            for (std::size_t c2 = 0; c2 < p; ++c2)
              mul[idx(a, b, c) * n + idx(a2, b2, c2)] =
                  static_cast<Element>(idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p));
      }
  return GroupTable(n, std::move(mul), std::move(labels), "heisenberg(" + std::to_string(p) + ")");
}

GroupTable heisenberg_torus(std::size_t q) {
  const FiniteField f(q);
  check_cap(q * q * q * (q - 1), "heisenberg_torus");
  // Matrices act on column vectors of GF(q)^3, coded as (x0 q + x1) q + x2.
  using Matrix = std::array<std::array<std::size_t, 3>, 3>;
  auto to_perm = [&](const Matrix& m) {
    Permutation p(q * q * q);
    for (std::size_t v = 0; v < p.size(); ++v) {
      const std::size_t x[3] = {v / (q * q), v / q % q, v % q};
      std::size_t w = 0;
      for (std::size_t i = 0; i < 3; ++i) {
        std::size_t y = 0;
        for (std::size_t j = 0; j < 3; ++j) y = f.add(y, f.mul(m[i][j], x[j]));
        w = w * q + y;
      }
      p[v] = static_cast<std::uint32_t>(w);
    }
    return p;
  };
  std::size_t lambda = 0;  // generator of GF(q)*
  for (std::size_t a = 1; a < q && !lambda; ++a) {
    std::size_t x = a, ord = 1;
    for (; x != 1; ++ord) x = f.mul(x, a);
    if (ord == q - 1) lambda = a;
  }
  std::vector<Permutation> gens;
  for (std::size_t a = 1; a < q; ++a) {
    gens.push_back(to_perm(Matrix{{{1, a, 0}, {0, 1, 0}, {0, 0, 1}}}));
    gens.push_back(to_perm(Matrix{{{1, 0, 0}, {0, 1, a}, {0, 0, 1}}}));
  }
  if (q > 2) gens.push_back(to_perm(Matrix{{{lambda, 0, 0}, {0, 1, 0}, {0, 0, f.inv(lambda)}}}));
  GroupTable g = perm_closure(gens);
  g.set_descriptor("heisenberg_torus(" + std::to_string(q) + ")");
  return g;
}

GroupTable pgl2(std::size_t q) { return projective_group(q, false); }
GroupTable psl2(std::size_t q) { return projective_group(q, true); }

GroupTable perm_closure(const std::vector<Permutation>& generators, std::size_t cap) {
  std::size_t k = 0;
  for (const auto& g : generators) k = std::max(k, g.size());
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    Permutation p = identity_permutation(k);
    std::vector<char> hit(k, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] >= g.size() || hit[g[i]]) throw PreconditionError("generator is not a permutation");
      hit[g[i]] = 1;
      p[i] = g[i];
    }
    gens.push_back(std::move(p));
  }
  std::vector<Permutation> elems{identity_permutation(k)};
  std::unordered_map<Permutation, Element, PermutationHash> seen{{elems[0], 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& s : gens) {
      Permutation next = compose(s, elems[head]);
      if (seen.emplace(next, static_cast<Element>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > cap)
          throw SizeLimitError("permutation closure exceeds cap " + std::to_string(cap));
      }
    }
  std::string desc = "perm_closure(";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    desc += i ? ",[" : "[";
    for (std::size_t j = 0; j < generators[i].size(); ++j)
      desc += (j ? "," : "") + std::to_string(generators[i][j]);
    desc += "]";
  }
  return table_from_permutations(elems, desc + ")");
}

GroupTable pq_group(std::size_t p, std::size_t q) {
  if (!is_prime(p) || !is_prime(q) || p >= q || (q - 1) % p != 0)
    throw PreconditionError("pq_group requires primes p < q with p | q - 1");
  // r = g^((q-1)/p) for the least primitive root g has multiplicative order p.
  std::size_t r = 0;
  for (std::size_t g = 2; g < q && !r; ++g) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * g % q;
      ++ord;
    } while (x != 1);
    if (ord == q - 1) {
      r = 1;
      for (std::size_t i = 0; i < (q - 1) / p; ++i) r = r * g % q;
    }
  }
  Permutation shift(q), scale(q);
  for (std::size_t x = 0; x < q; ++x) {
    shift[x] = static_cast<std::uint32_t>((x + 1) % q);
    scale[x] = static_cast<std::uint32_t>(x * r % q);
  }
  GroupTable g = perm_closure({shift, scale});
  g.set_descriptor("pq(" + std::to_string(p) + "," + std::to_string(q) + ")");
  return g;
}

GroupTable make_group(const std::string& descriptor) {
  GroupTable g = build(Parser(descriptor).parse());
  return g;
}

GroupTable make_group(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw FormatError("missing group family");
  if (tokens.size() == 1) return make_group(tokens[0]);
  std::string d = tokens[0] + "(";
  for (std::size_t i = 1; i < tokens.size(); ++i) d += (i > 1 ? "," : "") + tokens[i];
  return make_group(d + ")");
}

std::vector<std::string> family_names() {
  return {"cyclic",     "abelian_product", "dihedral", "generalized_dihedral", "generalized_quaternion",
          "symmetric",  "alternating",     "heisenberg", "heisenberg_torus",    "pgl2",
          "psl2",       "pq",         "perm_closure",    "direct"};
}

}  // namespace commdom
