#pragma once

// Deliberately naive reference implementations. They share no code with the
// library: groups are vectors of permutations, graphs are adjacency bitmasks,
// domination is plain subset enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

// (a * b)(x) = a(b(x)), as in the library.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
  return r;
}

/// All elements generated by gens, sorted.
inline std::vector<Perm> closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  Perm id(gens.at(0).size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::vector<Perm> todo{id};
  seen.insert(id);
  while (!todo.empty()) {
    Perm p = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) todo.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

struct Group {
  std::vector<Perm> elems;
  bool commute(std::size_t a, std::size_t b) const {
    return compose(elems[a], elems[b]) == compose(elems[b], elems[a]);
  }
  std::size_t order() const { return elems.size(); }
};

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline std::map<std::size_t, std::size_t> order_histogram(const Group& g) {
  std::map<std::size_t, std::size_t> h;
  for (const auto& p : g.elems) {
    Perm q = p;
    std::size_t k = 1;
    for (; !is_identity(q); ++k) q = compose(p, q);
    ++h[k];
  }
  return h;
}

inline std::size_t center_size(const Group& g) {
  std::size_t z = 0;
  for (std::size_t a = 0; a < g.order(); ++a) {
    bool central = true;
    for (std::size_t b = 0; b < g.order() && central; ++b) central = g.commute(a, b);
    z += central;
  }
  return z;
}

// ---- graphs as bitmasks (n <= 63) ------------------------------------------

struct Graph {
  std::size_t n = 0;
  std::vector<std::uint64_t> adj;  // open neighbourhoods
  bool edge(std::size_t u, std::size_t v) const { return adj[u] >> v & 1; }
};

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g{n, std::vector<std::uint64_t>(n, 0)};
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) {
        g.adj[u] |= std::uint64_t{1} << v;
        g.adj[v] |= std::uint64_t{1} << u;
      }
  return g;
}

/// Smallest dominating (total: open-neighbourhood) set size by trying every
/// subset in order of size. Absent when none exists.
inline std::optional<std::size_t> domination_number(const Graph& g, bool total) {
  const std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n) - 1;
  std::optional<std::size_t> best;
  for (std::uint64_t s = 0; s <= all; ++s) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(s));
    if (best && k >= *best) continue;
    std::uint64_t covered = 0;
    for (std::size_t v = 0; v < g.n; ++v)
      if (s >> v & 1) covered |= g.adj[v] | (total ? 0 : std::uint64_t{1} << v);
    if (covered == all) best = k;
    if (s == all) break;
  }
  return best;
}

/// Vertices adjacent to all others.
inline std::vector<std::size_t> universal_vertices(const Graph& g) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.n; ++v)
    if (static_cast<std::size_t>(__builtin_popcountll(g.adj[v])) == g.n - 1) out.push_back(v);
  return out;
}

// Strong product by the definition: equal-or-adjacent in each coordinate.
inline bool strong_adjacent(const Graph& a, const Graph& b, std::size_t i1, std::size_t j1, std::size_t i2,
                            std::size_t j2) {
  if (i1 == i2 && j1 == j2) return false;
  return (i1 == i2 || a.edge(i1, i2)) && (j1 == j2 || b.edge(j1, j2));
}

// ---- Suzuki arithmetic in 128-bit integers (n <= 6) -------------------------

struct SuzukiTerms {
  unsigned __int128 terms[4];
  bool integral[4];
};

inline SuzukiTerms suzuki_terms(unsigned n) {
  using u128 = unsigned __int128;
  const u128 q = u128{1} << (2 * n + 1), r = u128{1} << n;
  const u128 num[4] = {q * q + 1, q * q * (q * q + 1), q * q * (q - 1) * (q * q + 1), q * q * (q - 1) * (q * q + 1)};
  const u128 den[4] = {1, 2, 4 * (q - 2 * r + 1), 4 * (q + 2 * r + 1)};
  SuzukiTerms t{};
  for (int i = 0; i < 4; ++i) {
    t.integral[i] = num[i] % den[i] == 0;
    t.terms[i] = num[i] / den[i];
  }
  return t;
}

inline unsigned long long to_ull(unsigned __int128 v) { return static_cast<unsigned long long>(v); }

}  // namespace oracle
