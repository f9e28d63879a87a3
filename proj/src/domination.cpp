#include "commdom/domination.hpp"

#include <algorithm>
#include <numeric>

#include "commdom/commuting.hpp"
#include "commdom/error.hpp"

namespace commdom {

std::string to_string(DominationKind k) {
  return k == DominationKind::domination ? "domination" : "total_domination";
}

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::exact: return "exact";
    case SolveMethod::greedy_upper_only: return "greedy_upper_only";
    case SolveMethod::formula: return "formula";
  }
  return "?";
}

bool is_dominating_set(const SimpleGraph& g, const VertexSet& s) {
  VertexSet covered(g.vertex_count());
  s.for_each([&](std::size_t v) { covered |= g.closed_neighborhood(v); });
  return covered.count() == g.vertex_count();
}

bool is_total_dominating_set(const SimpleGraph& g, const VertexSet& s) {
  VertexSet covered(g.vertex_count());
  s.for_each([&](std::size_t v) { covered |= g.neighbors(v); });
  return covered.count() == g.vertex_count();
}

namespace {

using Clock = std::chrono::steady_clock;

VertexSet greedy_cover(const SimpleGraph& g, bool open) {
  const std::size_t n = g.vertex_count();
  VertexSet uncovered = SubsetMask::full(n), chosen(n);
  while (uncovered.any()) {
    std::size_t best = n, best_gain = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t gain = g.neighbors(v).intersection_count(uncovered) +
                               (!open && uncovered.test(v) ? 1 : 0);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    if (best == n) break;  // only reachable with an isolated vertex in open mode
    chosen.set(best);
    uncovered -= g.neighbors(best);
    if (!open) uncovered.reset(best);
  }
  return chosen;
}

struct Timeout {};

/// Minimum set cover over one connected component.
///
/// Elements are the component's vertices; the candidate set of vertex c is its
/// closed (domination) or open (total domination) neighbourhood. Dominated
/// candidates and implied elements are removed first, then a depth-first
/// branch-and-bound branches on the uncovered element with the fewest
/// remaining coverers. Candidates rejected earlier at a node stay excluded in
/// its later branches.
class ComponentSolver {
public:
  static constexpr std::size_t kReductionLimit = 2500;

  ComponentSolver(const SimpleGraph& g, const std::vector<std::size_t>& vertices, bool open,
                  Clock::time_point deadline, std::uint64_t& nodes)
      : deadline_(deadline), nodes_(nodes) {
    const std::size_t m = vertices.size();
    std::vector<std::size_t> local(g.vertex_count(), m);
    for (std::size_t i = 0; i < m; ++i) local[vertices[i]] = i;
    std::vector<SubsetMask> sets(m, SubsetMask(m));
    for (std::size_t i = 0; i < m; ++i) {
      g.neighbors(vertices[i]).for_each([&](std::size_t w) {
        if (local[w] < m) sets[i].set(local[w]);
      });
      if (!open) sets[i].set(i);
    }
    reduce(sets, vertices);
  }

  /// Runs the search; returns false if the deadline cut it short.
  bool solve(const std::vector<std::size_t>& initial) {
    best_ = initial;
    try {
      const SubsetMask excluded(candidates_.size());
      root_lower_ = lower_bound(SubsetMask::full(element_count_), excluded);
      std::vector<std::size_t> chosen;
      search(SubsetMask::full(element_count_), excluded, chosen);
      root_lower_ = best_.size();
      return true;
    } catch (const Timeout&) {
      return false;
    }
  }

  const std::vector<std::size_t>& best() const { return best_; }
  std::size_t root_lower() const { return root_lower_; }
  std::size_t bound() const {
    return lower_bound(SubsetMask::full(element_count_), SubsetMask(candidates_.size()));
  }

  /// Greedy cover on the reduced instance, in original vertex indices.
  std::vector<std::size_t> greedy() const {
    SubsetMask uncovered = SubsetMask::full(element_count_);
    std::vector<std::size_t> out;
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const std::size_t k = cover_[c].intersection_count(uncovered);
        if (k > gain) {
          gain = k;
          best = c;
        }
      }
      out.push_back(candidates_[best]);
      uncovered -= cover_[best];
    }
    return out;
  }

private:
  void reduce(std::vector<SubsetMask> sets, const std::vector<std::size_t>& vertices) {
    const std::size_t m = vertices.size();
    std::vector<char> cand_alive(m, 1), elem_alive(m, 1);
    // The reductions are quadratic in m; past this size they cost more than
    // they save.
    for (bool changed = m <= kReductionLimit; changed;) {
      changed = false;
      // Candidate c is dominated if another live candidate covers a superset
      // of its live elements (equal sets: keep the least index).
      std::vector<SubsetMask> live_sets(m);
      SubsetMask live_elems(m);
      for (std::size_t e = 0; e < m; ++e)
        if (elem_alive[e]) live_elems.set(e);
      for (std::size_t c = 0; c < m; ++c) live_sets[c] = sets[c] & live_elems;
      for (std::size_t c = 0; c < m; ++c) {
        if (!cand_alive[c]) continue;
        for (std::size_t d = 0; d < m; ++d) {
          if (d == c || !cand_alive[d]) continue;
          if (live_sets[c].is_subset_of(live_sets[d]) && (!(live_sets[c] == live_sets[d]) || d < c)) {
            cand_alive[c] = 0;
            changed = true;
            break;
          }
        }
      }
      // Element u is implied if some other live element w has coverers(w)
      // contained in coverers(u): covering w covers u.
      std::vector<SubsetMask> coverers(m, SubsetMask(m));
      for (std::size_t c = 0; c < m; ++c)
        if (cand_alive[c]) live_sets[c].for_each([&](std::size_t e) { coverers[e].set(c); });
      for (std::size_t u = 0; u < m; ++u) {
        if (!elem_alive[u]) continue;
        for (std::size_t w = 0; w < m; ++w) {
          if (w == u || !elem_alive[w]) continue;
          if (coverers[w].is_subset_of(coverers[u]) && (!(coverers[w] == coverers[u]) || w < u)) {
            elem_alive[u] = 0;
            changed = true;
            break;
          }
        }
      }
    }

    std::vector<std::size_t> elem_index(m, m);
    for (std::size_t e = 0; e < m; ++e)
      if (elem_alive[e]) elem_index[e] = element_count_++;
    for (std::size_t c = 0; c < m; ++c) {
      if (!cand_alive[c]) continue;
      SubsetMask s(element_count_);
      sets[c].for_each([&](std::size_t e) {
        if (elem_alive[e]) s.set(elem_index[e]);
      });
      candidates_.push_back(vertices[c]);
      cover_.push_back(std::move(s));
    }
    coverers_.assign(element_count_, SubsetMask(candidates_.size()));
    for (std::size_t c = 0; c < cover_.size(); ++c)
      cover_[c].for_each([&](std::size_t e) { coverers_[e].set(c); });
  }

  std::size_t lower_bound(const SubsetMask& uncovered, const SubsetMask& excluded) const {
    // Packing: uncovered elements with pairwise disjoint coverer sets each
    // need their own chosen candidate.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    uncovered.for_each([&](std::size_t e) {
      order.emplace_back((coverers_[e] - excluded).count(), e);
    });
    std::sort(order.begin(), order.end());
    SubsetMask used(candidates_.size());
    std::size_t packing = 0;
    for (auto [k, e] : order) {
      const SubsetMask avail = coverers_[e] - excluded;
      if (!avail.intersects(used)) {
        ++packing;
        used |= avail;
      }
    }
    // Counting: no candidate covers more than max_gain of what is left.
    std::size_t max_gain = 0;
    for (std::size_t c = 0; c < cover_.size(); ++c)
      if (!excluded.test(c)) max_gain = std::max(max_gain, cover_[c].intersection_count(uncovered));
    const std::size_t left = uncovered.count();
    const std::size_t counting = max_gain ? (left + max_gain - 1) / max_gain : left;
    return std::max(packing, counting);
  }

  void search(const SubsetMask& uncovered, const SubsetMask& excluded, std::vector<std::size_t>& chosen) {
    if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) throw Timeout{};
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) {
        best_.clear();
        for (auto c : chosen) best_.push_back(candidates_[c]);
      }
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    std::size_t pivot = element_count_, pivot_options = candidates_.size() + 1;
    uncovered.for_each([&](std::size_t e) {
      if (pivot_options <= 1) return;
      const std::size_t k = (coverers_[e] - excluded).count();
      if (k < pivot_options) {
        pivot_options = k;
        pivot = e;
      }
    });
    if (pivot_options == 0) return;
    if (pivot_options > 1 && chosen.size() + lower_bound(uncovered, excluded) >= best_.size()) return;

    std::vector<std::pair<std::size_t, std::size_t>> options;  // (-gain, candidate)
    (coverers_[pivot] - excluded).for_each([&](std::size_t c) {
      options.emplace_back(element_count_ - cover_[c].intersection_count(uncovered), c);
    });
    std::sort(options.begin(), options.end());
    SubsetMask local_excluded = excluded;
    for (auto [neg_gain, c] : options) {
      chosen.push_back(c);
      search(uncovered - cover_[c], local_excluded, chosen);
      chosen.pop_back();
      local_excluded.set(c);
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  Clock::time_point deadline_;
  std::uint64_t& nodes_;
  std::size_t element_count_ = 0;
  std::vector<std::size_t> candidates_;   // original vertex index per candidate
  std::vector<SubsetMask> cover_;         // candidate -> elements
  std::vector<SubsetMask> coverers_;      // element -> candidates
  std::vector<std::size_t> best_;
  std::size_t root_lower_ = 0;
};

DominationResult solve(const SimpleGraph& g, const SolverOptions& opts, bool open) {
  const auto start = Clock::now();
  const auto budget = std::chrono::duration_cast<Clock::duration>(
      std::chrono::duration<double>(std::max(0.0, opts.budget_seconds)));
  const auto deadline = start + budget;
  const std::size_t n = g.vertex_count();

  DominationResult r;
  r.kind = open ? DominationKind::total_domination : DominationKind::domination;

  if (open) {
    for (std::size_t v = 0; v < n; ++v)
      if (g.degree(v) == 0) {
        r.elapsed = Clock::now() - start;
        return r;  // no total dominating set
      }
  }

  VertexSet witness(n);
  bool all_exact = true;
  for (const auto& comp : connected_components(g)) {
    const auto vertices = comp.members();
    ComponentSolver solver(g, vertices, open, deadline, r.node_count);
    const auto initial = solver.greedy();
    std::vector<std::size_t> best = initial;
    std::size_t lower;
    if (all_exact && solver.solve(initial)) {
      best = solver.best();
      lower = best.size();
    } else if (!all_exact) {
      lower = std::min(solver.bound(), best.size());
    } else {
      all_exact = false;
      best = solver.best().empty() ? initial : solver.best();
      lower = std::min(solver.root_lower(), best.size());
    }
    r.lower_bound += lower;
    r.upper_bound += best.size();
    for (auto v : best) witness.set(v);
  }

  r.value = witness.count();
  r.witness = std::move(witness);
  r.method = all_exact ? SolveMethod::exact : SolveMethod::greedy_upper_only;
  if (all_exact) r.lower_bound = r.upper_bound = *r.value;
  r.elapsed = Clock::now() - start;
  return r;
}

}  // namespace

VertexSet greedy_dominating_set(const SimpleGraph& g) { return greedy_cover(g, false); }

std::optional<VertexSet> greedy_total_dominating_set(const SimpleGraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0) return std::nullopt;
  return greedy_cover(g, true);
}

DominationResult exact_domination_number(const SimpleGraph& g, const SolverOptions& opts) {
  return solve(g, opts, false);
}

DominationResult exact_total_domination_number(const SimpleGraph& g, const SolverOptions& opts) {
  return solve(g, opts, true);
}

std::optional<std::size_t> exhaustive_domination_number(const SimpleGraph& g, bool total,
                                                        std::uint64_t max_subsets) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<VertexSet> cover(n);
  for (std::size_t v = 0; v < n; ++v) cover[v] = total ? g.neighbors(v) : g.closed_neighborhood(v);
  std::uint64_t budget = max_subsets;
  for (std::size_t k = 1; k <= n; ++k) {
    // Lexicographic k-combinations of 0..n-1.
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (budget-- == 0) return std::nullopt;
      VertexSet covered(n);
      for (auto v : idx) covered |= cover[v];
      if (covered.count() == n) return k;
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;  // only reachable for total domination with an isolated vertex
}

RatioResult domination_ratio(const GroupTable& g, const SolverOptions& opts) {
  const ProperGraph proper = proper_commuting_graph(g);
  if (proper.degenerate) throw PreconditionError("domination ratio needs a non-abelian group");
  const DominationResult r = exact_domination_number(proper.graph, opts);
  const auto n = static_cast<long long>(g.order());
  RatioResult out{Rational(static_cast<long long>(r.lower_bound), n),
                  Rational(static_cast<long long>(r.upper_bound), n), r.exact()};
  return out;
}

}  // namespace commdom
