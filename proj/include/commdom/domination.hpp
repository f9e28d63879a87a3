#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "commdom/graph.hpp"
#include "commdom/group.hpp"
#include "commdom/numeric.hpp"

namespace commdom {

enum class DominationKind { domination, total_domination };
enum class SolveMethod { exact, greedy_upper_only, formula };

std::string to_string(DominationKind k);
std::string to_string(SolveMethod m);

inline constexpr double kDefaultBudgetSeconds = 60.0;

/// Outcome of a domination or total-domination computation.
///
/// For an exact result value == lower_bound == upper_bound and the witness
/// verifies. When the budget runs out, method is greedy_upper_only, value and
/// witness hold the best set found, and the bounds bracket the optimum. A total
/// domination result with no value means the graph has an isolated vertex.
struct DominationResult {
  DominationKind kind = DominationKind::domination;
  std::optional<std::size_t> value;
  std::optional<VertexSet> witness;
  SolveMethod method = SolveMethod::exact;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;
  std::chrono::nanoseconds elapsed{0};
  std::uint64_t node_count = 0;

  bool exact() const { return method == SolveMethod::exact; }
  /// For total domination: false iff no total dominating set exists.
  bool exists() const { return value.has_value(); }
};

bool is_dominating_set(const SimpleGraph& g, const VertexSet& s);
bool is_total_dominating_set(const SimpleGraph& g, const VertexSet& s);

/// Classical greedy: repeatedly take the vertex whose closed neighbourhood
/// covers the most undominated vertices (ties to the least index).
VertexSet greedy_dominating_set(const SimpleGraph& g);

/// Greedy over open neighbourhoods; absent when a vertex is isolated.
std::optional<VertexSet> greedy_total_dominating_set(const SimpleGraph& g);

struct SolverOptions {
  double budget_seconds = kDefaultBudgetSeconds;
};

DominationResult exact_domination_number(const SimpleGraph& g, const SolverOptions& opts = {});
DominationResult exact_total_domination_number(const SimpleGraph& g, const SolverOptions& opts = {});

/// Smallest dominating (or total dominating) set by enumerating subsets in
/// increasing size. Independent of the branch-and-bound; used as an oracle.
/// Returns nothing when no set exists or when the enumeration would exceed
/// max_subsets candidate sets.
std::optional<std::size_t> exhaustive_domination_number(const SimpleGraph& g, bool total,
                                                        std::uint64_t max_subsets = 50'000'000);

/// gamma(C**(G)) / |G|. When the solver is cut off by the budget, lower and
/// upper bracket the ratio and exact is false.
struct RatioResult {
  Rational lower;
  Rational upper;
  bool exact = true;
  const Rational& value() const { return lower; }
};

RatioResult domination_ratio(const GroupTable& g, const SolverOptions& opts = {});

}  // namespace commdom
