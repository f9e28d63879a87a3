#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "commdom/domination.hpp"
#include "commdom/formulas.hpp"
#include "commdom/group.hpp"

namespace commdom {

enum class CheckStatus { pass, fail, skipped, bounds_only };
std::string to_string(CheckStatus s);

/// One formula compared against the solver on one group.
struct TheoremCheck {
  std::string theorem_id;
  std::string group_descriptor;
  bool applicable = false;
  std::string reason;
  FormulaKind kind = FormulaKind::exact_gamma;
  DominationKind target = DominationKind::domination;
  std::string predicted;  ///< rendered prediction, e.g. "4", "<= 7/2", "nonexistence"
  std::string computed;   ///< rendered solver result, e.g. "4", "none", "[3, 5]"
  CheckStatus status = CheckStatus::skipped;
  /// Outcome of the beyond-gate evaluation: "holds" or "fails".
  std::optional<std::string> beyond_gate;
  std::chrono::nanoseconds elapsed{0};
};

struct GroupReport {
  std::string descriptor;
  std::size_t order = 0;
  std::size_t center_size = 0;
  bool abelian = false;
  bool ac_group = false;
  bool nilpotent = false;
  std::optional<std::size_t> generalized_dihedral_a;  ///< |A| when G = D(A)
  std::optional<Order2Structure> order2;
  DominationResult gamma;
  DominationResult gamma_t;
  std::optional<Rational> ratio;  ///< gamma / |G| when gamma is exact
  std::vector<TheoremCheck> checks;
  std::chrono::nanoseconds elapsed{0};
};

/// Solves gamma and gamma_t of C**(G) and checks every applicable formula.
/// Abelian groups yield a report with no checks.
GroupReport run_theorem_suite(const GroupTable& g, const SolverOptions& opts = {});

struct CorpusEntry {
  std::string descriptor;
  std::optional<double> budget_seconds;  ///< overrides the sweep budget
};

struct Corpus {
  std::string description;
  std::vector<CorpusEntry> groups;
};

/// Built-in corpus: the non-abelian constructible groups of order <= max_order
/// plus a fixed list of direct products (one of order 216 with a longer budget).
Corpus default_corpus(std::size_t max_order = 200);
Corpus load_corpus(const std::string& path);
nlohmann::ordered_json corpus_to_json(const Corpus& c);

struct SweepSummary {
  std::size_t groups = 0;
  std::size_t pass = 0, fail = 0, skipped = 0, bounds_only = 0;
  std::optional<Rational> max_ratio;
  std::vector<std::string> max_ratio_groups;
  /// Groups whose ratio lies in (1/2, 1), with the ratio.
  std::vector<std::pair<std::string, Rational>> spectrum_hits;
};

struct SweepReport {
  std::string corpus_description;
  std::vector<GroupReport> groups;  ///< corpus order
  SweepSummary summary;
};

struct SweepOptions {
  double budget_seconds = kDefaultBudgetSeconds;
  std::size_t workers = 1;
};

SweepReport run_family_sweep(const Corpus& corpus, const SweepOptions& opts = {});
SweepSummary summarize(const std::vector<GroupReport>& groups);

/// Report serialisation with a fixed field order. Elapsed times are left out
/// unless requested so that reports are byte-identical across runs.
nlohmann::ordered_json to_json(const DominationResult& r, const std::vector<std::string>& labels,
                               bool timings = false);
nlohmann::ordered_json to_json(const FormulaPrediction& p);
nlohmann::ordered_json to_json(const TheoremCheck& c, bool timings = false);
nlohmann::ordered_json to_json(const GroupReport& r, bool timings = false);
nlohmann::ordered_json to_json(const SweepReport& r, bool timings = false);
/// Inverses of to_json. Witness labels are mapped back through labels; the
/// order-2 structure comes back with its reported fields only.
TheoremCheck check_from_json(const nlohmann::ordered_json& j);
DominationResult result_from_json(const nlohmann::ordered_json& j, const std::vector<std::string>& labels,
                                  std::size_t vertex_count);
GroupReport group_report_from_json(const nlohmann::ordered_json& j);
SweepReport sweep_report_from_json(const nlohmann::ordered_json& j);

/// group, order, gamma, gamma_t, ratio and solver bounds, one row per group.
std::string to_csv(const SweepReport& r);

std::string rational_to_string(const Rational& r);
/// "a" or "a/b".
Rational rational_from_string(const std::string& s);

// ---- strong products ----------------------------------------------------------

struct ProductLawReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t factors = 0;
  /// Per law: number of trials where it was checked and counterexamples.
  struct Law {
    std::string name;
    std::size_t checked = 0;
    std::vector<std::string> counterexamples;
  };
  std::vector<Law> laws;
  /// Trials where some factor's proper graph has no total dominating set, and
  /// how often the equality min + 1 still held there.
  std::size_t equality_condition_undefined = 0;
  std::size_t equality_held_when_undefined = 0;
  std::size_t counterexample_count() const;
};

/// Random non-complete factors on 3..max_vertices vertices, each with vertex 0
/// made universal. Checks, against exhaustive search on the factors and (when
/// small enough) on the product:
///   dom-product       Dom of the product is the product of the Dom sets
///   gamma-product     gamma of the product is at most the product of gammas
///   proper-gamma-min  gamma of the proper product is the min over factors
///   proper-gamma-t    gamma_t of the proper product is at most min + 1, with
///                     equality when every factor has gamma_t > gamma
///   complete-factor   gamma of proper(G x K_n) equals gamma of proper(G)
ProductLawReport strong_product_property_tests(std::uint64_t seed, std::size_t trials, std::size_t factors,
                                               std::size_t max_vertices = 7);

nlohmann::ordered_json to_json(const ProductLawReport& r);

}  // namespace commdom
