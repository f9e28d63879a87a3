// commdom command-line tool. Exit codes: 0 ok, 1 usage or input error,
// 2 a theorem check failed, 3 a result is not exact and --require-exact was set.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commdom/cache.hpp"
#include "commdom/commuting.hpp"
#include "commdom/error.hpp"
#include "commdom/families.hpp"
#include "commdom/formulas.hpp"
#include "commdom/io.hpp"
#include "commdom/verify.hpp"

using namespace commdom;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 1, kVerifyFail = 2, kNotExact = 3;

struct Config {
  std::string cache_dir;
  double budget = kDefaultBudgetSeconds;
  std::size_t workers = 1;
  bool require_exact = false;
};

// Flags win over environment variables, which win over defaults.
void apply_env(Config& c, const CLI::App& app, bool budget_flag) {
  if (app.count("--cache-dir") == 0)
    if (const char* v = std::getenv("COMMDOM_CACHE_DIR")) c.cache_dir = v;
  if (!budget_flag)
    if (const char* v = std::getenv("COMMDOM_BUDGET")) c.budget = std::stod(v);
  if (app.count("--workers") == 0)
    if (const char* v = std::getenv("COMMDOM_WORKERS")) c.workers = std::stoul(v);
}

struct Input {
  std::optional<GroupTable> group;
  std::optional<SimpleGraph> graph;  // a graph file given directly
  std::string key;                   // cache identity
};

std::string file_text(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// A group descriptor, family plus parameters, a group file or a graph file.
/// With by_family the tokens are never read as a file name.
Input resolve(const std::vector<std::string>& tokens, bool by_family = false) {
  if (tokens.empty()) throw CLI::ValidationError("a group or graph is required");
  Input in;
  if (!by_family && tokens.size() == 1 && std::filesystem::is_regular_file(tokens[0])) {
    const json j = read_json_file(tokens[0]);
    in.key = "file:" + fnv1a_hex(file_text(tokens[0]));
    if (j.contains("edges")) in.graph = graph_from_json(j);
    else in.group = group_from_json(j);
    return in;
  }
  in.group = make_group(tokens);
  in.key = in.group->descriptor();
  return in;
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) std::cout << j.dump(2) << '\n';
  else write_json_file(j, out);
}

std::string join_labels(const DominationResult& r, const std::vector<std::string>& labels) {
  std::string s;
  if (r.witness) r.witness->for_each([&](std::size_t v) { s += (s.empty() ? "" : " ") + labels[v]; });
  return s;
}

DominationResult cached_solve(const Input& in, const SimpleGraph& g, bool total, const Config& cfg) {
  ResultCache cache(cfg.cache_dir);
  const CacheKey key{in.key, total ? "gamma_t" : "gamma", cfg.budget};
  if (auto hit = cache.get(key)) {
    try {
      return result_from_json(*hit, {}, g.vertex_count());
    } catch (const std::exception&) {
      // fall through and overwrite the bad entry
    }
  }
  const SolverOptions so{cfg.budget};
  DominationResult r = total ? exact_total_domination_number(g, so) : exact_domination_number(g, so);
  cache.put(key, to_json(r, {}, true));
  return r;
}

int cmd_make(const std::vector<std::string>& tokens, const std::string& out) {
  const GroupTable g = make_group(tokens);
  emit(group_to_json(g), out);
  return 0;
}

int cmd_invariants(const std::vector<std::string>& tokens, bool as_json, const Config& cfg) {
  const Input in = resolve(tokens);
  if (!in.group) throw CLI::ValidationError("invariants needs a group");
  ResultCache cache(cfg.cache_dir);
  const CacheKey key{in.key, "invariants", 0};
  std::optional<json> j = cache.get(key);
  if (!j) {
    j = invariants_to_json(compute_invariants(*in.group));
    cache.put(key, *j);
  }
  if (as_json) {
    json full;
    full["group"] = in.group->descriptor();
    for (const auto& [k, v] : j->items()) full[k] = v;
    std::cout << full.dump(2) << '\n';
    return 0;
  }
  std::cout << "group        " << in.group->descriptor() << '\n';
  for (const auto& [k, v] : j->items()) {
    if (k == "center") continue;
    std::cout << std::left << std::setw(13) << k << v.dump() << '\n';
  }
  return 0;
}

int cmd_graph(const std::vector<std::string>& tokens, const std::string& kind, const std::string& out) {
  const Input in = resolve(tokens);
  if (!in.group) throw CLI::ValidationError("graph needs a group");
  SimpleGraph g;
  if (kind == "commuting") g = commuting_graph(*in.group);
  else if (kind == "proper-commuting") g = proper_commuting_graph(*in.group).graph;
  else if (kind == "epg") g = enhanced_power_graph(*in.group);
  else g = proper_enhanced_power_graph(*in.group).graph;
  emit(graph_to_json(g), out);
  return 0;
}

int cmd_gamma(const std::vector<std::string>& tokens, bool by_family, bool total, bool as_json, const Config& cfg) {
  const Input in = resolve(tokens, by_family);
  SimpleGraph g;
  std::string what;
  if (in.graph) {
    g = *in.graph;
    what = "graph";
  } else {
    const ProperGraph pg = proper_commuting_graph(*in.group);
    if (pg.degenerate) throw PreconditionError(in.group->descriptor() + " is abelian; its proper commuting graph is empty");
    g = pg.graph;
    what = in.group->descriptor();
  }
  const DominationResult r = cached_solve(in, g, total, cfg);
  if (as_json) {
    json j;
    j["input"] = what;
    j["vertices"] = g.vertex_count();
    const json body = to_json(r, g.labels(), true);
    for (const auto& [k, v] : body.items()) j[k] = v;
    std::cout << j.dump(2) << '\n';
  } else {
    const char* name = total ? "gamma_t" : "gamma";
    if (!r.value) {
      std::cout << name << " = none (isolated vertex)\n";
    } else {
      std::cout << name << " = " << *r.value << (r.exact() ? "" : " (upper bound only)") << '\n'
                << "witness: " << join_labels(r, g.labels()) << '\n'
                << "bounds: [" << r.lower_bound << ", " << r.upper_bound << "]\n";
    }
    std::cout << "nodes: " << r.node_count << '\n'
              << "time: " << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms\n";
  }
  return cfg.require_exact && !r.exact() ? kNotExact : 0;
}

void print_prediction(const FormulaPrediction& p) {
  if (p.applicable && p.value) std::cout << p.theorem_id << " = " << rational_to_string(*p.value) << '\n';
  else std::cout << p.theorem_id << ": " << (p.applicable ? to_string(p.kind) : "not applicable") << " (" << p.reason << ")\n";
}

std::vector<std::size_t> integer_params(const std::vector<std::string>& tokens) {
  std::vector<std::size_t> v;
  for (const auto& t : tokens) {
    std::size_t used = 0;
    v.push_back(std::stoul(t, &used));
    if (used != t.size()) throw std::invalid_argument(t);
  }
  return v;
}

int cmd_suzuki(std::size_t n, bool as_json, bool summands) {
  const auto g = suzuki_gamma(n), gt = suzuki_gamma_t(n);
  if (as_json) {
    json j;
    j["n"] = n;
    j["q"] = suzuki_params(n).q.str();
    j["gamma"] = rational_to_string(*g.value);
    j["gamma_t"] = rational_to_string(*gt.value);
    if (summands) {
      j["summands"] = json::array();
      for (const auto& s : suzuki_summands(n)) j["summands"].push_back(s.str());
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (summands) {
    std::cout << "q = " << suzuki_params(n).q << "\nsummands:";
    for (const auto& s : suzuki_summands(n)) std::cout << ' ' << s;
    std::cout << '\n';
  }
  std::cout << rational_to_string(*g.value) << " / " << rational_to_string(*gt.value) << '\n';
  return 0;
}

int cmd_formula(const std::string& id, const std::vector<std::string>& params, bool as_json, const Config& cfg) {
  if (id == "list") {
    for (const auto& f : formula_ids()) std::cout << f << '\n';
    return 0;
  }
  if (id == "suzuki") return cmd_suzuki(integer_params(params).at(0), as_json, false);
  std::optional<FormulaPrediction> p;
  try {
    p = evaluate_formula(id, integer_params(params));
  } catch (const std::invalid_argument&) {
  } catch (const PreconditionError& e) {
    if (std::string(e.what()).find("not evaluable") == std::string::npos) throw;
  }
  if (!p) {
    // Group-level formula: the parameters name a group.
    const Input in = resolve(params);
    if (!in.group) throw CLI::ValidationError(id + " needs a group");
    for (auto& f : predictions_for(*in.group, SolverOptions{cfg.budget}))
      if (f.theorem_id == id) p = f;
    if (!p) {
      p = FormulaPrediction{};
      p->theorem_id = id;
      p->reason = "does not apply to " + in.group->descriptor();
    }
  }
  if (as_json) std::cout << to_json(*p).dump(2) << '\n';
  else print_prediction(*p);
  return 0;
}

void print_summary(const SweepReport& rep) {
  const auto& s = rep.summary;
  std::cout << "groups " << s.groups << ": pass " << s.pass << ", fail " << s.fail << ", skipped " << s.skipped
            << ", bounds_only " << s.bounds_only << '\n';
  for (const auto& g : rep.groups)
    for (const auto& c : g.checks)
      if (c.status == CheckStatus::fail)
        std::cout << "FAIL " << c.theorem_id << " on " << g.descriptor << ": predicted " << c.predicted
                  << ", computed " << c.computed << '\n';
  if (s.max_ratio) {
    std::cout << "max gamma/|G| = " << rational_to_string(*s.max_ratio) << " at";
    for (const auto& d : s.max_ratio_groups) std::cout << ' ' << d;
    std::cout << '\n';
  }
  std::cout << "spectrum hits k/(2k-1): " << s.spectrum_hits.size() << " (consistent, not proved)\n";
}

int finish_sweep(const SweepReport& rep, const std::string& json_out, const std::string& csv_out, const Config& cfg,
                 const std::vector<ProductLawReport>& laws = {}) {
  if (!json_out.empty()) {
    json j = to_json(rep);
    if (!laws.empty()) {
      j["product_laws"] = json::array();
      for (const auto& l : laws) j["product_laws"].push_back(to_json(l));
    }
    write_json_file(j, json_out);
  }
  if (!csv_out.empty()) {
    std::ofstream out(csv_out);
    if (!out) throw FormatError("cannot write " + csv_out);
    out << to_csv(rep);
  }
  print_summary(rep);
  bool fail = rep.summary.fail > 0;
  for (const auto& l : laws) {
    std::cout << "product laws, " << l.factors << " factors: " << l.counterexample_count()
              << " counterexamples over " << l.trials << " trials\n";
    fail = fail || l.counterexample_count() > 0;
  }
  if (fail) return kVerifyFail;
  return cfg.require_exact && rep.summary.bounds_only > 0 ? kNotExact : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting graphs of finite groups: domination numbers and closed-form checks"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--cache-dir", cfg.cache_dir, "result cache directory (env COMMDOM_CACHE_DIR)");
  app.add_option("--budget", cfg.budget, "solver budget in seconds per computation (env COMMDOM_BUDGET)")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "worker threads for sweeps (env COMMDOM_WORKERS)")->check(CLI::PositiveNumber);
  app.add_flag("--require-exact", cfg.require_exact, "exit 3 when a budget cut leaves a result inexact");

  std::vector<std::string> tokens;
  std::string out, kind = "proper-commuting", corpus_path, json_out, csv_out, formula_id;
  bool as_json = false, total = false, by_family = false;
  std::uint64_t seed = 1;
  std::size_t max_order = 200, suzuki_n = 1;

  auto* make = app.add_subcommand("make", "emit a group file");
  make->add_option("family_and_params", tokens, "family name then integer parameters, or a descriptor")->required();
  make->add_option("--out", out, "output file (default stdout)");

  auto* inv = app.add_subcommand("invariants", "print group invariants");
  inv->add_option("group", tokens, "descriptor, family and parameters, or group file")->required();
  inv->add_flag("--json", as_json);

  auto* graph = app.add_subcommand("graph", "export a graph of a group");
  graph->add_option("group", tokens)->required();
  graph->add_option("--kind", kind)->check(CLI::IsMember({"commuting", "proper-commuting", "epg", "proper-epg"}));
  graph->add_option("--out", out);

  auto* gamma = app.add_subcommand("gamma", "domination number of a proper commuting graph or a graph file");
  gamma->add_option("group", tokens)->required();
  gamma->add_flag("--family", by_family, "read the arguments as a family name and its parameters");
  gamma->add_flag("--total", total, "total domination number");
  gamma->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
  gamma->add_flag("--json", as_json);

  auto* formula = app.add_subcommand("formula", "evaluate a formula ('formula list' shows ids)");
  formula->add_option("theorem_id", formula_id)->required();
  formula->add_option("params", tokens, "integer parameters or a group");
  formula->add_flag("--json", as_json);

  auto* suzuki = app.add_subcommand("suzuki-formula", "gamma and gamma_t for Sz(2^(2n+1)) with the summands");
  suzuki->add_option("n", suzuki_n)->required()->check(CLI::PositiveNumber);
  suzuki->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "run every theorem check over a corpus and the product laws");
  verify->add_option("--corpus", corpus_path, "corpus manifest (default: built-in corpus)");
  verify->add_option("--json", json_out, "write the report here");
  verify->add_option("--csv", csv_out, "write the per-group CSV here");
  verify->add_option("--seed", seed, "seed for the random product-law trials");

  auto* sweep = app.add_subcommand("sweep", "theorem checks over the built-in corpus up to an order");
  sweep->add_option("--max-order", max_order)->check(CLI::PositiveNumber);
  sweep->add_option("--json", json_out);
  sweep->add_option("--csv", csv_out);
  std::string corpus_out;
  sweep->add_option("--write-corpus", corpus_out, "write the corpus manifest instead of running it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  apply_env(cfg, app, app.count("--budget") + gamma->count("--budget") > 0);

  try {
    if (*make) return cmd_make(tokens, out);
    if (*inv) return cmd_invariants(tokens, as_json, cfg);
    if (*graph) return cmd_graph(tokens, kind, out);
    if (*gamma) return cmd_gamma(tokens, by_family, total, as_json, cfg);
    if (*formula) return cmd_formula(formula_id, tokens, as_json, cfg);
    if (*suzuki) return cmd_suzuki(suzuki_n, as_json, true);
    if (*verify) {
      const Corpus c = corpus_path.empty() ? default_corpus() : load_corpus(corpus_path);
      const SweepReport rep = run_family_sweep(c, SweepOptions{cfg.budget, cfg.workers});
      const std::vector<ProductLawReport> laws{strong_product_property_tests(seed, 200, 2),
                                               strong_product_property_tests(seed + 1, 50, 3)};
      return finish_sweep(rep, json_out, csv_out, cfg, laws);
    }
    if (*sweep) {
      if (!corpus_out.empty()) {
        write_json_file(corpus_to_json(default_corpus(max_order)), corpus_out);
        return 0;
      }
      const SweepReport rep = run_family_sweep(default_corpus(max_order), SweepOptions{cfg.budget, cfg.workers});
      return finish_sweep(rep, json_out, csv_out, cfg);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
