#include "arbor/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "arbor/algebra/json_io.hpp"
#include "arbor/dynamics/parse.hpp"
#include "arbor/theorems/fixtures.hpp"
#include "arbor/theorems/report.hpp"
#include "arbor/theorems/search.hpp"
#include "arbor/theorems/sweep.hpp"
#include "arbor/tree/canonical.hpp"
#include "arbor/tree/enumerate.hpp"
#include "arbor/tree/parse.hpp"
#include "arbor/tree/prufer.hpp"

#ifndef ARBOR_DEFAULT_FIXTURE_DIR
#define ARBOR_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace arbor::cli {

using nlohmann::ordered_json;

namespace {

void require_range(const NRange& r) {
  if (r.min < 2) throw Error(ErrorKind::kBadDimension, "n must be at least 2");
  tree::require_within_cap(r.max);
}

}  // namespace

CommandResult cmd_analyze(const RunConfig& config) {
  auto t = std::make_shared<const tree::Tree>(tree::parse_tree_spec(config.tree_spec));
  auto image = dynamics::parse_map_spec(config.map_spec, t->vertex_count());
  const auto f = dynamics::make_vertex_map(t, std::move(image));
  const tree::Orientation o = config.orientation ? tree::Orientation::from_bits(*config.orientation)
                                                 : tree::Orientation::canonical(t->edge_count());
  if (o.size() != t->edge_count()) {
    throw Error(ErrorKind::kDimensionMismatch, "orientation has " + std::to_string(o.size()) +
                                                   " bits, tree has " +
                                                   std::to_string(t->edge_count()) + " edges");
  }
  theorems::VerifyOptions options;
  options.all_witnesses = config.all_witnesses;
  const auto report = theorems::verify_instance(f, o, options);

  CommandResult r;
  r.output["command"] = "analyze";
  ordered_json body = theorems::to_json(report);
  if (!config.primes.empty()) {
    ordered_json primes = ordered_json::array();
    const auto& b = report.matrices.unoriented;
    for (std::uint64_t p : config.primes) {
      ordered_json e;
      e["p"] = std::to_string(p);
      e["charpoly_unoriented"] = algebra::to_json(algebra::charpoly(algebra::reduce_mod(b, p)));
      ordered_json factors = ordered_json::array();
      for (const auto& d : algebra::invariant_factors(algebra::reduce_mod(b, p))) {
        factors.push_back(algebra::to_json(d));
      }
      e["invariant_factors"] = factors;
      e["similar_to_companion"] =
          theorems::zp_similarity(b, algebra::companion(b.rows()), p);
      primes.push_back(e);
    }
    body["primes"] = primes;
  }
  r.output.update(body);
  r.exit_code = report.passed() ? kExitPass : kExitClaimFailed;
  return r;
}

CommandResult cmd_enumerate(const RunConfig& config) {
  require_range(config.n_range);
  CommandResult r;
  r.output["command"] = "enumerate";
  ordered_json levels = ordered_json::array();
  for (int n = config.n_range.min; n <= config.n_range.max; ++n) {
    ordered_json lv;
    lv["n"] = std::to_string(n);
    lv["vertices"] = std::to_string(n + 1);
    const auto trees = tree::enumerate_trees(n + 1);
    lv["tree_count"] = std::to_string(trees.size());
    std::uint64_t cycles = 1;
    for (int k = 2; k <= n; ++k) cycles *= static_cast<std::uint64_t>(k);
    lv["cycles_per_tree"] = std::to_string(cycles);
    ordered_json list = ordered_json::array();
    for (const auto& t : trees) {
      ordered_json e;
      e["edges"] = t.to_edge_list();
      std::string code;
      for (auto x : tree::encode_prufer(t)) code += (code.empty() ? "" : ",") + std::to_string(x);
      e["prufer"] = code;
      e["canonical_form"] = tree::canonical_form(t);
      e["is_path"] = t.is_path_graph();
      list.push_back(e);
    }
    lv["trees"] = list;
    levels.push_back(lv);
  }
  r.output["per_n"] = levels;
  return r;
}

CommandResult cmd_verify(const RunConfig& config) {
  require_range(config.n_range);
  theorems::SweepConfig sc;
  sc.n_min = config.n_range.min;
  sc.n_max = config.n_range.max;
  sc.orientations = theorems::parse_orientation_mode(config.orientations);
  sc.seed = config.seed;
  sc.workers = config.workers;
  sc.checks.all_witnesses = config.all_witnesses;
  const auto result = theorems::run_sweep(sc);
  CommandResult r;
  r.output = theorems::to_json(result, config.timing);
  r.exit_code = result.passed() ? kExitPass : kExitClaimFailed;
  return r;
}

CommandResult cmd_reproduce(const RunConfig& config) {
  const std::string dir = config.fixtures.empty() ? ARBOR_DEFAULT_FIXTURE_DIR : config.fixtures;
  std::vector<std::string> ids;
  if (config.figure == "all") {
    ids = theorems::figure_ids();
  } else {
    ids.push_back(config.figure);
  }
  CommandResult r;
  r.output["command"] = "reproduce";
  ordered_json figures = ordered_json::array();
  bool all_pass = true;
  for (const auto& id : ids) {
    const auto fx = theorems::load_figure(dir, id);
    const auto res = theorems::reproduce_figure(fx);
    ordered_json j = theorems::to_json(res);
    if (!res.caption_match) {
      try {
        theorems::require_caption_match(res);
      } catch (const Error& e) {
        j["error"] = error_json(e)["error"];
      }
    }
    all_pass = all_pass && res.passed();
    figures.push_back(j);
  }
  r.output["figures"] = figures;
  r.output["passed"] = all_pass;
  r.exit_code = all_pass ? kExitPass : kExitClaimFailed;
  return r;
}

CommandResult cmd_search_detmf(const RunConfig& config) {
  require_range(config.n_range);
  theorems::DetMfConfig dc;
  dc.n_min = config.n_range.min;
  dc.n_max = config.n_range.max;
  dc.path_only = config.path_only;
  dc.sample_budget = config.sample_budget;
  dc.seed = config.seed;
  dc.workers = config.workers;
  const auto report = theorems::search_det_mf(dc);
  CommandResult r;
  r.output = theorems::to_json(report);
  // The search probes an open question; only an even determinant would
  // contradict a proven statement.
  r.exit_code = report.all_odd ? kExitPass : kExitClaimFailed;
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kWitnessFailed:
    case ErrorKind::kMismatchAgainstCaption:
      return kExitClaimFailed;
    default:
      return kExitUsage;
  }
}

ordered_json error_json(const Error& e) {
  ordered_json j;
  j["error"]["kind"] = std::string(to_string(e.kind()));
  j["error"]["message"] = e.what();
  return j;
}

CommandResult run_command(const RunConfig& config) {
  try {
    if (config.command == "analyze") return cmd_analyze(config);
    if (config.command == "enumerate") return cmd_enumerate(config);
    if (config.command == "verify") return cmd_verify(config);
    if (config.command == "reproduce") return cmd_reproduce(config);
    if (config.command == "search-detmf") return cmd_search_detmf(config);
    throw Error(ErrorKind::kParse, "unknown command '" + config.command + "'");
  } catch (const Error& e) {
    CommandResult r;
    r.exit_code = exit_code_for(e.kind());
    r.output = error_json(e);
    r.output["command"] = config.command;
    return r;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transition matrices of cyclic vertex maps on trees: construction and exact verification"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string n_text, primes_text, orientation_text;

  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "Write JSON here instead of stdout"); };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", cfg.workers, "Worker threads (output does not depend on it)")
        ->check(CLI::PositiveNumber);
  };

  auto* analyze = app.add_subcommand("analyze", "Build and check one instance");
  analyze->add_option("--tree", cfg.tree_spec, "Prufer code \"1,1\" or edge list \"1-2,2-3\"")->required();
  analyze->add_option("--map", cfg.map_spec, "Image list \"2,3,1\" or cycle \"(1 2 3)\"")->required();
  analyze->add_option("--orientation", orientation_text, "Bitstring, character i reverses edge i");
  analyze->add_option("--primes", primes_text, "Extra primes for mod-p invariant factors, e.g. 3,5");
  analyze->add_flag("--all-witnesses", cfg.all_witnesses, "Check every (i, j) basis witness");
  add_out(analyze);

  auto* enumerate = app.add_subcommand("enumerate", "List unlabeled trees");
  enumerate->add_option("--n", n_text, "Edge count or range a..b")->required();
  add_out(enumerate);

  auto* verify = app.add_subcommand("verify", "Sweep all trees and cycles and check every claim");
  verify->add_option("--n", n_text, "Edge count or range a..b")->required();
  verify->add_option("--orientations", cfg.orientations, "all | sample:K");
  verify->add_option("--seed", cfg.seed, "Seed for orientation sampling");
  verify->add_flag("--all-witnesses", cfg.all_witnesses, "Check every (i, j) basis witness");
  verify->add_flag("--timing", cfg.timing, "Include wall-clock seconds in the JSON");
  add_workers(verify);
  add_out(verify);

  auto* reproduce = app.add_subcommand("reproduce", "Check the printed figure matrices");
  reproduce->add_option("--figure", cfg.figure, "1a..1f, 2a, 2b, 3a, 3b, 4 or all");
  reproduce->add_option("--fixtures", cfg.fixtures, "Fixture directory");
  add_out(reproduce);

  auto* search = app.add_subcommand("search-detmf", "Tabulate |det Mf| over instances");
  search->add_option("--n", n_text, "Edge count or range a..b")->required();
  search->add_flag("--path-only", cfg.path_only, "Only the interval tree");
  search->add_option("--sample-budget", cfg.sample_budget, "Max (tree, map) instances per n");
  search->add_option("--seed", cfg.seed, "Seed for sampling");
  add_workers(search);
  add_out(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  CommandResult result;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (!n_text.empty()) cfg.n_range = parse_n_range(n_text);
    if (!primes_text.empty()) cfg.primes = parse_primes(primes_text);
    if (!orientation_text.empty()) cfg.orientation = orientation_text;
    result = run_command(cfg);
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.kind());
    result.output = error_json(e);
    result.output["command"] = cfg.command;
  }
  if (result.output.contains("error")) err << result.output["error"]["message"].get<std::string>() << "\n";
  if (cfg.command == "verify" || cfg.command == "search-detmf") {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << cfg.command << ": " << secs << " s wall clock\n";
  }

  const std::string text = result.output.dump(2) + "\n";
  if (cfg.out) {
    std::ofstream file(*cfg.out);
    if (!file) {
      err << "cannot write " << *cfg.out << "\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return result.exit_code;
}

}  // namespace arbor::cli
