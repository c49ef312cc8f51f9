#include "arbor/theorems/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <memory>

#include "arbor/dynamics/sampling.hpp"
#include "arbor/error.hpp"
#include "arbor/tree/enumerate.hpp"

namespace arbor::theorems {

using nlohmann::ordered_json;

std::string OrientationMode::to_string() const {
  return all ? "all" : "sample:" + std::to_string(sample);
}

OrientationMode parse_orientation_mode(std::string_view text) {
  if (text == "all") return {true, 0};
  constexpr std::string_view prefix = "sample:";
  if (text.starts_with(prefix)) {
    std::uint64_t k = 0;
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    const auto res = std::from_chars(first, last, k);
    if (res.ec == std::errc() && res.ptr == last && first != last) return {false, k};
    throw Error(ErrorKind::kParse, "orientations: expected a count at column " +
                                       std::to_string(prefix.size() + 1));
  }
  throw Error(ErrorKind::kParse, "orientations: expected 'all' or 'sample:K' at column 1");
}

namespace {

struct Partial {
  std::vector<SweepSummary> per_n;
  std::vector<SweepFailure> failures;
  std::uint64_t failure_count = 0;
};

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min) {
    throw Error(ErrorKind::kBadDimension, "n range must satisfy 2 <= min <= max");
  }
  tree::require_within_cap(config.n_max);
  const auto start = std::chrono::steady_clock::now();

  struct Level {
    int n;
    std::vector<std::shared_ptr<const tree::Tree>> trees;
    std::vector<std::vector<tree::Vertex>> cycles;
    std::vector<tree::Orientation> all;
  };
  struct Item {
    std::size_t level, tree, cycle;
  };
  std::vector<Level> levels;
  std::vector<Item> items;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    Level lv{n, {}, dynamics::enumerate_cycles(n + 1), {}};
    for (auto& t : tree::enumerate_trees(n + 1)) lv.trees.push_back(std::make_shared<const tree::Tree>(std::move(t)));
    if (config.orientations.all) lv.all = dynamics::all_orientations(n);
    for (std::size_t t = 0; t < lv.trees.size(); ++t) {
      for (std::size_t c = 0; c < lv.cycles.size(); ++c) items.push_back({levels.size(), t, c});
    }
    levels.push_back(std::move(lv));
  }

  const int workers = std::max(config.workers, 1);
  std::vector<Partial> partials(static_cast<std::size_t>(workers));
  for (auto& p : partials) {
    for (const auto& lv : levels) p.per_n.push_back(SweepSummary{lv.n});
  }

  parallel_for(items.size(), workers, [&](std::size_t k, std::size_t worker) {
    const Item& item = items[k];
    const Level& lv = levels[item.level];
    Partial& out = partials[worker];
    SweepSummary& sum = out.per_n[item.level];
    const auto f = dynamics::make_vertex_map(lv.trees[item.tree], lv.cycles[item.cycle]);
    std::vector<tree::Orientation> sampled;
    if (!config.orientations.all) {
      auto rng = dynamics::keyed_rng(config.seed, {static_cast<std::uint64_t>(lv.n), item.tree, item.cycle});
      sampled = dynamics::sample_orientations(lv.n, config.orientations.sample, rng);
    }
    const auto& orientations = config.orientations.all ? lv.all : sampled;
    UnorientedCache cache;
    for (const auto& o : orientations) {
      const InstanceReport r = verify_instance(f, o, config.checks, &cache);
      ++sum.instances;
      for (std::size_t c = 0; c < kClaimCount; ++c) {
        switch (r.claims[c].status) {
          case ClaimStatus::kPass: ++sum.claims[c].pass; break;
          case ClaimStatus::kNotApplicable: ++sum.claims[c].not_applicable; break;
          case ClaimStatus::kFail:
            ++sum.claims[c].fail;
            ++out.failure_count;
            out.failures.push_back({r.id(), std::string(claim_name(c)), r.claims[c].detail});
            // The global first kMaxFailures lie within each worker's own first
            // kMaxFailures, so trimming here keeps the output exact.
            if (out.failures.size() > 2 * kMaxFailures) {
              std::sort(out.failures.begin(), out.failures.end());
              out.failures.resize(kMaxFailures);
            }
            break;
        }
      }
    }
  });

  SweepResult result;
  result.config = config;
  for (const auto& lv : levels) {
    SweepSummary s{lv.n};
    s.trees = lv.trees.size();
    s.cycles = lv.cycles.size();
    result.per_n.push_back(s);
  }
  for (auto& p : partials) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      auto& dst = result.per_n[l];
      dst.instances += p.per_n[l].instances;
      for (std::size_t c = 0; c < kClaimCount; ++c) {
        dst.claims[c].pass += p.per_n[l].claims[c].pass;
        dst.claims[c].fail += p.per_n[l].claims[c].fail;
        dst.claims[c].not_applicable += p.per_n[l].claims[c].not_applicable;
      }
    }
    result.failure_count += p.failure_count;
    result.failures.insert(result.failures.end(), std::make_move_iterator(p.failures.begin()),
                           std::make_move_iterator(p.failures.end()));
  }
  std::sort(result.failures.begin(), result.failures.end());
  if (result.failures.size() > kMaxFailures) result.failures.resize(kMaxFailures);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ordered_json to_json(const SweepResult& r, bool include_timing) {
  ordered_json j;
  j["command"] = "verify";
  ordered_json cfg;
  cfg["n_min"] = std::to_string(r.config.n_min);
  cfg["n_max"] = std::to_string(r.config.n_max);
  cfg["orientations"] = r.config.orientations.to_string();
  cfg["seed"] = std::to_string(r.config.seed);
  cfg["all_witnesses"] = r.config.checks.all_witnesses;
  j["config"] = cfg;
  ordered_json levels = ordered_json::array();
  for (const auto& s : r.per_n) {
    ordered_json l;
    l["n"] = std::to_string(s.n);
    l["trees"] = std::to_string(s.trees);
    l["cycles"] = std::to_string(s.cycles);
    l["instances"] = std::to_string(s.instances);
    ordered_json claims;
    for (std::size_t c = 0; c < kClaimCount; ++c) {
      ordered_json t;
      t["pass"] = std::to_string(s.claims[c].pass);
      t["fail"] = std::to_string(s.claims[c].fail);
      t["not_applicable"] = std::to_string(s.claims[c].not_applicable);
      claims[std::string(claim_name(c))] = t;
    }
    l["claims"] = claims;
    levels.push_back(l);
  }
  j["per_n"] = levels;
  j["failure_count"] = std::to_string(r.failure_count);
  ordered_json fails = ordered_json::array();
  for (const auto& f : r.failures) {
    fails.push_back({{"instance", f.id}, {"claim", f.claim}, {"detail", f.detail}});
  }
  j["failures"] = fails;
  j["passed"] = r.passed();
  if (include_timing) j["seconds"] = std::to_string(r.seconds);
  return j;
}

}  // namespace arbor::theorems
