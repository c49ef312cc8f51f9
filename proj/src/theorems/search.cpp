#include "arbor/theorems/search.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <tuple>

#include "arbor/dynamics/sampling.hpp"
#include "arbor/dynamics/transition.hpp"
#include "arbor/error.hpp"
#include "arbor/theorems/sweep.hpp"
#include "arbor/theorems/witness.hpp"
#include "arbor/tree/enumerate.hpp"

namespace arbor::theorems {

using algebra::Integer;
using nlohmann::ordered_json;

bool operator<(const DetMfWitness& a, const DetMfWitness& b) {
  return std::tie(a.n, a.tree, a.map, a.i, a.j) < std::tie(b.n, b.tree, b.map, b.i, b.j);
}

namespace {

struct Partial {
  std::vector<DetMfLevel> levels;
  std::vector<DetMfWitness> non_unit;
  std::uint64_t non_unit_count = 0;
  bool all_odd = true;
};

}  // namespace

DetMfReport search_det_mf(const DetMfConfig& config) {
  if (config.n_min < 2 || config.n_max < config.n_min) {
    throw Error(ErrorKind::kBadDimension, "n range must satisfy 2 <= min <= max");
  }
  tree::require_within_cap(config.n_max);

  struct Level {
    int n;
    std::vector<std::shared_ptr<const tree::Tree>> trees;
    std::vector<std::vector<tree::Vertex>> cycles;
  };
  struct Item {
    std::size_t level, tree, cycle;
  };
  std::vector<Level> levels;
  std::vector<Item> items;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    Level lv{n, {}, dynamics::enumerate_cycles(n + 1)};
    if (config.path_only) {
      lv.trees.push_back(std::make_shared<const tree::Tree>(tree::interval_tree(n)));
    } else {
      for (auto& t : tree::enumerate_trees(n + 1)) lv.trees.push_back(std::make_shared<const tree::Tree>(std::move(t)));
    }
    const std::uint64_t total = lv.trees.size() * lv.cycles.size();
    std::vector<std::uint64_t> chosen(total);
    std::iota(chosen.begin(), chosen.end(), 0);
    if (config.sample_budget && *config.sample_budget < total) {
      auto rng = dynamics::keyed_rng(config.seed, {static_cast<std::uint64_t>(n)});
      std::vector<std::uint64_t> pick;
      std::sample(chosen.begin(), chosen.end(), std::back_inserter(pick), *config.sample_budget, rng);
      chosen = std::move(pick);
    }
    for (std::uint64_t k : chosen) {
      items.push_back({levels.size(), k / lv.cycles.size(), k % lv.cycles.size()});
    }
    levels.push_back(std::move(lv));
  }

  const int workers = std::max(config.workers, 1);
  std::vector<Partial> partials(static_cast<std::size_t>(workers));
  for (auto& p : partials) {
    for (const auto& lv : levels) p.levels.push_back(DetMfLevel{lv.n, 0, 0, {}});
  }
  parallel_for(items.size(), workers, [&](std::size_t k, std::size_t worker) {
    const Item& item = items[k];
    const Level& lv = levels[item.level];
    Partial& out = partials[worker];
    DetMfLevel& level = out.levels[item.level];
    const auto f = dynamics::make_vertex_map(lv.trees[item.tree], lv.cycles[item.cycle]);
    const auto o = tree::Orientation::canonical(lv.n);
    const auto a = dynamics::oriented_matrix(f, o).oriented;
    ++level.instances;
    const int np1 = lv.n + 1;
    for (int i = 1; i <= np1; ++i) {
      for (int j = 1; j < np1; ++j) {
        if (std::gcd(j, np1) != 1) continue;
        const Integer d = algebra::abs(algebra::determinant(basis_matrix(f, o, a, i, j)));
        ++level.pairs;
        ++level.histogram[d];
        if (!d.is_odd()) out.all_odd = false;
        if (d != Integer(1)) {
          ++out.non_unit_count;
          out.non_unit.push_back({f.tree().to_edge_list(), f.to_string(), o.bits(), lv.n, i, j, d});
          if (out.non_unit.size() > 2 * kMaxDetMfWitnesses) {
            std::sort(out.non_unit.begin(), out.non_unit.end());
            out.non_unit.resize(kMaxDetMfWitnesses);
          }
        }
      }
    }
  });

  DetMfReport r;
  r.config = config;
  for (const auto& lv : levels) r.levels.push_back(DetMfLevel{lv.n, 0, 0, {}});
  for (auto& p : partials) {
    for (std::size_t l = 0; l < levels.size(); ++l) {
      r.levels[l].instances += p.levels[l].instances;
      r.levels[l].pairs += p.levels[l].pairs;
      for (const auto& [d, c] : p.levels[l].histogram) r.levels[l].histogram[d] += c;
    }
    r.non_unit_count += p.non_unit_count;
    r.all_odd = r.all_odd && p.all_odd;
    r.non_unit.insert(r.non_unit.end(), p.non_unit.begin(), p.non_unit.end());
  }
  std::sort(r.non_unit.begin(), r.non_unit.end());
  if (r.non_unit.size() > kMaxDetMfWitnesses) r.non_unit.resize(kMaxDetMfWitnesses);
  return r;
}

ordered_json to_json(const DetMfReport& r) {
  ordered_json j;
  j["command"] = "search-detmf";
  ordered_json cfg;
  cfg["n_min"] = std::to_string(r.config.n_min);
  cfg["n_max"] = std::to_string(r.config.n_max);
  cfg["path_only"] = r.config.path_only;
  cfg["sample_budget"] = r.config.sample_budget ? ordered_json(std::to_string(*r.config.sample_budget))
                                                : ordered_json(nullptr);
  cfg["seed"] = std::to_string(r.config.seed);
  j["config"] = cfg;
  ordered_json levels = ordered_json::array();
  for (const auto& lv : r.levels) {
    ordered_json l;
    l["n"] = std::to_string(lv.n);
    l["instances"] = std::to_string(lv.instances);
    l["pairs"] = std::to_string(lv.pairs);
    ordered_json h = ordered_json::array();
    for (const auto& [d, c] : lv.histogram) h.push_back({{"abs_det", d.to_string()}, {"count", std::to_string(c)}});
    l["histogram"] = h;
    levels.push_back(l);
  }
  j["per_n"] = levels;
  j["all_odd"] = r.all_odd;
  j["non_unit_count"] = std::to_string(r.non_unit_count);
  ordered_json w = ordered_json::array();
  for (const auto& x : r.non_unit) {
    w.push_back({{"n", std::to_string(x.n)},
                 {"tree", x.tree},
                 {"map", x.map},
                 {"orientation", x.orientation},
                 {"i", std::to_string(x.i)},
                 {"j", std::to_string(x.j)},
                 {"abs_det", x.det.to_string()}});
  }
  j["non_unit"] = w;
  return j;
}

DetMfReport detmf_report_from_json(const ordered_json& j) {
  auto num = [](const ordered_json& v) { return Integer::parse(v.get<std::string>()); };
  auto small = [&](const ordered_json& v) { return static_cast<int>(num(v).to_int64().value()); };
  auto count = [&](const ordered_json& v) { return static_cast<std::uint64_t>(num(v).to_int64().value()); };
  try {
    DetMfReport r;
    const auto& cfg = j.at("config");
    r.config.n_min = small(cfg.at("n_min"));
    r.config.n_max = small(cfg.at("n_max"));
    r.config.path_only = cfg.at("path_only").get<bool>();
    if (!cfg.at("sample_budget").is_null()) r.config.sample_budget = count(cfg.at("sample_budget"));
    r.config.seed = std::stoull(cfg.at("seed").get<std::string>());
    for (const auto& l : j.at("per_n")) {
      DetMfLevel lv;
      lv.n = small(l.at("n"));
      lv.instances = count(l.at("instances"));
      lv.pairs = count(l.at("pairs"));
      for (const auto& h : l.at("histogram")) lv.histogram[num(h.at("abs_det"))] = count(h.at("count"));
      r.levels.push_back(std::move(lv));
    }
    r.all_odd = j.at("all_odd").get<bool>();
    r.non_unit_count = count(j.at("non_unit_count"));
    for (const auto& x : j.at("non_unit")) {
      r.non_unit.push_back({x.at("tree").get<std::string>(), x.at("map").get<std::string>(),
                            x.at("orientation").get<std::string>(), small(x.at("n")), small(x.at("i")),
                            small(x.at("j")), num(x.at("abs_det"))});
    }
    return r;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorKind::kParse, std::string("det(Mf) report: ") + e.what());
  }
}

}  // namespace arbor::theorems
