#include "arbor/theorems/fixtures.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "arbor/algebra/json_io.hpp"
#include "arbor/dynamics/transition.hpp"
#include "arbor/error.hpp"
#include "arbor/theorems/witness.hpp"

namespace arbor::theorems {

using algebra::Integer;
using algebra::IntegerRing;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::kParse, "fixture line " + std::to_string(line) + ": " + msg);
}

std::vector<long long> read_numbers(std::istringstream& in, std::size_t line) {
  std::vector<long long> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(line, "'" + tok + "' is not an integer");
    }
  }
  return out;
}

}  // namespace

Fixture parse_fixture(const std::string& text) {
  Fixture fx;
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  bool have_oriented = false, have_caption = false;
  std::size_t k = 0;
  auto next_content = [&](std::size_t& idx) -> bool {
    while (idx < lines.size()) {
      const auto hash = lines[idx].find('#');
      const std::string body = lines[idx].substr(0, hash);
      if (body.find_first_not_of(" \t\r") != std::string::npos) return true;
      ++idx;
    }
    return false;
  };
  auto read_matrix = [&](std::size_t& idx) {
    if (fx.n <= 0) fail(idx + 1, "matrix before 'n'");
    std::vector<std::vector<long long>> rows;
    for (int r = 0; r < fx.n; ++r) {
      ++idx;
      if (!next_content(idx)) fail(idx, "expected " + std::to_string(fx.n) + " matrix rows");
      std::istringstream in(lines[idx].substr(0, lines[idx].find('#')));
      rows.push_back(read_numbers(in, idx + 1));
      if (static_cast<int>(rows.back().size()) != fx.n) {
        fail(idx + 1, "expected " + std::to_string(fx.n) + " entries, got " + std::to_string(rows.back().size()));
      }
    }
    return IntMatrix::from_rows(IntegerRing{}, rows);
  };
  auto read_poly = [&](std::istringstream& in, std::size_t idx) {
    const auto c = read_numbers(in, idx + 1);
    if (static_cast<int>(c.size()) != fx.n + 1) {
      fail(idx + 1, "expected " + std::to_string(fx.n + 1) + " coefficients");
    }
    return IntPolynomial::from_ints(IntegerRing{}, c);
  };

  while (next_content(k)) {
    std::istringstream in(lines[k].substr(0, lines[k].find('#')));
    std::string key;
    in >> key;
    if (key == "figure") {
      in >> fx.figure;
    } else if (key == "n") {
      const auto v = read_numbers(in, k + 1);
      if (v.size() != 1 || v[0] < 2) fail(k + 1, "n must be a single integer >= 2");
      fx.n = static_cast<int>(v[0]);
    } else if (key == "edge_order") {
      std::string rest;
      std::getline(in, rest);
      fx.edge_order = rest.substr(rest.find_first_not_of(' ') == std::string::npos ? 0 : rest.find_first_not_of(' '));
    } else if (key == "oriented") {
      fx.oriented = read_matrix(k);
      have_oriented = true;
    } else if (key == "multiplier") {
      fx.multiplier = read_matrix(k);
    } else if (key == "unoriented") {
      fx.unoriented = read_matrix(k);
    } else if (key == "unoriented_charpoly") {
      fx.unoriented_charpoly = read_poly(in, k);
      have_caption = true;
    } else if (key == "mf_charpoly") {
      fx.mf_charpoly = read_poly(in, k);
    } else {
      fail(k + 1, "unknown directive '" + key + "'");
    }
    ++k;
  }
  if (fx.figure.empty()) fail(lines.size(), "missing 'figure'");
  if (!have_oriented) fail(lines.size(), "missing 'oriented' matrix");
  if (!have_caption) fail(lines.size(), "missing 'unoriented_charpoly'");
  return fx;
}

Fixture load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kFixtureMissing, "cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"1a", "1b", "1c", "1d", "1e", "1f",
                                            "2a", "2b", "3a", "3b", "4"};
  return ids;
}

Fixture load_figure(const std::filesystem::path& dir, const std::string& figure) {
  return load_fixture(dir / ("figure_" + figure + ".txt"));
}

bool FigureResult::passed() const {
  if (!check.all_pass() || !caption_match) return false;
  if (product_identity && !*product_identity) return false;
  if (unoriented_is_abs && !*unoriented_is_abs) return false;
  if (mf && (!mf->realized || mf->matching.empty())) return false;
  return true;
}

FigureResult reproduce_figure(const Fixture& fx) {
  FigureResult r;
  r.figure = fx.figure;
  r.check = check_transition_matrix(fx.oriented);
  r.expected_unoriented = fx.unoriented_charpoly;
  r.caption_match = r.check.charpoly_unoriented == fx.unoriented_charpoly;
  if (fx.unoriented) r.unoriented_is_abs = *fx.unoriented == absolute_value(fx.oriented);
  if (fx.multiplier) {
    const IntMatrix b = fx.unoriented ? *fx.unoriented : absolute_value(fx.oriented);
    r.product_identity = *fx.multiplier * b == fx.oriented;
  }
  if (fx.mf_charpoly) {
    MfCheck mc;
    mc.realization = realize_oriented_matrix(fx.oriented);
    mc.realized = mc.realization.has_value();
    if (mc.realized) {
      const auto f = dynamics::make_vertex_map(mc.realization->tree, mc.realization->image);
      const int np1 = fx.n + 1;
      for (int i = 1; i <= np1; ++i) {
        for (int j = 1; j < np1; ++j) {
          if (std::gcd(j, np1) != 1) continue;
          const auto mf = basis_matrix(f, mc.realization->orientation, fx.oriented, i, j);
          if (algebra::charpoly(mf) == *fx.mf_charpoly) mc.matching.emplace_back(i, j);
        }
      }
    }
    r.mf = std::move(mc);
  }
  return r;
}

void require_caption_match(const FigureResult& r) {
  if (!r.caption_match) {
    throw Error(ErrorKind::kMismatchAgainstCaption,
                "figure " + r.figure + ": computed " + r.check.charpoly_unoriented.to_string() +
                    ", caption " + r.expected_unoriented.to_string());
  }
}

ordered_json to_json(const FigureResult& r) {
  ordered_json j;
  j["figure"] = r.figure;
  j["n"] = std::to_string(r.check.charpoly_oriented.degree());
  j["charpoly_oriented"] = algebra::to_json(r.check.charpoly_oriented);
  j["charpoly_oriented_text"] = r.check.charpoly_oriented.to_string();
  j["det_oriented"] = r.check.det_oriented.to_string();
  j["charpoly_unoriented"] = algebra::to_json(r.check.charpoly_unoriented);
  j["charpoly_unoriented_text"] = r.check.charpoly_unoriented.to_string();
  j["caption_charpoly"] = algebra::to_json(r.expected_unoriented);
  j["caption_match"] = r.caption_match;
  j["det_unoriented"] = r.check.det_unoriented.to_string();
  ordered_json checks;
  checks["charpoly_oriented"] = r.check.charpoly_is_geometric;
  checks["det_oriented"] = r.check.det_is_sign;
  checks["geometric_sum"] = r.check.geometric_sum;
  checks["charpoly_unoriented_mod2"] = r.check.unoriented_mod2_is_geometric;
  checks["odd_coefficients"] = r.check.odd_coefficients;
  checks["z2_similarity"] = r.check.z2_similar_to_companion;
  j["checks"] = checks;
  if (r.product_identity) j["product_identity"] = *r.product_identity;
  if (r.unoriented_is_abs) j["unoriented_is_abs"] = *r.unoriented_is_abs;
  if (r.mf) {
    ordered_json m;
    m["realized"] = r.mf->realized;
    if (r.mf->realization) {
      m["tree"] = r.mf->realization->tree->to_edge_list();
      std::string image;
      for (auto x : r.mf->realization->image) image += (image.empty() ? "" : ",") + std::to_string(x);
      m["map"] = image;
      m["orientation"] = r.mf->realization->orientation.bits();
    }
    ordered_json pairs = ordered_json::array();
    for (auto [i, jj] : r.mf->matching) pairs.push_back({{"i", std::to_string(i)}, {"j", std::to_string(jj)}});
    m["matching"] = pairs;
    j["mf_check"] = m;
  }
  j["passed"] = r.passed();
  return j;
}

}  // namespace arbor::theorems
