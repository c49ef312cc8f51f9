#include "arbor/theorems/report.hpp"

#include <numeric>

#include "arbor/algebra/json_io.hpp"
#include "arbor/tree/canonical.hpp"

namespace arbor::theorems {

using algebra::Integer;
using nlohmann::ordered_json;

std::string_view claim_name(ClaimId id) {
  switch (id) {
    case ClaimId::kCharpolyOriented: return "charpoly_oriented";
    case ClaimId::kDetOriented: return "det_oriented";
    case ClaimId::kGeometricSum: return "geometric_sum";
    case ClaimId::kCharpolyUnorientedMod2: return "charpoly_unoriented_mod2";
    case ClaimId::kOddCoefficients: return "odd_coefficients";
    case ClaimId::kZ2Similarity: return "z2_similarity";
    case ClaimId::kLemma1: return "lemma1";
    case ClaimId::kInverseMap: return "inverse_map";
    case ClaimId::kBasisWitness: return "basis_witness";
    case ClaimId::kProp1Case1: return "prop1_case1";
    case ClaimId::kProp1Case2: return "prop1_case2";
  }
  return "?";
}

bool InstanceReport::passed() const {
  for (const auto& c : claims) {
    if (c.status == ClaimStatus::kFail) return false;
  }
  return true;
}

namespace {

ClaimResult verdict(bool ok, std::string detail_on_fail = {}) {
  return ok ? ClaimResult{ClaimStatus::kPass, {}} : ClaimResult{ClaimStatus::kFail, std::move(detail_on_fail)};
}

}  // namespace

InstanceReport verify_instance(const dynamics::VertexMap& f, const tree::Orientation& o,
                               const VerifyOptions& options, UnorientedCache* cache) {
  InstanceReport r;
  r.tree = f.tree().to_edge_list();
  r.tree_code = tree::canonical_form(f.tree());
  r.map = f.to_string();
  r.orientation = o.bits();
  r.matrices = dynamics::oriented_matrix(f, o);
  const IntMatrix& a = r.matrices.oriented;
  const std::size_t n = a.rows();

  check_oriented_part(a, r.matrix_check);
  if (cache != nullptr && cache->unoriented && *cache->unoriented == r.matrices.unoriented) {
    const auto& p = cache->part;
    r.matrix_check.charpoly_unoriented = p.charpoly_unoriented;
    r.matrix_check.det_unoriented = p.det_unoriented;
    r.matrix_check.charpoly_unoriented_mod2 = p.charpoly_unoriented_mod2;
    r.matrix_check.z2_invariant_factors = p.z2_invariant_factors;
    r.matrix_check.unoriented_mod2_is_geometric = p.unoriented_mod2_is_geometric;
    r.matrix_check.odd_coefficients = p.odd_coefficients;
    r.matrix_check.z2_similar_to_companion = p.z2_similar_to_companion;
  } else {
    check_unoriented_part(r.matrices.unoriented, r.matrix_check);
    if (cache != nullptr) {
      cache->unoriented = r.matrices.unoriented;
      cache->part = r.matrix_check;
    }
  }

  const auto& mc = r.matrix_check;
  auto set = [&](ClaimId id, ClaimResult c) { r.claims[static_cast<std::size_t>(id)] = std::move(c); };
  set(ClaimId::kCharpolyOriented,
      verdict(mc.charpoly_is_geometric, "charpoly(A) = " + mc.charpoly_oriented.to_string()));
  set(ClaimId::kDetOriented, verdict(mc.det_is_sign, "det(A) = " + mc.det_oriented.to_string()));
  set(ClaimId::kGeometricSum, verdict(mc.geometric_sum, "I + A + ... + A^n != 0"));
  set(ClaimId::kCharpolyUnorientedMod2,
      verdict(mc.unoriented_mod2_is_geometric,
              "charpoly(B) mod 2 = " + mc.charpoly_unoriented_mod2.to_string()));
  set(ClaimId::kOddCoefficients,
      verdict(mc.odd_coefficients, "charpoly(B) = " + mc.charpoly_unoriented.to_string()));
  set(ClaimId::kZ2Similarity, verdict(mc.z2_similar_to_companion, "B mod 2 is not cyclic"));

  if (options.lemma1) {
    set(ClaimId::kLemma1, verdict(dynamics::lemma1_oracle(f, o, a), "Phi([u,v]) != [f(u),f(v)]"));
  }
  if (options.inverse_map) {
    const auto inv = dynamics::oriented_matrix(dynamics::inverse_map(f), o).oriented;
    set(ClaimId::kInverseMap, verdict(a * inv == IntMatrix::identity(algebra::IntegerRing{}, n),
                                      "A(f) * A(f^-1) != I"));
  }
  if (options.witness || options.all_witnesses) {
    const int np1 = static_cast<int>(n) + 1;
    ClaimResult wc{ClaimStatus::kPass, {}};
    auto run = [&](int i, int j) {
      BasisWitness w = compute_basis_witness(f, o, a, i, j, options.rational_check);
      ++r.witnesses_checked;
      if (!w.valid() && wc.status == ClaimStatus::kPass) {
        wc = {ClaimStatus::kFail,
              "i = " + std::to_string(i) + ", j = " + std::to_string(j) + ": " + w.violation()};
      }
      if (i == 1 && j == 1) r.witness = std::move(w);
    };
    run(1, 1);
    if (options.all_witnesses) {
      for (int i = 1; i <= np1; ++i) {
        for (int j = 1; j < np1; ++j) {
          if ((i != 1 || j != 1) && std::gcd(j, np1) == 1) run(i, j);
        }
      }
    }
    set(ClaimId::kBasisWitness, std::move(wc));
  }
  if (options.prop1) {
    ClaimResult c1;
    c1.status = prop1_case1_status(r.matrices, &c1.detail);
    if (c1.status == ClaimStatus::kPass) c1.detail.clear();
    set(ClaimId::kProp1Case1, std::move(c1));
    r.prop1 = prop1_case2_check(f, o, r.matrices);
    set(ClaimId::kProp1Case2, {r.prop1->status, r.prop1->reason});
  }
  return r;
}

ordered_json to_json(const BasisWitness& w) {
  ordered_json j;
  j["i"] = std::to_string(w.i);
  j["j"] = std::to_string(w.j);
  ordered_json jv = ordered_json::array();
  for (const auto& c : w.J.coords()) jv.push_back(c.to_string());
  j["J"] = jv;
  j["Mf"] = algebra::to_json(w.mf);
  j["det_Mf"] = w.det_mf.to_string();
  j["det_odd"] = w.det_odd;
  j["intertwines"] = w.intertwines;
  if (w.rational_checked) j["rational_conjugation"] = w.rational_conjugation;
  return j;
}

ordered_json to_json(const Prop1Derivation& d) {
  ordered_json j;
  j["status"] = std::string(to_string(d.status));
  if (!d.reason.empty()) j["reason"] = d.reason;
  if (d.status != ClaimStatus::kNotApplicable) {
    ordered_json ops = ordered_json::array();
    for (const RowOp& op : d.ops) {
      ordered_json o;
      o["op"] = op.kind == RowOp::Kind::kNegate ? "negate" : "add_multiple";
      o["row"] = std::to_string(op.row + 1);
      if (op.kind == RowOp::Kind::kAddMultiple) {
        o["source"] = std::to_string(op.source + 1);
        o["factor"] = std::to_string(op.factor);
      }
      ops.push_back(o);
    }
    j["ops"] = ops;
    j["multiplier"] = algebra::to_json(d.multiplier);
    j["det_unoriented"] = d.det_unoriented.to_string();
  }
  return j;
}

ordered_json to_json(const InstanceReport& r) {
  ordered_json j;
  j["tree"] = r.tree;
  j["tree_code"] = r.tree_code;
  j["map"] = r.map;
  j["orientation"] = r.orientation;
  j["n"] = std::to_string(r.matrices.oriented.rows());
  j["oriented"] = algebra::to_json(r.matrices.oriented);
  j["unoriented"] = algebra::to_json(r.matrices.unoriented);
  const auto& mc = r.matrix_check;
  j["charpoly_oriented"] = algebra::to_json(mc.charpoly_oriented);
  j["charpoly_oriented_text"] = mc.charpoly_oriented.to_string();
  j["charpoly_unoriented"] = algebra::to_json(mc.charpoly_unoriented);
  j["charpoly_unoriented_text"] = mc.charpoly_unoriented.to_string();
  j["charpoly_unoriented_mod2"] = algebra::to_json(mc.charpoly_unoriented_mod2);
  ordered_json factors = ordered_json::array();
  for (const auto& p : mc.z2_invariant_factors) factors.push_back(algebra::to_json(p));
  j["z2_invariant_factors"] = factors;
  j["det_oriented"] = mc.det_oriented.to_string();
  j["det_unoriented"] = mc.det_unoriented.to_string();
  ordered_json claims;
  for (std::size_t k = 0; k < kClaimCount; ++k) {
    ordered_json c;
    c["status"] = std::string(to_string(r.claims[k].status));
    if (!r.claims[k].detail.empty() && r.claims[k].status != ClaimStatus::kPass) {
      c["detail"] = r.claims[k].detail;
    }
    claims[std::string(claim_name(k))] = c;
  }
  j["claims"] = claims;
  if (r.witness) j["witness"] = to_json(*r.witness);
  j["witnesses_checked"] = std::to_string(r.witnesses_checked);
  if (r.prop1) j["prop1"] = to_json(*r.prop1);
  j["passed"] = r.passed();
  return j;
}

}  // namespace arbor::theorems
