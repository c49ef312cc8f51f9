#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "arbor/theorems/checks.hpp"
#include "arbor/theorems/prop1.hpp"
#include "arbor/theorems/witness.hpp"

namespace arbor::theorems {

enum class ClaimId {
  kCharpolyOriented,
  kDetOriented,
  kGeometricSum,
  kCharpolyUnorientedMod2,
  kOddCoefficients,
  kZ2Similarity,
  kLemma1,
  kInverseMap,
  kBasisWitness,
  kProp1Case1,
  kProp1Case2,
};
inline constexpr std::size_t kClaimCount = 11;
std::string_view claim_name(ClaimId id);
inline std::string_view claim_name(std::size_t k) { return claim_name(static_cast<ClaimId>(k)); }

struct ClaimResult {
  ClaimStatus status = ClaimStatus::kNotApplicable;
  std::string detail;
};

struct VerifyOptions {
  bool lemma1 = true;
  bool inverse_map = true;
  bool witness = true;          // default witness i = 1, j = 1
  bool all_witnesses = false;   // every vertex i and every j coprime to n+1
  bool rational_check = true;   // conjugation over QQ inside each witness
  bool prop1 = true;
};

struct InstanceReport {
  std::string tree;         // edge list
  std::string tree_code;    // canonical form
  std::string map;          // image list
  std::string orientation;  // bitstring
  dynamics::TransitionMatrices matrices;
  TransitionMatrixCheck matrix_check;
  std::array<ClaimResult, kClaimCount> claims;
  std::optional<BasisWitness> witness;  // the default one
  std::size_t witnesses_checked = 0;
  std::optional<Prop1Derivation> prop1;

  const ClaimResult& claim(ClaimId id) const { return claims[static_cast<std::size_t>(id)]; }
  bool passed() const;
  std::string id() const { return tree_code + "|" + map + "|" + orientation; }
};

// Orientation-independent results for one (tree, map); lets a sweep evaluate
// the unoriented claims once per map instead of once per orientation.
struct UnorientedCache {
  std::optional<IntMatrix> unoriented;
  TransitionMatrixCheck part;
};

InstanceReport verify_instance(const dynamics::VertexMap& f, const tree::Orientation& o,
                               const VerifyOptions& options = {},
                               UnorientedCache* cache = nullptr);

nlohmann::ordered_json to_json(const InstanceReport& r);
nlohmann::ordered_json to_json(const BasisWitness& w);
nlohmann::ordered_json to_json(const Prop1Derivation& d);

}  // namespace arbor::theorems
