#pragma once

#include <string>
#include <vector>

#include "arbor/dynamics/transition.hpp"
#include "arbor/theorems/checks.hpp"

namespace arbor::theorems {

struct RowOp {
  enum class Kind { kNegate, kAddMultiple };
  Kind kind = Kind::kNegate;
  int row = 0;     // destination, 0-based
  int source = 0;  // kAddMultiple only
  int factor = 0;  // kAddMultiple only: row += factor * source
};

std::string to_string(const RowOp& op);
// Applies ops in order to a copy of m.
IntMatrix apply_row_ops(const IntMatrix& m, const std::vector<RowOp>& ops);

struct Prop1Derivation {
  ClaimStatus status = ClaimStatus::kNotApplicable;
  std::string reason;       // why not applicable, or what failed
  std::vector<RowOp> ops;   // turns the unoriented matrix into the oriented one
  IntMatrix multiplier;     // L with L * B == A, entries in {0, +-1, +-2}
  algebra::Integer det_unoriented;
};

// Every row of the oriented matrix is one-signed; when so, also confirms that
// row negations alone carry B to A and |det B| = 1, throwing kWitnessFailed
// otherwise.
bool prop1_case1_check(const dynamics::VertexMap& f, const tree::Orientation& o);

// Builds the row-operation derivation for instances with at most one sign
// change per row whose auxiliary rows are one-signed. Not applicable
// otherwise; fail only if a derivation that should exist does not reproduce A.
Prop1Derivation prop1_case2_check(const dynamics::VertexMap& f, const tree::Orientation& o);
Prop1Derivation prop1_case2_check(const dynamics::VertexMap& f, const tree::Orientation& o,
                                  const dynamics::TransitionMatrices& m);

// Status form of the first part for reports: pass when one-signed and the
// negation check holds, not applicable when some row is mixed.
ClaimStatus prop1_case1_status(const dynamics::TransitionMatrices& m, std::string* detail);

}  // namespace arbor::theorems
