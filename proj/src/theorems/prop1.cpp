#include "arbor/theorems/prop1.hpp"

#include "arbor/error.hpp"

namespace arbor::theorems {

using algebra::Integer;
using algebra::IntegerRing;
using tree::PathStep;
using tree::Vertex;

std::string to_string(const RowOp& op) {
  if (op.kind == RowOp::Kind::kNegate) return "negate row " + std::to_string(op.row + 1);
  return "row " + std::to_string(op.row + 1) + " += " + std::to_string(op.factor) + " * row " +
         std::to_string(op.source + 1);
}

IntMatrix apply_row_ops(const IntMatrix& m, const std::vector<RowOp>& ops) {
  IntMatrix out = m;
  for (const RowOp& op : ops) {
    const auto r = static_cast<std::size_t>(op.row);
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (op.kind == RowOp::Kind::kNegate) {
        out(r, c) = -out(r, c);
      } else {
        out(r, c) += Integer(op.factor) * out(static_cast<std::size_t>(op.source), c);
      }
    }
  }
  return out;
}

namespace {

// Common sign of a one-signed row; 0 for a zero row or a mixed row.
int row_sign(const IntMatrix& a, std::size_t i, bool* mixed) {
  int sign = 0;
  *mixed = false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const int s = a(i, c).sign();
    if (s == 0) continue;
    if (sign != 0 && s != sign) {
      *mixed = true;
      return 0;
    }
    sign = s;
  }
  return sign;
}

Integer det_of(const IntMatrix& b) { return algebra::determinant(b); }

}  // namespace

ClaimStatus prop1_case1_status(const dynamics::TransitionMatrices& m, std::string* detail) {
  const IntMatrix& a = m.oriented;
  std::vector<RowOp> ops;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool mixed = false;
    const int s = row_sign(a, i, &mixed);
    if (mixed) {
      if (detail) *detail = "row " + std::to_string(i + 1) + " has both signs";
      return ClaimStatus::kNotApplicable;
    }
    if (s < 0) ops.push_back({RowOp::Kind::kNegate, static_cast<int>(i), 0, 0});
  }
  if (apply_row_ops(m.unoriented, ops) != a) {
    if (detail) *detail = "row negations do not carry B to A";
    return ClaimStatus::kFail;
  }
  const Integer d = algebra::abs(det_of(m.unoriented));
  if (d != Integer(1)) {
    if (detail) *detail = "|det B| = " + d.to_string();
    return ClaimStatus::kFail;
  }
  return ClaimStatus::kPass;
}

bool prop1_case1_check(const dynamics::VertexMap& f, const tree::Orientation& o) {
  const auto m = dynamics::oriented_matrix(f, o);
  std::string detail;
  const ClaimStatus s = prop1_case1_status(m, &detail);
  if (s == ClaimStatus::kFail) throw Error(ErrorKind::kWitnessFailed, detail);
  return s == ClaimStatus::kPass;
}

Prop1Derivation prop1_case2_check(const dynamics::VertexMap& f, const tree::Orientation& o,
                                  const dynamics::TransitionMatrices& m) {
  const tree::Tree& t = f.tree();
  const IntMatrix& a = m.oriented;
  const std::size_t n = a.rows();
  Prop1Derivation d;
  d.multiplier = IntMatrix(IntegerRing{}, n, n);

  std::vector<int> sign(n, 0);
  std::vector<bool> mixed(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    bool mx = false;
    sign[i] = row_sign(a, i, &mx);
    mixed[i] = mx;
  }
  auto not_applicable = [&](std::string why) {
    d.status = ClaimStatus::kNotApplicable;
    d.reason = std::move(why);
    d.ops.clear();
    return d;
  };

  // Inverse permutation to find the preimage of a turning vertex.
  std::vector<Vertex> pre(f.image().size() + 1, 0);
  for (std::size_t k = 0; k < f.image().size(); ++k) {
    pre[static_cast<std::size_t>(f.image()[k])] = static_cast<Vertex>(k) + 1;
  }

  std::vector<std::vector<int>> coef(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (!mixed[i]) {
      coef[i][i] = sign[i] == 0 ? 1 : sign[i];
      continue;
    }
    const auto [tail, head] = o.oriented_edge(t, static_cast<int>(i));
    const std::vector<PathStep> steps = tree::signed_path_steps(t, o, f(tail), f(head));
    std::size_t change = 0;
    for (std::size_t k = 1; k < steps.size(); ++k) {
      if (steps[k].sign == steps[k - 1].sign) continue;
      if (change != 0) return not_applicable("row " + std::to_string(i + 1) + " changes sign twice");
      change = k;
    }
    const int s = steps.front().sign;
    // Turning vertex: where step change-1 ends and step change begins.
    const std::vector<Vertex> walk = t.path_vertices(f(tail), f(head));
    const Vertex turn = walk[change];
    const Vertex hat = pre[static_cast<std::size_t>(turn)];

    // The shortest path from the far endpoint of E_i to hat crosses E_i
    // first. If that far endpoint is the tail, use A_i = s B_i - 2 Phi[h, hat];
    // otherwise A_i = -s B_i + 2 Phi[t, hat].
    const std::vector<PathStep> from_head = tree::signed_path_steps(t, o, head, hat);
    const bool via_head = from_head.empty() || from_head.front().edge != static_cast<int>(i);
    const std::vector<PathStep> tail_side =
        via_head ? from_head : tree::signed_path_steps(t, o, tail, hat);
    const int outer = via_head ? -2 : 2;
    coef[i][i] = via_head ? s : -s;
    for (const PathStep& e : tail_side) {
      const auto q = static_cast<std::size_t>(e.edge);
      if (mixed[q]) {
        return not_applicable("row " + std::to_string(q + 1) + ", needed for row " +
                              std::to_string(i + 1) + ", is not one-signed");
      }
      coef[i][q] += outer * e.sign * sign[q];
    }
  }

  // Mixed rows are rebuilt from untouched one-signed rows, then those rows
  // are negated where needed.
  for (std::size_t i = 0; i < n; ++i) {
    if (mixed[i] && coef[i][i] < 0) d.ops.push_back({RowOp::Kind::kNegate, static_cast<int>(i), 0, 0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!mixed[i]) continue;
    for (std::size_t q = 0; q < n; ++q) {
      if (q != i && coef[i][q] != 0) {
        d.ops.push_back({RowOp::Kind::kAddMultiple, static_cast<int>(i), static_cast<int>(q), coef[i][q]});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!mixed[i] && coef[i][i] < 0) d.ops.push_back({RowOp::Kind::kNegate, static_cast<int>(i), 0, 0});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < n; ++q) d.multiplier(i, q) = coef[i][q];
  }

  d.det_unoriented = det_of(m.unoriented);
  if (apply_row_ops(m.unoriented, d.ops) != a || d.multiplier * m.unoriented != a) {
    d.status = ClaimStatus::kFail;
    d.reason = "derived row operations do not reproduce the oriented matrix";
  } else if (algebra::abs(d.det_unoriented) != Integer(1)) {
    d.status = ClaimStatus::kFail;
    d.reason = "|det B| = " + algebra::abs(d.det_unoriented).to_string();
  } else {
    d.status = ClaimStatus::kPass;
  }
  return d;
}

Prop1Derivation prop1_case2_check(const dynamics::VertexMap& f, const tree::Orientation& o) {
  return prop1_case2_check(f, o, dynamics::oriented_matrix(f, o));
}

}  // namespace arbor::theorems
