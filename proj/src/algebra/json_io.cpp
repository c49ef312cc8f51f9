#include "arbor/algebra/json_io.hpp"

namespace arbor::algebra {

using nlohmann::ordered_json;

namespace {

template <Ring R>
ordered_json rows_json(const Matrix<R>& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (const auto& v : m.row(i)) row.push_back(to_string(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Ring R>
ordered_json coeffs_json(const Polynomial<R>& p) {
  ordered_json c = ordered_json::array();
  for (const auto& v : p.coefficients()) c.push_back(to_string(v));
  return c;
}

const std::string& as_string(const ordered_json& j) {
  if (!j.is_string()) {
    throw Error(ErrorKind::kParse, "expected a decimal string, got " + j.dump());
  }
  return j.get_ref<const std::string&>();
}

}  // namespace

ordered_json to_json(const IntMatrix& m) { return rows_json(m); }
ordered_json to_json(const Matrix<RationalField>& m) { return rows_json(m); }

ordered_json to_json(const Matrix<PrimeField>& m) {
  ordered_json out;
  out["modulus"] = std::to_string(m.ring().modulus());
  out["rows"] = rows_json(m);
  return out;
}

ordered_json to_json(const IntPolynomial& p) { return coeffs_json(p); }

ordered_json to_json(const Polynomial<PrimeField>& p) {
  ordered_json out;
  out["modulus"] = std::to_string(p.ring().modulus());
  out["coefficients"] = coeffs_json(p);
  return out;
}

IntMatrix int_matrix_from_json(const ordered_json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::kParse, "matrix must be a non-empty array");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  IntMatrix m(IntegerRing{}, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) {
      throw Error(ErrorKind::kParse, "matrix row " + std::to_string(i) + " has wrong length");
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = Integer::parse(as_string(j[i][k]));
  }
  return m;
}

IntPolynomial int_polynomial_from_json(const ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorKind::kParse, "polynomial must be an array");
  std::vector<Integer> c;
  for (const auto& v : j) c.push_back(Integer::parse(as_string(v)));
  return IntPolynomial(IntegerRing{}, std::move(c));
}

Matrix<PrimeField> reduce_mod(const IntMatrix& m, std::uint64_t p) {
  const PrimeField field(p);
  return m.map(field, [&](const Integer& v) { return field.from_integer(v); });
}

Polynomial<PrimeField> reduce_mod(const IntPolynomial& f, std::uint64_t p) {
  const PrimeField field(p);
  return f.map(field, [&](const Integer& v) { return field.from_integer(v); });
}

Matrix<RationalField> to_rational(const IntMatrix& m) {
  return m.map(RationalField{}, [](const Integer& v) { return Rational(v); });
}

}  // namespace arbor::algebra
