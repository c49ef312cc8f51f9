#pragma once

#include <json.hpp>

#include "arbor/algebra/linalg.hpp"

namespace arbor::algebra {

// Wire formats: matrices are arrays of rows of decimal strings; polynomials
// are coefficient arrays, constant term first. Residue-valued objects also
// carry their modulus.
nlohmann::ordered_json to_json(const IntMatrix& m);
nlohmann::ordered_json to_json(const Matrix<RationalField>& m);
nlohmann::ordered_json to_json(const Matrix<PrimeField>& m);
nlohmann::ordered_json to_json(const IntPolynomial& p);
nlohmann::ordered_json to_json(const Polynomial<PrimeField>& p);

// Inverse of to_json for integer matrices; throws Error(kParse).
IntMatrix int_matrix_from_json(const nlohmann::ordered_json& j);
IntPolynomial int_polynomial_from_json(const nlohmann::ordered_json& j);

}  // namespace arbor::algebra
