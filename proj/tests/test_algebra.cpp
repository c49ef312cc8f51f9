#include <gtest/gtest.h>

#include <random>

#include "arbor/algebra/json_io.hpp"
#include "arbor/algebra/linalg.hpp"
#include "arbor/error.hpp"
#include "oracles/oracles.hpp"

using namespace arbor;
using namespace arbor::algebra;

namespace {

IntMatrix from_grid(const oracle::Grid& g) { return IntMatrix::from_rows(IntegerRing{}, g); }

oracle::Grid random_grid(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-1, 1);
  oracle::Grid g(n, std::vector<long long>(n));
  for (auto& row : g)
    for (auto& x : row) x = d(rng);
  return g;
}

std::vector<oracle::Big> big_coeffs(const IntPolynomial& p) {
  std::vector<oracle::Big> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_big());
  return out;
}

const oracle::Grid kFig1a{{0, -1, 0, 0, 0}, {0, -1, -1, 0, -1}, {0, 1, 1, 1, 0}, {-1, 0, -1, -1, 0}, {0, 0, 0, -1, 0}};
const oracle::Grid kFig1f{{0, 0, 0, 1, -1}, {1, 0, 0, 0, -1}, {0, 0, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 1, 0, 0, -1}};

oracle::Grid abs_grid(oracle::Grid g) {
  for (auto& row : g)
    for (auto& x : row) x = x < 0 ? -x : x;
  return g;
}

}  // namespace

TEST(Integer, SmallArithmeticAndParse) {
  EXPECT_EQ(Integer(7) * Integer(-6), Integer(-42));
  EXPECT_EQ(Integer::parse("-123").to_string(), "-123");
  EXPECT_EQ(Integer(-7) / Integer(2), Integer(-3));
  EXPECT_EQ(Integer(-7) % Integer(2), Integer(-1));
  EXPECT_EQ(Integer(-7).mod(3), 2u);
  EXPECT_TRUE(Integer(-3).is_odd());
  EXPECT_THROW(Integer::parse("12x"), Error);
  EXPECT_THROW(Integer(1) / Integer(0), Error);
}

TEST(Integer, SpillsPastInt64) {
  const Integer big = Integer(INT64_MAX) + Integer(1);
  EXPECT_FALSE(big.to_int64().has_value());
  EXPECT_EQ(big.to_string(), "9223372036854775808");
  EXPECT_EQ(big - Integer(1), Integer(INT64_MAX));
  EXPECT_TRUE((big - Integer(1)).to_int64().has_value());
  const Integer sq = big * big;
  EXPECT_EQ(sq.to_string(), "85070591730234615865843651857942052864");
  EXPECT_EQ(sq / big, big);
  EXPECT_EQ(-Integer(INT64_MIN), big);
  EXPECT_EQ(Integer::parse("-85070591730234615865843651857942052864"), -sq);
  EXPECT_LT(-sq, Integer(0));
}

TEST(Rational, LowestTermsPositiveDenominator) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.numerator(), Integer(-3));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r + Rational(Integer(3), Integer(2)), Rational(0));
  EXPECT_EQ((r * r).to_string(), "9/4");
  EXPECT_THROW(Rational(Integer(1), Integer(0)), Error);
}

TEST(PrimeField, ResiduesAndInverse) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_int(-1).value, 6u);
  EXPECT_EQ((f.inverse(f.from_int(3)) * f.from_int(3)), f.one());
  EXPECT_THROW(PrimeField(9), Error);
  EXPECT_THROW(f.inverse(f.zero()), Error);
}

TEST(Charpoly, SpecExamples) {
  EXPECT_EQ(charpoly(companion(2)), IntPolynomial::from_ints(IntegerRing{}, {1, 1, 1}));
  EXPECT_EQ(charpoly(from_grid(kFig1a)), IntPolynomial::geometric_sum(IntegerRing{}, 5));
  EXPECT_EQ(charpoly(from_grid(abs_grid(kFig1a))),
            IntPolynomial::from_ints(IntegerRing{}, {1, -3, 1, 1, -3, 1}));
  EXPECT_EQ(charpoly(companion(5)).to_string(), "x^5 + x^4 + x^3 + x^2 + x + 1");
  EXPECT_THROW(charpoly(IntMatrix(IntegerRing{}, 2, 3)), Error);
}

TEST(Charpoly, MatchesInterpolationOracleOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_grid(rng, 2 + trial % 7);
    const auto cp = charpoly(from_grid(g));
    EXPECT_TRUE(cp.is_monic());
    EXPECT_EQ(cp.degree(), static_cast<long>(g.size()));
    EXPECT_EQ(big_coeffs(cp), oracle::interpolated_charpoly(g));
  }
}

TEST(Determinant, MatchesBareissAndCharpoly) {
  EXPECT_EQ(determinant(companion(2)), Integer(1));
  EXPECT_EQ(determinant(IntMatrix::identity(IntegerRing{}, 3)), Integer(1));
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_grid(rng, 1 + trial % 8);
    const auto m = from_grid(g);
    EXPECT_EQ(determinant(m).to_big(), oracle::bareiss_det(g));
    const auto c0 = charpoly(m).coefficient(0);
    EXPECT_EQ(determinant(m), g.size() % 2 == 0 ? c0 : -c0);
  }
}

TEST(Determinant, UnorientedFigure2LeftIsOdd) {
  const oracle::Grid fig2a{{0, 0, 0, 0, 0, 0, -1, -1, -1, -1, 0}, {0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 0},
                           {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},     {0, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0},
                           {0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0},   {0, 0, 0, 0, -1, 0, -1, -1, -1, -1, -1},
                           {0, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0},   {-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                           {1, 0, 1, 0, 1, -1, 0, 0, 0, 0, 0},    {0, 0, 0, -1, -1, 1, 0, 0, 0, 0, 0},
                           {0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0}};
  const auto b = abs_grid(fig2a);
  const Integer d = determinant(from_grid(b));
  EXPECT_TRUE(d.is_odd());
  EXPECT_EQ(d.to_big(), oracle::bareiss_det(b));
}

TEST(Inverse, ExamplesAndProperty) {
  const auto q = to_rational(companion(2));
  EXPECT_EQ(inverse(q), to_rational(from_grid({{-1, -1}, {1, 0}})));
  const auto id = Matrix<RationalField>::identity(RationalField{}, 3);
  EXPECT_EQ(inverse(id), id);
  EXPECT_THROW(inverse(to_rational(from_grid({{1, 1}, {1, 1}}))), Error);
  std::mt19937_64 rng(13);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = to_rational(from_grid(random_grid(rng, 2 + trial % 5)));
    try {
      const auto inv = inverse(m);
      const auto eye = Matrix<RationalField>::identity(RationalField{}, m.rows());
      EXPECT_EQ(inv * m, eye);
      EXPECT_EQ(m * inv, eye);
      ++inverted;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kSingular);
    }
  }
  EXPECT_GT(inverted, 0);
}

// Over ZZ there is no inverse; the call is rejected at compile time.
template <class M>
concept Invertible = requires(const M& m) { inverse(m); };
static_assert(!Invertible<IntMatrix>);
static_assert(Invertible<Matrix<RationalField>>);
static_assert(Invertible<Matrix<PrimeField>>);
static_assert(!Field<IntegerRing>);

TEST(Companion, Shape) {
  const auto c3 = companion(3);
  EXPECT_EQ(c3, from_grid({{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  EXPECT_EQ(companion(2), from_grid({{0, 1}, {-1, -1}}));
  EXPECT_THROW(companion(1), Error);
  for (std::size_t n = 2; n <= 11; ++n) {
    EXPECT_EQ(charpoly(companion(n)), IntPolynomial::geometric_sum(IntegerRing{}, n));
  }
}

TEST(InvariantFactors, Examples) {
  const PrimeField gf2(2);
  const auto cf = invariant_factors(companion(gf2, 2));
  ASSERT_EQ(cf.size(), 1u);
  EXPECT_EQ(cf[0], Polynomial<PrimeField>::from_ints(gf2, {1, 1, 1}));
  const auto idf = invariant_factors(Matrix<PrimeField>::identity(gf2, 2));
  ASSERT_EQ(idf.size(), 2u);
  EXPECT_EQ(idf[0], Polynomial<PrimeField>::from_ints(gf2, {1, 1}));
  EXPECT_EQ(idf[1], idf[0]);
  // The two figure panels differ mod 3 already in their characteristic polynomials.
  EXPECT_NE(invariant_factors(reduce_mod(from_grid(abs_grid(kFig1a)), 3)),
            invariant_factors(reduce_mod(from_grid(abs_grid(kFig1f)), 3)));
  for (std::size_t n = 2; n <= 11; ++n) {
    const auto f = invariant_factors(companion(gf2, n));
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f[0], Polynomial<PrimeField>::geometric_sum(gf2, n));
  }
}

TEST(InvariantFactors, ProductIsCharpolyAndDivisibilityChain) {
  std::mt19937_64 rng(14);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto m = reduce_mod(from_grid(random_grid(rng, 2 + trial % 6)), p);
      const auto f = invariant_factors(m);
      Polynomial<PrimeField> prod = Polynomial<PrimeField>::from_ints(m.ring(), {1});
      for (std::size_t k = 0; k < f.size(); ++k) {
        EXPECT_TRUE(f[k].is_monic());
        if (k > 0) {
          EXPECT_TRUE(divmod(f[k], f[k - 1]).second.is_zero());
        }
        prod = prod * f[k];
      }
      EXPECT_EQ(prod, charpoly(m));
    }
  }
}

TEST(InvariantFactors, CyclicityAgreesWithOracleOverGF2) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = random_grid(rng, 2 + trial % 5);
    const auto f = invariant_factors(reduce_mod(from_grid(g), 2));
    EXPECT_EQ(f.size() == 1, oracle::cyclic_mod2(g));
  }
  // Scalar matrix is never cyclic.
  EXPECT_FALSE(oracle::cyclic_mod2({{1, 0}, {0, 1}}));
}

TEST(ReduceMod, ExamplesAndCommutesWithCharpoly) {
  EXPECT_EQ(reduce_mod(from_grid({{-1, 2}, {3, 0}}), 2),
            Matrix<PrimeField>::from_rows(PrimeField(2), {{1, 0}, {1, 0}}));
  EXPECT_THROW(reduce_mod(companion(2), 4), Error);
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = from_grid(random_grid(rng, 2 + trial % 6));
    for (std::uint64_t p : {2u, 3u}) {
      EXPECT_EQ(charpoly(reduce_mod(m, p)), reduce_mod(charpoly(m), p));
    }
  }
}

TEST(JsonIo, MatrixAndPolynomialRoundTrip) {
  const auto m = from_grid(kFig1a);
  const auto j = to_json(m);
  EXPECT_EQ(j[0][1], "-1");
  EXPECT_EQ(int_matrix_from_json(j), m);
  const auto p = charpoly(from_grid(abs_grid(kFig1a)));
  EXPECT_EQ(int_polynomial_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(reduce_mod(m, 3))["modulus"], "3");
  EXPECT_THROW(int_matrix_from_json(nlohmann::ordered_json::parse(R"([["1","x"]])")), Error);
}
