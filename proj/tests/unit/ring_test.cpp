#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "vbraid/io.hpp"
#include "vbraid/snf.hpp"

using namespace vbraid;

namespace {

const LaurentPoly t = LaurentPoly::var(Var::t);

RingMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  RingMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, LaurentPoly(static_cast<long>(d(rng))));
  return m;
}

std::vector<Integer> nonzero(const std::vector<Integer>& v) {
  std::vector<Integer> out;
  for (const auto& x : v)
    if (x != 0) out.push_back(x);
  return out;
}

}  // namespace

TEST(Laurent, UnitCancellation) {
  EXPECT_EQ(t * LaurentPoly::var(Var::t, -1), LaurentPoly(1));
  EXPECT_EQ((LaurentPoly(1) - t) + t, LaurentPoly(1));
  EXPECT_EQ(t * (LaurentPoly(1) - t), t - t * t);
}

TEST(Laurent, NoZeroTermsStored) {
  LaurentPoly p = t + LaurentPoly(3);
  p -= t;
  EXPECT_EQ(p.terms().size(), 1u);
  p -= LaurentPoly(3);
  EXPECT_TRUE(p.is_zero());
}

TEST(Laurent, UnitsAreSignedMonomials) {
  const LaurentPoly s = LaurentPoly::var(Var::s);
  EXPECT_TRUE((-(t * s.pow(-2))).is_unit());
  EXPECT_EQ((t * s).unit_inverse() * t * s, LaurentPoly(1));
  EXPECT_FALSE((LaurentPoly(1) - t).is_unit());
  EXPECT_FALSE(LaurentPoly(2).is_unit());
}

TEST(Laurent, ParsePrintRoundTrip) {
  const LaurentPoly s = LaurentPoly::var(Var::s), u = LaurentPoly::var(Var::u), v = LaurentPoly::var(Var::v);
  const std::vector<LaurentPoly> cases = {LaurentPoly(0),        LaurentPoly(-7),      LaurentPoly(1) - t,
                                          t.pow(-3) * s * 2,     u * v - v.pow(2) + 5, -(t * s * u * v).pow(-1)};
  for (const auto& p : cases) EXPECT_EQ(parse_laurent(p.to_string()), p) << p.to_string();
}

TEST(Laurent, JsonRoundTripKeepsBigCoefficients) {
  Integer big("123456789012345678901234567890");
  LaurentPoly p = LaurentPoly::monomial(big, {1, -2, 0, 3}) + t;
  Json j = to_json(p);
  EXPECT_EQ(laurent_from_json(j), p);
  EXPECT_EQ(laurent_from_json(Json(4)), LaurentPoly(4));
  EXPECT_EQ(laurent_from_json(Json("1 - t")), LaurentPoly(1) - t);
}

TEST(Matrix, BurauBlockSquared) {
  RingMatrix b = RingMatrix::from_rows({{0, 1}, {t, LaurentPoly(1) - t}});
  RingMatrix expect = RingMatrix::from_rows({{t, LaurentPoly(1) - t}, {t - t * t, LaurentPoly(1) - t + t * t}});
  EXPECT_EQ(b * b, expect);
  EXPECT_EQ(RingMatrix::identity(2) * b, b);
  EXPECT_TRUE((RingMatrix::zero(2, 2) * b).is_zero());
}

TEST(Matrix, KroneckerLayout) {
  const RingMatrix flip = RingMatrix::from_integers({{0, 1}, {1, 0}});
  EXPECT_EQ(kron(RingMatrix::identity(2), RingMatrix::identity(2)), RingMatrix::identity(4));
  EXPECT_EQ(kron(flip, RingMatrix::identity(1)), flip);
  // e0 (x) e1 has index 1 and goes to e0 (x) e0.
  RingMatrix k = kron(RingMatrix::identity(2), flip);
  EXPECT_EQ(k.at(0, 1), LaurentPoly(1));
  // Left factor indexes slowest.
  RingMatrix a = RingMatrix::from_integers({{1, 2}, {3, 4}});
  RingMatrix ka = kron(a, RingMatrix::identity(2));
  EXPECT_EQ(ka.at(2, 0), LaurentPoly(3));
  EXPECT_EQ(ka.at(0, 2), LaurentPoly(2));
}

TEST(Matrix, InverseOverLaurentRing) {
  RingMatrix b = RingMatrix::from_rows({{0, 1}, {t, LaurentPoly(1) - t}});
  EXPECT_EQ(b * inverse(b), RingMatrix::identity(2));
  EXPECT_TRUE(determinant(b).is_unit());
  EXPECT_THROW(inverse(RingMatrix::from_integers({{2, 0}, {0, 1}})), DomainError);
}

TEST(Matrix, JsonRoundTrip) {
  RingMatrix b = RingMatrix::from_rows({{0, 1}, {t, LaurentPoly(1) - t}});
  Json j = to_json(b);
  EXPECT_EQ(j.at("rows"), 2);
  EXPECT_EQ(j.at("entries").size(), 3u);
  EXPECT_EQ(matrix_from_json(j), b);
  EXPECT_EQ(matrix_from_json(Json::parse("[[1,0],[0,1]]")), RingMatrix::identity(2));
}

TEST(Snf, SmallExamples) {
  auto d = smith_normal_form(RingMatrix::from_integers({{2, 0}, {0, 3}}));
  EXPECT_EQ(d.diagonal, (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(RingMatrix::zero(3, 2)).rank, 0u);
  auto id = smith_normal_form(RingMatrix::identity(4));
  EXPECT_EQ(id.rank, 4u);
  for (const auto& x : id.diagonal) EXPECT_EQ(x, 1);
}

TEST(Snf, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    RingMatrix m = random_int_matrix(rng, dim(rng), dim(rng), 6);
    auto lib = nonzero(smith_normal_form(m).diagonal);
    EXPECT_EQ(lib, oracle::determinantal_factors(oracle::dense(m))) << m.to_string();
  }
}

TEST(Snf, MatchesBezoutEliminationOnLargerMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(3, 12);
    RingMatrix m = random_int_matrix(rng, dim(rng), dim(rng), 3);
    EXPECT_EQ(nonzero(smith_normal_form(m).diagonal), oracle::invariant_factors(oracle::dense(m)));
  }
}

TEST(Snf, InvariantUnderUnimodularChanges) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    RingMatrix m = random_int_matrix(rng, 4, 5, 5);
    RingMatrix u = RingMatrix::identity(4), v = RingMatrix::identity(5);
    std::uniform_int_distribution<int> pick4(0, 3), pick5(0, 4), k(-3, 3);
    for (int step = 0; step < 8; ++step) {
      int a = pick4(rng), b = pick4(rng);
      if (a != b) u = (RingMatrix::identity(4) + [&] {
                        RingMatrix e(4, 4);
                        e.set(a, b, LaurentPoly(static_cast<long>(k(rng))));
                        return e;
                      }()) * u;
      int c = pick5(rng), d = pick5(rng);
      if (c != d) v = v * (RingMatrix::identity(5) + [&] {
                        RingMatrix e(5, 5);
                        e.set(c, d, LaurentPoly(static_cast<long>(k(rng))));
                        return e;
                      }());
    }
    EXPECT_EQ(smith_normal_form(u * m * v).diagonal, smith_normal_form(m).diagonal);
  }
}

TEST(Snf, LeftTransformDiagonalizes) {
  std::mt19937_64 rng(3);
  RingMatrix m = random_int_matrix(rng, 5, 4, 4);
  auto s = smith_with_transform(m);
  RingMatrix u = from_int_matrix(s.left, 5), uinv = from_int_matrix(s.left_inverse, 5);
  EXPECT_EQ(u * uinv, RingMatrix::identity(5));
  // Rows of U m beyond the rank vanish.
  RingMatrix um = u * m;
  for (std::size_t i = s.form.rank; i < 5; ++i) EXPECT_TRUE(um.row(i).empty());
}

TEST(Snf, RejectsPolynomialEntries) {
  EXPECT_THROW(smith_normal_form(RingMatrix::from_rows({{t}})), DomainError);
}
