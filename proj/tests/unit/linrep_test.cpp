#include <gtest/gtest.h>

#include "vbraid/builtins.hpp"
#include "vbraid/io.hpp"

using namespace vbraid;

namespace {

const LaurentPoly t = LaurentPoly::var(Var::t);

void expect_relations(const LinearBraidedObject& obj, int n, bool positive) {
  for (const auto& r : defining_relations(n, positive))
    EXPECT_EQ(rho_word(obj, r.lhs), rho_word(obj, r.rhs)) << obj.name << ": " << r.name;
}

}  // namespace

TEST(Burau, BlockAndInverse) {
  auto b = burau_object();
  EXPECT_EQ(b.sigma.at(1, 0), t);
  EXPECT_EQ(b.sigma.at(1, 1), LaurentPoly(1) - t);
  EXPECT_EQ(b.sigma * *b.sigma_inv, RingMatrix::identity(2));
  EXPECT_EQ(b.sigma.substitute(Var::t, 1), flip_matrix(1, Mode::Sum));
  EXPECT_TRUE(yb_check(b).ok());
}

TEST(Burau, GeneratorMatrices) {
  auto b = burau_object();
  EXPECT_EQ(rho_generator(b, {GenKind::Zeta, 1}, 2), RingMatrix::from_integers({{0, 1}, {1, 0}}));
  EXPECT_EQ(rho_word(b, parse_word("s1 S1", 3)), RingMatrix::identity(3));
  EXPECT_EQ(rho_word(b, parse_word("s1 s2 z1", 3)), rho_word(b, parse_word("z2 s1 s2", 3)));
}

TEST(TwistedBurau, BlockAndSubstitution) {
  auto tb = twisted_burau_object();
  const LaurentPoly u = LaurentPoly::var(Var::u), v = LaurentPoly::var(Var::v);
  EXPECT_EQ(tb.sigma, RingMatrix::from_rows({{0, u}, {v, LaurentPoly(1) - u * v}}));
  EXPECT_EQ(tb.sigma.substitute(Var::u, 1).substitute(Var::v, t), burau_object().sigma);
  EXPECT_TRUE(yb_check(tb).ok());
}

TEST(Relations, AllBuiltinObjects) {
  expect_relations(burau_object(), 3, false);
  expect_relations(twisted_burau_object(), 3, false);
  expect_relations(resolve_object("group-s3"), 3, false);
  expect_relations(resolve_object("uaa-dual-numbers"), 3, true);
  expect_relations(resolve_object("leibniz-solv2"), 3, false);
  expect_relations(resolve_object("dihedral3"), 3, false);
}

TEST(Assoc, DualNumbers) {
  auto obj = assoc_braiding(dual_numbers());
  // x (x) x has index 3 and goes to 0.
  for (std::size_t r = 0; r < 4; ++r) EXPECT_TRUE(obj.sigma.at(r, 3).is_zero());
  StructureConstants one;
  one.dim = 1;
  one.mu = {{{Integer(1)}}};
  one.nu = {1};
  EXPECT_EQ(assoc_braiding(one).sigma, RingMatrix::identity(1));
  auto bad = dual_numbers();
  bad.mu[0][1][1] = 2;
  EXPECT_FALSE(yb_check(assoc_braiding(bad, Check::Skip)).sigma_braid);
  EXPECT_THROW(assoc_braiding(bad), DomainError);
}

TEST(Leibniz, BracketChecks) {
  StructureConstants ab;
  ab.dim = 2;
  ab.bracket = std::vector<std::vector<std::vector<Integer>>>(2, std::vector<std::vector<Integer>>(2, {0, 0}));
  auto flat = leibniz_braiding(ab);
  EXPECT_EQ(flat.sigma, flip_matrix(3, Mode::Tensor));
  StructureConstants bad;
  bad.dim = 1;
  bad.bracket = std::vector<std::vector<std::vector<Integer>>>{{{Integer(1)}}};
  EXPECT_FALSE(leibniz_identity_holds(*bad.bracket, 1));
  EXPECT_THROW(leibniz_braiding(bad), DomainError);
  auto solv = leibniz_braiding(leibniz_solv2());
  EXPECT_EQ(solv.dim, 3);
  EXPECT_TRUE(yb_check(solv).sigma_braid);
}

TEST(Group, HopfBraiding) {
  std::vector<std::vector<int>> z2{{0, 1}, {1, 0}};
  EXPECT_EQ(group_hopf_braiding(z2).sigma, flip_matrix(2, Mode::Tensor));
  auto s3 = s3_table();
  auto obj = group_hopf_braiding(s3);
  auto q = linearize_rack(conjugation_quandle(s3));
  EXPECT_EQ(obj.sigma, q.sigma);
}

TEST(Twist, Laws) {
  auto b = burau_object();
  auto tw = twist(b);
  EXPECT_EQ(tw.sigma, RingMatrix::from_rows({{LaurentPoly(1) - t, t}, {1, 0}}));
  EXPECT_EQ(twist(tw).sigma, b.sigma);
  EXPECT_TRUE(yb_check(tw).ok());
  auto trivial = linearize_rack(trivial_quandle(2));
  EXPECT_EQ(twist(trivial).sigma, trivial.sigma);
}

TEST(Twist, GarsideIntertwiner) {
  for (const auto& obj : {burau_object(), twisted_burau_object(), resolve_object("dihedral3")}) {
    auto tw = twist(obj);
    auto p = garside_intertwiner(obj, 3);
    EXPECT_TRUE(intertwiner_check(obj, tw, p, 3, mirror_map(3))) << obj.name;
  }
}

TEST(Deform, SymmetryAndScaling) {
  auto b = burau_object();
  const LaurentPoly s = LaurentPoly::var(Var::s);
  RingMatrix f = RingMatrix::from_rows({{s}});
  auto d = deform_symmetry(b, f);
  EXPECT_EQ(d.c * d.c, RingMatrix::identity(2));
  EXPECT_NE(d.c, b.c);
  EXPECT_EQ(deform_symmetry(b, RingMatrix::identity(1)).c, b.c);
  auto scaled = scale_off_diagonal(b, t);
  EXPECT_TRUE(yb_check(scaled).sigma_braid);
  EXPECT_EQ(scaled.sigma.at(0, 1), t);
}

TEST(Deform, DeformedObjectsKeepTheirLaws) {
  auto b = burau_object();
  const LaurentPoly s = LaurentPoly::var(Var::s);
  RingMatrix f = RingMatrix::from_rows({{s}});
  auto lhs = deform_symmetry(b, f, 2);
  auto rhs = conjugate_sigma(b, f);
  EXPECT_TRUE(yb_check(lhs).c_involutive);
  EXPECT_TRUE(yb_check(rhs).sigma_braid);
}

TEST(ObjectJson, RoundTrip) {
  auto tb = twisted_burau_object();
  auto back = braided_object_from_json(to_json(tb));
  EXPECT_EQ(back.sigma, tb.sigma);
  EXPECT_EQ(back.c, tb.c);
  EXPECT_EQ(back.mode, tb.mode);
  auto sc = dual_numbers();
  auto sc2 = constants_from_json(to_json(sc));
  EXPECT_EQ(sc2.mu, sc.mu);
  EXPECT_EQ(sc2.nu, sc.nu);
}
