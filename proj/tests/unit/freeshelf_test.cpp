#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "vbraid/freeshelf.hpp"

using namespace vbraid;

namespace {

// Minimal independent term type: leaves carry a subscript.
struct Node {
  int sub = 0;
  std::shared_ptr<Node> l, r;
};
using P = std::shared_ptr<Node>;

P leaf(int s) { return std::make_shared<Node>(Node{s, nullptr, nullptr}); }
P mul(P a, P b) { return std::make_shared<Node>(Node{0, std::move(a), std::move(b)}); }

std::string show(const P& t) {
  if (!t->l) return t->sub == 0 ? "x" : "x" + std::to_string(t->sub);
  return "(" + show(t->l) + "*" + show(t->r) + ")";
}

// All single expansions (a*b)*c -> (a*c)*(b*c).
void expansions(const P& t, std::vector<P>& out) {
  if (!t->l) return;
  if (t->l->l) out.push_back(mul(mul(t->l->l, t->r), mul(t->l->r, t->r)));
  std::vector<P> sub;
  expansions(t->l, sub);
  for (auto& s : sub) out.push_back(mul(s, t->r));
  sub.clear();
  expansions(t->r, sub);
  for (auto& s : sub) out.push_back(mul(t->l, s));
}

P random_term(std::mt19937_64& rng, int leaves, int subs) {
  std::uniform_int_distribution<int> s(0, subs - 1);
  if (leaves == 1) return leaf(s(rng));
  std::uniform_int_distribution<int> split(1, leaves - 1);
  int k = split(rng);
  return mul(random_term(rng, k, subs), random_term(rng, leaves - k, subs));
}

}  // namespace

TEST(Terms, ParsePrint) {
  auto t = parse_term("(x*x)*x");
  EXPECT_EQ(to_string(t), "((x0*x0)*x0)");
  EXPECT_EQ(parse_term("x5").label().sub, 5);
  EXPECT_EQ(parse_term("x-1").label().sub, -1);
  EXPECT_EQ(parse_term("x2_3").label().gen, 2);
  EXPECT_THROW(parse_term("(x*"), DomainError);
  EXPECT_EQ(parse_term(to_string(parse_term("(x1*x2)*(x3*x4)"))), parse_term("(x1*x2)*(x3*x4)"));
}

TEST(Terms, Invariants) {
  auto inv = term_invariants(parse_term("(x0*x0)*x0"));
  EXPECT_EQ(inv.length, 2u);
  EXPECT_EQ(inv.first.sub, 0);
  EXPECT_EQ(inv.first_multiset.size(), 2u);
  inv = term_invariants(parse_term("x5"));
  EXPECT_EQ(inv.length, 0u);
  EXPECT_EQ(inv.first.sub, 5);
  EXPECT_TRUE(inv.first_multiset.empty());
  inv = term_invariants(parse_term("(x1*x2)*(x3*x4)"));
  EXPECT_EQ(inv.length, 2u);
  EXPECT_EQ(inv.first.sub, 1);
  ASSERT_EQ(inv.first_multiset.size(), 2u);
  EXPECT_EQ(inv.first_multiset[0].sub, 2);
  EXPECT_EQ(inv.first_multiset[1].sub, 3);
}

TEST(Terms, Rewrites) {
  auto e = ld_neighbors(parse_term("(x*x)*x"), Rewrite::Expand);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], parse_term("(x*x)*(x*x)"));
  EXPECT_TRUE(ld_neighbors(parse_term("x"), Rewrite::Contract).empty());
  EXPECT_TRUE(ld_neighbors(parse_term("x*x"), Rewrite::Expand).empty());
  auto c = ld_neighbors(parse_term("(x*x)*(x*x)"), Rewrite::Contract);
  EXPECT_NE(std::find(c.begin(), c.end(), parse_term("(x*x)*x")), c.end());
}

TEST(Equality, Examples) {
  EXPECT_EQ(equal_in_free_shelf(parse_term("(x*x)*x"), parse_term("(x*x)*(x*x)")), Decision::Equal);
  EXPECT_EQ(equal_in_free_shelf(parse_term("x"), parse_term("x*x")), Decision::NotEqual);
  EXPECT_EQ(equal_in_free_shelf(parse_term("x0"), parse_term("x1")), Decision::NotEqual);
}

TEST(Equality, ExpansionChainsStayEqual) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    P t = random_term(rng, 4, 2);
    P u = t;
    for (int step = 0; step < 3; ++step) {
      std::vector<P> next;
      expansions(u, next);
      if (next.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
      u = next[pick(rng)];
    }
    EXPECT_EQ(equal_in_free_shelf(parse_term(show(t)), parse_term(show(u))), Decision::Equal)
        << show(t) << " vs " << show(u);
    EXPECT_EQ(equal_in_free_shelf(parse_term(show(u)), parse_term(show(t))), Decision::Equal);
  }
}

TEST(Equality, DifferentInvariantsAreSeparated) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    P a = random_term(rng, 3, 2), b = random_term(rng, 4, 2);
    auto ta = parse_term(show(a)), tb = parse_term(show(b));
    if (term_invariants(ta) != term_invariants(tb))
      EXPECT_EQ(equal_in_free_shelf(ta, tb), Decision::NotEqual) << show(a) << " vs " << show(b);
  }
}

TEST(Equality, FiniteShelfSeparation) {
  EXPECT_TRUE(separated_by_finite_shelves(parse_term("x*x"), parse_term("x")));
  EXPECT_FALSE(separated_by_finite_shelves(parse_term("(x*x)*x"), parse_term("(x*x)*(x*x)")));
}

TEST(Order, Examples) {
  EXPECT_EQ(dehornoy_less(parse_term("x"), parse_term("x*x")), OrderResult::Less);
  EXPECT_NE(dehornoy_less(parse_term("x"), parse_term("x")), OrderResult::Less);
  EXPECT_EQ(dehornoy_less(parse_term("x1"), parse_term("x2")), OrderResult::NotComparableAtDepth);
}

TEST(Shift, DevirtualizeAndShift) {
  auto t = parse_term("(x1*x2)*x-3");
  EXPECT_EQ(shift(shift(t, 4), -4), t);
  EXPECT_EQ(devirtualize(t), parse_term("(x*x)*x"));
  EXPECT_EQ(left_comb(2), parse_term("(x*x)*x"));
}
