#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/common.hpp"
#include "vbraid/laurent.hpp"

namespace vbraid {

struct Label {
  int gen = 1;
  Integer sub = 0;
  friend bool operator==(const Label&, const Label&) = default;
};

// Immutable binary term over generators x_{gen,sub}; subterms are shared.
class ShelfTerm {
 public:
  ShelfTerm();  // x0
  static ShelfTerm leaf(const Integer& sub, int gen = 1);
  static ShelfTerm op(const ShelfTerm& a, const ShelfTerm& b);

  bool is_leaf() const;
  const Label& label() const;
  const ShelfTerm& left() const;
  const ShelfTerm& right() const;
  std::size_t hash() const;
  // Number of leaves, saturating at SIZE_MAX.
  std::size_t leaves() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const ShelfTerm& a, const ShelfTerm& b);
  friend bool operator<(const ShelfTerm& a, const ShelfTerm& b);

 private:
  struct Node;
  explicit ShelfTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct ShelfTermHash {
  std::size_t operator()(const ShelfTerm& t) const { return t.hash(); }
};

// x<k> for generator 1, x<i>_<k> for generator i, x alone for x0; '*' is the
// shelf operation and products are fully parenthesized.
ShelfTerm parse_term(std::string_view text);
std::string to_string(const ShelfTerm& t);

struct TermInvariants {
  std::size_t length = 0;            // operations on the left spine
  Label first;                       // leftmost leaf
  std::vector<Label> first_multiset; // leftmost leaves of the spine's right factors, sorted
  friend bool operator==(const TermInvariants&, const TermInvariants&) = default;
};

TermInvariants term_invariants(const ShelfTerm& t);

enum class Rewrite { Expand, Contract };
// (a*b)*c -> (a*c)*(b*c) at any position, or the reverse.
std::vector<ShelfTerm> ld_neighbors(const ShelfTerm& t, Rewrite dir);

struct SearchBudget {
  int depth = 8;
  std::size_t max_visited = 100000;
};

// Homomorphic images in a fixed battery of finite shelves; a difference in
// any image proves the terms are not equal in the free shelf.
bool separated_by_finite_shelves(const ShelfTerm& a, const ShelfTerm& b);

Decision equal_in_free_shelf(const ShelfTerm& a, const ShelfTerm& b, SearchBudget budget = {});

enum class OrderResult { Less, NotComparableAtDepth, Undecided };
const char* to_string(OrderResult r);
// Less when some form of b reachable within the budget is c*a' with a' equal
// to a, or transitively smaller than it.
OrderResult dehornoy_less(const ShelfTerm& a, const ShelfTerm& b, SearchBudget budget = {});

ShelfTerm devirtualize(const ShelfTerm& t);
// Adds k to every subscript.
ShelfTerm shift(const ShelfTerm& t, const Integer& k);
// Left comb x*x*...*x with `length` operations, all leaves x_sub.
ShelfTerm left_comb(std::size_t length, const Integer& sub = 0);

struct FreeShelfCarrier {
  using Element = ShelfTerm;
  bool virtual_shift = false;
  SearchBudget budget;

  ShelfTerm op(const ShelfTerm& a, const ShelfTerm& b) const { return ShelfTerm::op(a, b); }
  bool has_inverse() const { return false; }
  ShelfTerm inv_op(const ShelfTerm&, const ShelfTerm&) const;
  bool has_f() const { return virtual_shift; }
  ShelfTerm f(const ShelfTerm& a) const { return shift(a, 1); }
  ShelfTerm f_inv(const ShelfTerm& a) const { return shift(a, -1); }
  Decision equal(const ShelfTerm& a, const ShelfTerm& b) const { return equal_in_free_shelf(a, b, budget); }
  std::string show(const ShelfTerm& a) const { return to_string(a); }
  ShelfTerm parse(std::string_view text) const { return parse_term(text); }
  std::vector<ShelfTerm> samples() const;
};

}  // namespace vbraid
