#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbraid/common.hpp"
#include "vbraid/laurent.hpp"

namespace vbraid {

using Table = std::vector<std::vector<int>>;

// Binary operation on {0, ..., size-1}; op[a][b] is a acted on by b.
struct FiniteRackTable {
  int size = 0;
  Table op;
  std::optional<Table> inv;
  std::optional<std::vector<int>> f;

  int apply(int a, int b) const { return op[a][b]; }
};

enum class RackClass { NotShelf, Shelf, Rack, Quandle };
const char* to_string(RackClass c);

struct Classification {
  RackClass cls = RackClass::NotShelf;
  bool spindle = false;
  std::optional<bool> f_automorphism;  // present when the table carries f
  std::optional<Table> inverse;        // supplied or derived column-wise for racks
};

// Throws DomainError on malformed tables or on a supplied inverse that
// violates the rack identities.
Classification classify(const FiniteRackTable& table);
void check_well_formed(const FiniteRackTable& table);
FiniteRackTable with_inverse(const FiniteRackTable& table);

FiniteRackTable trivial_quandle(int m);
FiniteRackTable alexander_quandle(int m, int t);
FiniteRackTable dihedral_quandle(int m);
// a acted on by b is a + 1 mod m
FiniteRackTable cyclic_rack_mod(int m);
// Laver table of size 2^n, written as a right shelf.
FiniteRackTable laver_shelf(int n);
// Conjugation quandle of a group given by its multiplication table.
FiniteRackTable conjugation_quandle(const Table& group);

struct FiniteCarrier {
  using Element = int;
  FiniteRackTable table;
  std::optional<Table> inv;  // derived if the table is a rack

  explicit FiniteCarrier(FiniteRackTable t);
  int op(int a, int b) const { return table.op[a][b]; }
  bool has_inverse() const { return inv.has_value(); }
  int inv_op(int a, int b) const { return (*inv)[a][b]; }
  bool has_f() const { return table.f.has_value(); }
  int f(int a) const { return (*table.f)[a]; }
  int f_inv(int a) const;
  Decision equal(int a, int b) const { return a == b ? Decision::Equal : Decision::NotEqual; }
  std::string show(int a) const { return std::to_string(a + 1); }
  int parse(std::string_view text) const;
  std::vector<int> samples() const;
};

// Integers with a acted on by b equal to a + 1.
struct CyclicRack {
  using Element = Integer;
  Integer op(const Integer& a, const Integer&) const { return a + 1; }
  bool has_inverse() const { return true; }
  Integer inv_op(const Integer& a, const Integer&) const { return a - 1; }
  bool has_f() const { return false; }
  Integer f(const Integer& a) const { return a; }
  Integer f_inv(const Integer& a) const { return a; }
  Decision equal(const Integer& a, const Integer& b) const { return a == b ? Decision::Equal : Decision::NotEqual; }
  std::string show(const Integer& a) const { return a.get_str(); }
  Integer parse(std::string_view text) const;
  std::vector<Integer> samples() const;
};

// Expressions in the free rack on one generator x; '*' is the action and
// '/' its inverse.
class RackExpr {
 public:
  static RackExpr generator();
  static RackExpr combine(const RackExpr& a, char op, const RackExpr& b);
  bool is_generator() const { return !node_; }
  char op() const;
  const RackExpr& left() const;
  const RackExpr& right() const;
  std::string to_string() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

RackExpr parse_rack_expr(std::string_view text);
// Left combs x*x*...*x and x/x/.../x map to their signed length; other
// shapes are rejected.
Integer fr1_to_cyclic(const RackExpr& e);

}  // namespace vbraid
