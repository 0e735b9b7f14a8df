#include "vbraid/sdstruct.hpp"

#include <cctype>

namespace vbraid {

const char* to_string(RackClass c) {
  switch (c) {
    case RackClass::NotShelf: return "NotShelf";
    case RackClass::Shelf: return "Shelf";
    case RackClass::Rack: return "Rack";
    case RackClass::Quandle: return "Quandle";
  }
  return "?";
}

namespace {

void check_square(const Table& t, int m, const char* what) {
  if (static_cast<int>(t.size()) != m) throw DomainError(std::string(what) + " table has wrong row count");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != m) throw DomainError(std::string(what) + " table has wrong row length");
    for (int v : row)
      if (v < 0 || v >= m) throw DomainError(std::string(what) + " table entry out of range");
  }
}

std::optional<Table> column_inverse(const FiniteRackTable& t) {
  const int m = t.size;
  Table inv(m, std::vector<int>(m, -1));
  for (int b = 0; b < m; ++b) {
    for (int a = 0; a < m; ++a) {
      int c = t.op[a][b];
      if (inv[c][b] != -1) return std::nullopt;
      inv[c][b] = a;
    }
  }
  return inv;
}

bool self_distributive(const FiniteRackTable& t) {
  const int m = t.size;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (t.op[t.op[a][b]][c] != t.op[t.op[a][c]][t.op[b][c]]) return false;
  return true;
}

bool inverse_holds(const FiniteRackTable& t, const Table& inv) {
  for (int a = 0; a < t.size; ++a)
    for (int b = 0; b < t.size; ++b)
      if (inv[t.op[a][b]][b] != a || t.op[inv[a][b]][b] != a) return false;
  return true;
}

}  // namespace

void check_well_formed(const FiniteRackTable& t) {
  if (t.size < 1) throw DomainError("rack table size must be positive");
  check_square(t.op, t.size, "op");
  if (t.inv) check_square(*t.inv, t.size, "inv");
  if (t.f) {
    if (static_cast<int>(t.f->size()) != t.size) throw DomainError("f has wrong length");
    for (int v : *t.f)
      if (v < 0 || v >= t.size) throw DomainError("f entry out of range");
  }
}

Classification classify(const FiniteRackTable& t) {
  check_well_formed(t);
  Classification out;
  bool idempotent = true;
  for (int a = 0; a < t.size; ++a)
    if (t.op[a][a] != a) idempotent = false;
  if (t.f) {
    std::vector<bool> seen(t.size, false);
    bool aut = true;
    for (int v : *t.f) {
      if (seen[v]) aut = false;
      seen[v] = true;
    }
    for (int a = 0; a < t.size; ++a)
      for (int b = 0; b < t.size; ++b)
        if ((*t.f)[t.op[a][b]] != t.op[(*t.f)[a]][(*t.f)[b]]) aut = false;
    out.f_automorphism = aut;
  }
  if (!self_distributive(t)) return out;
  out.cls = RackClass::Shelf;
  out.spindle = idempotent;
  if (t.inv) {
    if (!inverse_holds(t, *t.inv)) throw DomainError("supplied inverse table violates the rack identities");
    out.inverse = t.inv;
  } else {
    out.inverse = column_inverse(t);
  }
  if (out.inverse) out.cls = idempotent ? RackClass::Quandle : RackClass::Rack;
  return out;
}

FiniteRackTable with_inverse(const FiniteRackTable& t) {
  FiniteRackTable out = t;
  auto c = classify(t);
  if (!c.inverse) throw DomainError("table is not a rack");
  out.inv = c.inverse;
  return out;
}

FiniteRackTable trivial_quandle(int m) {
  if (m < 1) throw DomainError("size must be positive");
  FiniteRackTable t{m, Table(m, std::vector<int>(m)), std::nullopt, std::nullopt};
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) t.op[a][b] = a;
  return t;
}

namespace {
int mod(long a, int m) {
  long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}
}  // namespace

FiniteRackTable alexander_quandle(int m, int t) {
  if (m < 1) throw DomainError("modulus must be positive");
  int tr = mod(t, m);
  int tinv = -1;
  for (int x = 0; x < m; ++x)
    if (mod(static_cast<long>(x) * tr, m) == 1 % m) {
      tinv = x;
      break;
    }
  if (tinv < 0) throw DomainError("t is not invertible modulo m");
  FiniteRackTable out{m, Table(m, std::vector<int>(m)), Table(m, std::vector<int>(m)), std::nullopt};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      out.op[a][b] = mod(static_cast<long>(tr) * a + static_cast<long>(1 - tr) * b, m);
      (*out.inv)[a][b] = mod(static_cast<long>(tinv) * a + static_cast<long>(1 - tinv) * b, m);
    }
  }
  return out;
}

FiniteRackTable dihedral_quandle(int m) { return alexander_quandle(m, m - 1); }

FiniteRackTable cyclic_rack_mod(int m) {
  if (m < 1) throw DomainError("size must be positive");
  FiniteRackTable t{m, Table(m, std::vector<int>(m)), Table(m, std::vector<int>(m)), std::nullopt};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      t.op[a][b] = (a + 1) % m;
      (*t.inv)[a][b] = (a + m - 1) % m;
    }
  }
  return t;
}

FiniteRackTable laver_shelf(int n) {
  if (n < 0 || n > 12) throw DomainError("Laver table exponent out of range");
  const int size = 1 << n;
  // left-distributive star on {1..size}: p star 1 = p + 1, size star q = q
  std::vector<std::vector<int>> star(size + 1, std::vector<int>(size + 1, 0));
  for (int q = 1; q <= size; ++q) star[size][q] = q;
  for (int p = size - 1; p >= 1; --p) {
    star[p][1] = p + 1;
    for (int q = 1; q < size; ++q) star[p][q + 1] = star[star[p][q]][p + 1];
  }
  FiniteRackTable t{size, Table(size, std::vector<int>(size)), std::nullopt, std::nullopt};
  for (int a = 1; a <= size; ++a)
    for (int b = 1; b <= size; ++b) t.op[a - 1][b - 1] = star[b][a] - 1;
  return t;
}

FiniteRackTable conjugation_quandle(const Table& g) {
  const int m = static_cast<int>(g.size());
  check_square(g, m, "group");
  int e = -1;
  for (int x = 0; x < m && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < m; ++y)
      if (g[x][y] != y || g[y][x] != y) ok = false;
    if (ok) e = x;
  }
  if (e < 0) throw DomainError("group table has no identity");
  std::vector<int> inv(m, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (g[x][y] == e) inv[x] = y;
  FiniteRackTable t{m, Table(m, std::vector<int>(m)), Table(m, std::vector<int>(m)), std::nullopt};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (inv[b] < 0) throw DomainError("group table has an element without inverse");
      t.op[a][b] = g[g[inv[b]][a]][b];
      (*t.inv)[a][b] = g[g[b][a]][inv[b]];
    }
  }
  return t;
}

FiniteCarrier::FiniteCarrier(FiniteRackTable t) : table(std::move(t)) {
  auto c = classify(table);
  if (c.cls == RackClass::NotShelf) throw DomainError("table is not a shelf");
  if (table.f && !*c.f_automorphism) throw DomainError("f is not a shelf automorphism");
  inv = c.inverse;
}

int FiniteCarrier::f_inv(int a) const {
  const auto& f = *table.f;
  for (int x = 0; x < table.size; ++x)
    if (f[x] == a) return x;
  throw DomainError("f is not invertible");
}

int FiniteCarrier::parse(std::string_view text) const {
  int v = 0;
  try {
    v = std::stoi(std::string(text));
  } catch (const std::exception&) {
    throw DomainError("bad element '" + std::string(text) + "'");
  }
  if (v < 1 || v > table.size) throw DomainError("element out of range (elements are 1.." + std::to_string(table.size) + ")");
  return v - 1;
}

std::vector<int> FiniteCarrier::samples() const {
  std::vector<int> out(table.size);
  for (int i = 0; i < table.size; ++i) out[i] = i;
  return out;
}

Integer CyclicRack::parse(std::string_view text) const {
  Integer v;
  if (v.set_str(std::string(text), 10) != 0) throw DomainError("bad integer '" + std::string(text) + "'");
  return v;
}

std::vector<Integer> CyclicRack::samples() const { return {-2, -1, 0, 1, 3}; }

struct RackExpr::Node {
  RackExpr left;
  char op;
  RackExpr right;
};

RackExpr RackExpr::generator() { return RackExpr(); }

RackExpr RackExpr::combine(const RackExpr& a, char op, const RackExpr& b) {
  if (op != '*' && op != '/') throw DomainError("rack expression operator must be * or /");
  RackExpr e;
  e.node_ = std::make_shared<const Node>(Node{a, op, b});
  return e;
}

char RackExpr::op() const { return node_->op; }
const RackExpr& RackExpr::left() const { return node_->left; }
const RackExpr& RackExpr::right() const { return node_->right; }

std::string RackExpr::to_string() const {
  if (!node_) return "x";
  return "(" + node_->left.to_string() + node_->op + node_->right.to_string() + ")";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}
  RackExpr parse_all() {
    RackExpr e = parse();
    skip();
    if (pos_ != s_.size()) fail();
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw DomainError("bad rack expression near position " + std::to_string(pos_));
  }
  // Binary operators associate to the left: x*x*x is (x*x)*x.
  RackExpr parse() {
    RackExpr e = atom();
    for (skip(); pos_ < s_.size() && (s_[pos_] == '*' || s_[pos_] == '/'); skip()) {
      char op = s_[pos_++];
      e = RackExpr::combine(e, op, atom());
    }
    return e;
  }
  RackExpr atom() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (s_[pos_] == 'x') {
      ++pos_;
      return RackExpr::generator();
    }
    if (s_[pos_] != '(') fail();
    ++pos_;
    RackExpr e = parse();
    skip();
    if (pos_ >= s_.size() || s_[pos_] != ')') fail();
    ++pos_;
    return e;
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RackExpr parse_rack_expr(std::string_view text) { return ExprParser(text).parse_all(); }

Integer fr1_to_cyclic(const RackExpr& e) {
  if (e.is_generator()) return 0;
  const char op = e.op();
  Integer n = 0;
  const RackExpr* cur = &e;
  while (!cur->is_generator()) {
    if (cur->op() != op || !cur->right().is_generator())
      throw DomainError("expression is not a left comb in a single operation: " + e.to_string());
    ++n;
    cur = &cur->left();
  }
  return op == '*' ? n : Integer(-n);
}

}  // namespace vbraid
