#include "vbraid/freeshelf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "vbraid/sdstruct.hpp"

namespace vbraid {

struct ShelfTerm::Node {
  bool leaf;
  Label label;
  ShelfTerm left;
  ShelfTerm right;
  std::size_t hash;
  std::size_t leaves;
};

namespace {

std::size_t mix(std::size_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}

std::size_t label_hash(const Label& l) {
  std::size_t s = l.sub.fits_slong_p() ? static_cast<std::size_t>(l.sub.get_si())
                                       : std::hash<std::string>{}(l.sub.get_str());
  return mix(s * 31 + static_cast<std::size_t>(l.gen) + 0x9e3779b97f4a7c15ULL);
}

int compare_labels(const Label& a, const Label& b) {
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  return cmp(a.sub, b.sub) < 0 ? -1 : (a.sub == b.sub ? 0 : 1);
}

}  // namespace

ShelfTerm::ShelfTerm() : ShelfTerm(leaf(0)) {}

ShelfTerm ShelfTerm::leaf(const Integer& sub, int gen) {
  Label l{gen, sub};
  std::size_t h = label_hash(l);
  return ShelfTerm(std::make_shared<const Node>(Node{true, std::move(l), ShelfTerm(nullptr), ShelfTerm(nullptr), h, 1}));
}

ShelfTerm ShelfTerm::op(const ShelfTerm& a, const ShelfTerm& b) {
  std::size_t h = mix(a.hash() * 0x100000001b3ULL ^ (b.hash() + 0x7f4a7c15ULL));
  std::size_t n = a.leaves() > std::numeric_limits<std::size_t>::max() - b.leaves()
                      ? std::numeric_limits<std::size_t>::max()
                      : a.leaves() + b.leaves();
  return ShelfTerm(std::make_shared<const Node>(Node{false, Label{}, a, b, h, n}));
}

bool ShelfTerm::is_leaf() const { return node_->leaf; }
const Label& ShelfTerm::label() const { return node_->label; }
const ShelfTerm& ShelfTerm::left() const { return node_->left; }
const ShelfTerm& ShelfTerm::right() const { return node_->right; }
std::size_t ShelfTerm::hash() const { return node_->hash; }
std::size_t ShelfTerm::leaves() const { return node_->leaves; }

bool operator==(const ShelfTerm& a, const ShelfTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.leaves() != b.leaves() || a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.label() == b.label();
  return a.left() == b.left() && a.right() == b.right();
}

namespace {
int compare_terms(const ShelfTerm& a, const ShelfTerm& b) {
  if (a.identity() == b.identity()) return 0;
  if (a.leaves() != b.leaves()) return a.leaves() < b.leaves() ? -1 : 1;
  if (a.is_leaf() != b.is_leaf()) return a.is_leaf() ? -1 : 1;
  if (a.is_leaf()) return compare_labels(a.label(), b.label());
  int c = compare_terms(a.left(), b.left());
  return c != 0 ? c : compare_terms(a.right(), b.right());
}
}  // namespace

bool operator<(const ShelfTerm& a, const ShelfTerm& b) { return compare_terms(a, b) < 0; }

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}
  ShelfTerm parse_all() {
    ShelfTerm t = expr();
    skip();
    if (pos_ != s_.size()) fail();
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const {
    throw DomainError("bad shelf term '" + std::string(s_) + "' near position " + std::to_string(pos_));
  }
  std::optional<Integer> number() {
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      return std::nullopt;
    }
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  ShelfTerm primary() {
    skip();
    if (pos_ >= s_.size()) fail();
    if (s_[pos_] == '(') {
      ++pos_;
      ShelfTerm t = expr();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail();
      ++pos_;
      return t;
    }
    if (s_[pos_] != 'x') fail();
    ++pos_;
    auto a = number();
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      auto b = number();
      if (!a || !b || *a < 1 || !a->fits_sint_p()) fail();
      return ShelfTerm::leaf(*b, static_cast<int>(a->get_si()));
    }
    return ShelfTerm::leaf(a.value_or(0));
  }
  ShelfTerm expr() {
    ShelfTerm t = primary();
    for (;;) {
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        t = ShelfTerm::op(t, primary());
      } else {
        return t;
      }
    }
  }
  std::string_view s_;
  std::size_t pos_ = 0;
};

void write_term(const ShelfTerm& t, std::string& out) {
  if (t.is_leaf()) {
    out += 'x';
    if (t.label().gen != 1) out += std::to_string(t.label().gen) + "_";
    out += t.label().sub.get_str();
    return;
  }
  out += '(';
  write_term(t.left(), out);
  out += '*';
  write_term(t.right(), out);
  out += ')';
}

const Label& leftmost(const ShelfTerm& t) {
  const ShelfTerm* cur = &t;
  while (!cur->is_leaf()) cur = &cur->left();
  return cur->label();
}

}  // namespace

ShelfTerm parse_term(std::string_view text) { return TermParser(text).parse_all(); }

std::string to_string(const ShelfTerm& t) {
  std::string out;
  write_term(t, out);
  return out;
}

TermInvariants term_invariants(const ShelfTerm& t) {
  TermInvariants inv;
  const ShelfTerm* cur = &t;
  while (!cur->is_leaf()) {
    inv.first_multiset.push_back(leftmost(cur->right()));
    ++inv.length;
    cur = &cur->left();
  }
  inv.first = cur->label();
  std::sort(inv.first_multiset.begin(), inv.first_multiset.end(),
            [](const Label& a, const Label& b) { return compare_labels(a, b) < 0; });
  return inv;
}

namespace {

void collect_rewrites(const ShelfTerm& t, Rewrite dir, std::vector<ShelfTerm>& out) {
  if (t.is_leaf()) return;
  const ShelfTerm& l = t.left();
  const ShelfTerm& r = t.right();
  if (dir == Rewrite::Expand) {
    if (!l.is_leaf()) out.push_back(ShelfTerm::op(ShelfTerm::op(l.left(), r), ShelfTerm::op(l.right(), r)));
  } else if (!l.is_leaf() && !r.is_leaf() && l.right() == r.right()) {
    out.push_back(ShelfTerm::op(ShelfTerm::op(l.left(), r.left()), l.right()));
  }
  std::vector<ShelfTerm> sub;
  collect_rewrites(l, dir, sub);
  for (const auto& x : sub) out.push_back(ShelfTerm::op(x, r));
  sub.clear();
  collect_rewrites(r, dir, sub);
  for (const auto& x : sub) out.push_back(ShelfTerm::op(l, x));
}

}  // namespace

std::vector<ShelfTerm> ld_neighbors(const ShelfTerm& t, Rewrite dir) {
  std::vector<ShelfTerm> raw;
  collect_rewrites(t, dir, raw);
  std::unordered_set<ShelfTerm, ShelfTermHash> seen;
  std::vector<ShelfTerm> out;
  for (auto& x : raw)
    if (seen.insert(x).second) out.push_back(std::move(x));
  return out;
}

namespace {

enum class Assign { Generator, ByLabel };

struct BatteryEntry {
  FiniteRackTable table;
  Assign assign;
};

const std::vector<BatteryEntry>& battery() {
  static const std::vector<BatteryEntry> entries = [] {
    std::vector<BatteryEntry> out;
    for (int n = 1; n <= 6; ++n) {
      out.push_back({laver_shelf(n), Assign::Generator});
      out.push_back({laver_shelf(n), Assign::ByLabel});
    }
    out.push_back({dihedral_quandle(3), Assign::ByLabel});
    out.push_back({dihedral_quandle(5), Assign::ByLabel});
    out.push_back({alexander_quandle(5, 2), Assign::ByLabel});
    out.push_back({alexander_quandle(7, 3), Assign::ByLabel});
    return out;
  }();
  return entries;
}

class Evaluator {
 public:
  Evaluator(const BatteryEntry& e) : e_(e) {}
  int eval(const ShelfTerm& t) {
    auto it = memo_.find(t.identity());
    if (it != memo_.end()) return it->second;
    int v;
    if (t.is_leaf()) {
      v = e_.assign == Assign::Generator ? 0 : leaf_value(t.label());
    } else {
      v = e_.table.op[eval(t.left())][eval(t.right())];
    }
    memo_.emplace(t.identity(), v);
    return v;
  }

 private:
  int leaf_value(const Label& l) const {
    Integer key = l.sub + Integer(l.gen) * 7919;
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), key.get_mpz_t(), static_cast<unsigned long>(e_.table.size));
    return static_cast<int>(r.get_si());
  }
  const BatteryEntry& e_;
  std::unordered_map<const void*, int> memo_;
};

}  // namespace

bool separated_by_finite_shelves(const ShelfTerm& a, const ShelfTerm& b) {
  for (const auto& entry : battery()) {
    Evaluator ev(entry);
    if (ev.eval(a) != ev.eval(b)) return true;
  }
  return false;
}

Decision equal_in_free_shelf(const ShelfTerm& a, const ShelfTerm& b, SearchBudget budget) {
  if (budget.depth < 0) throw DomainError("search depth must be non-negative");
  if (a == b) return Decision::Equal;
  if (term_invariants(a) != term_invariants(b)) return Decision::NotEqual;
  if (separated_by_finite_shelves(a, b)) return Decision::NotEqual;

  std::unordered_set<ShelfTerm, ShelfTermHash> seen[2];
  std::vector<ShelfTerm> frontier[2] = {{a}, {b}};
  seen[0].insert(a);
  seen[1].insert(b);
  std::size_t visited = 2;
  for (int step = 0; step < budget.depth; ++step) {
    int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<ShelfTerm> next;
    for (const auto& u : frontier[side]) {
      for (Rewrite dir : {Rewrite::Expand, Rewrite::Contract}) {
        for (auto& v : ld_neighbors(u, dir)) {
          if (seen[side].count(v)) continue;
          if (seen[1 - side].count(v)) return Decision::Equal;
          if (++visited > budget.max_visited) return Decision::Undecided;
          seen[side].insert(v);
          next.push_back(std::move(v));
        }
      }
    }
    // The whole equivalence class of this side has been enumerated.
    if (next.empty()) return Decision::NotEqual;
    frontier[side] = std::move(next);
  }
  return Decision::Undecided;
}

const char* to_string(OrderResult r) {
  switch (r) {
    case OrderResult::Less: return "Less";
    case OrderResult::NotComparableAtDepth: return "NotComparableAtDepth";
    case OrderResult::Undecided: return "Undecided";
  }
  return "?";
}

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(SearchBudget budget) : budget_(budget) {}

  OrderResult less(const ShelfTerm& a, const ShelfTerm& b, int depth) {
    if (term_invariants(b).length == 0) return OrderResult::NotComparableAtDepth;
    std::vector<ShelfTerm> forms{b};
    std::unordered_set<ShelfTerm, ShelfTermHash> seen{b};
    std::vector<ShelfTerm> frontier{b};
    for (int step = 0; step < depth && !frontier.empty(); ++step) {
      std::vector<ShelfTerm> next;
      for (const auto& u : frontier) {
        for (Rewrite dir : {Rewrite::Expand, Rewrite::Contract}) {
          for (auto& v : ld_neighbors(u, dir)) {
            if (!seen.insert(v).second) continue;
            if (++visited_ > budget_.max_visited) return OrderResult::Undecided;
            forms.push_back(v);
            next.push_back(std::move(v));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<ShelfTerm> rights;
    std::unordered_set<ShelfTerm, ShelfTermHash> right_seen;
    for (const auto& u : forms)
      if (!u.is_leaf() && right_seen.insert(u.right()).second) rights.push_back(u.right());
    const TermInvariants ia = term_invariants(a);
    for (const auto& r : rights) {
      if (r == a) return OrderResult::Less;
    }
    bool undecided = false;
    SearchBudget small{std::max(1, budget_.depth / 2), std::max<std::size_t>(1, budget_.max_visited / 10)};
    for (const auto& r : rights) {
      if (term_invariants(r) != ia) continue;
      Decision d = equal_in_free_shelf(r, a, small);
      if (d == Decision::Equal) return OrderResult::Less;
      if (d == Decision::Undecided) undecided = true;
    }
    if (depth > 0) {
      for (const auto& r : rights) {
        OrderResult sub = less(a, r, depth - 1);
        if (sub == OrderResult::Less) return sub;
        if (sub == OrderResult::Undecided) undecided = true;
      }
    }
    return undecided ? OrderResult::Undecided : OrderResult::NotComparableAtDepth;
  }

 private:
  SearchBudget budget_;
  std::size_t visited_ = 0;
};

ShelfTerm relabel(const ShelfTerm& t, const std::function<Label(const Label&)>& f,
                  std::unordered_map<const void*, ShelfTerm>& memo) {
  auto it = memo.find(t.identity());
  if (it != memo.end()) return it->second;
  ShelfTerm out;
  if (t.is_leaf()) {
    Label l = f(t.label());
    out = ShelfTerm::leaf(l.sub, l.gen);
  } else {
    out = ShelfTerm::op(relabel(t.left(), f, memo), relabel(t.right(), f, memo));
  }
  memo.emplace(t.identity(), out);
  return out;
}

}  // namespace

OrderResult dehornoy_less(const ShelfTerm& a, const ShelfTerm& b, SearchBudget budget) {
  if (budget.depth < 0) throw DomainError("search depth must be non-negative");
  if (a == b) return OrderResult::NotComparableAtDepth;
  return OrderSearch(budget).less(a, b, budget.depth);
}

ShelfTerm devirtualize(const ShelfTerm& t) {
  std::unordered_map<const void*, ShelfTerm> memo;
  return relabel(t, [](const Label& l) { return Label{l.gen, 0}; }, memo);
}

ShelfTerm shift(const ShelfTerm& t, const Integer& k) {
  std::unordered_map<const void*, ShelfTerm> memo;
  return relabel(t, [&k](const Label& l) { return Label{l.gen, l.sub + k}; }, memo);
}

ShelfTerm left_comb(std::size_t length, const Integer& sub) {
  ShelfTerm x = ShelfTerm::leaf(sub);
  ShelfTerm t = x;
  for (std::size_t i = 0; i < length; ++i) t = ShelfTerm::op(t, x);
  return t;
}

ShelfTerm FreeShelfCarrier::inv_op(const ShelfTerm&, const ShelfTerm&) const {
  throw DomainError("the free shelf has no inverse operation");
}

std::vector<ShelfTerm> FreeShelfCarrier::samples() const {
  ShelfTerm x = ShelfTerm::leaf(0);
  std::vector<ShelfTerm> out{x, ShelfTerm::op(x, x), left_comb(2), ShelfTerm::op(x, ShelfTerm::op(x, x))};
  if (virtual_shift) {
    ShelfTerm y = ShelfTerm::leaf(1);
    out.push_back(y);
    out.push_back(ShelfTerm::op(x, y));
  }
  return out;
}

}  // namespace vbraid
