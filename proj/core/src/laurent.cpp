#include "vbraid/laurent.hpp"

#include <cctype>
#include <sstream>

namespace vbraid {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::Equal: return "Equal";
    case Decision::NotEqual: return "NotEqual";
    case Decision::Undecided: return "Undecided";
  }
  return "?";
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Exponent{0, 0, 0, 0}, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace(Exponent{0, 0, 0, 0}, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, const Exponent& e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::var(Var x, int power) {
  Exponent e{0, 0, 0, 0};
  e[static_cast<int>(x)] = power;
  return monomial(1, e);
}

void LaurentPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0, 0});
}

std::optional<Integer> LaurentPoly::as_integer() const {
  if (terms_.empty()) return Integer(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

bool LaurentPoly::is_unit() const {
  return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw DomainError("not a unit of the Laurent ring: " + to_string());
  const auto& [e, c] = *terms_.begin();
  return monomial(c, Exponent{-e[0], -e[1], -e[2], -e[3]});
}

LaurentPoly LaurentPoly::pow(int k) const {
  LaurentPoly base = k < 0 ? unit_inverse() : *this;
  LaurentPoly out(1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return out;
}

LaurentPoly LaurentPoly::substitute(Var x, const LaurentPoly& value) const {
  const int idx = static_cast<int>(x);
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    Exponent rest = e;
    rest[idx] = 0;
    out += monomial(c, rest) * value.pow(e[idx]);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return {};
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  static const char* names[4] = {"t", "s", "u", "v"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_one = e == Exponent{0, 0, 0, 0};
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || is_one) {
      os << mag.get_str();
      wrote = true;
    }
    for (int k = 0; k < 4; ++k) {
      if (e[k] == 0) continue;
      if (wrote) os << '*';
      os << names[k];
      if (e[k] != 1) os << '^' << e[k];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace vbraid

namespace vbraid {

namespace {

class LaurentParser {
 public:
  explicit LaurentParser(std::string_view text) : s_(text) {}

  LaurentPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    LaurentPoly out;
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = take() == '-';
    out += signed_term(negative);
    while (skip(), pos_ < s_.size()) {
      char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      out += signed_term(op == '-');
    }
    return out;
  }

 private:
  LaurentPoly signed_term(bool negative) {
    LaurentPoly t = factor();
    while (skip(), pos_ < s_.size() && peek() == '*') {
      ++pos_;
      t *= factor();
    }
    return negative ? -t : t;
  }

  LaurentPoly factor() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end");
    char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return LaurentPoly(Integer(std::string(s_.substr(start, pos_ - start))));
    }
    static const std::string names = "tsuv";
    auto idx = names.find(ch);
    if (idx == std::string::npos) fail(std::string("unexpected character '") + ch + "'");
    ++pos_;
    int power = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      bool neg = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        neg = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent");
      power = std::stoi(std::string(s_.substr(start, pos_ - start)));
      if (neg) power = -power;
    }
    return LaurentPoly::var(static_cast<Var>(idx), power);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return s_[pos_]; }
  char take() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("bad polynomial '" + std::string(s_) + "': " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace vbraid
