#include "vbraid/freegroup.hpp"

#include <algorithm>
#include <cctype>

namespace vbraid {

FreeGroupWord::FreeGroupWord(const std::vector<FreeLetter>& letters) {
  for (const auto& l : letters) {
    if (l.gen < 1 || (l.exp != 1 && l.exp != -1)) throw DomainError("bad free group letter");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeGroupWord FreeGroupWord::generator(int i, int exp) { return FreeGroupWord({{i, exp}}); }

int FreeGroupWord::max_generator() const {
  int m = 0;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

FreeGroupWord FreeGroupWord::inverse() const {
  std::vector<FreeLetter> out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back({it->gen, -it->exp});
  return FreeGroupWord(out);
}

FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b) {
  std::vector<FreeLetter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return FreeGroupWord(out);
}

std::string to_string(const FreeGroupWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(l.gen);
    if (l.exp == -1) out += "^-1";
  }
  return out;
}

FreeGroupWord parse_free_word(std::string_view text) {
  std::vector<FreeLetter> letters;
  std::size_t i = 0;
  auto sep = [&](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.'; };
  bool saw_identity = false;
  while (i < text.size()) {
    if (sep(text[i])) {
      ++i;
      continue;
    }
    if (text[i] == '1') {
      saw_identity = true;
      ++i;
      continue;
    }
    if (text[i] != 'x') throw DomainError("bad free group word '" + std::string(text) + "'");
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw DomainError("missing generator index in '" + std::string(text) + "'");
    int gen = std::stoi(std::string(text.substr(start, i - start)));
    int exp = 1;
    if (text.substr(i, 3) == "^-1") {
      exp = -1;
      i += 3;
    } else if (text.substr(i, 2) == "^1") {
      i += 2;
    }
    letters.push_back({gen, exp});
  }
  if (saw_identity && !letters.empty()) throw DomainError("identity mixed with letters in '" + std::string(text) + "'");
  return FreeGroupWord(letters);
}

FreeGroupWord conj_op(const FreeGroupWord& a, const FreeGroupWord& b, ConjDirection dir) {
  return dir == ConjDirection::Forward ? b.inverse() * a * b : b * a * b.inverse();
}

FreeGroupWord artin_generator(const FreeGroupWord& w, int i, int sign) {
  const FreeGroupWord xi = FreeGroupWord::generator(i);
  const FreeGroupWord xj = FreeGroupWord::generator(i + 1);
  FreeGroupWord out;
  for (const auto& l : w.letters()) {
    FreeGroupWord image;
    if (sign > 0) {
      if (l.gen == i + 1) {
        image = xi;
      } else if (l.gen == i) {
        image = xi * xj * xi.inverse();
      } else {
        image = FreeGroupWord::generator(l.gen);
      }
    } else {
      if (l.gen == i) {
        image = xj;
      } else if (l.gen == i + 1) {
        image = xj.inverse() * xi * xj;
      } else {
        image = FreeGroupWord::generator(l.gen);
      }
    }
    out = out * (l.exp == 1 ? image : image.inverse());
  }
  return out;
}

FreeGroupWord artin_action(const VirtualBraidWord& braid, const FreeGroupWord& w) {
  FreeGroupWord out = w;
  for (auto it = braid.letters().rbegin(); it != braid.letters().rend(); ++it) {
    if (it->kind == GenKind::Zeta) throw DomainError("Artin action is defined for classical braids only");
    out = artin_generator(out, it->index, it->kind == GenKind::Sigma ? 1 : -1);
  }
  return out;
}

bool is_generator_conjugate(const FreeGroupWord& w, int n) {
  const auto& l = w.letters();
  std::size_t lo = 0;
  std::size_t hi = l.size();
  while (hi - lo >= 2 && l[lo].gen == l[hi - 1].gen && l[lo].exp == -l[hi - 1].exp) {
    ++lo;
    --hi;
  }
  return hi - lo == 1 && l[lo].exp == 1 && l[lo].gen <= n;
}

FreeGroupWord ConjFreeCarrier::parse(std::string_view text) const {
  FreeGroupWord w = parse_free_word(text);
  if (w.max_generator() > n) throw DomainError("generator index exceeds " + std::to_string(n));
  return w;
}

std::vector<FreeGroupWord> ConjFreeCarrier::samples() const {
  std::vector<FreeGroupWord> out{FreeGroupWord()};
  for (int i = 1; i <= n; ++i) out.push_back(FreeGroupWord::generator(i));
  if (n >= 2) out.push_back(FreeGroupWord::generator(1) * FreeGroupWord::generator(2, -1));
  return out;
}

FreeGroupWord VConjCarrier::f(const FreeGroupWord& a) const {
  FreeGroupWord y = FreeGroupWord::generator(n + 1);
  return y.inverse() * a * y;
}

FreeGroupWord VConjCarrier::f_inv(const FreeGroupWord& a) const {
  FreeGroupWord y = FreeGroupWord::generator(n + 1);
  return y * a * y.inverse();
}

FreeGroupWord VConjCarrier::parse(std::string_view text) const {
  FreeGroupWord w = parse_free_word(text);
  if (!contains(w)) throw DomainError("'" + std::string(text) + "' is not a conjugate of x1..x" + std::to_string(n));
  return w;
}

std::vector<FreeGroupWord> VConjCarrier::samples() const {
  std::vector<FreeGroupWord> out;
  for (int i = 1; i <= n; ++i) out.push_back(FreeGroupWord::generator(i));
  out.push_back(f(FreeGroupWord::generator(1)));
  if (n >= 2) out.push_back(conj_op(FreeGroupWord::generator(1), FreeGroupWord::generator(2), ConjDirection::Forward));
  return out;
}

}  // namespace vbraid
