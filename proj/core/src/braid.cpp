#include "vbraid/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "vbraid/common.hpp"

namespace vbraid {

Generator inverse(Generator g) {
  switch (g.kind) {
    case GenKind::Sigma: return {GenKind::SigmaInv, g.index};
    case GenKind::SigmaInv: return {GenKind::Sigma, g.index};
    case GenKind::Zeta: return g;
  }
  return g;
}

std::string to_string(Generator g) {
  char c = g.kind == GenKind::Sigma ? 's' : g.kind == GenKind::SigmaInv ? 'S' : 'z';
  return c + std::to_string(g.index);
}

VirtualBraidWord::VirtualBraidWord(int strands, std::vector<Generator> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw DomainError("strand count must be positive");
  for (const auto& g : letters_) {
    if (g.index < 1 || g.index > strands_ - 1)
      throw DomainError("generator " + vbraid::to_string(g) + " out of range for " + std::to_string(strands_) +
                        " strands");
  }
}

VirtualBraidWord parse_word(std::string_view text, int strands) {
  std::vector<Generator> letters;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    GenKind kind;
    if (c == 's') {
      kind = GenKind::Sigma;
    } else if (c == 'S') {
      kind = GenKind::SigmaInv;
    } else if (c == 'z') {
      kind = GenKind::Zeta;
    } else {
      throw DomainError(std::string("bad token in braid word at '") + c + "'");
    }
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))))
      throw DomainError("bad token in braid word near position " + std::to_string(start));
    int index = std::stoi(std::string(text.substr(start, i - start)));
    letters.push_back({kind, index});
  }
  return VirtualBraidWord(strands, std::move(letters));
}

std::string to_string(const VirtualBraidWord& w) {
  std::string out;
  for (const auto& g : w.letters()) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

VirtualBraidWord concat(const VirtualBraidWord& a, const VirtualBraidWord& b) {
  if (a.strands() != b.strands()) throw DomainError("strand count mismatch in concatenation");
  std::vector<Generator> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return VirtualBraidWord(a.strands(), std::move(letters));
}

VirtualBraidWord inverse(const VirtualBraidWord& w) {
  std::vector<Generator> letters;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(inverse(*it));
  return VirtualBraidWord(w.strands(), std::move(letters));
}

VirtualBraidWord free_reduce(const VirtualBraidWord& w) {
  std::vector<Generator> stack;
  for (const auto& g : w.letters()) {
    if (!stack.empty() && stack.back() == inverse(g)) {
      stack.pop_back();
    } else {
      stack.push_back(g);
    }
  }
  return VirtualBraidWord(w.strands(), std::move(stack));
}

int sigma_count(const VirtualBraidWord& w) {
  return static_cast<int>(std::count_if(w.letters().begin(), w.letters().end(),
                                        [](const Generator& g) { return g.kind != GenKind::Zeta; }));
}

bool is_positive(const VirtualBraidWord& w) {
  return std::none_of(w.letters().begin(), w.letters().end(),
                      [](const Generator& g) { return g.kind == GenKind::SigmaInv; });
}

Permutation::Permutation(int n) : images_(n) {
  for (int i = 0; i < n; ++i) images_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

std::size_t Permutation::inversions() const {
  std::size_t n = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (images_[i] > images_[j]) ++n;
  return n;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DomainError("permutation size mismatch");
  std::vector<int> out(a.size());
  for (int i = 1; i <= a.size(); ++i) out[i - 1] = a(b(i));
  return Permutation(std::move(out));
}

Permutation transposition(int n, int i) {
  std::vector<int> images(n);
  for (int k = 0; k < n; ++k) images[k] = k + 1;
  std::swap(images[i - 1], images[i]);
  return Permutation(std::move(images));
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.images()[i];
  os << ']';
  return os.str();
}

Permutation forgetful(const VirtualBraidWord& w) {
  Permutation p(w.strands());
  for (const auto& g : w.letters()) p = p * transposition(w.strands(), g.index);
  return p;
}

VirtualBraidWord zeta_word(const Permutation& p) {
  std::vector<Generator> reversed;
  Permutation cur = p;
  for (;;) {
    int descent = 0;
    for (int i = 1; i < cur.size(); ++i) {
      if (cur(i) > cur(i + 1)) {
        descent = i;
        break;
      }
    }
    if (descent == 0) break;
    reversed.push_back({GenKind::Zeta, descent});
    cur = cur * transposition(cur.size(), descent);
  }
  std::reverse(reversed.begin(), reversed.end());
  return VirtualBraidWord(std::max(p.size(), 1), std::move(reversed));
}

VirtualBraidWord normalize_zeta_runs(const VirtualBraidWord& w) {
  const int n = w.strands();
  std::vector<Generator> out;
  Permutation run(n);
  auto flush = [&] {
    auto word = zeta_word(run);
    out.insert(out.end(), word.letters().begin(), word.letters().end());
    run = Permutation(n);
  };
  for (const auto& g : w.letters()) {
    if (g.kind == GenKind::Zeta) {
      run = run * transposition(n, g.index);
    } else {
      flush();
      out.push_back(g);
    }
  }
  flush();
  return VirtualBraidWord(n, std::move(out));
}

VirtualBraidWord garside_word(int n) {
  std::vector<Generator> letters;
  for (int top = 1; top <= n - 1; ++top)
    for (int i = top; i >= 1; --i) letters.push_back({GenKind::Zeta, i});
  return VirtualBraidWord(n, std::move(letters));
}

VirtualBraidWord garside_twist(const VirtualBraidWord& w) {
  VirtualBraidWord delta = garside_word(w.strands());
  return concat(concat(delta, w), delta);
}

Vb2ShortestForm vb2_shortest_form(const VirtualBraidWord& w) {
  if (w.strands() != 2 || !is_positive(w)) throw DomainError("shortest form needs a positive 2-strand word");
  Vb2ShortestForm f;
  int parity = 0;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->kind == GenKind::Zeta) {
      parity ^= 1;
    } else {
      f.eps.push_back(parity);
      parity = 0;
      ++f.sigmas;
    }
  }
  f.eps.push_back(parity);
  return f;
}

VirtualBraidWord from_shortest_form(const Vb2ShortestForm& f) {
  std::vector<Generator> letters;
  for (int j = f.sigmas; j >= 0; --j) {
    if (f.eps[j]) letters.push_back({GenKind::Zeta, 1});
    if (j > 0) letters.push_back({GenKind::Sigma, 1});
  }
  return VirtualBraidWord(2, std::move(letters));
}

std::string to_string(const Vb2ShortestForm& f) {
  std::string out = "(";
  for (int j = f.sigmas; j >= 0; --j) {
    out += std::to_string(f.eps[j]);
    if (j > 0) out += ',';
  }
  return out + ")";
}

std::vector<Generator> alphabet(int n, bool positive) {
  std::vector<Generator> out;
  for (int i = 1; i < n; ++i) out.push_back({GenKind::Sigma, i});
  if (!positive)
    for (int i = 1; i < n; ++i) out.push_back({GenKind::SigmaInv, i});
  for (int i = 1; i < n; ++i) out.push_back({GenKind::Zeta, i});
  return out;
}

void for_each_word(int n, int max_len, bool positive, const std::function<void(const VirtualBraidWord&)>& visit) {
  if (max_len < 0) throw DomainError("max_len must be non-negative");
  const auto letters = alphabet(n, positive);
  visit(VirtualBraidWord(n, {}));
  if (letters.empty()) return;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::size_t> digits(len, 0);
    for (;;) {
      std::vector<Generator> word(len);
      for (int k = 0; k < len; ++k) word[k] = letters[digits[k]];
      visit(VirtualBraidWord(n, std::move(word)));
      int k = len - 1;
      while (k >= 0 && ++digits[k] == letters.size()) digits[k--] = 0;
      if (k < 0) break;
    }
  }
}

std::vector<VirtualBraidWord> enumerate_words(int n, int max_len, bool positive) {
  std::vector<VirtualBraidWord> out;
  for_each_word(n, max_len, positive, [&](const VirtualBraidWord& w) { out.push_back(w); });
  return out;
}

std::vector<Relation> defining_relations(int n, bool positive) {
  std::vector<Relation> out;
  auto word = [n](std::initializer_list<Generator> g) { return VirtualBraidWord(n, std::vector<Generator>(g)); };
  const GenKind S = GenKind::Sigma;
  const GenKind Z = GenKind::Zeta;
  for (int i = 1; i < n; ++i) {
    out.push_back({"zeta involution " + std::to_string(i), word({{Z, i}, {Z, i}}), word({})});
    if (!positive) {
      out.push_back({"sigma inverse " + std::to_string(i), word({{S, i}, {GenKind::SigmaInv, i}}), word({})});
      out.push_back({"sigma inverse' " + std::to_string(i), word({{GenKind::SigmaInv, i}, {S, i}}), word({})});
    }
    for (int j = i + 2; j < n; ++j) {
      std::string tag = std::to_string(i) + "," + std::to_string(j);
      out.push_back({"sigma far commutation " + tag, word({{S, i}, {S, j}}), word({{S, j}, {S, i}})});
      out.push_back({"zeta far commutation " + tag, word({{Z, i}, {Z, j}}), word({{Z, j}, {Z, i}})});
      out.push_back({"mixed far commutation " + tag, word({{S, i}, {Z, j}}), word({{Z, j}, {S, i}})});
      out.push_back({"mixed far commutation' " + tag, word({{Z, i}, {S, j}}), word({{S, j}, {Z, i}})});
    }
    if (i + 1 < n) {
      std::string tag = std::to_string(i);
      out.push_back({"sigma braid " + tag, word({{S, i}, {S, i + 1}, {S, i}}), word({{S, i + 1}, {S, i}, {S, i + 1}})});
      out.push_back({"zeta braid " + tag, word({{Z, i}, {Z, i + 1}, {Z, i}}), word({{Z, i + 1}, {Z, i}, {Z, i + 1}})});
      out.push_back({"mixed braid " + tag, word({{Z, i}, {Z, i + 1}, {S, i}}), word({{S, i + 1}, {Z, i}, {Z, i + 1}})});
    }
  }
  return out;
}

}  // namespace vbraid
