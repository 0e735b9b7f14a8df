#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vbraid/braid.hpp"
#include "vbraid/common.hpp"

namespace vbraid {

struct FreeLetter {
  int gen;  // 1-based
  int exp;  // +1 or -1
  auto operator<=>(const FreeLetter&) const = default;
};

// Freely reduced word in the free group on x1, x2, ...
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(const std::vector<FreeLetter>& letters);
  static FreeGroupWord generator(int i, int exp = 1);

  const std::vector<FreeLetter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  int max_generator() const;
  FreeGroupWord inverse() const;

  friend FreeGroupWord operator*(const FreeGroupWord& a, const FreeGroupWord& b);
  friend bool operator==(const FreeGroupWord&, const FreeGroupWord&) = default;
  friend auto operator<=>(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

std::string to_string(const FreeGroupWord& w);
// Letters x<i> or x<i>^-1 separated by spaces, '*' or '.'; "1" is the identity.
FreeGroupWord parse_free_word(std::string_view text);

enum class ConjDirection { Forward, Inverse };
// Forward: b^-1 a b. Inverse: b a b^-1.
FreeGroupWord conj_op(const FreeGroupWord& a, const FreeGroupWord& b, ConjDirection dir);

// Image of w under the automorphism sigma_i (sign +1) or sigma_i^-1 (sign -1).
FreeGroupWord artin_generator(const FreeGroupWord& w, int i, int sign);
// Left action of a classical braid word; the rightmost letter acts first.
FreeGroupWord artin_action(const VirtualBraidWord& braid, const FreeGroupWord& w);

// True when w is conjugate to some x_i with 1 <= i <= n.
bool is_generator_conjugate(const FreeGroupWord& w, int n);

// Conjugation quandle on the free group F_n.
struct ConjFreeCarrier {
  using Element = FreeGroupWord;
  int n = 1;
  FreeGroupWord op(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return conj_op(a, b, ConjDirection::Forward);
  }
  bool has_inverse() const { return true; }
  FreeGroupWord inv_op(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return conj_op(a, b, ConjDirection::Inverse);
  }
  bool has_f() const { return false; }
  FreeGroupWord f(const FreeGroupWord& a) const { return a; }
  FreeGroupWord f_inv(const FreeGroupWord& a) const { return a; }
  Decision equal(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return a == b ? Decision::Equal : Decision::NotEqual;
  }
  std::string show(const FreeGroupWord& a) const { return to_string(a); }
  FreeGroupWord parse(std::string_view text) const;
  std::vector<FreeGroupWord> samples() const;
};

// Conjugates of x_1..x_n inside F_{n+1}, with f conjugation by x_{n+1}.
struct VConjCarrier {
  using Element = FreeGroupWord;
  int n = 1;
  FreeGroupWord op(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return conj_op(a, b, ConjDirection::Forward);
  }
  bool has_inverse() const { return true; }
  FreeGroupWord inv_op(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return conj_op(a, b, ConjDirection::Inverse);
  }
  bool has_f() const { return true; }
  FreeGroupWord f(const FreeGroupWord& a) const;
  FreeGroupWord f_inv(const FreeGroupWord& a) const;
  bool contains(const FreeGroupWord& a) const { return is_generator_conjugate(a, n); }
  Decision equal(const FreeGroupWord& a, const FreeGroupWord& b) const {
    return a == b ? Decision::Equal : Decision::NotEqual;
  }
  std::string show(const FreeGroupWord& a) const { return to_string(a); }
  FreeGroupWord parse(std::string_view text) const;
  std::vector<FreeGroupWord> samples() const;
};

}  // namespace vbraid
