#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace vbraid {

enum class GenKind { Sigma, SigmaInv, Zeta };

struct Generator {
  GenKind kind;
  int index;  // 1-based, acts on strands index and index+1
  auto operator<=>(const Generator&) const = default;
};

Generator inverse(Generator g);
std::string to_string(Generator g);

// Letters are read left to right; the rightmost letter acts first.
class VirtualBraidWord {
 public:
  VirtualBraidWord() = default;
  VirtualBraidWord(int strands, std::vector<Generator> letters);

  int strands() const { return strands_; }
  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const VirtualBraidWord&, const VirtualBraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Generator> letters_;
};

VirtualBraidWord parse_word(std::string_view text, int strands);
std::string to_string(const VirtualBraidWord& w);

VirtualBraidWord concat(const VirtualBraidWord& a, const VirtualBraidWord& b);
VirtualBraidWord inverse(const VirtualBraidWord& w);
// Cancels adjacent s S, S s and z z pairs until none remain.
VirtualBraidWord free_reduce(const VirtualBraidWord& w);
int sigma_count(const VirtualBraidWord& w);
bool is_positive(const VirtualBraidWord& w);

class Permutation {
 public:
  explicit Permutation(int n = 0);
  explicit Permutation(std::vector<int> images);  // 1-based images

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t inversions() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (a * b)(i) = a(b(i))
Permutation operator*(const Permutation& a, const Permutation& b);
Permutation transposition(int n, int i);
std::string to_string(const Permutation& p);

// Image in the symmetric group; every letter maps to (i, i+1).
Permutation forgetful(const VirtualBraidWord& w);

// Canonical reduced zeta-word of a permutation.
VirtualBraidWord zeta_word(const Permutation& p);
// Replaces every maximal run of zeta letters by the canonical reduced word of
// the permutation it represents.
VirtualBraidWord normalize_zeta_runs(const VirtualBraidWord& w);

// z1 (z2 z1) ... (z_{n-1} ... z1)
VirtualBraidWord garside_word(int n);
VirtualBraidWord garside_twist(const VirtualBraidWord& w);

struct Vb2ShortestForm {
  int sigmas = 0;
  std::vector<int> eps;  // eps[j] is the zeta exponent after the j-th sigma from the right
  friend bool operator==(const Vb2ShortestForm&, const Vb2ShortestForm&) = default;
};

Vb2ShortestForm vb2_shortest_form(const VirtualBraidWord& w);
VirtualBraidWord from_shortest_form(const Vb2ShortestForm& f);
std::string to_string(const Vb2ShortestForm& f);

std::vector<Generator> alphabet(int n, bool positive);
// Length-lexicographic over alphabet(n, positive), empty word first.
void for_each_word(int n, int max_len, bool positive, const std::function<void(const VirtualBraidWord&)>& visit);
std::vector<VirtualBraidWord> enumerate_words(int n, int max_len, bool positive);

struct Relation {
  std::string name;
  VirtualBraidWord lhs;
  VirtualBraidWord rhs;
};

// Defining relations of the virtual braid monoid (positive) or group.
std::vector<Relation> defining_relations(int n, bool positive);

}  // namespace vbraid
