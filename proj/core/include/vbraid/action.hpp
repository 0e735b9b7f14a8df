#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/braid.hpp"
#include "vbraid/common.hpp"
#include "vbraid/freeshelf.hpp"

namespace vbraid {

// zeta acts through xi, sigma through theta, both on adjacent positions.
template <class T>
struct ActionPair {
  using Map = std::function<std::pair<T, T>(const T&, const T&)>;
  std::string name;
  Map xi;
  Map theta;
  std::optional<Map> theta_inv;
  std::function<Decision(const T&, const T&)> equal;
  std::function<std::string(const T&)> show;
};

template <class T>
void apply_letter(const ActionPair<T>& p, Generator g, std::vector<T>& tuple) {
  const std::size_t i = static_cast<std::size_t>(g.index - 1);
  if (i + 1 >= tuple.size()) throw DomainError("generator " + to_string(g) + " exceeds tuple length");
  const typename ActionPair<T>::Map* m = nullptr;
  switch (g.kind) {
    case GenKind::Sigma: m = &p.theta; break;
    case GenKind::Zeta: m = &p.xi; break;
    case GenKind::SigmaInv:
      if (!p.theta_inv) throw DomainError("structure '" + p.name + "' has no inverse braiding");
      m = &*p.theta_inv;
      break;
  }
  auto [a, b] = (*m)(tuple[i], tuple[i + 1]);
  tuple[i] = std::move(a);
  tuple[i + 1] = std::move(b);
}

template <class T>
std::vector<T> apply_word(const ActionPair<T>& p, const VirtualBraidWord& w, std::vector<T> tuple) {
  if (static_cast<int>(tuple.size()) != w.strands())
    throw DomainError("tuple length " + std::to_string(tuple.size()) + " does not match " +
                      std::to_string(w.strands()) + " strands");
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) apply_letter(p, *it, tuple);
  return tuple;
}

template <class T>
Decision compare_tuples(const ActionPair<T>& p, const std::vector<T>& a, const std::vector<T>& b) {
  Decision out = Decision::Equal;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Decision d = p.equal(a[i], b[i]);
    if (d == Decision::NotEqual) return d;
    if (d == Decision::Undecided) out = d;
  }
  return out;
}

struct PairReport {
  bool xi_involutive = true;
  bool xi_braid = true;
  bool theta_braid = true;
  bool mixed = true;
  std::optional<bool> inverse;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

template <class T>
PairReport validate_pair(const ActionPair<T>& p, const std::vector<T>& samples) {
  PairReport r;
  auto check = [&](bool& flag, const char* what, const std::vector<T>& in, const VirtualBraidWord& u,
                   const VirtualBraidWord& v) {
    if (!flag) return;
    if (compare_tuples(p, apply_word(p, u, in), apply_word(p, v, in)) != Decision::Equal) {
      flag = false;
      r.failures.push_back(what);
    }
  };
  const VirtualBraidWord id2(2, {});
  const VirtualBraidWord zz = parse_word("z1 z1", 2);
  for (const auto& a : samples) {
    for (const auto& b : samples) {
      check(r.xi_involutive, "xi is not an involution", {a, b}, zz, id2);
      if (p.theta_inv) {
        bool inv = r.inverse.value_or(true);
        check(inv, "theta_inv is not inverse to theta", {a, b}, parse_word("s1 S1", 2), id2);
        check(inv, "theta_inv is not inverse to theta", {a, b}, parse_word("S1 s1", 2), id2);
        r.inverse = inv;
      }
    }
  }
  const auto sss = parse_word("s1 s2 s1", 3), sss2 = parse_word("s2 s1 s2", 3);
  const auto zzz = parse_word("z1 z2 z1", 3), zzz2 = parse_word("z2 z1 z2", 3);
  const auto mix = parse_word("z1 z2 s1", 3), mix2 = parse_word("s2 z1 z2", 3);
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (const auto& c : samples) {
        check(r.theta_braid, "theta violates the braid relation", {a, b, c}, sss, sss2);
        check(r.xi_braid, "xi violates the braid relation", {a, b, c}, zzz, zzz2);
        check(r.mixed, "mixed braid relation fails", {a, b, c}, mix, mix2);
      }
  return r;
}

template <class C>
ActionPair<typename C::Element> rack_pair(const C& carrier, const std::string& name = "rack") {
  using T = typename C::Element;
  ActionPair<T> p;
  p.name = name;
  p.xi = [](const T& a, const T& b) { return std::pair<T, T>(b, a); };
  p.theta = [carrier](const T& a, const T& b) { return std::pair<T, T>(b, carrier.op(a, b)); };
  if (carrier.has_inverse())
    p.theta_inv = [carrier](const T& a, const T& b) { return std::pair<T, T>(carrier.inv_op(b, a), a); };
  p.equal = [carrier](const T& a, const T& b) { return carrier.equal(a, b); };
  p.show = [carrier](const T& a) { return carrier.show(a); };
  auto report = validate_pair(p, carrier.samples());
  if (!report.ok()) throw DomainError("rack action check failed for '" + name + "': " + report.failures.front());
  return p;
}

template <class C>
ActionPair<typename C::Element> virtual_rack_pair(const C& carrier, const std::string& name = "virtual rack") {
  using T = typename C::Element;
  if (!carrier.has_f()) throw DomainError("structure '" + name + "' carries no automorphism f");
  for (const auto& a : carrier.samples()) {
    for (const auto& b : carrier.samples()) {
      if (carrier.equal(carrier.f(carrier.op(a, b)), carrier.op(carrier.f(a), carrier.f(b))) != Decision::Equal)
        throw DomainError("f is not an automorphism of '" + name + "'");
    }
  }
  ActionPair<T> p = rack_pair(carrier, name);
  p.xi = [carrier](const T& a, const T& b) { return std::pair<T, T>(carrier.f_inv(b), carrier.f(a)); };
  auto report = validate_pair(p, carrier.samples());
  if (!report.ok()) throw DomainError("virtual action check failed for '" + name + "': " + report.failures.front());
  return p;
}

struct WordPair {
  VirtualBraidWord first;
  VirtualBraidWord second;
};

struct ScanReport {
  std::size_t words = 0;
  std::vector<WordPair> collisions;
  std::vector<WordPair> undecided;
};

struct ScanOptions {
  int strands = 2;
  int max_len = 3;
  bool positive = false;
  // Skip words that are not freely reduced; they trivially equal a shorter word.
  bool reduced_only = true;
};

template <class T>
ScanReport collision_scan(const ActionPair<T>& p, const ScanOptions& opt, const std::vector<std::vector<T>>& probes) {
  const bool positive = opt.positive || !p.theta_inv;
  std::vector<VirtualBraidWord> words;
  for_each_word(opt.strands, opt.max_len, positive, [&](const VirtualBraidWord& w) {
    if (!opt.reduced_only || free_reduce(w).length() == w.length()) words.push_back(w);
  });
  std::vector<std::vector<std::vector<T>>> outputs(words.size());
  for (std::size_t k = 0; k < words.size(); ++k)
    for (const auto& probe : probes) outputs[k].push_back(apply_word(p, words[k], probe));
  ScanReport report;
  report.words = words.size();
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      Decision verdict = Decision::Equal;
      for (std::size_t k = 0; k < probes.size() && verdict != Decision::NotEqual; ++k) {
        Decision d = compare_tuples(p, outputs[a][k], outputs[b][k]);
        if (d != Decision::Equal) verdict = d;
      }
      if (verdict == Decision::Equal) report.collisions.push_back({words[a], words[b]});
      if (verdict == Decision::Undecided) report.undecided.push_back({words[a], words[b]});
    }
  }
  return report;
}

enum class Verdict { Distinguished, NotDistinguished, Undecided };
const char* to_string(Verdict v);

struct DistinguishResult {
  Verdict verdict = Verdict::NotDistinguished;
  std::optional<std::size_t> witness;  // index of a separating probe
};

template <class T>
DistinguishResult distinguish(const ActionPair<T>& p, const VirtualBraidWord& w1, const VirtualBraidWord& w2,
                              const std::vector<std::vector<T>>& probes) {
  if (w1.strands() != w2.strands()) throw DomainError("words have different strand counts");
  DistinguishResult r;
  bool undecided = false;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    Decision d = compare_tuples(p, apply_word(p, w1, probes[k]), apply_word(p, w2, probes[k]));
    if (d == Decision::NotEqual) {
      r.verdict = Verdict::Distinguished;
      r.witness = k;
      return r;
    }
    if (d == Decision::Undecided) undecided = true;
  }
  r.verdict = undecided ? Verdict::Undecided : Verdict::NotDistinguished;
  return r;
}

// Action of the free virtual shelf on terms, zeta shifting subscripts.
ActionPair<ShelfTerm> free_virtual_shelf_pair(SearchBudget budget = {});
// Real action on the free shelf: zeta is the flip.
ActionPair<ShelfTerm> free_shelf_pair(SearchBudget budget = {});

// Constant, staircase and pairwise incomparable probes for term actions.
std::vector<std::vector<ShelfTerm>> default_term_probes(int n, bool virtual_shift);

struct RecoveredInvariants {
  Permutation forgetful;
  int sigma_count = 0;
  std::vector<std::vector<int>> under;  // under[i-1]: strands passing under strand i, sorted
};

RecoveredInvariants recover_invariants(const VirtualBraidWord& w);

}  // namespace vbraid
