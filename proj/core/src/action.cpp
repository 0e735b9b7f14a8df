#include "vbraid/action.hpp"

#include <algorithm>

namespace vbraid {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Distinguished: return "Distinguished";
    case Verdict::NotDistinguished: return "NotDistinguished";
    case Verdict::Undecided: return "Undecided";
  }
  return "?";
}

ActionPair<ShelfTerm> free_virtual_shelf_pair(SearchBudget budget) {
  FreeShelfCarrier c;
  c.virtual_shift = true;
  c.budget = budget;
  return virtual_rack_pair(c, "free-virtual-shelf");
}

ActionPair<ShelfTerm> free_shelf_pair(SearchBudget budget) {
  FreeShelfCarrier c;
  c.budget = budget;
  return rack_pair(c, "free-shelf");
}

std::vector<std::vector<ShelfTerm>> default_term_probes(int n, bool virtual_shift) {
  std::vector<std::vector<ShelfTerm>> out;
  out.emplace_back(static_cast<std::size_t>(n), ShelfTerm::leaf(0));
  if (virtual_shift) {
    std::vector<ShelfTerm> stair;
    for (int i = 0; i < n; ++i) stair.push_back(ShelfTerm::leaf(i));
    out.push_back(std::move(stair));
  }
  std::vector<ShelfTerm> incomparable;
  for (int i = 0; i < n; ++i) incomparable.push_back(left_comb(static_cast<std::size_t>(2 * i)));
  out.push_back(std::move(incomparable));
  return out;
}

namespace {

// Nearest multiple of `step` to v, divided by step.
Integer nearest_multiple(const Integer& v, const Integer& step) {
  Integer shifted = v + step / 2;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), step.get_mpz_t());
  return q;
}

}  // namespace

RecoveredInvariants recover_invariants(const VirtualBraidWord& w) {
  if (!is_positive(w)) throw DomainError("invariant recovery needs a positive word");
  const int n = w.strands();
  ActionPair<ShelfTerm> p = free_virtual_shelf_pair();
  const ShelfTerm x = ShelfTerm::leaf(0);

  const std::vector<ShelfTerm> flat(static_cast<std::size_t>(n), x);
  const auto base = apply_word(p, w, flat);
  std::vector<std::size_t> base_len(n);
  std::size_t total = 0;
  for (int j = 0; j < n; ++j) {
    base_len[j] = term_invariants(base[j]).length;
    total += base_len[j];
  }

  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    auto probe = flat;
    probe[i] = ShelfTerm::op(x, x);
    auto out = apply_word(p, w, probe);
    int target = 0;
    for (int j = 0; j < n; ++j) {
      if (term_invariants(out[j]).length > base_len[j]) {
        if (target != 0) throw DomainError("length probe moved to two positions");
        target = j + 1;
      }
    }
    if (target == 0) throw DomainError("length probe was lost");
    images[i] = target;
  }

  RecoveredInvariants r{Permutation(images), static_cast<int>(total), std::vector<std::vector<int>>(n)};

  const Integer spacing = 2 * (Integer(n - 1) * Integer(r.sigma_count + 1) + 1);
  std::vector<ShelfTerm> stair;
  for (int i = 1; i <= n; ++i) stair.push_back(ShelfTerm::leaf(spacing * i));
  auto y = apply_word(p, w, stair);
  const Permutation back = r.forgetful.inverse();
  for (int pos = 1; pos <= n; ++pos) {
    TermInvariants inv = term_invariants(y[pos - 1]);
    Integer owner = nearest_multiple(inv.first.sub, spacing);
    if (owner != back(pos)) throw DomainError("strand owner disagrees with the recovered permutation");
    auto& under = r.under[back(pos) - 1];
    for (const auto& l : inv.first_multiset) {
      Integer s = nearest_multiple(l.sub, spacing);
      if (s < 1 || s > n) throw DomainError("subscript drifted outside the strand range");
      under.push_back(static_cast<int>(s.get_si()));
    }
    std::sort(under.begin(), under.end());
  }
  return r;
}

}  // namespace vbraid
