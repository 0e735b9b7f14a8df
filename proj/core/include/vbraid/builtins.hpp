#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vbraid/action.hpp"
#include "vbraid/gsd.hpp"
#include "vbraid/linrep.hpp"
#include "vbraid/sdstruct.hpp"

namespace vbraid {

// Basis (1, x) with x^2 = 0.
StructureConstants dual_numbers();
// Basis (e1, e2) with [e1, e2] = e1 and all other brackets zero.
StructureConstants leibniz_solv2();
// Permutations of {1,2,3} in lexicographic order, composed as functions.
Table s3_table();

std::vector<std::string> builtin_names();

// trivial<m>, dihedral<m>, alexander<m>,<t>, cyclic<m>, laver<n>.
std::optional<FiniteRackTable> builtin_rack(const std::string& name);

// Builtin name or path to a JSON file.
FiniteRackTable resolve_rack(const std::string& spec);
LinearBraidedObject resolve_object(const std::string& spec);
GsdStructure resolve_gsd(const std::string& spec);

struct ActionDistinction {
  Verdict verdict = Verdict::NotDistinguished;
  std::size_t probes = 0;
  std::optional<std::string> witness;
  std::optional<std::pair<std::string, std::string>> outputs;
};

struct ActionScan {
  std::size_t words = 0;
  std::size_t probes = 0;
  std::vector<std::pair<std::string, std::string>> collisions;
  std::vector<std::pair<std::string, std::string>> undecided;
};

// Type-erased braid action with textual tuples: elements separated by ','.
class ActionAdapter {
 public:
  virtual ~ActionAdapter() = default;
  virtual std::string name() const = 0;
  virtual std::string act(const VirtualBraidWord& w, const std::string& tuple) const = 0;
  virtual ActionDistinction distinguish(const VirtualBraidWord& w1, const VirtualBraidWord& w2) const = 0;
  virtual ActionScan scan(const ScanOptions& opt) const = 0;
  virtual PairReport validate() const = 0;
};

struct ActionConfig {
  SearchBudget budget;
  std::uint64_t seed = 0;
  // Finite carriers use every tuple up to this many; beyond it a seeded
  // mt19937_64 sample of this size is drawn.
  std::size_t max_probes = 4096;
};

// cyclic-rack, conj-free<n>, vconj<n>, free-shelf, free-virtual-shelf, any
// finite rack name, or a rack table file (with f the action is virtual).
std::unique_ptr<ActionAdapter> resolve_action(const std::string& spec, const ActionConfig& config = {});

std::vector<std::string> split_csv(const std::string& text);

}  // namespace vbraid
