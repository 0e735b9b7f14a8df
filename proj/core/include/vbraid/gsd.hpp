#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vbraid/linrep.hpp"
#include "vbraid/matrix.hpp"
#include "vbraid/sdstruct.hpp"

namespace vbraid {

// Morphisms between tensor powers of a rank-d object, as matrices with
// d^out rows and d^in columns. Tuple indices are row-major.
class TensorAlgebra {
 public:
  explicit TensorAlgebra(int d);
  int dim() const { return d_; }
  std::size_t power(int k) const;
  RingMatrix id(int k) const { return RingMatrix::identity(power(k)); }
  // Id^(i-1) (x) phi (x) Id^(k-i-arity+1) on k input factors.
  RingMatrix at(const RingMatrix& phi, int arity, int i, int k) const;
  // Moves the factor at position p (1-based) to position perm[p-1].
  RingMatrix permutation(const std::vector<int>& perm) const;

 private:
  int d_;
};

enum class Backend { Set, Linear };
const char* to_string(Backend b);

// Set maps are stored through their linearization: every Set morphism is a
// 0/1 matrix with one nonzero per column.
struct GsdStructure {
  std::string name;
  Backend backend = Backend::Linear;
  int dim = 0;
  RingMatrix delta;     // d^2 x d
  RingMatrix triangle;  // d x d^2
  std::optional<RingMatrix> counit;  // 1 x d
  std::optional<RingMatrix> triangle_tilde;
  RingMatrix c;  // symmetric braiding on two factors
};

struct SetGsdData {
  int size = 0;
  std::vector<std::pair<int, int>> delta;  // 0-indexed
  Table triangle;
  std::optional<Table> triangle_tilde;
};

struct GsdReport {
  bool coassociative = false;
  bool weakly_cocommutative = false;
  bool gsd = false;
  bool compatible = false;
  std::optional<bool> right_counit;
  std::optional<bool> twisted_inverse;
  bool left_cocommutative = false;
  bool delta_idempotent = false;

  bool is_shelf() const { return coassociative && weakly_cocommutative && gsd && compatible; }
  bool is_rack() const { return is_shelf() && right_counit.value_or(false) && twisted_inverse.value_or(false); }
  bool is_spindle() const { return is_shelf() && left_cocommutative && delta_idempotent; }
  // Names of the failed axioms, in declaration order.
  std::vector<std::string> failures() const;
};

void check_shapes(const GsdStructure& g);
GsdReport validate(const GsdStructure& g);

GsdStructure from_set_data(const SetGsdData& data, const std::string& name = "set");
GsdStructure from_finite_shelf(const FiniteRackTable& table);
// Delta(v) = nu (x) v and triangle = mu; no counit is attached.
GsdStructure from_uaa(const StructureConstants& sc);
// On the unit extension with index 0 for the adjoined unit.
GsdStructure from_leibniz(const StructureConstants& sc);
GsdStructure from_hopf_group(const Table& group);
GsdStructure from_linear(int dim, RingMatrix delta, RingMatrix triangle, std::optional<RingMatrix> counit = {},
                         std::optional<RingMatrix> triangle_tilde = {}, const std::string& name = "linear");

// Throws unless g is a shelf; the inverse is attached iff g is a rack.
RingMatrix braiding_of(const GsdStructure& g);
std::optional<RingMatrix> braiding_inverse_of(const GsdStructure& g);
// Tensor-mode braided object with sigma = braiding_of(g) and c = g.c.
LinearBraidedObject to_braided_object(const GsdStructure& g);

struct CoalgebraReport {
  bool semi = false;       // Delta_2 sigma = sigma_1 sigma_2 Delta_1
  bool second = false;     // Delta_1 sigma = sigma_2 sigma_1 Delta_2
  bool cocommutative = false;  // sigma Delta = Delta
  bool braided() const { return semi && second; }
};

CoalgebraReport braided_coalgebra_check(const RingMatrix& sigma, const RingMatrix& delta, int dim);
CoalgebraReport braided_coalgebra_check(const GsdStructure& g);

// (eps (x) eps) Delta = eps and eps triangle = eps (x) eps.
bool is_character(const GsdStructure& g, const RingMatrix& eps);
// (eps (x) eps) sigma = eps (x) eps.
bool is_upper_cut(const RingMatrix& sigma, const RingMatrix& eps);
RingMatrix all_ones_covector(int dim);

}  // namespace vbraid
