#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vbraid/braid.hpp"
#include "vbraid/matrix.hpp"
#include "vbraid/sdstruct.hpp"

namespace vbraid {

enum class Mode { Sum, Tensor };
const char* to_string(Mode m);

// In Sum mode the two-strand space is V + V (2d rows); in Tensor mode it is
// V (x) V with basis e_i (x) e_j at index i*d + j.
struct LinearBraidedObject {
  std::string name;
  int dim = 1;
  Mode mode = Mode::Sum;
  RingMatrix sigma;
  std::optional<RingMatrix> sigma_inv;
  RingMatrix c;
  std::optional<RingMatrix> f;
};

RingMatrix flip_matrix(int d, Mode mode);
// f (+) g in Sum mode, f (x) g in Tensor mode.
RingMatrix pair_map(const RingMatrix& f, const RingMatrix& g, Mode mode);
std::size_t two_strand_dim(int d, Mode mode);

struct StructureConstants {
  int dim = 0;
  std::vector<std::vector<std::vector<Integer>>> mu;  // e_i e_j = sum_k mu[i][j][k] e_k
  std::vector<Integer> nu;
  std::optional<std::vector<std::vector<std::vector<Integer>>>> bracket;
  std::optional<Table> group;
};

bool is_associative(const StructureConstants& sc);
bool has_right_unit(const StructureConstants& sc);  // mu(v, nu) = v
bool has_left_unit(const StructureConstants& sc);   // mu(nu, v) = v
bool leibniz_identity_holds(const std::vector<std::vector<std::vector<Integer>>>& bracket, int dim);
// Multiplication table validity: associativity, identity, inverses.
bool is_group_table(const Table& g);

enum class Check { Validate, Skip };

LinearBraidedObject burau_object();
LinearBraidedObject twisted_burau_object();
LinearBraidedObject assoc_braiding(const StructureConstants& sc, Check check = Check::Validate);
LinearBraidedObject leibniz_braiding(const StructureConstants& sc, Check check = Check::Validate);
LinearBraidedObject group_hopf_braiding(const Table& group);
// Tensor-mode linearization of (a, b) -> (b, a op b); c is deformed by f when
// the table carries one.
LinearBraidedObject linearize_rack(const FiniteRackTable& table);

LinearBraidedObject twist(const LinearBraidedObject& obj);
// Replaces c by (f^-k (x) f^k) c.
LinearBraidedObject deform_symmetry(const LinearBraidedObject& obj, const RingMatrix& f, int k = 1);
// Replaces sigma by (f (x) f^-1) sigma (f^-1 (x) f).
LinearBraidedObject conjugate_sigma(const LinearBraidedObject& obj, const RingMatrix& f);
// Sum mode: block [[A, lambda B], [lambda^-1 C, D]].
LinearBraidedObject scale_off_diagonal(const LinearBraidedObject& obj, const LaurentPoly& lambda);

RingMatrix rho_generator(const LinearBraidedObject& obj, Generator g, int n);
RingMatrix rho_word(const LinearBraidedObject& obj, const VirtualBraidWord& w);

struct YbReport {
  bool sigma_braid = false;
  bool c_braid = false;
  bool c_involutive = false;
  bool mixed = false;
  std::optional<bool> inverse;
  std::optional<bool> f_compatible;
  bool ok() const {
    return sigma_braid && c_braid && c_involutive && mixed && inverse.value_or(true) && f_compatible.value_or(true);
  }
};

YbReport yb_check(const LinearBraidedObject& obj);
bool invertible_check(const LinearBraidedObject& obj);

using GeneratorMap = std::function<Generator(Generator)>;
// P rho_A(g) = rho_B(map(g)) P for every generator g on n strands.
bool intertwiner_check(const LinearBraidedObject& a, const LinearBraidedObject& b, const RingMatrix& p, int n,
                       const GeneratorMap& map = {});
// Index reversal i -> n - i, kind preserved.
GeneratorMap mirror_map(int n);
// rho(Delta_n) computed through c.
RingMatrix garside_intertwiner(const LinearBraidedObject& obj, int n);

}  // namespace vbraid
