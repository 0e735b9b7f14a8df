#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vbraid/gsd.hpp"
#include "vbraid/linrep.hpp"
#include "vbraid/matrix.hpp"

namespace vbraid {

// Chain groups C_0..C_N. faces[n][i-1] : C_n -> C_{n-1} for 1 <= i <= n;
// degeneracies[n][i-1] : C_n -> C_{n+1} for 1 <= i <= n and n + 1 <= N.
struct PresimplicialComplex {
  int max_degree = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<RingMatrix>> faces;
  std::optional<std::vector<std::vector<RingMatrix>>> faces2;
  std::optional<std::vector<std::vector<RingMatrix>>> degeneracies;
};

// Throws DomainError when eps is not compatible with obj.sigma.
PresimplicialComplex faces_from_braiding(const LinearBraidedObject& obj, const RingMatrix& eps, int max_degree);
// Requires Delta_2 sigma = sigma_1 sigma_2 Delta_1.
PresimplicialComplex degeneracies_from_delta(const PresimplicialComplex& complex, const LinearBraidedObject& obj,
                                             const RingMatrix& delta);
// Both face families plus s_i = Delta_i; eps must be a character of g.
PresimplicialComplex gsd_faces(const GsdStructure& g, const RingMatrix& eps, int max_degree);
// Shuffle on 2i-1 factors: p <= i-1 goes to 2p, i+q goes to 2q+1.
std::vector<int> shuffle_permutation(int i);

enum class Level { None, Presimplicial, VeryWeak, Weak, Simplicial };
const char* to_string(Level l);

struct FamilyReport {
  // Identity name (simpl1..simpl6) to whether it holds.
  std::map<std::string, bool> identities;
  Level level = Level::None;
  std::vector<std::string> failing() const;
};

struct ComplexReport {
  FamilyReport first;
  std::optional<FamilyReport> second;
  std::optional<bool> mixed_prime;        // d_i d'_j = d'_{j-1} d_i
  std::optional<bool> mixed_double_prime;  // d'_i d_j = d_{j-1} d'_i
};

ComplexReport validate_complex(const PresimplicialComplex& complex);

// boundary[n] : C_n -> C_{n-1}; boundary[0] has zero rows.
// alpha * sum (-1)^(i-1) d_i + beta * sum (-1)^(i-1) d'_i.
std::vector<RingMatrix> total_differential(const PresimplicialComplex& complex, const Integer& alpha,
                                           const Integer& beta);
bool squares_to_zero(const std::vector<RingMatrix>& boundary);
// Both total differentials square to zero and anticommute.
bool is_bidifferential(const PresimplicialComplex& complex);

struct DegreeHomology {
  int degree = 0;
  std::size_t rank = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;
};

struct HomologyResult {
  std::vector<DegreeHomology> degrees;
};

// Homology in degrees 0..N-1 of a complex with boundaries up to degree N.
// Throws DomainError when the boundary does not square to zero.
HomologyResult homology_of(const std::vector<std::size_t>& ranks, const std::vector<RingMatrix>& boundary);
HomologyResult homology_of(const PresimplicialComplex& complex, const Integer& alpha, const Integer& beta);

// Column space of a contained in that of b, over the integers.
bool column_space_contains(const RingMatrix& b, const RingMatrix& a);
// Span of all degeneracies landing in C_n, as columns.
RingMatrix degenerate_span(const PresimplicialComplex& complex, int n);
// Homology of C/D. Requires D_n to be a direct summand and a subcomplex.
HomologyResult normalized_homology(const PresimplicialComplex& complex, const Integer& alpha, const Integer& beta);

// Alternating sums of chain ranks and of Betti numbers for the truncated
// complex C_0..C_N with the top boundary taken as zero.
std::pair<long, long> euler_characteristics(const std::vector<std::size_t>& ranks,
                                            const std::vector<RingMatrix>& boundary);

}  // namespace vbraid
