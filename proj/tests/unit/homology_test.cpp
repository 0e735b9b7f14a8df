#include <gtest/gtest.h>

#include "../support/oracles.hpp"
#include "vbraid/builtins.hpp"
#include "vbraid/io.hpp"

using namespace vbraid;

namespace {

RingMatrix augmentation() {
  RingMatrix e(1, 2);
  e.set(0, 0, 1);
  return e;
}

// Bar faces on the dual numbers written on basis tuples (0 = 1, 1 = x):
// d_1 drops the first letter through the augmentation, d_i multiplies
// letters i-1 and i.
RingMatrix bar_face(int n, int i) {
  const int m = 2;
  auto tuples = oracle::tuples(m, n);
  std::size_t rows = 1;
  for (int k = 0; k < n - 1; ++k) rows *= m;
  RingMatrix d(rows, tuples.size());
  for (const auto& x : tuples) {
    const std::size_t col = oracle::index_of(x, m);
    std::vector<int> out;
    if (i == 1) {
      if (x[0] != 0) continue;
      out.assign(x.begin() + 1, x.end());
    } else {
      const int a = x[i - 2], b = x[i - 1];
      if (a == 1 && b == 1) continue;
      out.assign(x.begin(), x.begin() + (i - 2));
      out.push_back(a + b);
      out.insert(out.end(), x.begin() + i, x.end());
    }
    d.set(oracle::index_of(out, m), col, 1);
  }
  return d;
}

}  // namespace

TEST(Faces, OneElementRackCollapses) {
  auto g = from_finite_shelf(trivial_quandle(1));
  auto cx = gsd_faces(g, all_ones_covector(1), 4);
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      EXPECT_EQ(cx.faces[n][i - 1], RingMatrix::identity(1));
      EXPECT_EQ((*cx.faces2)[n][i - 1], RingMatrix::identity(1));
    }
  for (const auto& d : total_differential(cx, 1, -1)) EXPECT_TRUE(d.is_zero());
}

TEST(Faces, FirstFaceHasNoActions) {
  auto g = from_finite_shelf(dihedral_quandle(3));
  auto cx = gsd_faces(g, all_ones_covector(3), 3);
  TensorAlgebra T(3);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(cx.faces[n][0], T.at(all_ones_covector(3), 1, 1, n));
}

TEST(Faces, GsdFacesAgreeWithBraidingFaces) {
  for (const char* name : {"dihedral3", "laver2", "cyclic2"}) {
    auto g = from_finite_shelf(resolve_rack(name));
    auto eps = all_ones_covector(g.dim);
    auto a = gsd_faces(g, eps, 3);
    auto b = faces_from_braiding(to_braided_object(g), eps, 3);
    EXPECT_EQ(a.faces, b.faces) << name;
    EXPECT_EQ(*a.faces2, *b.faces2) << name;
  }
}

TEST(Faces, RackFacesMatchDirectConstruction) {
  auto t = dihedral_quandle(3);
  auto cx = gsd_faces(from_finite_shelf(t), all_ones_covector(3), 3);
  auto bd = total_differential(cx, 1, -1);
  for (int n = 1; n <= 3; ++n) EXPECT_EQ(oracle::dense(bd[n]), oracle::rack_boundary(t, n)) << n;
}

TEST(Faces, UaaFacesAreBarFaces) {
  auto g = from_uaa(dual_numbers());
  auto cx = gsd_faces(g, augmentation(), 3);
  for (int n = 1; n <= 3; ++n)
    for (int i = 1; i <= n; ++i) EXPECT_EQ(cx.faces[n][i - 1], bar_face(n, i)) << n << "," << i;
  EXPECT_TRUE(squares_to_zero(total_differential(cx, 1, 0)));
}

TEST(Faces, RejectsNonCharacters) {
  auto g = from_finite_shelf(dihedral_quandle(3));
  RingMatrix e(1, 3);
  e.set(0, 1, 1);
  EXPECT_THROW(gsd_faces(g, e, 2), DomainError);
  EXPECT_THROW(gsd_faces(from_uaa(dual_numbers()), all_ones_covector(2), 2), DomainError);
}

TEST(Differential, SquaresToZeroAndAnticommutes) {
  auto cx = gsd_faces(from_finite_shelf(dihedral_quandle(3)), all_ones_covector(3), 4);
  EXPECT_TRUE(squares_to_zero(total_differential(cx, 1, -1)));
  EXPECT_TRUE(squares_to_zero(total_differential(cx, 2, 5)));
  EXPECT_TRUE(is_bidifferential(cx));
}

TEST(Levels, SpindlesAndAlgebrasAreWeaklySimplicial) {
  auto spindle = gsd_faces(from_finite_shelf(dihedral_quandle(3)), all_ones_covector(3), 3);
  EXPECT_EQ(validate_complex(spindle).first.level, Level::Weak);
  auto uaa = gsd_faces(from_uaa(dual_numbers()), augmentation(), 3);
  auto r = validate_complex(uaa).first;
  for (const char* k : {"simpl1", "simpl2", "simpl3", "simpl4", "simpl5"}) EXPECT_TRUE(r.identities.at(k)) << k;
}

TEST(Levels, NonIdempotentShelfFailsOnlySimpl5) {
  auto cx = gsd_faces(from_finite_shelf(cyclic_rack_mod(2)), all_ones_covector(2), 3);
  auto r = validate_complex(cx);
  EXPECT_EQ(r.first.level, Level::VeryWeak);
  for (const char* k : {"simpl1", "simpl2", "simpl3", "simpl4"}) EXPECT_TRUE(r.first.identities.at(k)) << k;
  EXPECT_FALSE(r.first.identities.at("simpl5"));
  ASSERT_TRUE(r.mixed_prime && r.mixed_double_prime);
  EXPECT_TRUE(*r.mixed_prime && *r.mixed_double_prime);
}

TEST(Homology, OneElementRackIsFreeInEveryDegree) {
  auto cx = gsd_faces(from_finite_shelf(trivial_quandle(1)), all_ones_covector(1), 5);
  auto h = homology_of(cx, 1, -1);
  ASSERT_EQ(h.degrees.size(), 5u);
  for (const auto& d : h.degrees) {
    EXPECT_EQ(d.betti, 1u);
    EXPECT_TRUE(d.torsion.empty());
  }
}

TEST(Homology, ZeroDifferentialGivesChains) {
  std::vector<std::size_t> ranks{1, 3, 9};
  std::vector<RingMatrix> bd{RingMatrix(0, 1), RingMatrix(1, 3), RingMatrix(3, 9)};
  auto h = homology_of(ranks, bd);
  EXPECT_EQ(h.degrees[0].betti, 1u);
  EXPECT_EQ(h.degrees[1].betti, 3u);
}

TEST(Homology, RackHomologyMatchesOracle) {
  for (const char* name : {"dihedral3", "cyclic2", "trivial2"}) {
    auto t = resolve_rack(name);
    auto cx = gsd_faces(from_finite_shelf(t), all_ones_covector(t.size), 4);
    auto h = homology_of(cx, 1, -1);
    auto o = oracle::rack_homology(t, 3);
    for (int n = 0; n <= 3; ++n) {
      EXPECT_EQ(h.degrees[n].betti, o[n].betti) << name << " H_" << n;
      EXPECT_EQ(h.degrees[n].torsion, o[n].torsion) << name << " H_" << n;
    }
  }
}

TEST(Homology, EulerCharacteristicsAgree) {
  auto cx = gsd_faces(from_finite_shelf(dihedral_quandle(3)), all_ones_covector(3), 3);
  auto bd = total_differential(cx, 1, -1);
  auto [chains, betti] = euler_characteristics(cx.ranks, bd);
  EXPECT_EQ(chains, betti);
}

TEST(Homology, RejectsNonComplexes) {
  std::vector<std::size_t> ranks{1, 1, 1};
  std::vector<RingMatrix> bd{RingMatrix(0, 1), RingMatrix::identity(1), RingMatrix::identity(1)};
  EXPECT_THROW(homology_of(ranks, bd), DomainError);
}

TEST(Normalized, DegenerateChainsOfASpindle) {
  auto cx = gsd_faces(from_finite_shelf(dihedral_quandle(3)), all_ones_covector(3), 4);
  auto span = degenerate_span(cx, 2);
  // Diagonal tuples (a, a) span the degenerate part in degree 2.
  EXPECT_EQ(span.cols() > 0, true);
  EXPECT_TRUE(column_space_contains(span, span));
  auto h = normalized_homology(cx, 1, -1);
  auto full = homology_of(cx, 1, -1);
  ASSERT_EQ(h.degrees.size(), full.degrees.size());
  // Degree 1 has no degeneracies landing in it.
  EXPECT_EQ(h.degrees[1].betti, full.degrees[1].betti);
}

TEST(Json, HomologyReport) {
  auto cx = gsd_faces(from_finite_shelf(dihedral_quandle(3)), all_ones_covector(3), 3);
  Json j = to_json(homology_of(cx, 1, -1));
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0].at("degree"), 0);
  EXPECT_TRUE(j[0].contains("rank") && j[0].contains("betti") && j[0].contains("torsion"));
}
