#include "vbraid/gsd.hpp"

namespace vbraid {

TensorAlgebra::TensorAlgebra(int d) : d_(d) {
  if (d < 1) throw DomainError("object rank must be positive");
}

std::size_t TensorAlgebra::power(int k) const {
  std::size_t out = 1;
  for (int i = 0; i < k; ++i) out *= static_cast<std::size_t>(d_);
  return out;
}

RingMatrix TensorAlgebra::at(const RingMatrix& phi, int arity, int i, int k) const {
  if (i < 1 || i + arity - 1 > k) throw DomainError("tensor position out of range");
  if (phi.cols() != power(arity)) throw DomainError("morphism arity does not match its matrix");
  return kron(kron(id(i - 1), phi), id(k - i - arity + 1));
}

RingMatrix TensorAlgebra::permutation(const std::vector<int>& perm) const {
  const int k = static_cast<int>(perm.size());
  std::vector<bool> seen(k, false);
  for (int p : perm) {
    if (p < 1 || p > k || seen[p - 1]) throw DomainError("not a permutation");
    seen[p - 1] = true;
  }
  const std::size_t n = power(k);
  RingMatrix out(n, n);
  std::vector<int> digits(k), moved(k);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t rest = col;
    for (int p = k - 1; p >= 0; --p) {
      digits[p] = static_cast<int>(rest % d_);
      rest /= d_;
    }
    for (int p = 0; p < k; ++p) moved[perm[p] - 1] = digits[p];
    std::size_t row = 0;
    for (int p = 0; p < k; ++p) row = row * d_ + moved[p];
    out.set(row, col, 1);
  }
  return out;
}

const char* to_string(Backend b) { return b == Backend::Set ? "set" : "linear"; }

std::vector<std::string> GsdReport::failures() const {
  std::vector<std::string> out;
  if (!coassociative) out.emplace_back("coassociativity");
  if (!weakly_cocommutative) out.emplace_back("weak_cocommutativity");
  if (!gsd) out.emplace_back("gsd");
  if (!compatible) out.emplace_back("bialgebra_compatibility");
  if (right_counit && !*right_counit) out.emplace_back("right_counit");
  if (twisted_inverse && !*twisted_inverse) out.emplace_back("twisted_inverse");
  return out;
}

void check_shapes(const GsdStructure& g) {
  TensorAlgebra T(g.dim);
  auto expect = [](const RingMatrix& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c) throw DomainError(std::string(what) + " has the wrong shape");
  };
  expect(g.delta, T.power(2), T.power(1), "delta");
  expect(g.triangle, T.power(1), T.power(2), "triangle");
  expect(g.c, T.power(2), T.power(2), "symmetry");
  if (g.counit) expect(*g.counit, 1, T.power(1), "counit");
  if (g.triangle_tilde) expect(*g.triangle_tilde, T.power(1), T.power(2), "triangle_tilde");
}

GsdReport validate(const GsdStructure& g) {
  check_shapes(g);
  const TensorAlgebra T(g.dim);
  const RingMatrix& D = g.delta;
  const RingMatrix& L = g.triangle;
  const RingMatrix& c = g.c;
  GsdReport r;

  const RingMatrix delta2 = T.at(D, 1, 1, 2) * D;
  const RingMatrix delta3 = T.at(D, 1, 1, 3) * delta2;
  r.coassociative = delta2 == T.at(D, 1, 2, 2) * D;
  r.weakly_cocommutative = T.at(c, 2, 2, 4) * delta3 == delta3;

  const RingMatrix lhs_sd = L * T.at(L, 2, 1, 3);
  const RingMatrix rhs_sd = L * kron(L, L) * T.at(c, 2, 2, 4) * T.at(D, 1, 3, 3);
  r.gsd = lhs_sd == rhs_sd;

  r.compatible = D * L == kron(L, L) * T.at(c, 2, 2, 4) * kron(D, D);

  if (g.counit) {
    const RingMatrix& e = *g.counit;
    r.right_counit = T.at(e, 1, 2, 2) * D == T.id(1);
    if (g.triangle_tilde) {
      const RingMatrix& Lt = *g.triangle_tilde;
      const RingMatrix tail = T.at(c, 2, 2, 3) * T.at(D, 1, 2, 2);
      const RingMatrix target = kron(T.id(1), e);
      r.twisted_inverse = Lt * T.at(L, 2, 1, 3) * tail == target && L * T.at(Lt, 2, 1, 3) * tail == target;
    }
  }

  r.left_cocommutative = T.at(c, 2, 1, 3) * delta2 == delta2;
  r.delta_idempotent = L * D == T.id(1);
  return r;
}

namespace {

RingMatrix set_map_matrix(int m, int in_arity, int out_arity, const std::vector<std::vector<int>>& images) {
  TensorAlgebra T(m);
  RingMatrix out(T.power(out_arity), T.power(in_arity));
  for (std::size_t col = 0; col < images.size(); ++col) {
    std::size_t row = 0;
    for (int v : images[col]) {
      if (v < 0 || v >= m) throw DomainError("set map value out of range");
      row = row * m + v;
    }
    out.set(row, col, 1);
  }
  return out;
}

RingMatrix table_matrix(int m, const Table& t) {
  if (static_cast<int>(t.size()) != m) throw DomainError("operation table has wrong size");
  std::vector<std::vector<int>> images;
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != m) throw DomainError("operation table has wrong size");
    for (int v : row) images.push_back({v});
  }
  return set_map_matrix(m, 2, 1, images);
}

}  // namespace

GsdStructure from_set_data(const SetGsdData& data, const std::string& name) {
  const int m = data.size;
  if (m < 1) throw DomainError("carrier must be nonempty");
  if (static_cast<int>(data.delta.size()) != m) throw DomainError("delta must list one pair per element");
  GsdStructure g;
  g.name = name;
  g.backend = Backend::Set;
  g.dim = m;
  std::vector<std::vector<int>> images;
  for (auto [a, b] : data.delta) images.push_back({a, b});
  g.delta = set_map_matrix(m, 1, 2, images);
  g.triangle = table_matrix(m, data.triangle);
  g.counit = all_ones_covector(m);
  if (data.triangle_tilde) g.triangle_tilde = table_matrix(m, *data.triangle_tilde);
  g.c = flip_matrix(m, Mode::Tensor);
  return g;
}

GsdStructure from_finite_shelf(const FiniteRackTable& table) {
  Classification cls = classify(table);
  if (cls.cls == RackClass::NotShelf) throw DomainError("table is not a shelf");
  SetGsdData data;
  data.size = table.size;
  for (int a = 0; a < table.size; ++a) data.delta.emplace_back(a, a);
  data.triangle = table.op;
  data.triangle_tilde = cls.inverse;
  return from_set_data(data, "shelf");
}

GsdStructure from_uaa(const StructureConstants& sc) {
  if (!has_right_unit(sc)) throw DomainError("nu is not a right unit");
  const std::size_t d = sc.dim;
  GsdStructure g;
  g.name = "uaa";
  g.backend = Backend::Linear;
  g.dim = sc.dim;
  g.delta = RingMatrix(d * d, d);
  for (std::size_t v = 0; v < d; ++v)
    for (std::size_t l = 0; l < d; ++l) g.delta.set(l * d + v, v, LaurentPoly(sc.nu[l]));
  g.triangle = RingMatrix(d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) g.triangle.add_to(k, i * d + j, LaurentPoly(sc.mu[i][j][k]));
  g.c = flip_matrix(sc.dim, Mode::Tensor);
  return g;
}

GsdStructure from_leibniz(const StructureConstants& sc) {
  if (!sc.bracket) throw DomainError("structure constants carry no bracket");
  const auto& br = *sc.bracket;
  const std::size_t d = br.size();
  if (d == 0) throw DomainError("bracket dimension must be positive");
  for (const auto& row : br) {
    if (row.size() != d) throw DomainError("bracket has wrong shape");
    for (const auto& v : row)
      if (v.size() != d) throw DomainError("bracket has wrong shape");
  }
  const std::size_t D = d + 1;
  GsdStructure g;
  g.name = "leibniz";
  g.backend = Backend::Linear;
  g.dim = static_cast<int>(D);
  g.delta = RingMatrix(D * D, D);
  g.delta.set(0, 0, 1);
  for (std::size_t a = 1; a < D; ++a) {
    g.delta.set(a * D, a, 1);
    g.delta.set(a, a, 1);
  }
  RingMatrix counit(1, D);
  counit.set(0, 0, 1);
  g.counit = counit;
  g.triangle = RingMatrix(D, D * D);
  RingMatrix tilde(D, D * D);
  for (std::size_t a = 0; a < D; ++a) {
    g.triangle.set(a, a * D, 1);
    tilde.set(a, a * D, 1);
  }
  for (std::size_t a = 1; a < D; ++a)
    for (std::size_t b = 1; b < D; ++b)
      for (std::size_t k = 1; k < D; ++k) {
        const Integer& v = br[a - 1][b - 1][k - 1];
        g.triangle.add_to(k, a * D + b, LaurentPoly(v));
        tilde.add_to(k, a * D + b, LaurentPoly(-v));
      }
  g.triangle_tilde = tilde;
  g.c = flip_matrix(g.dim, Mode::Tensor);
  return g;
}

GsdStructure from_hopf_group(const Table& group) {
  FiniteRackTable conj = conjugation_quandle(group);
  GsdStructure g = from_finite_shelf(conj);
  g.name = "group-hopf";
  g.backend = Backend::Linear;
  return g;
}

GsdStructure from_linear(int dim, RingMatrix delta, RingMatrix triangle, std::optional<RingMatrix> counit,
                         std::optional<RingMatrix> triangle_tilde, const std::string& name) {
  GsdStructure g;
  g.name = name;
  g.backend = Backend::Linear;
  g.dim = dim;
  g.delta = std::move(delta);
  g.triangle = std::move(triangle);
  g.counit = std::move(counit);
  g.triangle_tilde = std::move(triangle_tilde);
  g.c = flip_matrix(dim, Mode::Tensor);
  check_shapes(g);
  return g;
}

namespace {

GsdReport require_shelf(const GsdStructure& g) {
  GsdReport r = validate(g);
  if (!r.is_shelf()) {
    std::string msg = "structure '" + g.name + "' is not a shelf; failed:";
    for (const auto& f : r.failures()) msg += " " + f;
    throw DomainError(msg);
  }
  return r;
}

}  // namespace

RingMatrix braiding_of(const GsdStructure& g) {
  require_shelf(g);
  const TensorAlgebra T(g.dim);
  return T.at(g.triangle, 2, 2, 3) * T.at(g.c, 2, 1, 3) * T.at(g.delta, 1, 2, 2);
}

std::optional<RingMatrix> braiding_inverse_of(const GsdStructure& g) {
  GsdReport r = require_shelf(g);
  if (!r.is_rack()) return std::nullopt;
  const TensorAlgebra T(g.dim);
  const RingMatrix c2 = T.at(g.c, 2, 2, 3);
  return T.at(*g.triangle_tilde, 2, 1, 3) * c2 * T.at(g.c, 2, 1, 3) * c2 * T.at(g.delta, 1, 1, 2);
}

LinearBraidedObject to_braided_object(const GsdStructure& g) {
  LinearBraidedObject o;
  o.name = g.name;
  o.dim = g.dim;
  o.mode = Mode::Tensor;
  o.sigma = braiding_of(g);
  o.sigma_inv = braiding_inverse_of(g);
  o.c = g.c;
  return o;
}

CoalgebraReport braided_coalgebra_check(const RingMatrix& sigma, const RingMatrix& delta, int dim) {
  const TensorAlgebra T(dim);
  if (sigma.rows() != T.power(2) || sigma.cols() != T.power(2)) throw DomainError("braiding has the wrong shape");
  if (delta.rows() != T.power(2) || delta.cols() != T.power(1)) throw DomainError("delta has the wrong shape");
  const RingMatrix s1 = T.at(sigma, 2, 1, 3);
  const RingMatrix s2 = T.at(sigma, 2, 2, 3);
  CoalgebraReport r;
  r.semi = T.at(delta, 1, 2, 2) * sigma == s1 * s2 * T.at(delta, 1, 1, 2);
  r.second = T.at(delta, 1, 1, 2) * sigma == s2 * s1 * T.at(delta, 1, 2, 2);
  r.cocommutative = sigma * delta == delta;
  return r;
}

CoalgebraReport braided_coalgebra_check(const GsdStructure& g) {
  return braided_coalgebra_check(braiding_of(g), g.delta, g.dim);
}

bool is_character(const GsdStructure& g, const RingMatrix& eps) {
  check_shapes(g);
  if (eps.rows() != 1 || eps.cols() != static_cast<std::size_t>(g.dim)) throw DomainError("character has wrong shape");
  const RingMatrix ee = kron(eps, eps);
  return ee * g.delta == eps && eps * g.triangle == ee;
}

bool is_upper_cut(const RingMatrix& sigma, const RingMatrix& eps) {
  const RingMatrix ee = kron(eps, eps);
  if (ee.cols() != sigma.rows()) throw DomainError("cut and braiding dimensions differ");
  return ee * sigma == ee;
}

RingMatrix all_ones_covector(int dim) {
  RingMatrix e(1, dim);
  for (int i = 0; i < dim; ++i) e.set(0, i, 1);
  return e;
}

}  // namespace vbraid
