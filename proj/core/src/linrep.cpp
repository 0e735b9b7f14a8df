#include "vbraid/linrep.hpp"

namespace vbraid {

const char* to_string(Mode m) { return m == Mode::Sum ? "sum" : "tensor"; }

std::size_t two_strand_dim(int d, Mode mode) {
  return mode == Mode::Sum ? static_cast<std::size_t>(2 * d) : static_cast<std::size_t>(d * d);
}

RingMatrix flip_matrix(int d, Mode mode) {
  const std::size_t n = two_strand_dim(d, mode);
  RingMatrix c(n, n);
  if (mode == Mode::Sum) {
    for (int i = 0; i < d; ++i) {
      c.set(i, d + i, 1);
      c.set(d + i, i, 1);
    }
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) c.set(j * d + i, i * d + j, 1);
  }
  return c;
}

RingMatrix pair_map(const RingMatrix& f, const RingMatrix& g, Mode mode) {
  return mode == Mode::Sum ? direct_sum(f, g) : kron(f, g);
}

namespace {

using Tensor3 = std::vector<std::vector<std::vector<Integer>>>;

void check_constants(const StructureConstants& sc) {
  const auto d = static_cast<std::size_t>(sc.dim);
  if (sc.dim < 1) throw DomainError("algebra dimension must be positive");
  auto check_tensor = [d](const Tensor3& t, const char* what) {
    if (t.size() != d) throw DomainError(std::string(what) + " has wrong shape");
    for (const auto& row : t) {
      if (row.size() != d) throw DomainError(std::string(what) + " has wrong shape");
      for (const auto& v : row)
        if (v.size() != d) throw DomainError(std::string(what) + " has wrong shape");
    }
  };
  check_tensor(sc.mu, "mu");
  if (sc.nu.size() != d) throw DomainError("nu has wrong length");
  if (sc.bracket) check_tensor(*sc.bracket, "bracket");
}

std::vector<Integer> bilinear(const Tensor3& t, const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t d = t.size();
  std::vector<Integer> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      Integer ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k) out[k] += ab * t[i][j][k];
    }
  }
  return out;
}

std::vector<Integer> basis(std::size_t d, std::size_t i) {
  std::vector<Integer> v(d);
  v[i] = 1;
  return v;
}

}  // namespace

bool is_associative(const StructureConstants& sc) {
  check_constants(sc);
  const std::size_t d = sc.dim;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        auto ea = basis(d, a), eb = basis(d, b), ec = basis(d, c);
        if (bilinear(sc.mu, bilinear(sc.mu, ea, eb), ec) != bilinear(sc.mu, ea, bilinear(sc.mu, eb, ec))) return false;
      }
  return true;
}

bool has_right_unit(const StructureConstants& sc) {
  check_constants(sc);
  for (std::size_t a = 0; a < static_cast<std::size_t>(sc.dim); ++a)
    if (bilinear(sc.mu, basis(sc.dim, a), sc.nu) != basis(sc.dim, a)) return false;
  return true;
}

bool has_left_unit(const StructureConstants& sc) {
  check_constants(sc);
  for (std::size_t a = 0; a < static_cast<std::size_t>(sc.dim); ++a)
    if (bilinear(sc.mu, sc.nu, basis(sc.dim, a)) != basis(sc.dim, a)) return false;
  return true;
}

bool leibniz_identity_holds(const Tensor3& br, int dim) {
  const std::size_t d = dim;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        auto v = basis(d, a), w = basis(d, b), u = basis(d, c);
        auto lhs = bilinear(br, v, bilinear(br, w, u));
        auto r1 = bilinear(br, bilinear(br, v, w), u);
        auto r2 = bilinear(br, bilinear(br, v, u), w);
        for (std::size_t k = 0; k < d; ++k)
          if (lhs[k] != r1[k] - r2[k]) return false;
      }
  return true;
}

bool is_group_table(const Table& g) {
  const int m = static_cast<int>(g.size());
  if (m == 0) return false;
  for (const auto& row : g) {
    if (static_cast<int>(row.size()) != m) return false;
    for (int v : row)
      if (v < 0 || v >= m) return false;
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (g[g[a][b]][c] != g[a][g[b][c]]) return false;
  int e = -1;
  for (int x = 0; x < m && e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < m; ++y)
      if (g[x][y] != y || g[y][x] != y) ok = false;
    if (ok) e = x;
  }
  if (e < 0) return false;
  for (int x = 0; x < m; ++x) {
    bool has = false;
    for (int y = 0; y < m; ++y)
      if (g[x][y] == e && g[y][x] == e) has = true;
    if (!has) return false;
  }
  return true;
}

LinearBraidedObject burau_object() {
  const LaurentPoly t = LaurentPoly::var(Var::t);
  const LaurentPoly ti = LaurentPoly::var(Var::t, -1);
  LinearBraidedObject o;
  o.name = "burau";
  o.dim = 1;
  o.mode = Mode::Sum;
  o.sigma = RingMatrix::from_rows({{0, 1}, {t, 1 - t}});
  o.sigma_inv = RingMatrix::from_rows({{1 - ti, ti}, {1, 0}});
  o.c = flip_matrix(1, Mode::Sum);
  return o;
}

LinearBraidedObject twisted_burau_object() {
  const LaurentPoly u = LaurentPoly::var(Var::u);
  const LaurentPoly v = LaurentPoly::var(Var::v);
  const LaurentPoly ui = LaurentPoly::var(Var::u, -1);
  const LaurentPoly vi = LaurentPoly::var(Var::v, -1);
  LinearBraidedObject o;
  o.name = "twisted-burau";
  o.dim = 1;
  o.mode = Mode::Sum;
  o.sigma = RingMatrix::from_rows({{0, u}, {v, 1 - u * v}});
  o.sigma_inv = RingMatrix::from_rows({{1 - ui * vi, vi}, {ui, 0}});
  o.c = flip_matrix(1, Mode::Sum);
  return o;
}

LinearBraidedObject assoc_braiding(const StructureConstants& sc, Check check) {
  check_constants(sc);
  if (check == Check::Validate) {
    if (!is_associative(sc)) throw DomainError("multiplication is not associative");
    if (!has_left_unit(sc) || !has_right_unit(sc)) throw DomainError("nu is not a two-sided unit");
  }
  const std::size_t d = sc.dim;
  LinearBraidedObject o;
  o.name = "uaa";
  o.dim = sc.dim;
  o.mode = Mode::Tensor;
  o.sigma = RingMatrix(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k)
          o.sigma.add_to(l * d + k, i * d + j, LaurentPoly(sc.nu[l] * sc.mu[i][j][k]));
  o.c = flip_matrix(sc.dim, Mode::Tensor);
  return o;
}

LinearBraidedObject leibniz_braiding(const StructureConstants& sc, Check check) {
  if (!sc.bracket) throw DomainError("structure constants carry no bracket");
  const std::size_t d = sc.bracket->size();
  if (d == 0) throw DomainError("bracket dimension must be positive");
  if (check == Check::Validate && !leibniz_identity_holds(*sc.bracket, static_cast<int>(d)))
    throw DomainError("bracket violates the Leibniz identity");
  const std::size_t D = d + 1;  // index 0 is the adjoined unit
  LinearBraidedObject o;
  o.name = "leibniz";
  o.dim = static_cast<int>(D);
  o.mode = Mode::Tensor;
  o.c = flip_matrix(o.dim, Mode::Tensor);
  o.sigma = o.c;
  for (std::size_t a = 1; a < D; ++a)
    for (std::size_t b = 1; b < D; ++b)
      for (std::size_t k = 1; k < D; ++k)
        o.sigma.add_to(k, a * D + b, LaurentPoly((*sc.bracket)[a - 1][b - 1][k - 1]));
  o.sigma_inv = inverse(o.sigma);
  return o;
}

namespace {

struct GroupData {
  int e = -1;
  std::vector<int> inv;
};

GroupData group_data(const Table& g) {
  if (!is_group_table(g)) throw DomainError("invalid group table");
  GroupData out;
  const int m = static_cast<int>(g.size());
  for (int x = 0; x < m && out.e < 0; ++x) {
    bool ok = true;
    for (int y = 0; y < m; ++y)
      if (g[x][y] != y) ok = false;
    if (ok) out.e = x;
  }
  out.inv.assign(m, -1);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (g[x][y] == out.e) out.inv[x] = y;
  return out;
}

}  // namespace

LinearBraidedObject group_hopf_braiding(const Table& g) {
  GroupData gd = group_data(g);
  const std::size_t m = g.size();
  LinearBraidedObject o;
  o.name = "group-hopf";
  o.dim = static_cast<int>(m);
  o.mode = Mode::Tensor;
  o.sigma = RingMatrix(m * m, m * m);
  RingMatrix inv(m * m, m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t h = 0; h < m; ++h) {
      std::size_t conj = g[g[gd.inv[h]][a]][h];
      o.sigma.set(h * m + conj, a * m + h, 1);
      std::size_t back = g[g[h][a]][gd.inv[h]];
      inv.set(back * m + h, h * m + a, 1);
    }
  }
  o.sigma_inv = inv;
  o.c = flip_matrix(o.dim, Mode::Tensor);
  return o;
}

LinearBraidedObject linearize_rack(const FiniteRackTable& t) {
  Classification cls = classify(t);
  if (cls.cls == RackClass::NotShelf) throw DomainError("table is not a shelf");
  const std::size_t m = t.size;
  LinearBraidedObject o;
  o.name = "rack";
  o.dim = t.size;
  o.mode = Mode::Tensor;
  o.sigma = RingMatrix(m * m, m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) o.sigma.set(b * m + t.op[a][b], a * m + b, 1);
  if (cls.inverse) {
    RingMatrix inv(m * m, m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) inv.set((*cls.inverse)[b][a] * m + a, a * m + b, 1);
    o.sigma_inv = inv;
  }
  o.c = flip_matrix(o.dim, Mode::Tensor);
  if (t.f) {
    if (!*cls.f_automorphism) throw DomainError("f is not a shelf automorphism");
    RingMatrix f(m, m);
    std::vector<std::size_t> finv(m);
    for (std::size_t a = 0; a < m; ++a) {
      f.set((*t.f)[a], a, 1);
      finv[(*t.f)[a]] = a;
    }
    o.f = f;
    o.c = RingMatrix(m * m, m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) o.c.set(finv[b] * m + (*t.f)[a], a * m + b, 1);
  }
  return o;
}

LinearBraidedObject twist(const LinearBraidedObject& obj) {
  LinearBraidedObject o = obj;
  o.name = obj.name + "'";
  o.sigma = obj.c * obj.sigma * obj.c;
  if (obj.sigma_inv) o.sigma_inv = obj.c * *obj.sigma_inv * obj.c;
  return o;
}

namespace {

RingMatrix matrix_power(const RingMatrix& f, int k) {
  RingMatrix base = k < 0 ? inverse(f) : f;
  RingMatrix out = RingMatrix::identity(f.rows());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

void check_f(const LinearBraidedObject& obj, const RingMatrix& f) {
  if (f.rows() != static_cast<std::size_t>(obj.dim) || f.cols() != static_cast<std::size_t>(obj.dim))
    throw DomainError("f must be a dim x dim matrix");
}

}  // namespace

LinearBraidedObject deform_symmetry(const LinearBraidedObject& obj, const RingMatrix& f, int k) {
  check_f(obj, f);
  LinearBraidedObject o = obj;
  o.c = pair_map(matrix_power(f, -k), matrix_power(f, k), obj.mode) * obj.c;
  o.f = f;
  return o;
}

LinearBraidedObject conjugate_sigma(const LinearBraidedObject& obj, const RingMatrix& f) {
  check_f(obj, f);
  const RingMatrix fi = inverse(f);
  const RingMatrix left = pair_map(f, fi, obj.mode);
  const RingMatrix right = pair_map(fi, f, obj.mode);
  LinearBraidedObject o = obj;
  o.sigma = left * obj.sigma * right;
  if (obj.sigma_inv) o.sigma_inv = left * *obj.sigma_inv * right;
  return o;
}

LinearBraidedObject scale_off_diagonal(const LinearBraidedObject& obj, const LaurentPoly& lambda) {
  if (obj.mode != Mode::Sum) throw DomainError("block scaling needs a Sum-mode object");
  const LaurentPoly li = lambda.unit_inverse();
  const std::size_t d = obj.dim;
  auto scale = [&](const RingMatrix& m) {
    RingMatrix out(2 * d, 2 * d);
    for (std::size_t i = 0; i < 2 * d; ++i)
      for (const auto& [j, e] : m.row(i)) {
        bool top = i < d, leftcol = j < d;
        out.set(i, j, top == leftcol ? e : (top ? lambda * e : li * e));
      }
    return out;
  };
  LinearBraidedObject o = obj;
  o.sigma = scale(obj.sigma);
  if (obj.sigma_inv) o.sigma_inv = scale(*obj.sigma_inv);
  return o;
}

RingMatrix rho_generator(const LinearBraidedObject& obj, Generator g, int n) {
  if (g.index < 1 || g.index > n - 1) throw DomainError("generator " + to_string(g) + " out of range");
  const RingMatrix* block = nullptr;
  switch (g.kind) {
    case GenKind::Sigma: block = &obj.sigma; break;
    case GenKind::Zeta: block = &obj.c; break;
    case GenKind::SigmaInv:
      if (!obj.sigma_inv) throw DomainError("object '" + obj.name + "' has no inverse braiding");
      block = &*obj.sigma_inv;
      break;
  }
  const std::size_t d = obj.dim;
  const std::size_t i = g.index;
  if (obj.mode == Mode::Sum) {
    const std::size_t size = n * d;
    RingMatrix out = RingMatrix::identity(size);
    const std::size_t off = (i - 1) * d;
    for (std::size_t r = 0; r < 2 * d; ++r) out.set(off + r, off + r, 0);
    for (std::size_t r = 0; r < 2 * d; ++r)
      for (const auto& [cidx, e] : block->row(r)) out.set(off + r, off + cidx, e);
    return out;
  }
  std::size_t before = 1, after = 1;
  for (std::size_t k = 1; k < i; ++k) before *= d;
  for (std::size_t k = i + 1; k < static_cast<std::size_t>(n); ++k) after *= d;
  return kron(kron(RingMatrix::identity(before), *block), RingMatrix::identity(after));
}

RingMatrix rho_word(const LinearBraidedObject& obj, const VirtualBraidWord& w) {
  const int n = w.strands();
  std::size_t size = 1;
  if (obj.mode == Mode::Sum) {
    size = static_cast<std::size_t>(n * obj.dim);
  } else {
    for (int k = 0; k < n; ++k) size *= obj.dim;
  }
  RingMatrix out = RingMatrix::identity(size);
  for (const auto& g : w.letters()) out = out * rho_generator(obj, g, n);
  return out;
}

YbReport yb_check(const LinearBraidedObject& obj) {
  const std::size_t n2 = two_strand_dim(obj.dim, obj.mode);
  if (obj.sigma.rows() != n2 || obj.sigma.cols() != n2 || obj.c.rows() != n2 || obj.c.cols() != n2)
    throw DomainError("braiding matrices have the wrong size for dim " + std::to_string(obj.dim));
  YbReport r;
  auto rho = [&](const char* w) { return rho_word(obj, parse_word(w, 3)); };
  r.sigma_braid = rho("s1 s2 s1") == rho("s2 s1 s2");
  r.c_braid = rho("z1 z2 z1") == rho("z2 z1 z2");
  r.mixed = rho("z1 z2 s1") == rho("s2 z1 z2");
  r.c_involutive = obj.c * obj.c == RingMatrix::identity(n2);
  if (obj.sigma_inv) {
    r.inverse = obj.sigma * *obj.sigma_inv == RingMatrix::identity(n2) &&
                *obj.sigma_inv * obj.sigma == RingMatrix::identity(n2);
  }
  if (obj.f) {
    RingMatrix ff = pair_map(*obj.f, *obj.f, obj.mode);
    r.f_compatible = obj.sigma * ff == ff * obj.sigma;
  }
  return r;
}

bool invertible_check(const LinearBraidedObject& obj) {
  const std::size_t n2 = two_strand_dim(obj.dim, obj.mode);
  if (obj.sigma_inv) return obj.sigma * *obj.sigma_inv == RingMatrix::identity(n2);
  try {
    inverse(obj.sigma);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

bool intertwiner_check(const LinearBraidedObject& a, const LinearBraidedObject& b, const RingMatrix& p, int n,
                       const GeneratorMap& map) {
  const bool positive = !a.sigma_inv || !b.sigma_inv;
  for (const Generator& g : alphabet(n, positive)) {
    Generator h = map ? map(g) : g;
    RingMatrix lhs = p * rho_generator(a, g, n);
    RingMatrix rhs = rho_generator(b, h, n) * p;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

GeneratorMap mirror_map(int n) {
  return [n](Generator g) { return Generator{g.kind, n - g.index}; };
}

RingMatrix garside_intertwiner(const LinearBraidedObject& obj, int n) { return rho_word(obj, garside_word(n)); }

}  // namespace vbraid
