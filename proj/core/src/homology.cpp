#include "vbraid/homology.hpp"

#include "vbraid/snf.hpp"

namespace vbraid {

std::vector<int> shuffle_permutation(int i) {
  if (i < 1) throw DomainError("shuffle index must be positive");
  std::vector<int> perm(2 * i - 1);
  for (int p = 1; p <= i - 1; ++p) perm[p - 1] = 2 * p;
  for (int q = 0; q < i; ++q) perm[i + q - 1] = 2 * q + 1;
  return perm;
}

namespace {

PresimplicialComplex empty_complex(int dim, int max_degree) {
  if (max_degree < 0) throw DomainError("max degree must be nonnegative");
  TensorAlgebra T(dim);
  PresimplicialComplex out;
  out.max_degree = max_degree;
  for (int n = 0; n <= max_degree; ++n) out.ranks.push_back(T.power(n));
  out.faces.resize(max_degree + 1);
  return out;
}

std::vector<std::vector<RingMatrix>> delta_degeneracies(const TensorAlgebra& T, const RingMatrix& delta, int N) {
  std::vector<std::vector<RingMatrix>> s(std::max(N, 1));
  for (int n = 1; n + 1 <= N; ++n)
    for (int i = 1; i <= n; ++i) s[n].push_back(T.at(delta, 1, i, n));
  return s;
}

}  // namespace

PresimplicialComplex faces_from_braiding(const LinearBraidedObject& obj, const RingMatrix& eps, int max_degree) {
  if (obj.mode != Mode::Tensor) throw DomainError("faces need a tensor-mode braided object");
  const TensorAlgebra T(obj.dim);
  if (eps.rows() != 1 || eps.cols() != T.power(1)) throw DomainError("cut has the wrong shape");
  if (!is_upper_cut(obj.sigma, eps)) throw DomainError("cut is not compatible with the braiding");
  PresimplicialComplex out = empty_complex(obj.dim, max_degree);
  out.faces2.emplace(max_degree + 1);
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<RingMatrix> sig;
    for (int i = 1; i < n; ++i) sig.push_back(T.at(obj.sigma, 2, i, n));
    RingMatrix left = T.at(eps, 1, 1, n);
    for (int i = 1; i <= n; ++i) {
      if (i > 1) left = left * sig[i - 2];
      out.faces[n].push_back(left);
    }
    std::vector<RingMatrix> right(n);
    RingMatrix acc = T.at(eps, 1, n, n);
    for (int i = n; i >= 1; --i) {
      if (i < n) acc = acc * sig[i - 1];
      right[i - 1] = acc;
    }
    (*out.faces2)[n] = std::move(right);
  }
  return out;
}

PresimplicialComplex degeneracies_from_delta(const PresimplicialComplex& complex, const LinearBraidedObject& obj,
                                             const RingMatrix& delta) {
  if (!braided_coalgebra_check(obj.sigma, delta, obj.dim).semi)
    throw DomainError("comultiplication is not compatible with the braiding");
  PresimplicialComplex out = complex;
  out.degeneracies = delta_degeneracies(TensorAlgebra(obj.dim), delta, complex.max_degree);
  return out;
}

PresimplicialComplex gsd_faces(const GsdStructure& g, const RingMatrix& eps, int max_degree) {
  GsdReport rep = validate(g);
  if (!rep.is_shelf()) throw DomainError("structure '" + g.name + "' is not a shelf");
  if (!is_character(g, eps)) throw DomainError("cut is not a character of '" + g.name + "'");
  const TensorAlgebra T(g.dim);
  PresimplicialComplex out = empty_complex(g.dim, max_degree);
  out.faces2.emplace(max_degree + 1);

  const RingMatrix chi = T.at(eps, 1, 2, 2) * g.delta;
  std::vector<RingMatrix> head;  // head[i-1] : V^i -> V^(i-1)
  RingMatrix delta_pow = T.id(1);
  for (int i = 1; i <= max_degree; ++i) {
    if (i > 1) delta_pow = T.at(g.delta, 1, 1, i - 1) * delta_pow;
    RingMatrix spread = T.at(delta_pow, 1, i, i);
    RingMatrix shuffle = T.permutation(shuffle_permutation(i));
    RingMatrix act = kron(eps, kron_power(g.triangle, i - 1));
    head.push_back(act * shuffle * spread);
  }
  for (int n = 1; n <= max_degree; ++n) {
    for (int i = 1; i <= n; ++i) {
      out.faces[n].push_back(kron(head[i - 1], T.id(n - i)));
      (*out.faces2)[n].push_back(kron(kron(T.id(i - 1), eps), kron_power(chi, n - i)));
    }
  }
  out.degeneracies = delta_degeneracies(T, g.delta, max_degree);
  return out;
}

const char* to_string(Level l) {
  switch (l) {
    case Level::None: return "none";
    case Level::Presimplicial: return "presimplicial";
    case Level::VeryWeak: return "very-weakly-simplicial";
    case Level::Weak: return "weakly-simplicial";
    case Level::Simplicial: return "simplicial";
  }
  return "?";
}

std::vector<std::string> FamilyReport::failing() const {
  std::vector<std::string> out;
  for (const auto& [name, ok] : identities)
    if (!ok) out.push_back(name);
  return out;
}

namespace {

using Family = std::vector<std::vector<RingMatrix>>;

FamilyReport check_family(const Family& d, const std::optional<Family>& s, int N,
                          const std::vector<std::size_t>& ranks) {
  FamilyReport r;
  bool s1 = true;
  for (int n = 2; n <= N; ++n)
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if (!(d[n - 1][i - 1] * d[n][j - 1] == d[n - 1][j - 2] * d[n][i - 1])) s1 = false;
  r.identities["simpl1"] = s1;
  if (!s) {
    r.level = s1 ? Level::Presimplicial : Level::None;
    return r;
  }
  const Family& sg = *s;
  bool s2 = true, s3 = true, s4 = true, s5 = true, s6 = true;
  for (int n = 1; n + 2 <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= j; ++i)
        if (!(sg[n + 1][i - 1] * sg[n][j - 1] == sg[n + 1][j] * sg[n][i - 1])) s2 = false;
  for (int n = 1; n + 1 <= N; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i < j; ++i)
        if (!(d[n + 1][i - 1] * sg[n][j - 1] == sg[n - 1][j - 2] * d[n][i - 1])) s3 = false;
      for (int i = j + 2; i <= n; ++i)
        if (!(d[n + 1][i - 1] * sg[n][j - 1] == sg[n - 1][j - 1] * d[n][i - 2])) s4 = false;
    }
    const RingMatrix id = RingMatrix::identity(ranks[n]);
    for (int i = 1; i <= n; ++i) {
      RingMatrix lhs = d[n + 1][i - 1] * sg[n][i - 1];
      if (!(lhs == d[n + 1][i] * sg[n][i - 1])) s5 = false;
      if (!(lhs == id)) s6 = false;
    }
  }
  r.identities["simpl2"] = s2;
  r.identities["simpl3"] = s3;
  r.identities["simpl4"] = s4;
  r.identities["simpl5"] = s5;
  r.identities["simpl6"] = s6;
  if (!s1) r.level = Level::None;
  else if (!(s2 && s3 && s4)) r.level = Level::Presimplicial;
  else if (!s5) r.level = Level::VeryWeak;
  else if (!s6) r.level = Level::Weak;
  else r.level = Level::Simplicial;
  return r;
}

bool mixed_identity(const Family& a, const Family& b, int N) {
  for (int n = 2; n <= N; ++n)
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        if (!(a[n - 1][i - 1] * b[n][j - 1] == b[n - 1][j - 2] * a[n][i - 1])) return false;
  return true;
}

}  // namespace

ComplexReport validate_complex(const PresimplicialComplex& cx) {
  const int N = cx.max_degree;
  ComplexReport r;
  r.first = check_family(cx.faces, cx.degeneracies, N, cx.ranks);
  if (cx.faces2) {
    r.second = check_family(*cx.faces2, cx.degeneracies, N, cx.ranks);
    r.mixed_prime = mixed_identity(cx.faces, *cx.faces2, N);
    r.mixed_double_prime = mixed_identity(*cx.faces2, cx.faces, N);
  }
  return r;
}

std::vector<RingMatrix> total_differential(const PresimplicialComplex& cx, const Integer& alpha, const Integer& beta) {
  if (beta != 0 && !cx.faces2) throw DomainError("complex has no second face family");
  std::vector<RingMatrix> out;
  out.emplace_back(0, cx.ranks[0]);
  for (int n = 1; n <= cx.max_degree; ++n) {
    RingMatrix acc(cx.ranks[n - 1], cx.ranks[n]);
    for (int i = 1; i <= n; ++i) {
      const Integer sign = (i % 2 == 1) ? 1 : -1;
      if (alpha != 0) acc = acc + LaurentPoly(Integer(alpha * sign)) * cx.faces[n][i - 1];
      if (beta != 0) acc = acc + LaurentPoly(Integer(beta * sign)) * (*cx.faces2)[n][i - 1];
    }
    out.push_back(std::move(acc));
  }
  return out;
}

bool squares_to_zero(const std::vector<RingMatrix>& boundary) {
  for (std::size_t n = 2; n < boundary.size(); ++n)
    if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
  return true;
}

bool is_bidifferential(const PresimplicialComplex& cx) {
  if (!cx.faces2) return false;
  auto a = total_differential(cx, 1, 0);
  auto b = total_differential(cx, 0, 1);
  if (!squares_to_zero(a) || !squares_to_zero(b)) return false;
  for (std::size_t n = 2; n < a.size(); ++n)
    if (!(a[n - 1] * b[n] + b[n - 1] * a[n]).is_zero()) return false;
  return true;
}

namespace {

SnfResult snf_or_empty(const RingMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return smith_normal_form(m);
}

}  // namespace

HomologyResult homology_of(const std::vector<std::size_t>& ranks, const std::vector<RingMatrix>& boundary) {
  if (boundary.size() != ranks.size()) throw DomainError("boundary list does not match the chain ranks");
  if (!squares_to_zero(boundary)) throw DomainError("boundary does not square to zero");
  std::vector<SnfResult> forms;
  for (const auto& b : boundary) forms.push_back(snf_or_empty(b));
  HomologyResult out;
  for (std::size_t n = 0; n + 1 < boundary.size(); ++n) {
    DegreeHomology h;
    h.degree = static_cast<int>(n);
    h.rank = ranks[n];
    h.betti = ranks[n] - forms[n].rank - forms[n + 1].rank;
    for (const auto& d : forms[n + 1].diagonal)
      if (d > 1) h.torsion.push_back(d);
    out.degrees.push_back(std::move(h));
  }
  return out;
}

HomologyResult homology_of(const PresimplicialComplex& cx, const Integer& alpha, const Integer& beta) {
  return homology_of(cx.ranks, total_differential(cx, alpha, beta));
}

bool column_space_contains(const RingMatrix& b, const RingMatrix& a) {
  if (a.rows() != b.rows()) throw DomainError("column spaces live in different ranks");
  if (a.is_zero()) return true;
  if (b.cols() == 0 || b.rows() == 0) return false;
  SnfWithTransform t = smith_with_transform(b);
  IntMatrix av = to_int_matrix(a);
  const std::size_t r = b.rows();
  for (std::size_t col = 0; col < a.cols(); ++col) {
    for (std::size_t i = 0; i < r; ++i) {
      Integer v = 0;
      for (std::size_t k = 0; k < r; ++k)
        if (t.left[i][k] != 0 && av[k][col] != 0) v += t.left[i][k] * av[k][col];
      if (i < t.form.rank) {
        if (v % t.form.diagonal[i] != 0) return false;
      } else if (v != 0) {
        return false;
      }
    }
  }
  return true;
}

RingMatrix degenerate_span(const PresimplicialComplex& cx, int n) {
  std::size_t cols = 0;
  if (cx.degeneracies && n >= 2 && n <= cx.max_degree) cols = (n - 1) * cx.ranks[n - 1];
  RingMatrix out(cx.ranks[n], cols);
  if (cols == 0) return out;
  std::size_t off = 0;
  for (const auto& s : (*cx.degeneracies)[n - 1]) {
    for (std::size_t i = 0; i < s.rows(); ++i)
      for (const auto& [j, e] : s.row(i)) out.set(i, off + j, e);
    off += s.cols();
  }
  return out;
}

namespace {

// Projection onto C_n / D_n and a section of it.
struct Quotient {
  RingMatrix project;
  RingMatrix section;
  RingMatrix span;
};

Quotient quotient_at(const PresimplicialComplex& cx, int n) {
  Quotient q;
  q.span = degenerate_span(cx, n);
  const std::size_t r = cx.ranks[n];
  if (q.span.is_zero()) {
    q.project = RingMatrix::identity(r);
    q.section = RingMatrix::identity(r);
    return q;
  }
  SnfWithTransform t = smith_with_transform(q.span);
  for (std::size_t i = 0; i < t.form.rank; ++i)
    if (t.form.diagonal[i] != 1)
      throw DomainError("degenerate chains in degree " + std::to_string(n) + " are not a direct summand");
  const std::size_t k = t.form.rank;
  q.project = RingMatrix(r - k, r);
  q.section = RingMatrix(r, r - k);
  for (std::size_t i = k; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (t.left[i][j] != 0) q.project.set(i - k, j, LaurentPoly(t.left[i][j]));
      if (t.left_inverse[j][i] != 0) q.section.set(j, i - k, LaurentPoly(t.left_inverse[j][i]));
    }
  return q;
}

}  // namespace

HomologyResult normalized_homology(const PresimplicialComplex& cx, const Integer& alpha, const Integer& beta) {
  if (!cx.degeneracies) throw DomainError("complex has no degeneracies");
  auto boundary = total_differential(cx, alpha, beta);
  std::vector<Quotient> qs;
  for (int n = 0; n <= cx.max_degree; ++n) qs.push_back(quotient_at(cx, n));
  std::vector<std::size_t> ranks;
  std::vector<RingMatrix> reduced;
  for (int n = 0; n <= cx.max_degree; ++n) {
    ranks.push_back(qs[n].project.rows());
    if (n == 0) {
      reduced.emplace_back(0, ranks[0]);
      continue;
    }
    if (!(qs[n - 1].project * boundary[n] * qs[n].span).is_zero())
      throw DomainError("degenerate chains do not form a subcomplex in degree " + std::to_string(n));
    reduced.push_back(qs[n - 1].project * boundary[n] * qs[n].section);
  }
  return homology_of(ranks, reduced);
}

std::pair<long, long> euler_characteristics(const std::vector<std::size_t>& ranks,
                                            const std::vector<RingMatrix>& boundary) {
  std::vector<RingMatrix> closed = boundary;
  closed.emplace_back(ranks.back(), 0);
  std::vector<std::size_t> r = ranks;
  r.push_back(0);
  HomologyResult h = homology_of(r, closed);
  long chains = 0, betti = 0;
  for (std::size_t n = 0; n < ranks.size(); ++n) {
    const long sign = n % 2 == 0 ? 1 : -1;
    chains += sign * static_cast<long>(ranks[n]);
    betti += sign * static_cast<long>(h.degrees[n].betti);
  }
  return {chains, betti};
}

}  // namespace vbraid
