#include "vbraid/matrix.hpp"

#include <sstream>

namespace vbraid {

namespace {
const LaurentPoly kZero;

void require_same_shape(const RingMatrix& a, const RingMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << "dimension mismatch in " << op << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw DomainError(os.str());
  }
}
}  // namespace

RingMatrix::RingMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

RingMatrix RingMatrix::identity(std::size_t n) {
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace(i, LaurentPoly(1));
  return m;
}

RingMatrix RingMatrix::from_rows(std::initializer_list<std::initializer_list<LaurentPoly>> rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows.begin()->size();
  RingMatrix m(nr, nc);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != nc) throw DomainError("ragged matrix literal");
    std::size_t j = 0;
    for (const auto& e : r) m.set(i, j++, e);
    ++i;
  }
  return m;
}

RingMatrix RingMatrix::from_integers(const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  RingMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw DomainError("ragged matrix literal");
    for (std::size_t j = 0; j < nc; ++j) m.set(i, j, LaurentPoly(rows[i][j]));
  }
  return m;
}

const LaurentPoly& RingMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  auto it = data_[i].find(j);
  return it == data_[i].end() ? kZero : it->second;
}

void RingMatrix::set(std::size_t i, std::size_t j, const LaurentPoly& value) {
  if (i >= rows_ || j >= cols_) throw DomainError("matrix index out of range");
  if (value.is_zero()) {
    data_[i].erase(j);
  } else {
    data_[i][j] = value;
  }
}

void RingMatrix::add_to(std::size_t i, std::size_t j, const LaurentPoly& value) {
  if (value.is_zero()) return;
  auto& r = data_[i];
  auto it = r.find(j);
  if (it == r.end()) {
    r.emplace(j, value);
  } else {
    it->second += value;
    if (it->second.is_zero()) r.erase(it);
  }
}

std::size_t RingMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool RingMatrix::is_integer() const {
  for (const auto& r : data_)
    for (const auto& [j, e] : r)
      if (!e.is_constant()) return false;
  return true;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, e] : data_[i]) t.data_[j].emplace(i, e);
  return t;
}

RingMatrix RingMatrix::substitute(Var x, const LaurentPoly& value) const {
  RingMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, e] : data_[i]) out.set(i, j, e.substitute(x, value));
  return out;
}

RingMatrix RingMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("block out of range");
  RingMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (auto it = data_[r0 + i].lower_bound(c0); it != data_[r0 + i].end() && it->first < c0 + nc; ++it)
      out.data_[i].emplace(it->first - c0, it->second);
  return out;
}

RingMatrix RingMatrix::operator-() const {
  RingMatrix out = *this;
  for (auto& r : out.data_)
    for (auto& [j, e] : r) e = -e;
  return out;
}

RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
  require_same_shape(a, b, "addition");
  RingMatrix out = a;
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (const auto& [j, e] : b.data_[i]) out.add_to(i, j, e);
  return out;
}

RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) { return a + (-b); }

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
  if (a.cols_ != b.rows_) {
    std::ostringstream os;
    os << "dimension mismatch in product: " << a.rows_ << "x" << a.cols_ << " * " << b.rows_ << "x" << b.cols_;
    throw DomainError(os.str());
  }
  RingMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (const auto& [k, aik] : a.data_[i])
      for (const auto& [j, bkj] : b.data_[k]) out.add_to(i, j, aik * bkj);
  return out;
}

RingMatrix operator*(const LaurentPoly& k, const RingMatrix& a) {
  RingMatrix out(a.rows_, a.cols_);
  if (k.is_zero()) return out;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (const auto& [j, e] : a.data_[i]) out.set(i, j, k * e);
  return out;
}

bool operator==(const RingMatrix& a, const RingMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RingMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]\n";
  }
  return os.str();
}

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b) { return a * b; }

RingMatrix kron(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, aij] : a.row(i))
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (const auto& [l, bkl] : b.row(k)) out.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
  return out;
}

RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (const auto& [j, e] : a.row(i)) out.set(i, j, e);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (const auto& [j, e] : b.row(i)) out.set(a.rows() + i, a.cols() + j, e);
  return out;
}

RingMatrix kron_power(const RingMatrix& a, int k) {
  RingMatrix out = RingMatrix::identity(1);
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

namespace {

RingMatrix integer_inverse(const RingMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [j, e] : a.row(i)) m[i][j] = *e.as_integer();
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw DomainError("matrix is singular");
    std::swap(m[p], m[c]);
    mpq_class piv = m[c][c];
    for (auto& x : m[c]) x /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (std::size_t k = c; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  RingMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class& q = m[i][n + j];
      q.canonicalize();
      if (q.get_den() != 1) throw DomainError("inverse is not integral");
      out.set(i, j, LaurentPoly(Integer(q.get_num())));
    }
  }
  return out;
}

RingMatrix minor_matrix(const RingMatrix& a, std::size_t skip_r, std::size_t skip_c) {
  const std::size_t n = a.rows();
  RingMatrix out(n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == skip_r) continue;
    for (const auto& [j, e] : a.row(i)) {
      if (j == skip_c) continue;
      out.set(oi, j < skip_c ? j : j - 1, e);
    }
    ++oi;
  }
  return out;
}

}  // namespace

LaurentPoly determinant(const RingMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  if (n > 8) throw DomainError("cofactor determinant limited to size 8");
  LaurentPoly det;
  for (const auto& [j, e] : a.row(0)) {
    LaurentPoly term = e * determinant(minor_matrix(a, 0, j));
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

RingMatrix inverse(const RingMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("inverse of a non-square matrix");
  if (a.is_integer()) return integer_inverse(a);
  const std::size_t n = a.rows();
  LaurentPoly det = determinant(a);
  if (!det.is_unit()) throw DomainError("determinant is not a unit: " + det.to_string());
  LaurentPoly dinv = det.unit_inverse();
  RingMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly cof = determinant(minor_matrix(a, j, i));
      if ((i + j) % 2 == 1) cof = -cof;
      out.set(i, j, dinv * cof);
    }
  }
  return out;
}

}  // namespace vbraid
