#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "vbraid/laurent.hpp"

namespace vbraid {

// Sparse matrix over the Laurent ring; each row keeps only nonzero entries.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(std::size_t rows, std::size_t cols);

  static RingMatrix identity(std::size_t n);
  static RingMatrix zero(std::size_t rows, std::size_t cols) { return RingMatrix(rows, cols); }
  static RingMatrix from_rows(std::initializer_list<std::initializer_list<LaurentPoly>> rows);
  static RingMatrix from_integers(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const LaurentPoly& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const LaurentPoly& value);
  void add_to(std::size_t i, std::size_t j, const LaurentPoly& value);
  const std::map<std::size_t, LaurentPoly>& row(std::size_t i) const { return data_[i]; }

  std::size_t nonzeros() const;
  bool is_integer() const;
  bool is_zero() const { return nonzeros() == 0; }
  RingMatrix transpose() const;
  RingMatrix substitute(Var x, const LaurentPoly& value) const;
  RingMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  RingMatrix operator-() const;
  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b);
  friend RingMatrix operator*(const LaurentPoly& k, const RingMatrix& a);
  friend bool operator==(const RingMatrix& a, const RingMatrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, LaurentPoly>> data_;
};

RingMatrix mat_mul(const RingMatrix& a, const RingMatrix& b);
// Row-major Kronecker product; the left factor indexes slowest.
RingMatrix kron(const RingMatrix& a, const RingMatrix& b);
RingMatrix direct_sum(const RingMatrix& a, const RingMatrix& b);
RingMatrix kron_power(const RingMatrix& a, int k);

// Exact inverse. Integer matrices go through rational elimination and must
// have an integral inverse; other matrices need a unit determinant.
RingMatrix inverse(const RingMatrix& a);
LaurentPoly determinant(const RingMatrix& a);

}  // namespace vbraid
