#include "vbraid/snf.hpp"

#include <optional>

namespace vbraid {

IntMatrix to_int_matrix(const RingMatrix& m) {
  IntMatrix out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, e] : m.row(i)) {
      auto v = e.as_integer();
      if (!v) throw DomainError("Smith normal form needs an integer matrix");
      out[i][j] = *v;
    }
  }
  return out;
}

RingMatrix from_int_matrix(const IntMatrix& m, std::size_t cols) {
  RingMatrix out(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) out.set(i, j, LaurentPoly(m[i][j]));
  return out;
}

namespace {

class SnfEngine {
 public:
  SnfEngine(IntMatrix a, std::size_t cols, bool track)
      : a_(std::move(a)), rows_(a_.size()), cols_(cols), track_(track) {
    if (track_) {
      u_.assign(rows_, std::vector<Integer>(rows_));
      uinv_.assign(rows_, std::vector<Integer>(rows_));
      for (std::size_t i = 0; i < rows_; ++i) u_[i][i] = uinv_[i][i] = 1;
    }
  }

  SnfWithTransform run() {
    const std::size_t steps = std::min(rows_, cols_);
    std::size_t t = 0;
    while (t < steps) {
      auto pivot = find_pivot(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      if (!clear_cross(t)) continue;
      if (auto bad = non_divisible(t)) {
        add_row(t, *bad);
        continue;
      }
      ++t;
    }
    SnfWithTransform out;
    for (std::size_t i = 0; i < steps; ++i) {
      Integer d = abs(a_[i][i]);
      if (d != 0) ++out.form.rank;
      out.form.diagonal.push_back(d);
    }
    out.left = std::move(u_);
    out.left_inverse = std::move(uinv_);
    return out;
  }

 private:
  // Smallest nonzero absolute value; ties go to the lowest (row, col).
  std::optional<std::pair<std::size_t, std::size_t>> find_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        if (a_[i][j] == 0) continue;
        Integer v = abs(a_[i][j]);
        if (!best || v < best_abs) {
          best = {i, j};
          best_abs = v;
        }
      }
    }
    return best;
  }

  // Reduces row t and column t modulo the pivot; true once both are clear.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const Integer p = a_[t][t];
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (a_[i][t] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a_[i][t].get_mpz_t(), p.get_mpz_t());
      if (q != 0) sub_row(i, t, q);
      if (a_[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (a_[t][j] == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a_[t][j].get_mpz_t(), p.get_mpz_t());
      if (q != 0)
        for (std::size_t i = t; i < rows_; ++i) a_[i][j] -= q * a_[i][t];
      if (a_[t][j] != 0) clean = false;
    }
    return clean;
  }

  std::optional<std::size_t> non_divisible(std::size_t t) const {
    const Integer& p = a_[t][t];
    for (std::size_t i = t + 1; i < rows_; ++i)
      for (std::size_t j = t + 1; j < cols_; ++j)
        if (a_[i][j] != 0 && mpz_divisible_p(a_[i][j].get_mpz_t(), p.get_mpz_t()) == 0) return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if (track_) {
      std::swap(u_[i], u_[j]);
      for (auto& r : uinv_) std::swap(r[i], r[j]);
    }
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& r : a_) std::swap(r[i], r[j]);
  }

  // row_i -= q * row_t
  void sub_row(std::size_t i, std::size_t t, const Integer& q) {
    for (std::size_t j = 0; j < cols_; ++j)
      if (a_[t][j] != 0) a_[i][j] -= q * a_[t][j];
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j)
        if (u_[t][j] != 0) u_[i][j] -= q * u_[t][j];
      for (auto& r : uinv_)
        if (r[i] != 0) r[t] += q * r[i];
    }
  }

  // row_t += row_i
  void add_row(std::size_t t, std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) a_[t][j] += a_[i][j];
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) u_[t][j] += u_[i][j];
      for (auto& r : uinv_) r[i] -= r[t];
    }
  }

  IntMatrix a_;
  std::size_t rows_;
  std::size_t cols_;
  bool track_;
  IntMatrix u_;
  IntMatrix uinv_;
};

}  // namespace

SnfResult smith_normal_form(const RingMatrix& m) {
  return SnfEngine(to_int_matrix(m), m.cols(), false).run().form;
}

SnfWithTransform smith_with_transform(const RingMatrix& m) {
  return SnfEngine(to_int_matrix(m), m.cols(), true).run();
}

}  // namespace vbraid
