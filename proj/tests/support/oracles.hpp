#pragma once

// Reference computations written directly from definitions, sharing no code
// with the library beyond its value types.

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "vbraid/braid.hpp"
#include "vbraid/matrix.hpp"
#include "vbraid/sdstruct.hpp"

namespace oracle {

using vbraid::Integer;
using Dense = std::vector<std::vector<Integer>>;

inline Dense dense(const vbraid::RingMatrix& m) {
  Dense out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& [j, e] : m.row(i)) out[i][j] = *e.as_integer();
  return out;
}

// Invariant factors by column-first elimination: exact quotients when the
// pivot divides, Bezout combinations otherwise, then a gcd/lcm pass on the
// diagonal. Zeros are dropped.
inline std::vector<Integer> invariant_factors(Dense a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Bring any nonzero of column c to row r.
    for (std::size_t i = r; i < rows && a[r][c] == 0; ++i)
      if (a[i][c] != 0) std::swap(a[r], a[i]);
    if (a[r][c] == 0) continue;
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][c] == 0) continue;
        if (a[i][c] % a[r][c] == 0) {
          const Integer q = a[i][c] / a[r][c];
          for (std::size_t j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
          continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
        const Integer p = a[r][c] / g, q = a[i][c] / g;
        for (std::size_t j = c; j < cols; ++j) {
          Integer x = a[r][j], y = a[i][j];
          a[r][j] = s * x + t * y;
          a[i][j] = -q * x + p * y;
        }
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (a[r][j] == 0) continue;
        if (a[r][j] % a[r][c] == 0) {
          const Integer q = a[r][j] / a[r][c];
          for (std::size_t i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
          continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][c].get_mpz_t(), a[r][j].get_mpz_t());
        const Integer p = a[r][c] / g, q = a[r][j] / g;
        for (std::size_t i = r; i < rows; ++i) {
          Integer x = a[i][c], y = a[i][j];
          a[i][c] = s * x + t * y;
          a[i][j] = -q * x + p * y;
        }
        // Column c below the pivot may be nonzero again.
        dirty = true;
      }
    }
    diag.push_back(abs(a[r][c]));
    ++r;
  }
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

inline Integer determinant(Dense m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    Dense minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    Integer sub = determinant(minor) * m[0][j];
    det += (j % 2 == 0) ? sub : Integer(-sub);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Quotients of successive gcds of k x k minors, for tiny matrices.
inline std::vector<Integer> determinantal_factors(const Dense& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    Integer g = 0;
    for (const auto& ri : rs)
      for (const auto& ci : cs) {
        Dense m;
        for (auto i : ri) {
          std::vector<Integer> row;
          for (auto j : ci) row.push_back(a[i][j]);
          m.push_back(row);
        }
        g = gcd(g, determinant(m));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Rack homology of a finite table, faces written out on tuples:
// action face (x1*xi, ..., x_{i-1}*xi, x_{i+1}, ..., xn) minus deletion face.
struct RackHomology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;
};

inline std::vector<std::vector<int>> tuples(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(n, 0);
  while (true) {
    out.push_back(t);
    int k = n - 1;
    while (k >= 0 && ++t[k] == m) t[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

inline std::size_t index_of(const std::vector<int>& t, int m) {
  std::size_t idx = 0;
  for (int v : t) idx = idx * m + v;
  return idx;
}

inline Dense rack_boundary(const vbraid::FiniteRackTable& table, int n) {
  if (n == 0) return Dense(0, std::vector<Integer>(1));
  const int m = table.size;
  std::size_t rows = 1;
  for (int k = 0; k < n - 1; ++k) rows *= m;
  Dense d(rows, std::vector<Integer>(rows * m));
  for (const auto& x : tuples(m, n)) {
    const std::size_t col = index_of(x, m);
    for (int i = 0; i < n; ++i) {
      std::vector<int> act, del;
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        del.push_back(x[k]);
        act.push_back(k < i ? table.op[x[k]][x[i]] : x[k]);
      }
      const int sign = (i % 2 == 0) ? 1 : -1;
      d[index_of(act, m)][col] += sign;
      d[index_of(del, m)][col] -= sign;
    }
  }
  return d;
}

inline std::size_t rank_of(const Dense& a) { return a.empty() || a[0].empty() ? 0 : invariant_factors(a).size(); }

// Degrees 0..top.
inline std::vector<RackHomology> rack_homology(const vbraid::FiniteRackTable& table, int top) {
  std::vector<RackHomology> out;
  std::size_t dim = 1;
  for (int n = 0; n <= top; ++n) {
    Dense here = n == 0 ? Dense() : rack_boundary(table, n);
    Dense next = rack_boundary(table, n + 1);
    const std::size_t r_here = n == 0 ? 0 : rank_of(here);
    auto factors = invariant_factors(next);
    RackHomology h;
    h.betti = dim - r_here - factors.size();
    for (const auto& f : factors)
      if (f > 1) h.torsion.push_back(f);
    out.push_back(h);
    dim *= table.size;
  }
  return out;
}

// Labeled strands traced right to left. At a sigma the label arriving at the
// right slot records the label leaving it.
struct Traced {
  std::vector<int> forgetful;  // 1-based images
  int sigmas = 0;
  std::vector<std::vector<int>> under;
};

inline Traced trace(const vbraid::VirtualBraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(n);
  std::iota(at.begin(), at.end(), 1);
  Traced out;
  out.under.assign(n, {});
  const auto& letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    const int i = it->index - 1;
    if (it->kind == vbraid::GenKind::Sigma) {
      out.under[at[i] - 1].push_back(at[i + 1]);
      ++out.sigmas;
    }
    std::swap(at[i], at[i + 1]);
  }
  out.forgetful.assign(n, 0);
  for (int p = 0; p < n; ++p) out.forgetful[at[p] - 1] = p + 1;
  for (auto& u : out.under) std::sort(u.begin(), u.end());
  return out;
}

inline vbraid::VirtualBraidWord random_positive_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), idx(1, n - 1), kind(0, 1);
  std::vector<vbraid::Generator> g;
  const int l = len(rng);
  for (int k = 0; k < l; ++k)
    g.push_back({kind(rng) ? vbraid::GenKind::Sigma : vbraid::GenKind::Zeta, idx(rng)});
  return vbraid::VirtualBraidWord(n, g);
}

// Brute-force axiom checks on a table.
inline bool self_distributive(const vbraid::Table& t) {
  const int m = static_cast<int>(t.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (t[t[a][b]][c] != t[t[a][c]][t[b][c]]) return false;
  return true;
}

inline bool columns_bijective(const vbraid::Table& t) {
  const int m = static_cast<int>(t.size());
  for (int b = 0; b < m; ++b) {
    std::vector<bool> seen(m, false);
    for (int a = 0; a < m; ++a) {
      if (seen[t[a][b]]) return false;
      seen[t[a][b]] = true;
    }
  }
  return true;
}

inline bool idempotent(const vbraid::Table& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    if (t[a][a] != static_cast<int>(a)) return false;
  return true;
}

// Set-theoretic Yang-Baxter for (a, b) -> (b, a * b) on triples.
inline bool set_yang_baxter(const vbraid::Table& t) {
  const int m = static_cast<int>(t.size());
  auto r = [&](std::array<int, 3> x, int i) {
    const int a = x[i], b = x[i + 1];
    x[i] = b;
    x[i + 1] = t[a][b];
    return x;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        std::array<int, 3> x{a, b, c};
        if (r(r(r(x, 0), 1), 0) != r(r(r(x, 1), 0), 1)) return false;
      }
  return true;
}

}  // namespace oracle
