#pragma once

// Test-only reference implementations. None of these call into the library's
// elimination code, so agreement is a genuine cross-check.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dualcx/integer_matrix.hpp"
#include "dualcx/simplicial_complex.hpp"

namespace oracle {

using dualcx::IntegerMatrix;
using dualcx::Label;
using dualcx::Simplex;
using dualcx::SimplicialComplex;

using Grid = std::vector<std::vector<mpz_class>>;

inline Grid to_grid(const IntegerMatrix& m) {
  Grid g(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

// Plain Gaussian elimination over Q.
inline std::size_t rank_q(const IntegerMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][col] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      const mpq_class f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline long inverse_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline std::size_t rank_mod_p(const IntegerMatrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class r = m(i, j) % p;
      if (r < 0) r += p;
      a[i][j] = r.get_si();
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const long inv = inverse_mod(a[rank][col], p);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (a[i][col] == 0) continue;
      const long f = a[i][col] * inv % p;
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Bareiss fraction-free determinant.
inline mpz_class det(Grid a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[s], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1} with
// D_k the gcd of all k x k minors. Exponential; small matrices only.
inline std::vector<mpz_class> determinantal_invariants(const IntegerMatrix& m) {
  const Grid g = to_grid(m);
  std::vector<mpz_class> out;
  mpz_class prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    mpz_class dk = 0;
    for (const auto& rows : subsets(m.rows(), k)) {
      for (const auto& cols : subsets(m.cols(), k)) {
        Grid minor(k, std::vector<mpz_class>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = g[rows[i]][cols[j]];
        dk = gcd(dk, det(minor));
      }
    }
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

// Boundary matrix built from scratch: column per k-cell, rows per (k-1)-cell.
inline IntegerMatrix boundary(const SimplicialComplex& c, int k) {
  const auto& lower = c.cells_of_dim(k - 1);
  const auto& upper = c.cells_of_dim(k);
  std::map<Simplex, std::size_t> row;
  for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
  IntegerMatrix m(lower.size(), upper.size());
  for (std::size_t j = 0; j < upper.size(); ++j) {
    for (std::size_t i = 0; i < upper[j].size(); ++i) {
      Simplex face = upper[j];
      face.erase(face.begin() + static_cast<long>(i));
      m(row.at(face), j) = (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

// Betti numbers over a field from ranks: b_k = n_k - rank d_k - rank d_{k+1}.
// p = 0 means Q.
inline std::vector<std::size_t> betti(const std::vector<std::size_t>& counts, const std::vector<IntegerMatrix>& d,
                                      long p = 0) {
  std::vector<std::size_t> ranks(counts.size() + 1, 0);
  for (std::size_t k = 1; k < counts.size(); ++k) ranks[k] = p ? rank_mod_p(d[k - 1], p) : rank_q(d[k - 1]);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < counts.size(); ++k) out.push_back(counts[k] - ranks[k] - ranks[k + 1]);
  return out;
}

inline std::vector<std::size_t> betti(const SimplicialComplex& c, long p = 0) {
  std::vector<std::size_t> counts;
  std::vector<IntegerMatrix> d;
  for (int k = 0; k <= c.dim(); ++k) {
    counts.push_back(c.cells_of_dim(k).size());
    if (k > 0) d.push_back(boundary(c, k));
  }
  return betti(counts, d, p);
}

inline SimplicialComplex relabel(const SimplicialComplex& c, const std::map<Label, Label>& f) {
  std::set<Simplex> cells;
  for (const auto& s : c.cells()) {
    Simplex t;
    for (const auto& v : s) t.push_back(f.at(v));
    std::sort(t.begin(), t.end());
    cells.insert(t);
  }
  return SimplicialComplex::from_cells(cells);
}

// Tries every bijection of the vertex sets.
inline bool brute_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertices().size() != b.vertices().size() || a.size() != b.size()) return false;
  std::vector<Label> target = b.vertices();
  std::sort(target.begin(), target.end());
  do {
    std::map<Label, Label> f;
    for (std::size_t i = 0; i < target.size(); ++i) f[a.vertices()[i]] = target[i];
    if (relabel(a, f) == b) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

inline std::vector<Label> labels(int m, const std::string& prefix = "v") {
  std::vector<Label> out;
  for (int i = 1; i <= m; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Random face-closed subcomplex of the n-skeleton on m vertices containing
// all m vertices: keep each cell of dimension 1..n independently, then close.
inline SimplicialComplex random_subcomplex(int m, int n, std::mt19937_64& rng, double keep = 0.5) {
  const auto ls = labels(m);
  std::bernoulli_distribution coin(keep);
  std::set<Simplex> cells;
  for (const auto& v : ls) cells.insert({v});
  for (int k = 2; k <= n + 1; ++k) {
    for (const auto& idx : subsets(static_cast<std::size_t>(m), static_cast<std::size_t>(k))) {
      if (!coin(rng)) continue;
      for (std::size_t mask = 1; mask < (std::size_t{1} << idx.size()); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < idx.size(); ++i)
          if (mask >> i & 1) face.push_back(ls[idx[i]]);
        std::sort(face.begin(), face.end());
        cells.insert(face);
      }
    }
  }
  return SimplicialComplex::from_cells(cells);
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
