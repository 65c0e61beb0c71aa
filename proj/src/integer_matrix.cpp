#include "dualcx/integer_matrix.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "dualcx/errors.hpp"

namespace dualcx {

namespace {

int cmpabs(const mpz_class& a, const mpz_class& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return sgn(v) == 0; });
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InvalidInput("matrix dimension mismatch in product");
  IntegerMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

/// Elimination state. Transforms are only maintained when requested.
class SmithEliminator {
 public:
  SmithEliminator(const IntegerMatrix& m, bool track)
      : a_(m), rows_(m.rows()), cols_(m.cols()), track_(track) {
    if (track_) {
      left_ = IntegerMatrix::identity(rows_);
      right_ = IntegerMatrix::identity(cols_);
    }
  }

  void run() {
    const std::size_t limit = std::min(rows_, cols_);
    std::size_t t = 0;
    while (t < limit) {
      auto pivot = smallest_entry(t);
      if (!pivot) break;
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);
      clear_cross(t);
      if (track_) {
        // Enforce d_t | every remaining entry so the diagonal is already
        // in divisibility order; the fast path normalizes afterwards.
        if (auto bad = non_multiple(t)) {
          add_row(t, *bad, 1);
          continue;
        }
      }
      ++t;
    }
    rank_ = t;
  }

  SmithForm form() const {
    SmithForm f;
    f.rank = rank_;
    for (std::size_t i = 0; i < rank_; ++i) f.invariant_factors.push_back(abs(a_(i, i)));
    if (!track_) normalize_chain(f.invariant_factors);
    return f;
  }

  IntegerMatrix& matrix() { return a_; }
  IntegerMatrix& left() { return left_; }
  IntegerMatrix& right() { return right_; }

 private:
  // Rewrites a diagonal into invariant factors: diag(a, b) ~ diag(gcd, lcm).
  static void normalize_chain(std::vector<mpz_class>& d) {
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] == 1) continue;
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        if (d[j] % d[i] == 0) continue;
        mpz_class g = gcd(d[i], d[j]);
        mpz_class l = d[i] / g * d[j];
        d[i] = g;
        d[j] = l;
        if (d[i] == 1) break;
      }
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < rows_; ++i) {
      for (std::size_t j = t; j < cols_; ++j) {
        const mpz_class& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (!best || cmpabs(v, best_abs) < 0) {
          best = {i, j};
          best_abs = abs(v);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  // Zeroes row t and column t outside the pivot. Remainders become the new
  // pivot until the pivot divides the whole cross.
  void clear_cross(std::size_t t) {
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_row(i, t, -q);
        if (sgn(a_(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
        if (sgn(q) != 0) add_col(j, t, -q);
        if (sgn(a_(t, j)) != 0) clean = false;
      }
      if (clean) return;
      // Move the smallest leftover of the cross onto the diagonal.
      std::size_t bi = t, bj = t;
      for (std::size_t i = t + 1; i < rows_; ++i) {
        if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
          bi = i;
          bj = t;
        }
      }
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
          bi = t;
          bj = j;
        }
      }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }

  std::optional<std::size_t> non_multiple(std::size_t t) const {
    const mpz_class& d = a_(t, t);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      for (std::size_t j = t + 1; j < cols_; ++j) {
        if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), d.get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  // row[dst] += factor * row[src]
  void add_row(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(a_(src, j)) != 0) a_(dst, j) += factor * a_(src, j);
    }
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        if (sgn(left_(src, j)) != 0) left_(dst, j) += factor * left_(src, j);
      }
    }
  }

  // col[dst] += factor * col[src]
  void add_col(std::size_t dst, std::size_t src, const mpz_class& factor) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if (sgn(a_(i, src)) != 0) a_(i, dst) += factor * a_(i, src);
    }
    if (track_) {
      for (std::size_t i = 0; i < cols_; ++i) {
        if (sgn(right_(i, src)) != 0) right_(i, dst) += factor * right_(i, src);
      }
    }
  }

  void swap_rows(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a_(x, j), a_(y, j));
    if (track_) {
      for (std::size_t j = 0; j < rows_; ++j) std::swap(left_(x, j), left_(y, j));
    }
  }

  void swap_cols(std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap(a_(i, x), a_(i, y));
    if (track_) {
      for (std::size_t i = 0; i < cols_; ++i) std::swap(right_(i, x), right_(i, y));
    }
  }

  IntegerMatrix a_;
  std::size_t rows_, cols_;
  bool track_;
  IntegerMatrix left_, right_;
  std::size_t rank_ = 0;
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithEliminator e(m, false);
  e.run();
  return e.form();
}

SmithDecomposition smith_decomposition(const IntegerMatrix& m) {
  SmithEliminator e(m, true);
  e.run();
  SmithDecomposition out;
  out.form = e.form();
  // Make the diagonal non-negative by flipping rows of the left transform.
  for (std::size_t i = 0; i < out.form.rank; ++i) {
    if (sgn(e.matrix()(i, i)) < 0) {
      for (std::size_t j = 0; j < m.cols(); ++j) e.matrix()(i, j) = -e.matrix()(i, j);
      for (std::size_t j = 0; j < m.rows(); ++j) e.left()(i, j) = -e.left()(i, j);
    }
  }
  out.diagonal = e.matrix();
  out.left = e.left();
  out.right = e.right();
  return out;
}

}  // namespace dualcx
