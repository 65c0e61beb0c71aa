#include "dualcx/rational_matrix.hpp"

#include <utility>

#include "dualcx/errors.hpp"

namespace dualcx {

RationalMatrix::RationalMatrix(const std::vector<std::vector<mpq_class>>& rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.front().size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw InvalidInput("ragged rational matrix");
    for (const auto& v : row) data_.push_back(v);
  }
}

RationalMatrix::RationalMatrix(const IntegerMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = mpq_class(m(i, j));
  }
}

RationalMatrix RationalMatrix::rref(std::vector<std::size_t>* pivots) const {
  RationalMatrix a = *this;
  if (pivots) pivots->clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t p = row;
    while (p < rows_ && sgn(a(p, col)) == 0) ++p;
    if (p == rows_) continue;
    if (p != row) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(row, j));
    }
    const mpq_class inv = 1 / a(row, col);
    for (std::size_t j = col; j < cols_; ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const mpq_class f = a(i, col);
      for (std::size_t j = col; j < cols_; ++j) {
        if (sgn(a(row, j)) != 0) a(i, j) -= f * a(row, j);
      }
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return a;
}

std::size_t RationalMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

std::vector<std::vector<mpq_class>> RationalMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  const RationalMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<mpq_class> RationalMatrix::apply(const std::vector<mpq_class>& x) const {
  if (x.size() != cols_) throw InvalidInput("vector length does not match matrix columns");
  std::vector<mpq_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

}  // namespace dualcx
