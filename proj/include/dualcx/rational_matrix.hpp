#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "dualcx/integer_matrix.hpp"

namespace dualcx {

/// Dense matrix of exact fractions. GMP keeps every entry canonical:
/// lowest terms with a positive denominator.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const std::vector<std::vector<mpq_class>>& rows);
  explicit RationalMatrix(const IntegerMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form; `pivots` receives the pivot columns.
  RationalMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {x : M x = 0}, one vector per free column.
  std::vector<std::vector<mpq_class>> nullspace() const;
  std::vector<mpq_class> apply(const std::vector<mpq_class>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

}  // namespace dualcx
