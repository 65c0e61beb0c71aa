#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace dualcx {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  bool operator==(const IntegerMatrix& rhs) const = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  /// Nonzero diagonal entries d_1 | d_2 | ... , all positive.
  std::vector<mpz_class> invariant_factors;
  std::size_t rank = 0;
};

/// Invariant factors and rank by unimodular elimination with
/// minimal-absolute-value pivots.
SmithForm smith_normal_form(const IntegerMatrix& m);

struct SmithDecomposition {
  IntegerMatrix left;      // unimodular, rows x rows
  IntegerMatrix diagonal;  // rows x cols
  IntegerMatrix right;     // unimodular, cols x cols
  SmithForm form;
};

/// Same elimination with both transforms tracked: left * m * right == diagonal.
SmithDecomposition smith_decomposition(const IntegerMatrix& m);

}  // namespace dualcx
