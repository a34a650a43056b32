#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace cmclass {

using IntVector = std::vector<mpz_class>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  /// Columns given as vectors of equal length.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector column(std::size_t c) const;
  IntVector operator*(const IntVector& x) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const mpz_class& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const mpz_class& factor);
  void negate_row(std::size_t r);

  /// Determinant by fraction-free elimination (square matrices only).
  mpz_class determinant() const;

  /// "s rank" header followed by one line per column, entries space separated.
  std::string to_column_text() const;
  static IntMatrix from_column_text(const std::string& text);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * A * V == D with U, V unimodular and D diagonal, d1 | d2 | ... , all d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Nonzero diagonal entries of D, in order.
  std::vector<mpz_class> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace cmclass
