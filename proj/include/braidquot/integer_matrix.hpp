#ifndef BRAIDQUOT_INTEGER_MATRIX_HPP
#define BRAIDQUOT_INTEGER_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braidquot {

/// Dense matrix of arbitrary-precision integers with fixed dimensions.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);  // zero matrix
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return _rows; }
  std::size_t cols() const noexcept { return _cols; }

  mpz_class &operator()(std::size_t i, std::size_t j)
  { return _data[i * _cols + j]; }
  mpz_class const &operator()(std::size_t i, std::size_t j) const
  { return _data[i * _cols + j]; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, mpz_class const &factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, mpz_class const &factor);
  void negate_row(std::size_t r);

  bool is_zero() const;

  friend IntegerMatrix operator*(IntegerMatrix const &a, IntegerMatrix const &b);
  friend bool operator==(IntegerMatrix const &a, IntegerMatrix const &b);

private:
  std::size_t _rows = 0;
  std::size_t _cols = 0;
  std::vector<mpz_class> _data;
};

// Exact determinant of a square matrix (fraction-free Bareiss elimination).
mpz_class determinant(IntegerMatrix const &m);

std::string to_string(IntegerMatrix const &m);

} // namespace braidquot

#endif // BRAIDQUOT_INTEGER_MATRIX_HPP
