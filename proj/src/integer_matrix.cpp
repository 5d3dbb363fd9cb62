#include "braidquot/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace braidquot {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
: _rows(rows), _cols(cols), _data(rows * cols)
{}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
: _rows(rows.size()), _cols(rows.size() ? rows.begin()->size() : 0)
{
  _data.reserve(_rows * _cols);
  for (auto const &row : rows) {
    if (row.size() != _cols)
      throw std::invalid_argument("ragged matrix rows");
    for (long v : row)
      _data.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t j = 0; j < _cols; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b)
{
  if (a == b)
    return;
  for (std::size_t i = 0; i < _rows; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src,
                                     mpz_class const &factor)
{
  if (factor == 0)
    return;
  for (std::size_t j = 0; j < _cols; ++j)
    (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src,
                                     mpz_class const &factor)
{
  if (factor == 0)
    return;
  for (std::size_t i = 0; i < _rows; ++i)
    (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(std::size_t r)
{
  for (std::size_t j = 0; j < _cols; ++j)
    (*this)(r, j) = -(*this)(r, j);
}

bool IntegerMatrix::is_zero() const
{
  for (auto const &v : _data) {
    if (v != 0)
      return false;
  }
  return true;
}

IntegerMatrix operator*(IntegerMatrix const &a, IntegerMatrix const &b)
{
  if (a._cols != b._rows)
    throw std::invalid_argument("matrix dimensions do not match");
  IntegerMatrix c(a._rows, b._cols);
  for (std::size_t i = 0; i < a._rows; ++i) {
    for (std::size_t k = 0; k < a._cols; ++k) {
      if (a(i, k) == 0)
        continue;
      for (std::size_t j = 0; j < b._cols; ++j)
        c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

bool operator==(IntegerMatrix const &a, IntegerMatrix const &b)
{
  return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
}

mpz_class determinant(IntegerMatrix const &m)
{
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0)
    return 1;

  IntegerMatrix a = m;
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::string to_string(IntegerMatrix const &m)
{
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ss << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j)
      ss << (j ? ", " : "") << m(i, j).get_str();
    ss << ']';
  }
  ss << ']';
  return ss.str();
}

} // namespace braidquot
