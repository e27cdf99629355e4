#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace sphcomb {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  using IntVector      = std::vector<Integer>;
  using RationalVector = std::vector<Rational>;

  //! Dense row-major matrix over an exact ring.
  template <typename T>
  class Matrix {
   public:
    using value_type = T;

    Matrix() = default;

    Matrix(std::size_t rows, std::size_t cols, T const& fill = T(0))
        : _rows(rows), _cols(cols), _data(rows * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<T>> init) {
      _rows = init.size();
      _cols = _rows == 0 ? 0 : init.begin()->size();
      _data.reserve(_rows * _cols);
      for (auto const& row : init) {
        if (row.size() != _cols) {
          fail(ErrorKind::DimensionMismatch, "ragged matrix initializer");
        }
        _data.insert(_data.end(), row.begin(), row.end());
      }
    }

    static Matrix from_rows(std::vector<std::vector<T>> const& rows,
                            std::size_t                        cols) {
      Matrix m(rows.size(), cols);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
          fail(ErrorKind::DimensionMismatch, "row length differs from column count");
        }
        std::copy(rows[i].begin(), rows[i].end(), m.row_begin(i));
      }
      return m;
    }

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = T(1);
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    T& operator()(std::size_t i, std::size_t j) {
      return _data[i * _cols + j];
    }
    T const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _cols + j];
    }

    auto row_begin(std::size_t i) {
      return _data.begin() + static_cast<std::ptrdiff_t>(i * _cols);
    }
    auto row_begin(std::size_t i) const {
      return _data.begin() + static_cast<std::ptrdiff_t>(i * _cols);
    }

    std::vector<T> row(std::size_t i) const {
      return std::vector<T>(row_begin(i), row_begin(i) + static_cast<std::ptrdiff_t>(_cols));
    }

    std::vector<T> column(std::size_t j) const {
      std::vector<T> out(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        out[i] = (*this)(i, j);
      }
      return out;
    }

    std::vector<std::vector<T>> to_rows() const {
      std::vector<std::vector<T>> out;
      out.reserve(_rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        out.push_back(row(i));
      }
      return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      std::swap_ranges(row_begin(a), row_begin(a) + static_cast<std::ptrdiff_t>(_cols), row_begin(b));
    }

    void swap_cols(std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      for (std::size_t i = 0; i < _rows; ++i) {
        std::swap((*this)(i, a), (*this)(i, b));
      }
    }

    // row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, T const& factor) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(dst, j) += factor * (*this)(src, j);
      }
    }

    void add_col_multiple(std::size_t dst, std::size_t src, T const& factor) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, dst) += factor * (*this)(i, src);
      }
    }

    void negate_row(std::size_t i) {
      for (std::size_t j = 0; j < _cols; ++j) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    void negate_col(std::size_t j) {
      for (std::size_t i = 0; i < _rows; ++i) {
        (*this)(i, j) = -(*this)(i, j);
      }
    }

    void append_row(std::vector<T> const& r) {
      if (_rows == 0 && _cols == 0) {
        _cols = r.size();
      }
      if (r.size() != _cols) {
        fail(ErrorKind::DimensionMismatch, "appended row has wrong length");
      }
      _data.insert(_data.end(), r.begin(), r.end());
      ++_rows;
    }

    Matrix transpose() const {
      Matrix t(_cols, _rows);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          t(j, i) = (*this)(i, j);
        }
      }
      return t;
    }

    bool is_zero() const {
      return std::all_of(_data.begin(), _data.end(), [](T const& x) { return x == 0; });
    }

    friend bool operator==(Matrix const& a, Matrix const& b) {
      return a._rows == b._rows && a._cols == b._cols && a._data == b._data;
    }

    friend bool operator<(Matrix const& a, Matrix const& b) {
      return std::tie(a._rows, a._cols, a._data) < std::tie(b._rows, b._cols, b._data);
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a._cols != b._rows) {
        fail(ErrorKind::DimensionMismatch, "matrix product shapes do not match");
      }
      Matrix c(a._rows, b._cols);
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t k = 0; k < a._cols; ++k) {
          T const& aik = a(i, k);
          if (aik == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b._cols; ++j) {
            c(i, j) += aik * b(k, j);
          }
        }
      }
      return c;
    }

    friend std::vector<T> operator*(Matrix const& a, std::vector<T> const& v) {
      if (a._cols != v.size()) {
        fail(ErrorKind::DimensionMismatch, "matrix-vector shapes do not match");
      }
      std::vector<T> out(a._rows, T(0));
      for (std::size_t i = 0; i < a._rows; ++i) {
        for (std::size_t j = 0; j < a._cols; ++j) {
          out[i] += a(i, j) * v[j];
        }
      }
      return out;
    }

    std::vector<T> const& data() const noexcept {
      return _data;
    }

   private:
    std::size_t    _rows = 0;
    std::size_t    _cols = 0;
    std::vector<T> _data;
  };

  using IntMatrix      = Matrix<Integer>;
  using RationalMatrix = Matrix<Rational>;
  using SmallMatrix    = Matrix<std::int64_t>;

  template <typename To, typename From>
  Matrix<To> matrix_cast(Matrix<From> const& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        out(i, j) = To(m(i, j));
      }
    }
    return out;
  }

  template <typename To, typename From>
  std::vector<To> vector_cast(std::vector<From> const& v) {
    return std::vector<To>(v.begin(), v.end());
  }

  template <typename T>
  T dot(std::vector<T> const& a, std::vector<T> const& b) {
    if (a.size() != b.size()) {
      fail(ErrorKind::DimensionMismatch, "dot product of vectors of different length");
    }
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      s += a[i] * b[i];
    }
    return s;
  }

  template <typename T>
  std::vector<T> add(std::vector<T> a, std::vector<T> const& b) {
    if (a.size() != b.size()) {
      fail(ErrorKind::DimensionMismatch, "sum of vectors of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
    }
    return a;
  }

  template <typename T>
  std::vector<T> sub(std::vector<T> a, std::vector<T> const& b) {
    if (a.size() != b.size()) {
      fail(ErrorKind::DimensionMismatch, "difference of vectors of different length");
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] -= b[i];
    }
    return a;
  }

  template <typename T>
  std::vector<T> scale(std::vector<T> a, T const& c) {
    for (auto& x : a) {
      x *= c;
    }
    return a;
  }

  template <typename T>
  bool is_zero_vector(std::vector<T> const& v) {
    return std::all_of(v.begin(), v.end(), [](T const& x) { return x == 0; });
  }

  //! Reduced row echelon form over Q, in place. Returns the pivot columns.
  inline std::vector<std::size_t> rref(RationalMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
      std::size_t p = r;
      while (p < m.rows() && m(p, c) == 0) {
        ++p;
      }
      if (p == m.rows()) {
        continue;
      }
      m.swap_rows(r, p);
      Rational inv = 1 / m(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m(r, j) *= inv;
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i != r && m(i, c) != 0) {
          m.add_row_multiple(i, r, -m(i, c));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  template <typename T>
  std::size_t rank_over_q(Matrix<T> const& m) {
    auto q = matrix_cast<Rational>(m);
    return rref(q).size();
  }

  //! Determinant by fraction-free Bareiss elimination.
  template <typename T>
  T determinant(Matrix<T> m) {
    if (m.rows() != m.cols()) {
      fail(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    }
    std::size_t const n = m.rows();
    if (n == 0) {
      return T(1);
    }
    T   prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) {
          ++p;
        }
        if (p == n) {
          return T(0);
        }
        m.swap_rows(k, p);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        }
      }
      prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : T(-m(n - 1, n - 1));
  }

  //! Inverse of a square rational matrix; throws if singular.
  inline RationalMatrix inverse(RationalMatrix const& m) {
    std::size_t const n = m.rows();
    if (n != m.cols()) {
      fail(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    }
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) {
      fail(ErrorKind::InvalidArgument, "matrix is singular");
    }
    RationalMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        inv(i, j) = aug(i, n + j);
      }
    }
    return inv;
  }

  //! Decimal rendering of a rational, "p/q" when not integral.
  inline std::string to_string(Rational const& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) {
      os << '/' << denominator(r);
    }
    return os.str();
  }

  inline std::string to_string(Integer const& i) {
    return i.str();
  }

  template <typename T>
  std::string vector_to_string(std::vector<T> const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      if constexpr (std::is_integral_v<T>) {
        out += std::to_string(v[i]);
      } else {
        out += to_string(v[i]);
      }
    }
    return out + ")";
  }

}  // namespace sphcomb
