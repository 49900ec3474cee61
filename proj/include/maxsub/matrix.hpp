#pragma once

// Dense exact matrices over a Field: arithmetic, Gaussian elimination,
// division-free characteristic polynomial, Krylov minimal polynomial and the
// algebraic degree dim_F F(A).

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "maxsub/krylov.hpp"
#include "maxsub/polynomial.hpp"

namespace maxsub {

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::ShapeMismatch, "matrix dimensions must be positive");
  }

  static Matrix identity(Field field, std::size_t n) { return scalar(field.one(), n); }

  static Matrix scalar(const Scalar& s, std::size_t n) {
    Matrix m(s.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }

  static Matrix diagonal(const std::vector<Scalar>& entries) {
    if (entries.empty()) throw Error(ErrorCode::ShapeMismatch, "empty diagonal");
    Matrix m(entries[0].field(), entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  /// E_ij, 0-based.
  static Matrix unit(Field field, std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(field, n, n);
    m(i, j) = field.one();
    return m;
  }

  static Matrix from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::ShapeMismatch, "no rows");
    Matrix m(field, rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorCode::ShapeMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  /// Companion matrix of a monic polynomial: subdiagonal ones, last column
  /// holding the negated low coefficients.
  static Matrix companion(const Polynomial& f) {
    if (!f.is_monic() || f.degree() < 1) throw Error(ErrorCode::BadParams, "companion matrix needs a monic polynomial of degree >= 1");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Matrix m(f.field(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = f.field().one();
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -f.coeff(i);
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Row-major entries.
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_lower_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i && j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_scalar() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !(*this)(i, j).is_zero()) return false;
        if (i == j && (*this)(i, j) != (*this)(0, 0)) return false;
      }
    return true;
  }

  std::vector<Scalar> diagonal_entries() const {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) d.push_back((*this)(i, i));
    return d;
  }

  Scalar trace() const {
    Scalar t = field_.zero();
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::check_same_field(a.field_, b.field_);
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + a.shape_string() + " by " + b.shape_string());
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    detail::check_same_field(s.field(), m.field_);
    Matrix out = m;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  /// Text format: "rows cols" then one whitespace-separated line per row.
  std::string to_text() const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ' ';
        out += (*this)(i, j).to_string();
      }
      out += '\n';
    }
    return out;
  }

  static Matrix parse(Field field, std::string_view text) {
    std::istringstream in{std::string(text)};
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
      throw Error(ErrorCode::ParseError, "matrix text must start with positive 'rows cols'");
    Matrix m(field, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (std::size_t k = 0; k < m.data_.size(); ++k) {
      std::string token;
      if (!(in >> token))
        throw Error(ErrorCode::ParseError, "matrix text ends after " + std::to_string(k) + " of " + std::to_string(m.data_.size()) + " entries");
      m.data_[k] = field.parse_scalar(token);
    }
    std::string extra;
    if (in >> extra) throw Error(ErrorCode::ParseError, "trailing data after matrix entries: '" + extra + "'");
    return m;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    detail::check_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw Error(ErrorCode::ShapeMismatch, a.shape_string() + " vs " + b.shape_string());
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

inline void require_square(const Matrix& a, std::string_view what) {
  if (!a.is_square()) throw Error(ErrorCode::ShapeMismatch, std::string(what) + " needs a square matrix, got " + a.shape_string());
}

inline Matrix power(const Matrix& a, unsigned long long exponent) {
  require_square(a, "power");
  Matrix result = Matrix::identity(a.field(), a.rows());
  Matrix base = a;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

/// Gauss-Jordan inverse. Throws SingularError naming the first column
/// without a pivot.
inline Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  Matrix work = a;
  Matrix inv = Matrix::identity(a.field(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularError(col, "matrix is singular: no pivot in column " + std::to_string(col));
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Scalar scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar factor = work(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!work(col, j).is_zero()) work(r, j) -= factor * work(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

inline Scalar determinant(const Matrix& a) {
  require_square(a, "determinant");
  const std::size_t n = a.rows();
  Matrix work = a;
  Scalar det = a.field().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return a.field().zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(work(pivot, j), work(col, j));
      det = -det;
    }
    det *= work(col, col);
    const Scalar inv = work(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      const Scalar factor = work(r, col) * inv;
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < n; ++j) work(r, j) -= factor * work(col, j);
    }
  }
  return det;
}

/// Solves a * x = rhs for square a. Throws SingularError.
inline std::vector<Scalar> solve(const Matrix& a, const std::vector<Scalar>& rhs) {
  const Matrix inv = inverse(a);
  std::vector<Scalar> x(a.cols(), a.field().zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) x[i] += inv(i, j) * rhs[j];
  return x;
}

/// A nonzero vector v with a * v = 0, or an empty vector when a is
/// nonsingular.
inline std::vector<Scalar> kernel_vector(const Matrix& a) {
  require_square(a, "kernel_vector");
  const std::size_t n = a.rows();
  Matrix work = a;
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && work(p, col).is_zero()) ++p;
    if (p == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(work(p, j), work(row, j));
    const Scalar scale = work(row, col).inverse();
    for (std::size_t j = 0; j < n; ++j) work(row, j) *= scale;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || work(r, col).is_zero()) continue;
      const Scalar factor = work(r, col);
      for (std::size_t j = 0; j < n; ++j) work(r, j) -= factor * work(row, j);
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  std::size_t free_col = 0;
  while (free_col < n && is_pivot[free_col]) ++free_col;
  if (free_col == n) return {};
  std::vector<Scalar> v(n, a.field().zero());
  v[free_col] = a.field().one();
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -work(r, free_col);
  return v;
}

/// det(xI - A) by the Samuelson-Berkowitz recurrence: no divisions, so it is
/// valid in every characteristic.
inline Polynomial char_poly(const Matrix& a) {
  require_square(a, "char_poly");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  // Coefficients of the leading principal minor's polynomial, highest first.
  std::vector<Scalar> current{f.one(), -a(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R M C, ..., -R M^{r-1} C where M is
    // the leading r x r block, C its right column and R its bottom row.
    std::vector<Scalar> column{f.one(), -a(r, r)};
    std::vector<Scalar> mc(r, f.zero());
    for (std::size_t i = 0; i < r; ++i) mc[i] = a(i, r);
    for (std::size_t power = 0; power < r; ++power) {
      Scalar rmc = f.zero();
      for (std::size_t i = 0; i < r; ++i) rmc += a(r, i) * mc[i];
      column.push_back(-rmc);
      if (power + 1 < r) {
        std::vector<Scalar> next(r, f.zero());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (!a(i, j).is_zero() && !mc[j].is_zero()) next[i] += a(i, j) * mc[j];
        mc = std::move(next);
      }
    }
    std::vector<Scalar> next(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < current.size(); ++j) next[i] += column[i - j] * current[j];
    current = std::move(next);
  }
  std::reverse(current.begin(), current.end());
  return Polynomial(f, std::move(current));
}

/// Monic minimal polynomial from the first linear dependence among the
/// flattened powers I, A, A^2, ...
inline Polynomial min_poly(const Matrix& a) {
  require_square(a, "min_poly");
  Matrix current = Matrix::identity(a.field(), a.rows());
  bool first = true;
  return krylov_dependence(a.field(), a.rows() * a.rows() + 1, [&] {
    if (!first) current = current * a;
    first = false;
    return current.entries();
  });
}

inline std::size_t algebraic_degree(const Matrix& a) { return static_cast<std::size_t>(min_poly(a).degree()); }

/// p(A) by Horner's rule.
inline Matrix evaluate(const Polynomial& p, const Matrix& a) {
  require_square(a, "evaluate");
  detail::check_same_field(p.field(), a.field());
  Matrix acc(a.field(), a.rows(), a.cols());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + Matrix::scalar(p.coeffs()[i], a.rows());
  return acc;
}

}  // namespace maxsub
