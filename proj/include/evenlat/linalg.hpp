#pragma once

// Exact integer and rational matrices over GMP.  Every routine here is a pure
// function of its arguments; matrices are plain values.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "evenlat/error.hpp"

namespace evenlat {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// scalar helpers

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least nonnegative residue of a modulo |m|.
inline Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int isqrt(const Int& a) {
  if (a < 0) throw InvalidInput("isqrt of a negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int floor_rat(const Rat& x) {
  return floor_div(x.get_num(), x.get_den());
}

inline Int ceil_rat(const Rat& x) {
  return -floor_div(-x.get_num(), x.get_den());
}

/// x reduced into [0, m) for a positive rational modulus m.
inline Rat mod_rat(const Rat& x, const Rat& m) {
  Rat q = x / m;
  Rat r = x - Rat(floor_rat(q)) * m;
  r.canonicalize();
  return r;
}

/// p-adic valuation of a nonzero integer.
inline int valuation(Int a, const Int& p) {
  if (a == 0) throw InvalidInput("valuation of zero");
  int v = 0;
  while (mod(a, p) == 0) {
    a /= p;
    ++v;
  }
  return v;
}

inline int valuation(const Rat& x, const Int& p) {
  return valuation(Int(x.get_num()), p) - valuation(Int(x.get_den()), p);
}

inline bool is_prime(const Int& p) {
  return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 30) > 0;
}

/// Distinct prime divisors of |a| in ascending order.
inline std::vector<Int> prime_divisors(Int a) {
  if (a < 0) a = -a;
  std::vector<Int> out;
  for (Int p = 2; p * p <= a; ++p) {
    if (mod(a, p) == 0) {
      out.push_back(p);
      while (mod(a, p) == 0) a /= p;
    }
  }
  if (a > 1) out.push_back(a);
  return out;
}

/// Kronecker symbol (a / n).
inline int kronecker(const Int& a, const Int& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

/// Exact integer value of a rational; throws if it has a denominator.
inline Int as_int(const Rat& x) {
  if (x.get_den() != 1) throw InternalInconsistency("expected an integral value, got " + x.get_str());
  return x.get_num();
}

inline long to_long(const Int& a) {
  if (!a.fits_slong_p()) throw BudgetExceeded("integer does not fit a machine word: " + a.get_str());
  return a.get_si();
}

// ---------------------------------------------------------------------------
// Matrix

template <typename T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw InvalidInput("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InvalidInput("ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Columns given as vectors (each of equal length `rows`).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }

  void set_column(std::size_t j, const std::vector<T>& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  Matrix select_columns(const std::vector<std::size_t>& cs) const {
    std::vector<std::size_t> rs(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs[i] = i;
    return select(rs, cs);
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw InvalidInput("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix difference shape mismatch");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix operator-() const {
    Matrix c = *this;
    for (auto& x : c.data_) x = -x;
    return c;
  }

  Matrix scaled(const T& s) const {
    Matrix c = *this;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Lexicographic order on (shape, entries); used for deterministic sorting.
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }

  const std::vector<T>& entries() const { return data_; }

  // row/column primitives used by the reduction routines
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
  }
  /// row_i += f * row_j
  void add_row(std::size_t i, std::size_t j, const T& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
  }
  /// col_i += f * col_j
  void add_col(std::size_t i, std::size_t j, const T& f) {
    if (f == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
  }
  void negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

template <typename T>
std::ostream& operator<<(std::ostream& os, const Matrix<T>& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

template <typename T>
std::string to_string(const Matrix<T>& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.entries())
    if (x.get_den() != 1) return false;
  return true;
}

/// Converts an integral rational matrix; throws if an entry has a denominator.
inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw InvalidInput("matrix entry is not integral");
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

inline Int common_denominator(const RatMatrix& m) {
  Int d = 1;
  for (const auto& x : m.entries()) d = lcm(d, Int(x.get_den()));
  return d;
}

inline Int dot(const IntVector& a, const IntMatrix& g, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Int t = 0;
    for (std::size_t j = 0; j < b.size(); ++j) t += g(i, j) * b[j];
    s += a[i] * t;
  }
  return s;
}

inline Rat dot(const RatVector& a, const IntMatrix& g, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    Rat t = 0;
    for (std::size_t j = 0; j < b.size(); ++j) t += Rat(g(i, j)) * b[j];
    s += a[i] * t;
  }
  return s;
}

// ---------------------------------------------------------------------------
// determinants, inverses, rank

/// Fraction-free Bareiss elimination.
inline Int determinant(IntMatrix a) {
  if (!a.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

inline Rat determinant(RatMatrix a) {
  if (!a.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

inline RatMatrix inverse(RatMatrix a) {
  if (!a.square()) throw InvalidInput("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) throw DegenerateLattice("matrix is singular");
    a.swap_rows(k, piv);
    inv.swap_rows(k, piv);
    Rat f = 1 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= f;
      inv(k, j) *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rat g = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= g * a(k, j);
        inv(i, j) -= g * inv(k, j);
      }
    }
  }
  return inv;
}

inline RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

inline std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

// ---------------------------------------------------------------------------
// Smith normal form

struct SnfResult {
  IntMatrix U;      ///< unimodular, rows x rows
  IntMatrix D;      ///< diagonal, same shape as the input
  IntMatrix V;      ///< unimodular, cols x cols
  IntMatrix U_inv;  ///< inverse of U, tracked alongside it
  std::size_t rank = 0;

  /// Nonzero diagonal entries d_1 | d_2 | ... in ascending order.
  std::vector<Int> invariants() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

/// U * M * V = D with d_i >= 0 and d_i | d_{i+1}.  Pivots are chosen with
/// minimal absolute value.
inline SnfResult smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  IntMatrix a = m;
  IntMatrix U = IntMatrix::identity(R), Ui = IntMatrix::identity(R), V = IntMatrix::identity(C);

  // Row operation row_i += f*row_j on (a, U) corresponds to col_j -= f*col_i on U^{-1}.
  auto row_add = [&](std::size_t i, std::size_t j, const Int& f) {
    a.add_row(i, j, f);
    U.add_row(i, j, f);
    Ui.add_col(j, i, -f);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    U.swap_rows(i, j);
    Ui.swap_cols(i, j);
  };
  auto row_neg = [&](std::size_t i) {
    a.negate_row(i);
    U.negate_row(i);
    Ui.negate_col(i);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& f) {
    a.add_col(i, j, f);
    V.add_col(i, j, f);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    V.swap_cols(i, j);
  };

  std::size_t t = 0;
  const std::size_t lim = std::min(R, C);
  for (; t < lim; ++t) {
    // pivot of minimal absolute value in the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (!found || v < best) {
          best = v;
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (a(i, t) == 0) continue;
        Int q = floor_div(a(i, t), a(t, t));
        row_add(i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (a(t, j) == 0) continue;
        Int q = floor_div(a(t, j), a(t, t));
        col_add(j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // move the smallest remainder in row/column t into the pivot
        std::size_t bi = t, bj = t;
        Int bv = abs(a(t, t));
        for (std::size_t i = t + 1; i < R; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < bv) {
            bv = abs(a(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < bv) {
            bv = abs(a(t, j));
            bi = t;
            bj = j;
          }
        row_swap(t, bi);
        col_swap(t, bj);
        continue;
      }
      // divisibility of the trailing block by the pivot
      bool fixed = false;
      for (std::size_t i = t + 1; i < R && !fixed; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (mod(a(i, j), a(t, t)) != 0) {
            row_add(t, i, Int(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) row_neg(t);
  }
  return SnfResult{std::move(U), std::move(a), std::move(V), std::move(Ui), t};
}

// ---------------------------------------------------------------------------
// kernels, spans

/// Saturated basis (as columns) of {x in Z^n : M x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t j = s.rank; j < m.cols(); ++j) cols.push_back(j);
  return s.V.select_columns(cols);
}

/// Basis (as columns) of the Z-span of the columns of an integer matrix.
inline IntMatrix column_span_basis(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  IntMatrix b(m.rows(), s.rank);
  for (std::size_t j = 0; j < s.rank; ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) b(i, j) = s.U_inv(i, j) * s.D(j, j);
  return b;
}

/// Basis (as columns) of the Z-span of the columns of a rational matrix.
inline RatMatrix column_span_basis(const RatMatrix& m) {
  Int den = common_denominator(m);
  IntMatrix scaled = to_integer(m.scaled(Rat(den)));
  IntMatrix b = column_span_basis(scaled);
  RatMatrix out = to_rational(b);
  return out.scaled(Rat(1, 1) / Rat(den));
}

/// Basis of (Q-span of the columns) intersected with Z^n.
inline IntMatrix saturation_basis(const IntMatrix& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < s.rank; ++j) cols.push_back(j);
  return s.U_inv.select_columns(cols);
}

// ---------------------------------------------------------------------------
// inertia

struct Inertia {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Signs of a rational congruence diagonalization.
inline Inertia inertia(const IntMatrix& g) {
  if (!g.is_symmetric()) throw InvalidInput("inertia requires a symmetric matrix");
  RatMatrix a = to_rational(g);
  const std::size_t n = a.rows();
  Inertia in;
  std::vector<bool> done(n, false);
  auto congruence_add = [&](std::size_t i, std::size_t j, const Rat& f) {
    // basis change e_i += f e_j
    a.add_col(i, j, f);
    a.add_row(i, j, f);
  };
  for (;;) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && a(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // every remaining diagonal entry vanishes; create one from an off-diagonal entry
      bool made = false;
      for (std::size_t i = 0; i < n && !made; ++i) {
        if (done[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j)
          if (!done[j] && a(i, j) != 0) {
            congruence_add(i, j, Rat(1));
            made = true;
            break;
          }
      }
      if (!made) break;
      continue;
    }
    const Rat p = a(piv, piv);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == piv || done[j] || a(piv, j) == 0) continue;
      congruence_add(j, piv, -a(piv, j) / p);
    }
    done[piv] = true;
    (p > 0 ? in.plus : in.minus) += 1;
  }
  in.zero = n - in.plus - in.minus;
  return in;
}

// ---------------------------------------------------------------------------
// LLL on a positive definite Gram matrix

/// Unimodular T such that T^T G T is LLL-reduced (delta = 3/4).  G must be
/// positive definite.
inline IntMatrix lll_transform(const IntMatrix& g) {
  const std::size_t n = g.rows();
  IntMatrix T = IntMatrix::identity(n);
  IntMatrix G = g;
  if (n <= 1) return T;
  const Rat delta(3, 4);

  // Gram-Schmidt data recomputed lazily from the current Gram matrix
  RatMatrix mu(n, n);
  std::vector<Rat> B(n);
  auto gso = [&]() {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rat s = Rat(G(i, j));
        for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * B[k];
        mu(i, j) = s / B[j];
      }
      Rat s = Rat(G(i, i));
      for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * B[k];
      if (s <= 0) throw NotDefinite("LLL requires a positive definite Gram matrix");
      B[i] = s;
    }
  };
  // basis change b_k -= q b_l
  auto reduce = [&](std::size_t k, std::size_t l, const Int& q) {
    T.add_col(k, l, -q);
    G.add_col(k, l, -q);
    G.add_row(k, l, -q);
  };
  gso();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t l = k; l-- > 0;) {
      Rat m = mu(k, l);
      if (m > Rat(1, 2) || m < Rat(-1, 2)) {
        Int q = floor_rat(m + Rat(1, 2));
        reduce(k, l, q);
        for (std::size_t j = 0; j < l; ++j) mu(k, j) -= Rat(q) * mu(l, j);
        mu(k, l) -= Rat(q);
      }
    }
    if (B[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * B[k - 1]) {
      ++k;
    } else {
      T.swap_cols(k, k - 1);
      G.swap_cols(k, k - 1);
      G.swap_rows(k, k - 1);
      gso();
      k = std::max<std::size_t>(1, k - 1);
    }
  }
  return T;
}

} // namespace evenlat
