#pragma once

// Exact integer/rational scalars and the small dense matrices used by the
// lattice code. Scalars are GMP values; matrices are row-major value types.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "amlat/error.hpp"

namespace amlat {

using BigInt = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw error(errc::singular_matrix, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Floor of a/b for b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline BigInt floor_rat(const Rat& x) { return floor_div(x.get_num(), x.get_den()); }

inline BigInt ceil_rat(const Rat& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Integer square root when n is a perfect square, otherwise -1.
inline BigInt exact_sqrt(const BigInt& n) {
  if (n < 0 || mpz_perfect_square_p(n.get_mpz_t()) == 0) return BigInt(-1);
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Square root of a non-negative rational when it is a rational square, otherwise -1.
inline Rat exact_sqrt(const Rat& x) {
  BigInt n = exact_sqrt(x.get_num());
  BigInt d = exact_sqrt(x.get_den());
  if (n < 0 || d < 0) return Rat(-1);
  return make_rat(n, d);
}

/// "p/q" with q > 0, or plain "p" for integers.
inline std::string to_string(const Rat& x) {
  if (is_integer(x)) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw error(errc::parse_error, "ragged matrix initializer");
      for (const auto& x : row) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  void set_row(std::size_t r, const std::vector<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<BigInt>;
using RatMat = Matrix<Rat>;
using RatVec = std::vector<Rat>;

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

/// Row vector times matrix.
inline RatVec row_times(const RatVec& v, const RatMat& m) {
  RatVec out(m.cols(), Rat(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

struct HnfResult {
  IntMat H;  // row-style Hermite normal form
  IntMat U;  // unimodular, H = U * M
};

/// Row-style Hermite normal form: echelon form with positive pivots, entries
/// above each pivot reduced into [0, pivot), zero rows last.
inline HnfResult hnf(const IntMat& M) {
  IntMat H = M;
  IntMat U = IntMat::identity(M.rows());
  const std::size_t m = H.rows();
  const std::size_t n = H.cols();

  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t c = 0; c < n; ++c) H(dst, c) -= q * H(src, c);
    for (std::size_t c = 0; c < m; ++c) U(dst, c) -= q * U(src, c);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t c = 0; c < n; ++c) H(r, c) = -H(r, c);
    for (std::size_t c = 0; c < m; ++c) U(r, c) = -U(r, c);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool have_pivot = false;
    while (true) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (H(i, c) == 0) continue;
        if (best == m || abs(H(i, c)) < abs(H(best, c))) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (H(i, c) == 0) continue;
        add_row(i, r, floor_div(H(i, c), H(r, c)));
        if (H(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (H(r, c) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i) add_row(i, r, floor_div(H(i, c), H(r, c)));
    ++r;
  }
  return {std::move(H), std::move(U)};
}

namespace detail {

inline BigInt row_denominator_lcm(const RatMat& m, std::size_t r) {
  BigInt d = 1;
  for (std::size_t c = 0; c < m.cols(); ++c) d = lcm(d, m(r, c).get_den());
  return d;
}

// Fraction-free forward elimination of [A | B] (A square). Rows are first
// scaled to integers, which leaves the solution set of A X = B unchanged.
// Returns false when A is singular.
inline bool bareiss_eliminate(const RatMat& A, const RatMat* B, IntMat& aug, BigInt& det_scale, int& sign) {
  const std::size_t n = A.rows();
  const std::size_t extra = B ? B->cols() : 0;
  aug = IntMat(n, n + extra);
  det_scale = 1;
  sign = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt d = row_denominator_lcm(A, i);
    if (B) d = lcm(d, row_denominator_lcm(*B, i));
    det_scale *= d;
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = A(i, j) * d;
      aug(i, j) = v.get_num();
    }
    for (std::size_t j = 0; j < extra; ++j) {
      Rat v = (*B)(i, j) * d;
      aug(i, n + j) = v.get_num();
    }
  }
  BigInt prev = 1;
  const std::size_t width = n + extra;
  for (std::size_t k = 0; k < n; ++k) {
    if (aug(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && aug(p, k) == 0) ++p;
      if (p == n) return false;
      aug.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        BigInt t = aug(i, j) * aug(k, k) - aug(i, k) * aug(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        aug(i, j) = t;
      }
      aug(i, k) = 0;
    }
    prev = aug(k, k);
  }
  return true;
}

}  // namespace detail

inline Rat det(const RatMat& M) {
  if (M.rows() != M.cols()) throw error(errc::singular_matrix, "determinant of non-square matrix");
  if (M.rows() == 0) return Rat(1);
  IntMat aug;
  BigInt scale;
  int sign = 1;
  if (!detail::bareiss_eliminate(M, nullptr, aug, scale, sign)) return Rat(0);
  return make_rat(BigInt(sign) * aug(M.rows() - 1, M.rows() - 1), scale);
}

/// Solves A X = B exactly; throws singular_matrix when det(A) = 0.
inline RatMat solve(const RatMat& A, const RatMat& B) {
  if (A.rows() != A.cols() || B.rows() != A.rows())
    throw error(errc::singular_matrix, "shape mismatch in solve");
  const std::size_t n = A.rows();
  IntMat aug;
  BigInt scale;
  int sign = 1;
  if (!detail::bareiss_eliminate(A, &B, aug, scale, sign))
    throw error(errc::singular_matrix, "matrix is singular");
  RatMat X(n, B.cols());
  for (std::size_t col = 0; col < B.cols(); ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rat acc(aug(ii, n + col));
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rat(aug(ii, j)) * X(j, col);
      X(ii, col) = acc / Rat(aug(ii, ii));
    }
  }
  return X;
}

inline RatVec solve(const RatMat& A, const RatVec& v) {
  RatMat b(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) b(i, 0) = v[i];
  RatMat x = solve(A, b);
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = x(i, 0);
  return out;
}

inline RatMat inverse(const RatMat& M) { return solve(M, RatMat::identity(M.rows())); }

/// Canonical basis of the Z-lattice spanned by the rows of gens, which must
/// have rank equal to the column count. The result depends only on the lattice.
inline RatMat lattice_from_generators(const RatMat& gens) {
  const std::size_t n = gens.cols();
  BigInt d = 1;
  for (std::size_t i = 0; i < gens.rows(); ++i) d = lcm(d, detail::row_denominator_lcm(gens, i));
  IntMat scaled(gens.rows(), n);
  for (std::size_t i = 0; i < gens.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = Rat(gens(i, j) * d).get_num();
  IntMat H = hnf(scaled).H;
  std::size_t rank = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < n; ++j) zero = zero && H(i, j) == 0;
    if (!zero) ++rank;
  }
  if (rank < n) throw error(errc::singular_basis, "generators have rank " + std::to_string(rank));
  RatMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = make_rat(H(i, j), d);
  return out;
}

inline RatMat rat_lattice_canonicalize(const RatMat& basis) {
  if (basis.rows() != basis.cols()) throw error(errc::singular_basis, "basis must be square");
  return lattice_from_generators(basis);
}

/// True iff v is an integral combination of the basis rows.
inline bool lattice_contains(const RatMat& basis, const RatVec& v) {
  RatVec x = solve(basis.transpose(), v);
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return is_integer(c); });
}

/// Coordinates of v in terms of the basis rows.
inline RatVec coordinates(const RatMat& basis, const RatVec& v) { return solve(basis.transpose(), v); }

/// Basis of {x : x . g in Z for every row g of gens}, gens of full column rank.
inline RatMat dual_of_generated(const RatMat& gens) {
  RatMat c = lattice_from_generators(gens);
  return lattice_from_generators(inverse(c).transpose());
}

}  // namespace amlat
