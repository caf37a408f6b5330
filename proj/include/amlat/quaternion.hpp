#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "amlat/exact.hpp"
#include "amlat/numtheory.hpp"

namespace amlat {

/// x0 + x1 i + x2 j + x3 ij, coordinates in the standard basis {1, i, j, ij}.
struct QElem {
  std::array<Rat, 4> x{Rat(0), Rat(0), Rat(0), Rat(0)};

  QElem() = default;
  QElem(Rat x0, Rat x1, Rat x2, Rat x3) : x{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}
  explicit QElem(const RatVec& v) : x{v.at(0), v.at(1), v.at(2), v.at(3)} {}

  static QElem scalar(const Rat& s) { return QElem(s, 0, 0, 0); }

  const Rat& operator[](std::size_t k) const { return x[k]; }
  Rat& operator[](std::size_t k) { return x[k]; }

  RatVec coords() const { return RatVec(x.begin(), x.end()); }
  bool is_zero() const { return x[0] == 0 && x[1] == 0 && x[2] == 0 && x[3] == 0; }

  friend QElem operator+(const QElem& p, const QElem& q) {
    return QElem(p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]);
  }
  friend QElem operator-(const QElem& p, const QElem& q) {
    return QElem(p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]);
  }
  friend QElem operator-(const QElem& p) { return QElem(-p[0], -p[1], -p[2], -p[3]); }
  friend QElem operator*(const Rat& s, const QElem& p) { return QElem(s * p[0], s * p[1], s * p[2], s * p[3]); }
  friend bool operator==(const QElem& p, const QElem& q) { return p.x == q.x; }
};

inline QElem conj(const QElem& v) { return QElem(v[0], -v[1], -v[2], -v[3]); }

inline Rat trd(const QElem& v) { return Rat(2) * v[0]; }

inline std::string to_string(const QElem& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + "," + to_string(v[3]) + ")";
}

/// The quaternion algebra (a,b / Q): i^2 = a, j^2 = b, ij = -ji.
class QuaternionAlgebra {
 public:
  QuaternionAlgebra(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    if (a == 0 || b == 0) throw error(errc::parse_error, "quaternion algebra needs nonzero a, b");
    ramified_ = amlat::ramified_primes(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)));
  }

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }

  bool totally_definite() const { return a_ < 0 && b_ < 0; }

  /// Finite ramified primes, ascending.
  const std::vector<std::int64_t>& ramified_primes() const { return ramified_; }

  /// Reduced discriminant: product of the finite ramified primes.
  BigInt discriminant() const {
    BigInt d = 1;
    for (auto p : ramified_) d *= static_cast<long>(p);
    return d;
  }

  /// Local index: 2 at ramified primes, 1 elsewhere.
  int local_index(std::int64_t p) const {
    for (auto q : ramified_)
      if (q == p) return 2;
    return 1;
  }

  QElem mul(const QElem& p, const QElem& q) const {
    const Rat a(static_cast<long>(a_));
    const Rat b(static_cast<long>(b_));
    const Rat ab = a * b;
    return QElem(p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - ab * p[3] * q[3],
                 p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
                 p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
                 p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]);
  }

  Rat nrd(const QElem& v) const {
    const Rat a(static_cast<long>(a_));
    const Rat b(static_cast<long>(b_));
    return v[0] * v[0] - a * v[1] * v[1] - b * v[2] * v[2] + a * b * v[3] * v[3];
  }

  QElem inverse(const QElem& v) const {
    Rat n = nrd(v);
    if (n == 0) throw error(errc::singular_matrix, "element " + to_string(v) + " is not invertible");
    return Rat(1) / n * conj(v);
  }

  /// Matrix of y -> y * v in row coordinates: coords(y v) = coords(y) * M.
  RatMat right_mul_matrix(const QElem& v) const {
    RatMat m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      QElem e;
      e[r] = 1;
      QElem p = mul(e, v);
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = p[c];
    }
    return m;
  }

  /// Matrix of y -> v * y in row coordinates.
  RatMat left_mul_matrix(const QElem& v) const {
    RatMat m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      QElem e;
      e[r] = 1;
      QElem p = mul(v, e);
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = p[c];
    }
    return m;
  }

  friend bool operator==(const QuaternionAlgebra& x, const QuaternionAlgebra& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::vector<std::int64_t> ramified_;
};

}  // namespace amlat
