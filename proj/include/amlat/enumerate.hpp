#pragma once

// Exact short-vector enumeration for positive definite rational Gram matrices.

#include <functional>
#include <vector>

#include "amlat/exact.hpp"

namespace amlat {

struct MinimumInfo {
  Rat min;
  BigInt kissing;
};

/// q(x) = sum_i diag[i] * (x_i + sum_{j>i} mu(i,j) x_j)^2
struct GramLdl {
  RatVec diag;
  RatMat mu;
};

inline GramLdl ldl(const RatMat& gram) {
  const std::size_t n = gram.rows();
  RatMat q = gram;
  GramLdl out{RatVec(n), RatMat(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.diag[i] = q(i, i);
    if (out.diag[i] <= 0) throw error(errc::singular_matrix, "Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) out.mu(i, j) = q(i, j) / out.diag[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) q(j, k) -= q(i, j) * q(i, k) / out.diag[i];
  }
  return out;
}

inline bool is_positive_definite(const RatMat& gram) {
  try {
    ldl(gram);
    return true;
  } catch (const error&) {
    return false;
  }
}

inline Rat quadratic_value(const RatMat& gram, const std::vector<BigInt>& x) {
  Rat s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) s += gram(i, j) * x[i] * x[j];
  return s;
}

/// Fincke-Pohst enumeration of all nonzero x with x^T G x <= bound. The
/// visitor may return a smaller bound to shrink the search radius.
class ShortVectorEnumerator {
 public:
  using Visitor = std::function<Rat(const std::vector<BigInt>&, const Rat&)>;

  explicit ShortVectorEnumerator(const RatMat& gram) : gram_(gram), ldl_(ldl(gram)), n_(gram.rows()) {}

  void run(Rat bound, const Visitor& visit) {
    bound_ = std::move(bound);
    visit_ = &visit;
    x_.assign(n_, BigInt(0));
    recurse(n_, Rat(0));
  }

 private:
  void recurse(std::size_t level, const Rat& partial) {
    if (level == 0) {
      bool zero = true;
      for (const auto& c : x_) zero = zero && c == 0;
      if (!zero) bound_ = (*visit_)(x_, partial);
      return;
    }
    const std::size_t i = level - 1;
    Rat center = 0;
    for (std::size_t j = i + 1; j < n_; ++j) center -= ldl_.mu(i, j) * x_[j];
    Rat room = (bound_ - partial) / ldl_.diag[i];
    if (room < 0) return;
    BigInt r;
    BigInt fl = floor_rat(room);
    mpz_sqrt(r.get_mpz_t(), fl.get_mpz_t());
    r += 1;  // r >= sqrt(room)
    const BigInt lo = floor_rat(center) - r;
    const BigInt hi = ceil_rat(center) + r;
    for (BigInt v = lo; v <= hi; ++v) {
      Rat off = Rat(v) - center;
      Rat next = partial + ldl_.diag[i] * off * off;
      if (next > bound_) continue;
      x_[i] = v;
      recurse(level - 1, next);
    }
    x_[i] = 0;
  }

  RatMat gram_;
  GramLdl ldl_;
  std::size_t n_;
  Rat bound_;
  const Visitor* visit_ = nullptr;
  std::vector<BigInt> x_;
};

/// Exact minimum of x^T G x over nonzero integer x and the number of minimal vectors.
inline MinimumInfo minimum_and_kissing(const RatMat& gram) {
  Rat best = gram(0, 0);
  for (std::size_t i = 1; i < gram.rows(); ++i) best = std::min(best, Rat(gram(i, i)));
  BigInt count = 0;
  bool found = false;
  ShortVectorEnumerator e(gram);
  e.run(best, [&](const std::vector<BigInt>&, const Rat& q) -> Rat {
    if (!found || q < best) {
      best = q;
      count = 1;
      found = true;
    } else if (q == best) {
      count += 1;
    }
    return best;
  });
  return {best, count};
}

/// All x with x^T G x == value exactly.
inline std::vector<std::vector<BigInt>> vectors_of_norm(const RatMat& gram, const Rat& value) {
  std::vector<std::vector<BigInt>> out;
  ShortVectorEnumerator e(gram);
  e.run(value, [&](const std::vector<BigInt>& x, const Rat& q) -> Rat {
    if (q == value) out.push_back(x);
    return value;
  });
  return out;
}

}  // namespace amlat
