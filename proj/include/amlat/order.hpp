#pragma once

// Orders in a quaternion algebra over Q: validation, discriminants,
// maximality, maximalization, codifferent and normalizer membership.

#include <optional>
#include <string>
#include <vector>

#include "amlat/lattice.hpp"

namespace amlat {

class Order;
Order order_from_basis(const QuaternionAlgebra& A, const RatMat& basis);

class Order {
 public:
  const ZLat4& lattice() const { return lattice_; }
  const QuaternionAlgebra& algebra() const { return lattice_.algebra(); }
  const BigInt& reduced_disc() const { return reduced_disc_; }
  std::vector<QElem> elements() const { return lattice_.elements(); }
  bool contains(const QElem& x) const { return lattice_.contains(x); }

  friend bool operator==(const Order& x, const Order& y) { return x.lattice_ == y.lattice_; }

 private:
  friend Order order_from_basis(const QuaternionAlgebra& A, const RatMat& basis);
  Order(ZLat4 lattice, BigInt disc) : lattice_(std::move(lattice)), reduced_disc_(std::move(disc)) {}

  ZLat4 lattice_;
  BigInt reduced_disc_;
};

/// Matrix of the reduced-trace pairing (trd(v_i v_j)) on the rows of a basis.
inline RatMat trace_form(const QuaternionAlgebra& A, const std::vector<QElem>& basis) {
  RatMat t(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) t(i, j) = trd(A.mul(basis[i], basis[j]));
  return t;
}

inline Order order_from_basis(const QuaternionAlgebra& A, const RatMat& basis) {
  if (basis.rows() != 4 || basis.cols() != 4 || det(basis) == 0)
    throw error(errc::not_full_rank, "order basis must be 4 independent vectors");
  ZLat4 L(A, basis);
  const auto v = L.elements();

  // Integrality of basis elements and pairwise sums; with closure this
  // gives integrality of every element.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      QElem x = (i == j) ? v[i] : v[i] + v[j];
      if (!is_integer(trd(x)) || !is_integer(A.nrd(x)))
        throw error(errc::not_integral, "element " + to_string(x) + " has non-integral trace or norm");
    }
  }
  if (!L.contains(QElem::scalar(1))) throw error(errc::not_a_ring, "lattice does not contain 1");
  for (const auto& x : v)
    for (const auto& y : v)
      if (!L.contains(A.mul(x, y)))
        throw error(errc::not_a_ring, "product " + to_string(A.mul(x, y)) + " leaves the lattice");

  Rat d2 = abs(det(trace_form(A, v)));
  if (!is_integer(d2)) throw error(errc::not_integral, "trace form is not integral");
  BigInt d = exact_sqrt(d2.get_num());
  if (d < 0)
    throw error(errc::internal_non_square_discriminant, "|det trd(v_i v_j)| = " + to_string(d2) + " is not a square");
  return Order(std::move(L), std::move(d));
}

inline BigInt reduced_discriminant(const Order& O) { return O.reduced_disc(); }

inline bool is_maximal(const Order& O) { return O.reduced_disc() == O.algebra().discriminant(); }

inline Order left_order(const ZLat4& L) { return order_from_basis(L.algebra(), left_order_lattice(L).basis()); }
inline Order right_order(const ZLat4& L) { return order_from_basis(L.algebra(), right_order_lattice(L).basis()); }

/// Dual of the order under (x, y) -> trd(xy).
inline ZLat4 codifferent(const Order& O) {
  const auto v = O.elements();
  RatMat tinv = inverse(trace_form(O.algebra(), v));
  return ZLat4(O.algebra(), tinv * O.lattice().basis());
}

/// beta * Lambda * beta^{-1} ⊆ Lambda.
inline bool normalizer_contains(const Order& O, const QElem& beta) {
  if (beta.is_zero()) return false;
  const auto& A = O.algebra();
  QElem inv = A.inverse(beta);
  for (const auto& v : O.elements())
    if (!O.contains(A.mul(A.mul(beta, v), inv))) return false;
  return true;
}

namespace detail {

inline std::int64_t mod_p(const Rat& x, std::int64_t p) {
  if (!is_integer(x)) throw error(errc::internal_check_failed, "non-integral value reduced mod p");
  BigInt r = x.get_num() % BigInt(static_cast<long>(p));
  if (r < 0) r += static_cast<long>(p);
  return r.get_si();
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  BigInt r;
  BigInt aa(static_cast<long>(a));
  BigInt pp(static_cast<long>(p));
  mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), pp.get_mpz_t());
  return r.get_si();
}

// Basis of {x in F_p^n : x M = 0} for an n x m matrix over F_p.
inline std::vector<std::vector<std::int64_t>> left_kernel_mod_p(std::vector<std::vector<std::int64_t>> m,
                                                                std::int64_t p) {
  const std::size_t n = m.size();
  const std::size_t cols = n == 0 ? 0 : m[0].size();
  // Row-reduce the transpose: x M = 0  <=>  M^T x^T = 0.
  std::vector<std::vector<std::int64_t>> t(cols, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = ((m[i][j] % p) + p) % p;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < cols; ++c) {
    std::size_t piv = r;
    while (piv < cols && t[piv][c] == 0) ++piv;
    if (piv == cols) continue;
    std::swap(t[piv], t[r]);
    std::int64_t inv = inv_mod(t[r][c], p);
    for (auto& e : t[r]) e = (e * inv) % p;
    for (std::size_t i = 0; i < cols; ++i) {
      if (i == r || t[i][c] == 0) continue;
      std::int64_t f = t[i][c];
      for (std::size_t k = 0; k < n; ++k) t[i][k] = ((t[i][k] - f * t[r][k]) % p + p) % p;
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<std::int64_t> x(n, 0);
    x[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = (p - t[k][free]) % p;
    kernel.push_back(std::move(x));
  }
  return kernel;
}

inline QElem combine(const std::vector<QElem>& basis, const std::vector<std::int64_t>& coeffs) {
  QElem out;
  for (std::size_t k = 0; k < basis.size(); ++k) out = out + Rat(static_cast<long>(coeffs[k])) * basis[k];
  return out;
}

}  // namespace detail

/// Lift to the order of the Jacobson radical of O/pO. The reduced-trace
/// kernel mod p consists of nilpotents for odd p; for p = 2 the reduced
/// norm is additive on that kernel and its zero set is the radical.
inline ZLat4 p_radical(const Order& O, std::int64_t p) {
  const auto& A = O.algebra();
  const auto v = O.elements();
  RatMat t = trace_form(A, v);
  std::vector<std::vector<std::int64_t>> tm(4, std::vector<std::int64_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) tm[i][j] = detail::mod_p(t(i, j), p);
  auto kernel = detail::left_kernel_mod_p(tm, p);

  if (p == 2 && !kernel.empty()) {
    std::vector<std::int64_t> f;
    for (const auto& k : kernel) f.push_back(detail::mod_p(A.nrd(detail::combine(v, k)), 2));
    auto odd = std::find(f.begin(), f.end(), 1);
    if (odd != f.end()) {
      const std::size_t s0 = static_cast<std::size_t>(odd - f.begin());
      std::vector<std::vector<std::int64_t>> refined;
      for (std::size_t s = 0; s < kernel.size(); ++s) {
        if (s == s0) continue;
        auto k = kernel[s];
        if (f[s] == 1)
          for (std::size_t c = 0; c < 4; ++c) k[c] = (k[c] + kernel[s0][c]) % 2;
        refined.push_back(std::move(k));
      }
      kernel = std::move(refined);
    }
  }

  std::vector<QElem> gens;
  for (const auto& x : v) gens.push_back(Rat(static_cast<long>(p)) * x);
  for (const auto& k : kernel) gens.push_back(detail::combine(v, k));
  return ZLat4::from_elements(A, gens);
}

namespace detail {

// One enlargement step at p for an order that is hereditary but not maximal
// at p: O/rad is F_p x F_p, and the right order of O*x + rad for a lift x of
// a nontrivial idempotent (up to a unit) is strictly larger.
inline std::optional<Order> idempotent_step(const Order& O, const ZLat4& rad, std::int64_t p) {
  const auto& A = O.algebra();
  auto with_one = rad.elements();
  with_one.push_back(QElem::scalar(1));
  const ZLat4 scalars_mod_rad = ZLat4::from_elements(A, with_one);
  for (const auto& z : O.elements()) {
    if (scalars_mod_rad.contains(z)) continue;
    const std::int64_t tr = mod_p(trd(z), p);
    const std::int64_t nr = mod_p(A.nrd(z), p);
    std::vector<std::int64_t> roots;
    for (std::int64_t r = 0; r < p && roots.size() < 2; ++r)
      if (((r * r - tr * r + nr) % p + p) % p == 0) roots.push_back(r);
    if (roots.size() < 2) continue;
    for (auto root : roots) {
      QElem x = z - QElem::scalar(Rat(static_cast<long>(root)));
      ZLat4 L = (O.lattice() * x) + rad;
      Order bigger = right_order(L);
      if (bigger.reduced_disc() < O.reduced_disc()) return bigger;
      bigger = left_order(L);
      if (bigger.reduced_disc() < O.reduced_disc()) return bigger;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// A maximal order containing O. Primes are processed in ascending order.
inline Order maximalize(const Order& O) {
  Order cur = O;
  const BigInt target = O.algebra().discriminant();
  while (cur.reduced_disc() != target) {
    BigInt excess = cur.reduced_disc() / target;
    if (excess * target != cur.reduced_disc() || !excess.fits_slong_p())
      throw error(errc::maximalization_failed, "discriminant " + cur.reduced_disc().get_str() +
                                                   " is not a multiple of " + target.get_str());
    const std::int64_t p = prime_divisors(excess.get_si()).front();
    ZLat4 rad = p_radical(cur, p);
    Order grown = left_order(rad);
    if (grown.reduced_disc() < cur.reduced_disc()) {
      cur = grown;
      continue;
    }
    grown = right_order(rad);
    if (grown.reduced_disc() < cur.reduced_disc()) {
      cur = grown;
      continue;
    }
    auto step = detail::idempotent_step(cur, rad, p);
    if (!step)
      throw error(errc::maximalization_failed,
                  "no enlargement found at p = " + std::to_string(p) + ", disc " + cur.reduced_disc().get_str());
    cur = *step;
  }
  return cur;
}

// Named maximal-order bases (coordinates in 1, i, j, ij).

/// {1, i, j, (1+i+j+ij)/2}, maximal in (-1,-1).
inline RatMat hurwitz_basis() {
  return RatMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}};
}

/// {1, i, (1+j)/2, (i+ij)/2}, maximal in (-1,-l) for l = 3 mod 4.
inline RatMat case2_basis() {
  return RatMat{{1, 0, 0, 0}, {0, 1, 0, 0}, {Rat(1, 2), 0, Rat(1, 2), 0}, {0, Rat(1, 2), 0, Rat(1, 2)}};
}

/// {i, (1+i+j)/2, j, (2+i+ij)/4}, maximal in (-2,-l) for l = 5 mod 8.
inline RatMat case3_basis() {
  return RatMat{{0, 1, 0, 0}, {Rat(1, 2), Rat(1, 2), Rat(1, 2), 0}, {0, 0, 1, 0}, {Rat(1, 2), Rat(1, 4), 0, Rat(1, 4)}};
}

/// {1, (1+i)/2, (3+i+3j+ij)/6, (-3+i-2ij)/6}, maximal in (-3,-17).
inline RatMat example17_basis() {
  return RatMat{{1, 0, 0, 0},
                {Rat(1, 2), Rat(1, 2), 0, 0},
                {Rat(1, 2), Rat(1, 6), Rat(1, 2), Rat(1, 6)},
                {Rat(-1, 2), Rat(1, 6), 0, Rat(-1, 3)}};
}

/// Z<1, i, j, ij>.
inline RatMat standard_basis() { return RatMat::identity(4); }

inline std::optional<RatMat> preset_basis(const std::string& name) {
  if (name == "hurwitz") return hurwitz_basis();
  if (name == "case2") return case2_basis();
  if (name == "case3") return case3_basis();
  if (name == "example17") return example17_basis();
  if (name == "standard") return standard_basis();
  return std::nullopt;
}

}  // namespace amlat
