#pragma once

// Full-rank Z-lattices inside a quaternion algebra, stored by canonical basis.

#include <vector>

#include "amlat/exact.hpp"
#include "amlat/quaternion.hpp"

namespace amlat {

class ZLat4 {
 public:
  /// Lattice spanned by the rows of gens (any number of rows, rank 4).
  ZLat4(QuaternionAlgebra algebra, const RatMat& gens)
      : algebra_(std::move(algebra)), basis_(lattice_from_generators(gens)) {
    if (gens.cols() != 4) throw error(errc::not_full_rank, "lattice generators must have 4 coordinates");
  }

  static ZLat4 from_elements(const QuaternionAlgebra& algebra, const std::vector<QElem>& gens) {
    RatMat m(gens.size(), 4);
    for (std::size_t r = 0; r < gens.size(); ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = gens[r][c];
    return ZLat4(algebra, m);
  }

  const QuaternionAlgebra& algebra() const { return algebra_; }
  const RatMat& basis() const { return basis_; }

  QElem element(std::size_t k) const { return QElem(basis_.row(k)); }

  std::vector<QElem> elements() const {
    std::vector<QElem> out;
    for (std::size_t k = 0; k < 4; ++k) out.push_back(element(k));
    return out;
  }

  bool contains(const QElem& v) const { return lattice_contains(basis_, v.coords()); }

  bool contains(const ZLat4& other) const {
    for (std::size_t k = 0; k < 4; ++k)
      if (!contains(other.element(k))) return false;
    return true;
  }

  /// |det| of the basis: covolume relative to Z<1,i,j,ij>.
  Rat volume() const { return abs(det(basis_)); }

  friend bool operator==(const ZLat4& x, const ZLat4& y) {
    return x.algebra_ == y.algebra_ && x.basis_ == y.basis_;
  }

 private:
  QuaternionAlgebra algebra_;
  RatMat basis_;
};

/// Lattice generated by all products x*y, x in L, y in M.
inline ZLat4 operator*(const ZLat4& L, const ZLat4& M) {
  const auto& A = L.algebra();
  std::vector<QElem> gens;
  gens.reserve(16);
  for (const auto& x : L.elements())
    for (const auto& y : M.elements()) gens.push_back(A.mul(x, y));
  return ZLat4::from_elements(A, gens);
}

inline ZLat4 operator*(const QElem& t, const ZLat4& L) {
  std::vector<QElem> gens;
  for (const auto& x : L.elements()) gens.push_back(L.algebra().mul(t, x));
  return ZLat4::from_elements(L.algebra(), gens);
}

inline ZLat4 operator*(const ZLat4& L, const QElem& t) {
  std::vector<QElem> gens;
  for (const auto& x : L.elements()) gens.push_back(L.algebra().mul(x, t));
  return ZLat4::from_elements(L.algebra(), gens);
}

inline ZLat4 operator*(const Rat& s, const ZLat4& L) { return QElem::scalar(s) * L; }

inline ZLat4 operator+(const ZLat4& L, const ZLat4& M) {
  auto gens = L.elements();
  for (const auto& x : M.elements()) gens.push_back(x);
  return ZLat4::from_elements(L.algebra(), gens);
}

inline ZLat4 conj(const ZLat4& L) {
  std::vector<QElem> gens;
  for (const auto& x : L.elements()) gens.push_back(conj(x));
  return ZLat4::from_elements(L.algebra(), gens);
}

namespace detail {

// {x : x * maps[k] * target^{-1} integral for all k}.
inline ZLat4 solution_lattice(const QuaternionAlgebra& A, const std::vector<RatMat>& maps, const ZLat4& target) {
  RatMat tinv = inverse(target.basis());
  RatMat gens(4 * maps.size(), 4);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    RatMat n = maps[k] * tinv;  // 4x4; x*n must be integral
    for (std::size_t c = 0; c < 4; ++c)
      for (std::size_t r = 0; r < 4; ++r) gens(4 * k + c, r) = n(r, c);
  }
  return ZLat4(A, dual_of_generated(gens));
}

}  // namespace detail

/// {x : x L ⊆ M}
inline ZLat4 left_colon(const ZLat4& L, const ZLat4& M) {
  std::vector<RatMat> maps;
  for (const auto& w : L.elements()) maps.push_back(L.algebra().right_mul_matrix(w));
  return detail::solution_lattice(L.algebra(), maps, M);
}

/// {x : L x ⊆ M}
inline ZLat4 right_colon(const ZLat4& L, const ZLat4& M) {
  std::vector<RatMat> maps;
  for (const auto& w : L.elements()) maps.push_back(L.algebra().left_mul_matrix(w));
  return detail::solution_lattice(L.algebra(), maps, M);
}

inline ZLat4 left_order_lattice(const ZLat4& L) { return left_colon(L, L); }
inline ZLat4 right_order_lattice(const ZLat4& L) { return right_colon(L, L); }

/// Inverse lattice {x : x L ⊆ O_r(L)}; for invertible L this satisfies
/// L^{-1} L = O_r(L) and L L^{-1} = O_l(L).
inline ZLat4 lattice_inverse(const ZLat4& L) { return left_colon(L, right_order_lattice(L)); }

}  // namespace amlat
