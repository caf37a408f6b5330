#pragma once

// Generalized two-sided ideals I = J t over a fixed order.

#include <string>

#include "amlat/order.hpp"

namespace amlat {

class TwoSidedIdeal {
 public:
  /// I = J t with O_l(J) = O_r(J) = order; anything else is rejected.
  TwoSidedIdeal(Order order, ZLat4 j, QElem t = QElem::scalar(1))
      : order_(std::move(order)), j_(std::move(j)), t_(std::move(t)), lattice_(product(j_, t_)) {
    if (!(left_order_lattice(j_) == order_.lattice()) || !(right_order_lattice(j_) == order_.lattice()))
      throw error(errc::not_two_sided, "J is not a two-sided ideal of the order");
  }

  /// Wraps the lattice I, taking J = I t^{-1}.
  static TwoSidedIdeal from_lattice(const Order& order, const ZLat4& I, const QElem& t = QElem::scalar(1)) {
    return TwoSidedIdeal(order, I * order.algebra().inverse(t), t);
  }

  static TwoSidedIdeal unit(const Order& order) { return TwoSidedIdeal(order, order.lattice()); }

  const Order& order() const { return order_; }
  const ZLat4& j() const { return j_; }
  const QElem& t() const { return t_; }
  const ZLat4& lattice() const { return lattice_; }
  const QuaternionAlgebra& algebra() const { return order_.algebra(); }

  /// Equality of the underlying lattices over the same order.
  friend bool operator==(const TwoSidedIdeal& x, const TwoSidedIdeal& y) {
    return x.order_ == y.order_ && x.lattice_ == y.lattice_;
  }

 private:
  static ZLat4 product(const ZLat4& j, const QElem& t) {
    if (t.is_zero()) throw error(errc::not_two_sided, "t must be invertible");
    return j * t;
  }

  Order order_;
  ZLat4 j_;
  QElem t_;
  ZLat4 lattice_;
};

inline TwoSidedIdeal ideal_mul(const TwoSidedIdeal& I, const TwoSidedIdeal& K) {
  if (!(I.order() == K.order())) throw error(errc::order_mismatch, "ideals live over different orders");
  const auto& A = I.algebra();
  QElem t = A.mul(I.t(), K.t());
  return TwoSidedIdeal::from_lattice(I.order(), I.lattice() * K.lattice(), t);
}

inline TwoSidedIdeal ideal_pow(const TwoSidedIdeal& I, int e) {
  TwoSidedIdeal out = TwoSidedIdeal::unit(I.order());
  for (int k = 0; k < e; ++k) out = ideal_mul(out, I);
  return out;
}

/// {x : I x ⊆ Λ}, checked against I I^{-1} = Λ.
inline TwoSidedIdeal ideal_inverse(const TwoSidedIdeal& I) {
  const auto& A = I.algebra();
  const ZLat4& lam = I.order().lattice();
  ZLat4 inv = right_colon(I.lattice(), lam);
  if (!(I.lattice() * inv == lam) || !(inv * I.lattice() == lam))
    throw error(errc::inverse_verification_failed, "I * I^{-1} differs from the order");
  return TwoSidedIdeal::from_lattice(I.order(), inv, A.inverse(I.t()));
}

/// Conjugate ideal conj(J t) = conj(t) J, written as (conj(t) J conj(t)^{-1}) conj(t).
inline TwoSidedIdeal conj_ideal(const TwoSidedIdeal& I) {
  return TwoSidedIdeal::from_lattice(I.order(), conj(I.lattice()), conj(I.t()));
}

inline TwoSidedIdeal scale(const Rat& s, const TwoSidedIdeal& I) {
  return TwoSidedIdeal(I.order(), s * I.j(), I.t());
}

/// Principal ideal beta * Λ.
inline TwoSidedIdeal principal_ideal(const Order& O, const QElem& beta) {
  return TwoSidedIdeal::from_lattice(O, beta * O.lattice());
}

inline TwoSidedIdeal different(const Order& O) {
  return ideal_inverse(TwoSidedIdeal(O, codifferent(O)));
}

/// n(J t) = n(J) nrd(t) with n(J)^2 = [Λ : J].
inline Rat nrd_ideal(const TwoSidedIdeal& I) {
  Rat index = I.j().volume() / I.order().lattice().volume();
  Rat nj = exact_sqrt(index);
  if (nj < 0) throw error(errc::internal_check_failed, "ideal index " + to_string(index) + " is not a square");
  return nj * I.algebra().nrd(I.t());
}

/// The unique two-sided prime P above a ramified p (P^2 = pΛ).
inline TwoSidedIdeal prime_ideal_above(const Order& O, std::int64_t p) {
  if (O.algebra().local_index(p) != 2)
    throw error(errc::not_ramified, std::to_string(p) + " is not ramified in the algebra");
  TwoSidedIdeal P(O, p_radical(O, p));
  if (!(ideal_mul(P, P).lattice() == Rat(static_cast<long>(p)) * O.lattice()))
    throw error(errc::internal_check_failed, "P^2 != pΛ for p = " + std::to_string(p));
  return P;
}

}  // namespace amlat
