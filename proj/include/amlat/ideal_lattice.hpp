#pragma once

// Ideal lattices (I, q_alpha) with q_alpha(x, y) = trd(alpha x conj(y)):
// Gram matrices, discriminants, duals, evenness and modularity certificates.

#include <string>
#include <utility>
#include <vector>

#include "amlat/enumerate.hpp"
#include "amlat/ideal.hpp"

namespace amlat {

inline Rat q_alpha(const QuaternionAlgebra& A, const Rat& alpha, const QElem& x, const QElem& y) {
  return alpha * trd(A.mul(x, conj(y)));
}

inline RatMat gram_of(const QuaternionAlgebra& A, const std::vector<QElem>& basis, const Rat& alpha) {
  if (alpha <= 0) throw error(errc::non_positive_alpha, "alpha = " + to_string(alpha) + " must be positive");
  RatMat g(basis.size(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = 0; l < basis.size(); ++l) g(k, l) = q_alpha(A, alpha, basis[k], basis[l]);
  return g;
}

inline RatMat gram_matrix(const ZLat4& I, const Rat& alpha) { return gram_of(I.algebra(), I.elements(), alpha); }

class IdealLattice {
 public:
  IdealLattice(TwoSidedIdeal ideal, Rat alpha)
      : ideal_(std::move(ideal)), alpha_(std::move(alpha)), gram_(gram_matrix(ideal_.lattice(), alpha_)) {
    if (!is_maximal(ideal_.order()))
      throw error(errc::order_mismatch, "ideal lattices are built over maximal orders");
  }

  const TwoSidedIdeal& ideal() const { return ideal_; }
  const Order& order() const { return ideal_.order(); }
  const QuaternionAlgebra& algebra() const { return ideal_.algebra(); }
  const Rat& alpha() const { return alpha_; }
  const RatMat& gram() const { return gram_; }

 private:
  TwoSidedIdeal ideal_;
  Rat alpha_;
  RatMat gram_;
};

/// det(Gram), checked against alpha^4 n(I)^4 n(D)^2.
inline Rat lattice_discriminant(const IdealLattice& L) {
  Rat d = det(L.gram());
  Rat nI = nrd_ideal(L.ideal());
  Rat nD(L.order().reduced_disc());
  Rat a2 = L.alpha() * L.alpha();
  Rat formula = a2 * a2 * nI * nI * nI * nI * nD * nD;
  if (d != formula)
    throw error(errc::discriminant_formula_mismatch,
                "det(G) = " + to_string(d) + " but norm formula gives " + to_string(formula));
  return d;
}

/// Dual basis from the inverse Gram matrix.
inline ZLat4 dual_by_gram(const IdealLattice& L) {
  return ZLat4(L.algebra(), inverse(L.gram()) * L.ideal().lattice().basis());
}

/// alpha^{-1} * codifferent * conj(I)^{-1}.
inline ZLat4 dual_by_ideals(const IdealLattice& L) {
  ZLat4 codiff = codifferent(L.order());
  ZLat4 conj_inv = lattice_inverse(conj(L.ideal().lattice()));
  return (Rat(1) / L.alpha()) * (codiff * conj_inv);
}

inline ZLat4 dual_lattice(const IdealLattice& L) {
  ZLat4 a = dual_by_gram(L);
  ZLat4 b = dual_by_ideals(L);
  if (!(a == b)) throw error(errc::dual_mismatch, "Gram-inverse dual and ideal-formula dual differ");
  return a;
}

inline bool is_integral(const RatMat& gram) {
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (!is_integer(gram(i, j))) return false;
  return true;
}

/// Integral with even diagonal; for integral forms this is evenness of every vector.
inline bool is_even(const RatMat& gram) {
  if (!is_integral(gram)) return false;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i).get_num() % 2 != 0) return false;
  return true;
}

inline bool is_integral(const IdealLattice& L) { return is_integral(L.gram()); }
inline bool is_even(const IdealLattice& L) { return is_even(L.gram()); }

struct ModularityCertificate {
  BigInt ell;
  QElem beta;
  QElem beta_prime;
  QElem t;
  Rat alpha;
  bool beta_in_order = false;
  bool beta_in_normalizer = false;
  bool nrd_beta_eq_ell = false;
  bool dual_identity = false;
  bool similitude_identity = false;

  bool valid() const {
    return beta_in_order && beta_in_normalizer && nrd_beta_eq_ell && dual_identity && similitude_identity;
  }

  std::vector<std::pair<std::string, bool>> checks() const {
    return {{"beta_in_order", beta_in_order},
            {"beta_in_normalizer", beta_in_normalizer},
            {"nrd_beta_eq_ell", nrd_beta_eq_ell},
            {"dual_identity", dual_identity},
            {"similitude_identity", similitude_identity}};
  }
};

/// Checks I = I^* beta' and nrd(beta) = ell with beta' = conj(t) beta conj(t)^{-1}.
/// Failed checks are recorded, never thrown.
inline ModularityCertificate verify_arakelov_modular(const IdealLattice& L, const QElem& beta, const BigInt& ell) {
  const auto& A = L.algebra();
  const Order& lam = L.order();
  const QElem& t = L.ideal().t();
  ModularityCertificate c;
  c.ell = ell;
  c.beta = beta;
  c.t = t;
  c.alpha = L.alpha();
  if (beta.is_zero() || A.nrd(t) == 0) return c;
  c.beta_prime = A.mul(A.mul(conj(t), beta), A.inverse(conj(t)));
  c.beta_in_order = lam.contains(beta);
  c.beta_in_normalizer = normalizer_contains(lam, beta);
  c.nrd_beta_eq_ell = A.nrd(beta) == Rat(ell);

  ZLat4 dual = dual_lattice(L);
  c.dual_identity = (dual * c.beta_prime) == L.ideal().lattice();

  // q_alpha(x beta', y beta') = ell * q_alpha(x, y) on a basis of I^*.
  const auto d = dual.elements();
  std::vector<QElem> image;
  for (const auto& x : d) image.push_back(A.mul(x, c.beta_prime));
  c.similitude_identity = gram_of(A, image, L.alpha()) == Rat(ell) * gram_of(A, d, L.alpha());
  return c;
}

inline ModularityCertificate verify_arakelov_modular(const TwoSidedIdeal& I, const Rat& alpha, const QElem& beta,
                                                     const BigInt& ell) {
  return verify_arakelov_modular(IdealLattice(I, alpha), beta, ell);
}

}  // namespace amlat
