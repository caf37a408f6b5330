#include "amlat/ideal_lattice.hpp"
#include "support.hpp"

using namespace amlat;

namespace {

struct Setting {
  std::string name;
  Order order;
  std::int64_t p;
  QElem beta;
};

std::vector<Setting> settings() {
  return {{"hurwitz", order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis()), 2, QElem(0, 1, -1, 0)},
          {"case2", order_from_basis(QuaternionAlgebra(-1, -3), case2_basis()), 3, QElem(0, 0, 1, 0)},
          {"case3", order_from_basis(QuaternionAlgebra(-2, -5), case3_basis()), 5, QElem(0, 0, 1, 0)},
          {"example17", order_from_basis(QuaternionAlgebra(-3, -17), example17_basis()), 17, QElem(0, 0, 1, 0)}};
}

std::vector<std::pair<std::string, TwoSidedIdeal>> ideal_grid(const Setting& s) {
  const Order& lam = s.order;
  TwoSidedIdeal P = prime_ideal_above(lam, s.p);
  return {{"order", TwoSidedIdeal::unit(lam)},
          {"P", P},
          {"P^2", ideal_pow(P, 2)},
          {"pO", scale(Rat(s.p), TwoSidedIdeal::unit(lam))},
          {"beta O", principal_ideal(lam, s.beta)}};
}

}  // namespace

TEST_CASE("Gram matrix of the Hurwitz order", "[ideal_lattice]") {
  QuaternionAlgebra A(-1, -1);
  std::vector<QElem> basis{QElem(1, 0, 0, 0), QElem(0, 1, 0, 0), QElem(0, 0, 1, 0),
                           QElem(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2))};
  RatMat expected{{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}, {1, 1, 1, 2}};
  CHECK(gram_of(A, basis, 1) == expected);
  CHECK(gram_of(A, basis, Rat(1, 2)) == Rat(1, 2) * expected);
  CHECK_THROWS_KIND(gram_of(A, basis, 0), errc::non_positive_alpha);
  CHECK_THROWS_KIND(gram_of(A, basis, -2), errc::non_positive_alpha);

  Order lam = order_from_basis(A, hurwitz_basis());
  IdealLattice L(TwoSidedIdeal::unit(lam), 1);
  CHECK(det(L.gram()) == 4);
  CHECK(lattice_discriminant(L) == 4);
  CHECK(is_even(L));
  CHECK(minimum_and_kissing(L.gram()).min == 2);
  CHECK(minimum_and_kissing(L.gram()).kissing == 24);
  IdealLattice half(TwoSidedIdeal::unit(lam), Rat(1, 2));
  CHECK_FALSE(is_integral(half));
  CHECK_FALSE(is_even(half));
  CHECK_THROWS_KIND(IdealLattice(TwoSidedIdeal::unit(lam), 0), errc::non_positive_alpha);
}

TEST_CASE("worked levels 8 and 12", "[ideal_lattice]") {
  Order h = order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis());
  IdealLattice L8(principal_ideal(h, QElem(0, 1, -1, 0)), 1);
  CHECK(lattice_discriminant(L8) == 64);
  CHECK(is_even(L8));
  CHECK(minimum_and_kissing(L8.gram()).min == 4);

  Order c2 = order_from_basis(QuaternionAlgebra(-1, -3), case2_basis());
  IdealLattice L1(TwoSidedIdeal::unit(c2), 1);
  IdealLattice L2(TwoSidedIdeal::unit(c2), 2);
  CHECK(L2.gram() == Rat(2) * L1.gram());
  CHECK(lattice_discriminant(L2) == 144);
  CHECK(is_even(L2));
  CHECK(minimum_and_kissing(L2.gram()).min == 4);
}

TEST_CASE("dual lattice two ways and discriminant formula", "[ideal_lattice]") {
  for (const auto& s : settings()) {
    for (const auto& [iname, I] : ideal_grid(s)) {
      for (Rat alpha : {Rat(1), Rat(2), Rat(3, 2), Rat(3)}) {
        INFO(s.name << " " << iname << " alpha=" << to_string(alpha));
        IdealLattice L(I, alpha);
        ZLat4 a = dual_by_gram(L);
        ZLat4 b = dual_by_ideals(L);
        CHECK(a == b);
        CHECK_NOTHROW(lattice_discriminant(L));
        CHECK(det(L.gram()) == testing::cofactor_det(L.gram()));
        // det(dual) det(primal) = 1 and the dual pairs integrally with I.
        RatMat dual_gram = gram_matrix(a, alpha);
        CHECK(det(dual_gram) * det(L.gram()) == 1);
        for (const auto& x : a.elements())
          for (const auto& y : I.lattice().elements()) CHECK(is_integer(q_alpha(L.algebra(), alpha, x, y)));
        // Dual of the dual.
        IdealLattice back(TwoSidedIdeal::from_lattice(L.order(), a), alpha);
        CHECK(dual_lattice(back) == I.lattice());
        CHECK(gram_matrix(I.lattice(), alpha * 5) == Rat(5) * L.gram());
      }
    }
  }
}

TEST_CASE("dual with a non-trivial t", "[ideal_lattice]") {
  Order h = order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis());
  QElem t(1, 1, 0, 0);
  TwoSidedIdeal I(h, h.lattice(), t);
  IdealLattice L(I, Rat(1, 2));
  CHECK(dual_by_gram(L) == dual_by_ideals(L));
  CHECK(lattice_discriminant(L) == 4);
  // x -> x t is a similitude of factor nrd(t) = 2, so (Λt, q_{1/2}) is isometric to (Λ, q_1).
  std::vector<QElem> image;
  for (const auto& x : h.elements()) image.push_back(h.algebra().mul(x, t));
  CHECK(ZLat4::from_elements(h.algebra(), image) == I.lattice());
  CHECK(gram_of(h.algebra(), image, Rat(1, 2)) == gram_matrix(h.lattice(), 1));
}

TEST_CASE("certificates", "[ideal_lattice]") {
  for (const auto& s : settings()) {
    INFO(s.name);
    IdealLattice L(TwoSidedIdeal::unit(s.order), 1);
    auto c = verify_arakelov_modular(L, s.beta, BigInt(static_cast<long>(s.p)));
    CHECK(c.valid());
    CHECK(c.beta_prime == s.beta);
    CHECK(c.checks().size() == 5);
    // Bijection x -> x beta' from the dual onto I, with volume ratio p^2.
    ZLat4 dual = dual_lattice(L);
    CHECK((dual * c.beta_prime).volume() / dual.volume() == Rat(s.p * s.p));

    auto wrong_level = verify_arakelov_modular(L, s.beta, BigInt(static_cast<long>(s.p + 1)));
    CHECK_FALSE(wrong_level.valid());
    CHECK_FALSE(wrong_level.nrd_beta_eq_ell);
    CHECK(wrong_level.beta_in_order);
    CHECK(wrong_level.dual_identity);
    CHECK_FALSE(wrong_level.similitude_identity);

    auto one = verify_arakelov_modular(L, QElem::scalar(1), BigInt(1));
    CHECK_FALSE(one.valid());
    CHECK_FALSE(one.dual_identity);
    auto zero = verify_arakelov_modular(L, QElem(), BigInt(static_cast<long>(s.p)));
    CHECK_FALSE(zero.valid());
  }

  Order h = order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis());
  auto hurwitz_i = verify_arakelov_modular(TwoSidedIdeal::unit(h), 1, QElem(0, 1, 0, 0), BigInt(2));
  CHECK(hurwitz_i.beta_in_order);
  CHECK(hurwitz_i.beta_in_normalizer);
  CHECK_FALSE(hurwitz_i.nrd_beta_eq_ell);
  CHECK_FALSE(hurwitz_i.valid());

  // Level 8: P with beta = 2 (i - j) over the Hurwitz order.
  TwoSidedIdeal P = prime_ideal_above(h, 2);
  auto c8 = verify_arakelov_modular(P, 1, QElem(0, 2, -2, 0), BigInt(8));
  CHECK(c8.valid());

  // t = 1 + i needs alpha = 1/2 to stay 2-modular.
  TwoSidedIdeal It(h, h.lattice(), QElem(1, 1, 0, 0));
  auto ct = verify_arakelov_modular(It, Rat(1, 2), QElem(0, 1, -1, 0), BigInt(2));
  CHECK(ct.valid());
  CHECK(ct.beta_prime == QElem(0, 1, 0, 1));
  CHECK_FALSE(verify_arakelov_modular(It, 1, QElem(0, 1, -1, 0), BigInt(2)).valid());

  Order z = order_from_basis(QuaternionAlgebra(-1, -1), standard_basis());
  CHECK_THROWS_KIND(IdealLattice(TwoSidedIdeal::unit(z), 1), errc::order_mismatch);
}
