#include "amlat/ideal.hpp"
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

}  // namespace

TEST_CASE("prime ideals above the ramified prime", "[ideals]") {
  for (const auto& s : settings()) {
    INFO(s.name);
    const Order& lam = s.order;
    TwoSidedIdeal P = prime_ideal_above(lam, s.p);
    TwoSidedIdeal unit = TwoSidedIdeal::unit(lam);
    CHECK(nrd_ideal(P) == s.p);
    CHECK(ideal_mul(P, P).lattice() == Rat(s.p) * lam.lattice());
    CHECK(conj_ideal(P) == P);
    CHECK(P == principal_ideal(lam, s.beta));
    CHECK(different(lam) == P);
    CHECK(ideal_mul(P, ideal_inverse(P)) == unit);
    CHECK(ideal_inverse(ideal_inverse(P)) == P);
    CHECK(ideal_mul(unit, P) == P);
    CHECK(ideal_inverse(unit) == unit);
    CHECK(nrd_ideal(unit) == 1);
    std::int64_t q = s.p == 3 ? 5 : 3;
    CHECK_THROWS_KIND(prime_ideal_above(lam, q), errc::not_ramified);
  }
}

TEST_CASE("norm is multiplicative", "[ideals]") {
  for (const auto& s : settings()) {
    INFO(s.name);
    const Order& lam = s.order;
    TwoSidedIdeal P = prime_ideal_above(lam, s.p);
    std::vector<TwoSidedIdeal> ideals{TwoSidedIdeal::unit(lam), P, ideal_pow(P, 2), ideal_pow(P, 3),
                                      scale(Rat(3), P), scale(Rat(1, 2), TwoSidedIdeal::unit(lam))};
    for (const auto& I : ideals) {
      CHECK(conj_ideal(I) == I);
      for (const auto& J : ideals) {
        CHECK(nrd_ideal(ideal_mul(I, J)) == nrd_ideal(I) * nrd_ideal(J));
        CHECK(ideal_mul(I, J) == ideal_mul(J, I));
      }
    }
    CHECK(nrd_ideal(ideal_pow(P, 3)) == s.p * s.p * s.p);
    CHECK(nrd_ideal(scale(Rat(3), P)) == 9 * s.p);
  }
}

TEST_CASE("principal ideals of normalizing elements", "[ideals]") {
  for (const auto& s : settings()) {
    INFO(s.name);
    const Order& lam = s.order;
    const auto& A = lam.algebra();
    TwoSidedIdeal B = principal_ideal(lam, s.beta);
    TwoSidedIdeal Binv = principal_ideal(lam, A.inverse(s.beta));
    CHECK(ideal_mul(B, Binv) == TwoSidedIdeal::unit(lam));
    CHECK(nrd_ideal(B) == A.nrd(s.beta));
    CHECK(s.beta * lam.lattice() == lam.lattice() * s.beta);
    CHECK(left_order(s.beta * lam.lattice()) == lam);
  }
}

TEST_CASE("generalized ideals J t", "[ideals]") {
  Order lam = order_from_basis(QuaternionAlgebra(-1, -1), hurwitz_basis());
  QElem t(1, 1, 0, 0);
  TwoSidedIdeal P = prime_ideal_above(lam, 2);
  TwoSidedIdeal I = TwoSidedIdeal::from_lattice(lam, lam.lattice() * t, t);
  CHECK(I.j() == lam.lattice());
  CHECK(I.t() == t);
  CHECK(nrd_ideal(I) == 2);
  TwoSidedIdeal K(lam, P.lattice(), QElem(2, 0, 0, 0));
  CHECK(K.lattice() == Rat(2) * P.lattice());
  CHECK(nrd_ideal(K) == 8);
}

TEST_CASE("ideal errors", "[ideals]") {
  QuaternionAlgebra A(-1, -1);
  Order lam = order_from_basis(A, hurwitz_basis());
  Order std_order = order_from_basis(A, standard_basis());
  Order other = order_from_basis(QuaternionAlgebra(-1, -3), case2_basis());
  CHECK_THROWS_KIND(TwoSidedIdeal(lam, std_order.lattice()), errc::not_two_sided);
  CHECK_THROWS_KIND(TwoSidedIdeal(lam, lam.lattice(), QElem()), errc::not_two_sided);
  // A right ideal that is not two-sided: (1+i) Z<1,i,j,ij> has the wrong left order.
  CHECK_THROWS_KIND(TwoSidedIdeal(lam, QElem(1, 1, 0, 0) * std_order.lattice()), errc::not_two_sided);
  CHECK_THROWS_KIND(ideal_mul(TwoSidedIdeal::unit(lam), TwoSidedIdeal::unit(other)), errc::order_mismatch);
  CHECK_THROWS_KIND(prime_ideal_above(lam, 3), errc::not_ramified);
}
