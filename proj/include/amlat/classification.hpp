#pragma once

// Level-driven construction of Arakelov-modular ideal lattices over
// totally definite quaternion algebras over Q.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amlat/ideal_lattice.hpp"

namespace amlat {

/// ell = ell1^2 * ell2 where ell2 collects the primes of odd exponent.
struct LevelFactorization {
  std::int64_t ell = 0;
  std::int64_t ell1 = 1;
  std::int64_t ell2 = 1;
  std::map<std::int64_t, int> exponents;
  std::vector<std::int64_t> odd_primes;  // support of ell2, ascending

  bool is_square() const { return odd_primes.empty(); }
  std::int64_t radical_of_ell2() const {
    std::int64_t r = 1;
    for (auto p : odd_primes) r *= p;
    return r;
  }
};

inline std::int64_t ipow(std::int64_t base, int e) {
  std::int64_t r = 1;
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

inline LevelFactorization factor_level(std::int64_t ell) {
  if (ell < 1) throw error(errc::parse_error, "level must be a positive integer");
  LevelFactorization f;
  f.ell = ell;
  for (auto [p, e] : factorize(ell)) {
    f.exponents[p] = e;
    if (e % 2 == 1) {
      f.odd_primes.push_back(p);
      f.ell2 *= ipow(p, e);
    } else {
      f.ell1 *= ipow(p, e / 2);
    }
  }
  return f;
}

struct AlgebraChoice {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::optional<std::int64_t> q;
  int case_number = 0;  // 1..4 for a prime ramification, 0 for composite
};

inline AlgebraChoice algebra_for_prime(std::int64_t ell) {
  if (!is_prime(ell)) throw error(errc::invalid_prime, std::to_string(ell) + " is not prime");
  AlgebraChoice c;
  if (ell == 2) {
    c = {-1, -1, std::nullopt, 1};
  } else if (ell % 4 == 3) {
    c = {-1, -ell, std::nullopt, 2};
  } else if (ell % 8 == 5) {
    c = {-2, -ell, std::nullopt, 3};
  } else {
    // Smallest prime q = 3 mod 4 with (ell/q) = -1.
    std::int64_t q = 3;
    while (!(is_prime(q) && legendre(BigInt(static_cast<long>(ell)), q) == -1)) q += 4;
    c = {-q, -ell, q, 4};
  }
  QuaternionAlgebra A(c.a, c.b);
  if (A.ramified_primes() != std::vector<std::int64_t>{ell})
    throw error(errc::ramification_check_failed,
                "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ") does not ramify exactly at " +
                    std::to_string(ell));
  return c;
}

struct PresetOrder {
  std::string name;  // catalog key, or "maximalized"
  Order order;
};

/// Maximal order containing Z<1,i,j,ij> for the algebra picked for a prime level.
inline PresetOrder order_for_prime(const AlgebraChoice& c, std::int64_t ell) {
  QuaternionAlgebra A(c.a, c.b);
  switch (c.case_number) {
    case 1: return {"hurwitz", order_from_basis(A, hurwitz_basis())};
    case 2: return {"case2", order_from_basis(A, case2_basis())};
    case 3: return {"case3", order_from_basis(A, case3_basis())};
    default: break;
  }
  if (ell == 17 && c.a == -3) return {"example17", order_from_basis(A, example17_basis())};
  return {"maximalized", maximalize(order_from_basis(A, standard_basis()))};
}

/// i - j for case 1, j otherwise; verified against the order.
inline QElem beta_for(const AlgebraChoice& c, const Order& lam, std::int64_t ell) {
  QElem beta = c.case_number == 1 ? QElem(0, 1, -1, 0) : QElem(0, 0, 1, 0);
  const auto& A = lam.algebra();
  if (!lam.contains(beta) || !normalizer_contains(lam, beta) || A.nrd(beta) != Rat(static_cast<long>(ell)))
    throw error(errc::beta_verification_failed, "beta = " + to_string(beta) + " fails for level " + std::to_string(ell));
  return beta;
}

/// Elements x of the order with nrd(x) = m that normalize it, in enumeration order.
inline std::optional<QElem> find_normalizing_element(const Order& lam, const BigInt& m) {
  const auto v = lam.elements();
  RatMat g = gram_of(lam.algebra(), v, Rat(1));  // q_1(x) = 2 nrd(x)
  for (const auto& x : vectors_of_norm(g, Rat(2 * m))) {
    QElem e;
    for (std::size_t k = 0; k < 4; ++k) e = e + Rat(x[k]) * v[k];
    if (normalizer_contains(lam, e)) return e;
  }
  return std::nullopt;
}

struct Existence {
  bool exists = false;
  std::string reason;
  std::optional<QElem> beta;
};

inline Existence exists_arakelov_modular(const Order& lam, std::int64_t ell) {
  LevelFactorization f = factor_level(ell);
  if (f.is_square()) return {false, "square level", std::nullopt};
  const auto& ram = lam.algebra().ramified_primes();
  for (auto p : ram) {
    auto it = f.exponents.find(p);
    if (it == f.exponents.end())
      return {false, "ramified prime " + std::to_string(p) + " does not divide the level", std::nullopt};
    if (it->second % 2 == 0)
      return {false, "ramified prime " + std::to_string(p) + " has even exponent", std::nullopt};
  }
  for (auto [p, e] : f.exponents) {
    bool ramified = std::find(ram.begin(), ram.end(), p) != ram.end();
    if (!ramified && e % 2 == 1)
      return {false, "unramified prime " + std::to_string(p) + " has odd exponent", std::nullopt};
  }
  auto beta = find_normalizing_element(lam, BigInt(static_cast<long>(ell)));
  if (!beta) return {false, "no element of the normalizer in the order has reduced norm " + std::to_string(ell), std::nullopt};
  return {true, "conditions satisfied", beta};
}

/// Shell bound for the composite beta search; AMLAT_SEARCH_BOUND overrides.
inline int search_bound() {
  if (const char* env = std::getenv("AMLAT_SEARCH_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 64;
}

struct ConstructionPlan {
  LevelFactorization level;
  AlgebraChoice algebra;
  std::string order_preset;
  Order order;
  QElem beta;
  std::map<std::int64_t, int> ideal_exponents;  // ramified p -> (r_p - 1) / 2
  Rat alpha;
  QElem t;
};

namespace detail {

struct CompositeHit {
  AlgebraChoice algebra;
  Order order;
  QElem beta;
};

// Algebras (a, b), a and b from {-1, -2, -q : q prime <= 4 * rad}, in
// lexicographic order of the candidate list; every algebra with the right
// ramification costs one shell of the norm-rad enumeration.
inline CompositeHit composite_search(const std::vector<std::int64_t>& support, std::int64_t rad, int bound) {
  std::vector<std::int64_t> cands{-1, -2};
  for (std::int64_t q = 3; q <= 4 * rad; q += 2)
    if (is_prime(q)) cands.push_back(-q);
  int shells = 0;
  for (std::size_t ia = 0; ia < cands.size(); ++ia) {
    for (std::size_t ib = ia; ib < cands.size(); ++ib) {
      QuaternionAlgebra A(cands[ia], cands[ib]);
      if (A.ramified_primes() != support) continue;
      if (shells == bound)
        throw error(errc::no_plan_found, "beta search exhausted " + std::to_string(bound) + " shells");
      ++shells;
      Order lam = maximalize(order_from_basis(A, standard_basis()));
      if (auto beta = find_normalizing_element(lam, BigInt(static_cast<long>(rad))))
        return {{cands[ia], cands[ib], std::nullopt, 0}, lam, *beta};
    }
  }
  throw error(errc::no_plan_found, "no algebra in the search grid ramifies exactly at the odd-exponent primes with a suitable beta");
}

}  // namespace detail

inline ConstructionPlan plan_for(std::int64_t ell) {
  if (ell < 2) throw error(errc::no_plan_found, "square level");
  LevelFactorization f = factor_level(ell);
  if (f.is_square()) throw error(errc::no_plan_found, "square level");
  if (f.odd_primes.size() % 2 == 0)
    throw error(errc::no_plan_found,
                "even number of primes with odd exponent; a totally definite algebra ramifies at an odd number of primes");

  const std::int64_t rad = f.radical_of_ell2();
  std::optional<AlgebraChoice> choice;
  std::optional<PresetOrder> lam;
  QElem beta_rad;
  if (f.odd_primes.size() == 1) {
    choice = algebra_for_prime(rad);
    lam = order_for_prime(*choice, rad);
    beta_rad = beta_for(*choice, lam->order, rad);
  } else {
    auto hit = detail::composite_search(f.odd_primes, rad, search_bound());
    choice = hit.algebra;
    lam = PresetOrder{"maximalized", hit.order};
    beta_rad = hit.beta;
  }

  Rat scalar(static_cast<long>(f.ell1));
  std::map<std::int64_t, int> exps;
  for (auto p : f.odd_primes) {
    const int half = (f.exponents.at(p) - 1) / 2;
    exps[p] = half;
    scalar *= Rat(static_cast<long>(ipow(p, half)));
  }
  return ConstructionPlan{f,   *choice, lam->name, lam->order, scalar * beta_rad, exps, Rat(static_cast<long>(f.ell1)),
                          QElem::scalar(1)};
}

struct Construction {
  ConstructionPlan plan;
  IdealLattice lattice;
  ModularityCertificate certificate;
};

/// The ideal J = prod P_p^{(r_p - 1)/2} with t = 1 and alpha = ell1.
inline TwoSidedIdeal realize_ideal(const ConstructionPlan& plan) {
  TwoSidedIdeal J = TwoSidedIdeal::unit(plan.order);
  for (auto [p, half] : plan.ideal_exponents)
    if (half > 0) J = ideal_mul(J, ideal_pow(prime_ideal_above(plan.order, p), half));
  return J;
}

inline Construction construct(std::int64_t ell) {
  ConstructionPlan plan = plan_for(ell);
  IdealLattice L(realize_ideal(plan), plan.alpha);
  ModularityCertificate cert = verify_arakelov_modular(L, plan.beta, BigInt(static_cast<long>(ell)));
  if (!cert.valid()) throw error(errc::internal_check_failed, "constructed lattice fails its certificate");
  return {std::move(plan), std::move(L), std::move(cert)};
}

}  // namespace amlat
