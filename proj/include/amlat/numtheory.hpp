#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "amlat/error.hpp"
#include "amlat/exact.hpp"

namespace amlat {

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization of |n| in ascending order of primes; empty for |n| <= 1.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (auto [p, e] : factorize(n)) out.push_back(p);
  return out;
}

/// Legendre symbol (a/p) for an odd prime p by Euler's criterion.
inline int legendre(const BigInt& a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw error(errc::invalid_prime, std::to_string(p) + " is not an odd prime");
  BigInt mod(static_cast<long>(p));
  BigInt r = a % mod;
  if (r < 0) r += mod;
  if (r == 0) return 0;
  BigInt e = (mod - 1) / 2;
  BigInt out;
  mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return out == 1 ? 1 : -1;
}

/// Place marker for the real place in hilbert_symbol.
inline constexpr std::int64_t kInfinity = 0;

namespace detail {

inline int p_valuation(BigInt& x, std::int64_t p) {
  int v = 0;
  BigInt bp(static_cast<long>(p));
  while (x % bp == 0) {
    x /= bp;
    ++v;
  }
  return v;
}

inline int sign_of_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

inline int hilbert_odd(BigInt a, BigInt b, std::int64_t p) {
  const int alpha = p_valuation(a, p);
  const int beta = p_valuation(b, p);
  int s = sign_of_power(static_cast<long long>(alpha) * beta * ((p - 1) / 2));
  if (beta % 2 != 0) s *= legendre(a, p);
  if (alpha % 2 != 0) s *= legendre(b, p);
  return s;
}

// Units-mod-8 formula for (a,b)_2.
inline int hilbert_two_adic(BigInt a, BigInt b) {
  const int alpha = p_valuation(a, 2);
  const int beta = p_valuation(b, 2);
  auto mod8 = [](const BigInt& u) {
    BigInt r = u % 8;
    if (r < 0) r += 8;
    return static_cast<int>(r.get_si());
  };
  const int u = mod8(a);
  const int v = mod8(b);
  auto eps = [](int w) { return ((w - 1) / 2) % 2; };
  auto omega = [](int w) { return ((w * w - 1) / 8) % 2; };
  const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
  return e % 2 == 0 ? 1 : -1;
}

inline std::vector<std::int64_t> odd_primes_of(const BigInt& a, const BigInt& b) {
  std::vector<std::int64_t> ps;
  for (const BigInt* x : {&a, &b}) {
    if (!x->fits_slong_p()) throw error(errc::parse_error, "hilbert symbol arguments exceed 64 bits");
    for (auto p : prime_divisors(x->get_si()))
      if (p != 2) ps.push_back(p);
  }
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

}  // namespace detail

/// Hilbert symbol (a,b)_p over Q; p is a prime or kInfinity.
/// The 2-adic value is computed directly and checked against the product formula.
inline int hilbert_symbol(const BigInt& a, const BigInt& b, std::int64_t p) {
  if (a == 0 || b == 0) throw error(errc::parse_error, "hilbert symbol needs nonzero arguments");
  if (p == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  if (!is_prime(p)) throw error(errc::invalid_prime, std::to_string(p) + " is not prime");
  if (p != 2) return detail::hilbert_odd(a, b, p);
  const int direct = detail::hilbert_two_adic(a, b);
  int product = (a < 0 && b < 0) ? -1 : 1;
  for (auto q : detail::odd_primes_of(a, b)) product *= detail::hilbert_odd(a, b, q);
  if (direct != product)
    throw error(errc::hilbert_inconsistency,
                "(" + a.get_str() + "," + b.get_str() + ")_2 disagrees with the product formula");
  return direct;
}

/// Finite primes p with (a,b)_p = -1, ascending.
inline std::vector<std::int64_t> ramified_primes(const BigInt& a, const BigInt& b) {
  std::vector<std::int64_t> out;
  if (hilbert_symbol(a, b, 2) == -1) out.push_back(2);
  for (auto p : detail::odd_primes_of(a, b))
    if (detail::hilbert_odd(a, b, p) == -1) out.push_back(p);
  return out;
}

}  // namespace amlat
