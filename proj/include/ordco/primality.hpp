#pragma once

// Primality testing for arbitrary-precision integers.
//
// Below 3.3e24 a Miller-Rabin test over the first thirteen prime bases is a
// proof of primality. Larger inputs go through GMP's Baillie-PSW test, which
// has no known counterexample.

#include <array>

#include "ordco/bigint.hpp"

namespace ordco {

namespace detail {

inline bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned long s, unsigned long base) {
  BigInt a(base);
  if (a % n == 0) return true;
  BigInt x;
  BigInt nm1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

}  // namespace detail

inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long p : kBases) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const BigInt kDeterministicLimit("3317044064679887385961981", 10);
  if (n >= kDeterministicLimit) return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;

  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  d >>= s;
  for (unsigned long base : kBases) {
    if (!detail::miller_rabin_round(n, d, s, base)) return false;
  }
  return true;
}

inline bool is_prime(unsigned long n) { return is_prime(BigInt(n)); }

}  // namespace ordco
