#pragma once

// Factorization of group orders through their cyclotomic structure.
//
// |H(F_q)| = q^N prod (q^d - 1) and q^d - 1 = prod_{n | d} Phi_n(q). Every
// prime dividing Phi_n(q) either divides n or is 1 mod n, so trial division
// of each (small) cyclotomic value only visits that residue class.

#include <map>

#include "ordco/cyclotomic.hpp"
#include "ordco/factorization.hpp"
#include "ordco/lie_core.hpp"

namespace ordco {

namespace detail {

inline Factorization factor_cyclotomic_value(unsigned n, const BigInt& value, const FactorOptions& opts) {
  Factorization out;
  BigInt rest = value;
  auto strip = [&](const BigInt& ell) {
    if (mpz_divisible_p(rest.get_mpz_t(), ell.get_mpz_t())) {
      out.add(ell, mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), ell.get_mpz_t()));
    }
  };
  for (const auto& [ell, e] : factorize(n).factors) strip(ell);
  for (unsigned long ell = n + 1; ell <= opts.trial_bound; ell += n) {
    if (BigInt(ell) * ell > rest) break;
    if (is_prime(ell)) strip(BigInt(ell));
  }
  // Anything left is prime or has only large factors; general path decides.
  if (rest > 1) out *= factorize(rest, opts);
  return out;
}

}  // namespace detail

inline Factorization factor_group_order(const SemisimpleGroup& g, const PrimePowerField& f, const FactorOptions& opts = {}) {
  Factorization out;
  const OrderPolynomial poly = order_polynomial(g);
  out.add(f.p(), poly.N * f.t());
  std::map<unsigned, Factorization> cache;
  for (unsigned d : poly.degrees.values) {
    for (const auto& [n, value] : factor_power_difference(f.q(), d)) {
      auto it = cache.find(n);
      if (it == cache.end()) it = cache.emplace(n, detail::factor_cyclotomic_value(n, value, opts)).first;
      out *= it->second;
    }
  }
  return out;
}

}  // namespace ordco
