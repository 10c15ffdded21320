#pragma once

// Thin helpers over GMP's mpz_class, the integer type used everywhere.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "ordco/errors.hpp"

namespace ordco {

using BigInt = mpz_class;

inline BigInt pow(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt pow(long base, unsigned long exp) { return pow(BigInt(base), exp); }

/// Largest e with p^e | n. n must be nonzero and |p| >= 2.
inline unsigned long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw PreconditionError("valuation of zero is undefined");
  if (abs(p) < 2) throw PreconditionError("valuation base must have |p| >= 2");
  BigInt rest;
  const BigInt magnitude = abs(n);
  return mpz_remove(rest.get_mpz_t(), magnitude.get_mpz_t(), p.get_mpz_t());
}

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

/// Parses an optionally signed decimal integer; rejects anything else.
inline BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw ParseError("expected a decimal integer, got '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected a decimal integer, got '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 target expected");

inline std::uint64_t to_u64(const BigInt& n) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw PreconditionError("integer " + to_string(n) + " does not fit in 64 bits");
  }
  return n.get_ui();
}

inline BigInt from_u64(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

}  // namespace ordco
