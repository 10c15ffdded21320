#pragma once

// Exact integer factorization: trial division followed by Brent's variant of
// Pollard rho, with a deterministic seed so results and timings reproduce.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ordco/bigint.hpp"
#include "ordco/errors.hpp"
#include "ordco/primality.hpp"

namespace ordco {

struct FactorOptions {
  std::uint64_t seed = 0x6f7264636fULL;
  /// Composite cofactors with more decimal digits than this are not attempted.
  unsigned max_digits = 300;
  /// Total rho iterations allowed per factorize() call.
  std::uint64_t max_rho_iterations = std::uint64_t{1} << 24;
  unsigned long trial_bound = 1UL << 16;
};

/// prime -> exponent, together with the value it reassembles to.
struct Factorization {
  std::map<BigInt, unsigned long> factors;
  BigInt value = 1;

  BigInt reassemble() const {
    BigInt r = 1;
    for (const auto& [p, e] : factors) r *= pow(p, e);
    return r;
  }

  unsigned long exponent_of(const BigInt& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? 0 : it->second;
  }

  void add(const BigInt& p, unsigned long e = 1) {
    if (e == 0) return;
    factors[p] += e;
    value *= pow(p, e);
  }

  Factorization& operator*=(const Factorization& other) {
    for (const auto& [p, e] : other.factors) add(p, e);
    return *this;
  }

  /// "2^4 * 3^2 * 5"; "1" for the empty factorization.
  std::string to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors) {
      if (!s.empty()) s += " * ";
      s += ordco::to_string(p);
      if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.value == b.value && a.factors == b.factors;
  }
};

namespace detail {

inline const std::vector<unsigned long>& small_primes(unsigned long bound) {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 1UL << 20;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  if (bound > (1UL << 20)) throw PreconditionError("trial bound exceeds the sieve limit 2^20");
  return primes;
}

inline unsigned long decimal_digits(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 10); }

/// Returns a nontrivial factor of the odd composite n.
inline BigInt rho_split(const BigInt& n, std::mt19937_64& rng, std::uint64_t& budget) {
  const unsigned long n_mod = mpz_fdiv_ui(n.get_mpz_t(), 0xFFFFFFFBUL);
  while (true) {
    BigInt c = BigInt(static_cast<unsigned long>(rng() ^ n_mod)) % n;
    if (c == 0 || c == n - 2) c = 1;
    BigInt y = BigInt(static_cast<unsigned long>(rng())) % n;
    BigInt x, ys, g = 1, q = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (y * y + c) % n;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t steps = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < steps; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        if (budget < steps) throw BudgetExceeded("factorization exceeded budget on " + to_string(n));
        budget -= steps;
        g = gcd(q, n);
        k += steps;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
    // Degenerate cycle; retry with fresh parameters.
  }
}

}  // namespace detail

/// Complete factorization of n >= 1. Throws BudgetExceeded past the
/// configured digit or iteration limits.
inline Factorization factorize(const BigInt& n, const FactorOptions& opts = {}) {
  if (n < 1) throw PreconditionError("factorize needs n >= 1, got " + to_string(n));
  Factorization out;
  BigInt rest = n;
  for (unsigned long p : detail::small_primes(opts.trial_bound)) {
    if (p > opts.trial_bound) break;
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      BigInt bp(p);
      out.add(bp, mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), bp.get_mpz_t()));
    }
  }
  if (rest == 1) return out;

  std::mt19937_64 rng(opts.seed);
  std::uint64_t budget = opts.max_rho_iterations;
  std::vector<std::pair<BigInt, unsigned long>> stack{{rest, 1}};
  while (!stack.empty()) {
    auto [m, mult] = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      out.add(m, mult);
      continue;
    }
    if (detail::decimal_digits(m) > opts.max_digits) {
      throw BudgetExceeded("factorization exceeded budget: composite cofactor with " +
                           std::to_string(detail::decimal_digits(m)) + " digits");
    }
    if (mpz_perfect_power_p(m.get_mpz_t())) {
      bool split = false;
      for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2); k >= 2; --k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
          stack.emplace_back(root, mult * k);
          split = true;
          break;
        }
      }
      if (split) continue;
    }
    BigInt d = detail::rho_split(m, rng, budget);
    stack.emplace_back(d, mult);
    stack.emplace_back(m / d, mult);
  }
  return out;
}

inline Factorization factorize(unsigned long n, const FactorOptions& opts = {}) { return factorize(BigInt(n), opts); }

/// A prime power p^e dividing some value.
struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;

  BigInt value() const { return pow(prime, exponent); }
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// The largest and second-largest prime powers p^e (by numeric value) of a
/// factorization. Distinct primes never give equal values, so there are no
/// ties to break; smaller primes would win one if there were.
struct LeadingContributions {
  PrimePower largest;
  std::optional<PrimePower> second;
};

inline LeadingContributions largest_prime_power_contribution(const Factorization& fac) {
  if (fac.value < 2) throw PreconditionError("no prime-power contribution in the value 1");
  std::vector<PrimePower> all;
  for (const auto& [p, e] : fac.factors) all.push_back({p, e});
  std::stable_sort(all.begin(), all.end(), [](const PrimePower& a, const PrimePower& b) { return a.value() > b.value(); });
  LeadingContributions out{all[0], std::nullopt};
  if (all.size() > 1) out.second = all[1];
  return out;
}

}  // namespace ordco
