#pragma once

// Cyclotomic polynomials, their homogeneous values, p-adic valuation rules,
// primitive prime divisors and prime-contribution bounds.

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ordco/bigint.hpp"
#include "ordco/errors.hpp"
#include "ordco/factorization.hpp"

namespace ordco {

/// Integer polynomial, coefficients lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

  /// x^n - 1.
  static IntPolynomial power_minus_one(unsigned n) {
    std::vector<BigInt> c(n + 1, 0);
    c[0] = -1;
    c[n] = 1;
    return IntPolynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return c_; }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  /// b^deg * P(a / b), i.e. sum c_i a^i b^(deg - i).
  BigInt evaluate_homogeneous(const BigInt& a, const BigInt& b) const {
    BigInt r = 0;
    BigInt bpow = 1;
    // Horner in a, with b powers accumulated from the top coefficient down.
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r = r * a + *it * bpow;
      bpow *= b;
    }
    return r;
  }

  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
  }

  /// Exact division by a monic divisor; throws if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero() || divisor.c_.back() != 1) throw PreconditionError("divide_exact needs a monic divisor");
    if (degree() < divisor.degree()) {
      if (is_zero()) return {};
      throw PreconditionError("polynomial division is not exact");
    }
    std::vector<BigInt> rem = c_;
    const std::size_t dd = divisor.c_.size() - 1;
    std::vector<BigInt> quot(rem.size() - dd, 0);
    for (std::size_t i = rem.size(); i-- > dd;) {
      const BigInt lead = rem[i];
      if (lead == 0) continue;
      quot[i - dd] = lead;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= lead * divisor.c_[j];
    }
    for (std::size_t i = 0; i < dd; ++i) {
      if (rem[i] != 0) throw PreconditionError("polynomial division is not exact");
    }
    return IntPolynomial(std::move(quot));
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline unsigned long euler_totient(unsigned long n) {
  if (n == 0) throw PreconditionError("euler_totient needs n >= 1");
  unsigned long phi = n;
  for (const auto& [p, e] : factorize(n).factors) {
    const unsigned long pu = p.get_ui();
    phi = phi / pu * (pu - 1);
  }
  return phi;
}

namespace detail {

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  std::shared_ptr<const IntPolynomial> get(unsigned n) {
    {
      std::lock_guard lock(mu_);
      if (auto it = table_.find(n); it != table_.end()) return it->second;
    }
    // x^n - 1 = prod_{d | n} Phi_d(x); strip every proper divisor's factor.
    IntPolynomial poly = IntPolynomial::power_minus_one(n);
    for (unsigned d : divisors(n)) {
      if (d == n) break;
      poly = poly.divide_exact(*get(d));
    }
    auto ptr = std::make_shared<const IntPolynomial>(std::move(poly));
    std::lock_guard lock(mu_);
    return table_.try_emplace(n, std::move(ptr)).first->second;
  }

 private:
  std::mutex mu_;
  std::map<unsigned, std::shared_ptr<const IntPolynomial>> table_;
};

}  // namespace detail

/// Phi_n(x), memoized; safe to call concurrently.
inline const IntPolynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial needs n >= 1");
  return *detail::CyclotomicCache::instance().get(n);
}

/// Homogeneous value Phi_n(a, b) = b^phi(n) Phi_n(a / b).
inline BigInt cyclotomic_value(unsigned n, const BigInt& a, const BigInt& b = 1) {
  return cyclotomic_polynomial(n).evaluate_homogeneous(a, b);
}

/// q^d - 1 split as n -> Phi_n(q) over the divisors n of d.
inline std::map<unsigned, BigInt> factor_power_difference(const BigInt& q, unsigned d) {
  if (q < 2) throw PreconditionError("factor_power_difference needs q >= 2");
  if (d == 0) throw PreconditionError("factor_power_difference needs d >= 1");
  std::map<unsigned, BigInt> out;
  for (unsigned n : divisors(d)) out.emplace(n, cyclotomic_value(n, q));
  return out;
}

/// A prime p with coprime a, b satisfying |a| >= |b| + 1 >= 2 and p not
/// dividing ab, together with f, the multiplicative order of a/b mod p.
class ValuationContext {
 public:
  static ValuationContext make(unsigned long p, long a, long b) {
    if (!is_prime(p)) throw PreconditionError("valuation context: " + std::to_string(p) + " is not prime");
    const long abs_a = std::labs(a), abs_b = std::labs(b);
    if (std::gcd(abs_a, abs_b) != 1) throw PreconditionError("valuation context: gcd(a, b) != 1");
    if (!(abs_a >= abs_b + 1 && abs_b + 1 >= 2)) {
      throw PreconditionError("valuation context: need |a| >= |b| + 1 >= 2");
    }
    const long lp = static_cast<long>(p);
    const long ar = ((a % lp) + lp) % lp, br = ((b % lp) + lp) % lp;
    if (ar == 0 || br == 0) throw PreconditionError("valuation context: p divides a or b");
    // f = order of a * b^{-1}: the least f with a^f == b^f (mod p).
    long af = ar, bf = br;
    unsigned long f = 1;
    while (af != bf) {
      af = af * ar % lp;
      bf = bf * br % lp;
      ++f;
    }
    return ValuationContext(p, a, b, f);
  }

  unsigned long p() const { return p_; }
  long a() const { return a_; }
  long b() const { return b_; }
  unsigned long f() const { return f_; }

 private:
  ValuationContext(unsigned long p, long a, long b, unsigned long f) : p_(p), a_(a), b_(b), f_(f) {}

  unsigned long p_;
  long a_, b_;
  unsigned long f_;
};

namespace detail {

inline unsigned long direct_ordp_cyclotomic(const ValuationContext& ctx, unsigned n) {
  return valuation(cyclotomic_value(n, BigInt(ctx.a()), BigInt(ctx.b())), BigInt(ctx.p()));
}

/// i with n = base * p^i, if any.
inline std::optional<unsigned> p_power_index(unsigned long n, unsigned long base, unsigned long p) {
  if (n % base) return std::nullopt;
  unsigned long m = n / base;
  unsigned i = 0;
  while (m % p == 0) {
    m /= p;
    ++i;
  }
  return m == 1 ? std::optional<unsigned>(i) : std::nullopt;
}

}  // namespace detail

/// Exact ord_p Phi_n(a, b). The valuation rules decide every case except
/// those they only bound (Phi_f for odd p, Phi_1 or Phi_2 for p = 2); those
/// are evaluated directly.
inline unsigned long ordp_cyclotomic(const ValuationContext& ctx, unsigned n) {
  if (n == 0) throw PreconditionError("ordp_cyclotomic needs n >= 1");
  const unsigned long p = ctx.p();
  if (p != 2) {
    auto i = detail::p_power_index(n, ctx.f(), p);
    if (!i) return 0;
    if (*i >= 1) return 1;
    return detail::direct_ordp_cyclotomic(ctx, n);
  }
  // p = 2 forces f = 1; exactly one of a - b, a + b is 0 mod 4.
  auto i = detail::p_power_index(n, 1, 2);
  if (!i) return 0;
  const bool minus_rule = ((ctx.a() - ctx.b()) % 4) == 0;
  if (minus_rule) {
    if (*i >= 1) return 1;
  } else {
    if (*i != 1) return 1;
  }
  return detail::direct_ordp_cyclotomic(ctx, n);
}

/// Exact ord_p (a^n - b^n).
inline unsigned long ordp_power_difference(const ValuationContext& ctx, unsigned long n) {
  if (n == 0) throw PreconditionError("ordp_power_difference needs n >= 1");
  const BigInt p(ctx.p());
  const BigInt a(ctx.a()), b(ctx.b());
  if (ctx.p() != 2) {
    if (n % ctx.f()) return 0;
    return valuation(pow(a, ctx.f()) - pow(b, ctx.f()), p) + valuation(BigInt(n), p);
  }
  // For p = 2 the odd-prime formula fails (3^2 - 1 = 8); lift the exponent:
  // v(a^n - b^n) = v(a - b) for odd n, v(a - b) + v(a + b) + v(n) - 1 otherwise.
  if (n % 2) return valuation(a - b, p);
  return valuation(a - b, p) + valuation(a + b, p) + valuation(BigInt(n), p) - 1;
}

/// A prime dividing Phi_n(a) but no Phi_i(a) with i < n (the smallest such),
/// or nullopt. Only (a, n) = (2, 6) lacks one.
inline std::optional<BigInt> primitive_divisor(const BigInt& a, unsigned n, const FactorOptions& opts = {}) {
  if (a < 2) throw PreconditionError("primitive_divisor needs a > 1");
  if (n <= 2) throw PreconditionError("primitive_divisor needs n > 2");
  const BigInt value = cyclotomic_value(n, a);
  for (const auto& [ell, e] : factorize(value, opts).factors) {
    // ell | Phi_i(a) for some i < n exactly when a has order i < n mod ell.
    BigInt power = a % ell;
    unsigned order = 1;
    while (power != 1 && order < n) {
      power = power * a % ell;
      ++order;
    }
    if (order == n) return ell;
  }
  return std::nullopt;
}

enum class BoundKind { a_eq_pm_q, a_eq_q_squared };

/// Upper bound on a prime's contribution to prod_{i<=l} (a^i - 1):
/// 2^l (q+1)^l for a = +-q and 4^l (q+1)^l for a = q^2.
inline BigInt contribution_bound(BoundKind kind, const BigInt& q, unsigned long l) {
  if (q < 2) throw PreconditionError("contribution_bound needs q >= 2");
  const BigInt base = kind == BoundKind::a_eq_pm_q ? BigInt(2) : BigInt(4);
  return pow(base, l) * pow(q + 1, l);
}

}  // namespace ordco
