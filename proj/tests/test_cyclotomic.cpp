#include <gtest/gtest.h>

#include <thread>

#include "oracles.hpp"
#include "ordco/cyclotomic.hpp"

using namespace ordco;

TEST(Totient, BruteForce) {
  EXPECT_EQ(euler_totient(1), 1u);
  EXPECT_EQ(euler_totient(12), oracle::count_units(12));
  EXPECT_EQ(euler_totient(30), oracle::count_units(30));
  for (unsigned long n = 1; n <= 500; ++n) EXPECT_EQ(euler_totient(n), oracle::count_units(n)) << n;
  EXPECT_THROW(euler_totient(0), PreconditionError);
}

TEST(CyclotomicPolynomial, SmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(1), IntPolynomial({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), IntPolynomial({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), IntPolynomial({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6).evaluate(2), 3);
  EXPECT_THROW(cyclotomic_polynomial(0), PreconditionError);
}

TEST(CyclotomicPolynomial, MatchesMobiusSeries) {
  for (unsigned n = 1; n <= 120; ++n) {
    const auto expected = oracle::cyclotomic_coefficients_mobius(n);
    const auto& got = cyclotomic_polynomial(n);
    ASSERT_EQ(got.degree(), static_cast<long>(expected.size()) - 1) << n;
    for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(got.coefficient(i), BigInt(static_cast<long>(expected[i]))) << n << " x^" << i;
    EXPECT_EQ(static_cast<unsigned long>(got.degree()), euler_totient(n));
  }
}

TEST(CyclotomicPolynomial, Phi105) {
  const auto& p = cyclotomic_polynomial(105);
  EXPECT_EQ(p.coefficient(7), -2);
  EXPECT_EQ(oracle::cyclotomic_coefficients_mobius(105)[7], -2);
  for (unsigned n = 1; n < 105; ++n) {
    for (const auto& c : cyclotomic_polynomial(n).coefficients()) EXPECT_LE(abs(c), 1) << n;
  }
}

TEST(CyclotomicPolynomial, ProductOverDivisors) {
  for (unsigned n = 1; n <= 105; ++n) {
    IntPolynomial prod({1});
    for (unsigned d : divisors(n)) prod = prod * cyclotomic_polynomial(d);
    EXPECT_EQ(prod, IntPolynomial::power_minus_one(n)) << n;
  }
}

TEST(CyclotomicValue, Examples) {
  EXPECT_EQ(cyclotomic_value(2, 3, 1), 4);
  EXPECT_EQ(cyclotomic_value(6, 2), 3);
  EXPECT_EQ(cyclotomic_value(4, 3, 2), 13);
}

TEST(CyclotomicValue, HomogeneousMatchesMobius) {
  for (unsigned n = 1; n <= 30; ++n) {
    for (long a = -7; a <= 7; ++a) {
      for (long b = -5; b <= 5; ++b) {
        // The Mobius quotient needs every a^d - b^d nonzero.
        if (std::labs(a) == std::labs(b)) continue;
        EXPECT_EQ(cyclotomic_value(n, a, b), oracle::cyclotomic_value_mobius(n, a, b)) << n << " " << a << " " << b;
      }
    }
  }
}

TEST(FactorPowerDifference, Examples) {
  const auto m = factor_power_difference(2, 6);
  EXPECT_EQ(m, (std::map<unsigned, BigInt>{{1, 1}, {2, 3}, {3, 7}, {6, 3}}));
  EXPECT_EQ(factor_power_difference(3, 2), (std::map<unsigned, BigInt>{{1, 2}, {2, 4}}));
  EXPECT_EQ(factor_power_difference(5, 1), (std::map<unsigned, BigInt>{{1, 4}}));
  EXPECT_THROW(factor_power_difference(1, 3), PreconditionError);
}

TEST(FactorPowerDifference, Reassembles) {
  for (unsigned long q = 2; q <= 16; ++q) {
    for (unsigned d = 1; d <= 40; ++d) {
      BigInt prod = 1;
      for (const auto& [n, v] : factor_power_difference(q, d)) prod *= v;
      EXPECT_EQ(prod, pow(BigInt(q), d) - 1);
    }
  }
}

TEST(ValuationContext, Invariants) {
  EXPECT_EQ(ValuationContext::make(3, 2, 1).f(), 2u);
  EXPECT_EQ(ValuationContext::make(7, 2, 1).f(), 3u);
  EXPECT_EQ(ValuationContext::make(2, 3, 1).f(), 1u);
  EXPECT_THROW(ValuationContext::make(4, 3, 1), PreconditionError);
  EXPECT_THROW(ValuationContext::make(3, 4, 2), PreconditionError);
  EXPECT_THROW(ValuationContext::make(3, 3, 1), PreconditionError);
  EXPECT_THROW(ValuationContext::make(3, 2, 2), PreconditionError);
  EXPECT_THROW(ValuationContext::make(5, 1, 1), PreconditionError);
}

TEST(OrdpCyclotomic, Examples) {
  EXPECT_EQ(ordp_cyclotomic(ValuationContext::make(3, 2, 1), 6), 1u);
  EXPECT_EQ(ordp_cyclotomic(ValuationContext::make(3, 2, 1), 4), 0u);
  EXPECT_EQ(ordp_cyclotomic(ValuationContext::make(2, 3, 1), 4), 1u);
}

TEST(OrdpPowerDifference, Examples) {
  EXPECT_EQ(ordp_power_difference(ValuationContext::make(3, 2, 1), 6), 2u);
  EXPECT_EQ(ordp_power_difference(ValuationContext::make(3, 2, 1), 5), 0u);
  EXPECT_EQ(ordp_power_difference(ValuationContext::make(7, 2, 1), 3), 1u);
  // 3^2 - 1 = 8: the odd-prime formula would give 1 + 1 = 2.
  EXPECT_EQ(ordp_power_difference(ValuationContext::make(2, 3, 1), 2), 3u);
}

// Every context with p <= 13, |a| <= 12, |b| < |a|, n <= 24 against direct
// valuations of Mobius-product values.
TEST(Valuations, ExhaustiveAgainstDirect) {
  std::size_t contexts = 0;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
    for (long a = -12; a <= 12; ++a) {
      for (long b = -11; b <= 11; ++b) {
        if (std::labs(b) >= std::labs(a) || b == 0 || std::gcd(std::labs(a), std::labs(b)) != 1) continue;
        if (a % static_cast<long>(p) == 0 || b % static_cast<long>(p) == 0) continue;
        const auto ctx = ValuationContext::make(p, a, b);
        ++contexts;
        for (unsigned n = 1; n <= 24; ++n) {
          const auto rule = ordp_cyclotomic(ctx, n);
          EXPECT_EQ(rule, oracle::valuation(oracle::cyclotomic_value_mobius(n, a, b), p))
              << "p=" << p << " a=" << a << " b=" << b << " n=" << n;
          mpz_class an, bn;
          mpz_pow_ui(an.get_mpz_t(), mpz_class(a).get_mpz_t(), n);
          mpz_pow_ui(bn.get_mpz_t(), mpz_class(b).get_mpz_t(), n);
          const mpz_class diff = an - bn;
          const auto pd = ordp_power_difference(ctx, n);
          EXPECT_EQ(pd, oracle::valuation(diff, p)) << "p=" << p << " a=" << a << " b=" << b << " n=" << n;
          if (n == 24 || n == 12 || n == 18) {
            unsigned long div_sum = 0;
            for (unsigned m : divisors(n)) div_sum += ordp_cyclotomic(ctx, m);
            EXPECT_EQ(pd, div_sum);
          }
        }
      }
    }
  }
  EXPECT_GT(contexts, 500u);
}

TEST(PrimitiveDivisor, Examples) {
  EXPECT_FALSE(primitive_divisor(2, 6).has_value());
  EXPECT_EQ(primitive_divisor(2, 4), 5);
  EXPECT_EQ(primitive_divisor(3, 5), 11);
  EXPECT_THROW(primitive_divisor(1, 5), PreconditionError);
  EXPECT_THROW(primitive_divisor(2, 2), PreconditionError);
}

TEST(PrimitiveDivisor, ExhaustiveScan) {
  for (long a = 2; a <= 12; ++a) {
    for (unsigned n = 3; n <= 30; ++n) {
      const auto ell = primitive_divisor(a, n);
      if (a == 2 && n == 6) {
        EXPECT_FALSE(ell.has_value());
        continue;
      }
      ASSERT_TRUE(ell.has_value()) << a << " " << n;
      // Independent check: ell divides a^n - 1 and no a^i - 1 with i < n.
      const mpz_class l = *ell;
      EXPECT_GT(mpz_probab_prime_p(l.get_mpz_t(), 30), 0);
      for (unsigned i = 1; i <= n; ++i) {
        mpz_class ai;
        mpz_pow_ui(ai.get_mpz_t(), mpz_class(a).get_mpz_t(), i);
        const bool divides = (ai - 1) % l == 0;
        EXPECT_EQ(divides, i == n) << a << " " << n << " " << i;
      }
    }
  }
}

TEST(ContributionBound, Examples) {
  EXPECT_EQ(contribution_bound(BoundKind::a_eq_pm_q, 2, 3), 216);
  EXPECT_EQ(contribution_bound(BoundKind::a_eq_q_squared, 2, 3), 1728);
  EXPECT_EQ(contribution_bound(BoundKind::a_eq_pm_q, 3, 1), 8);
}

TEST(ContributionBound, HoldsEmpirically) {
  for (unsigned long q = 2; q <= 9; ++q) {
    for (unsigned long l = 1; l <= 6; ++l) {
      // Factor each q^i - 1 (fits in 64 bits) and merge the exponents.
      std::map<std::uint64_t, unsigned> merged;
      for (unsigned long i = 1; i <= l; ++i) {
        std::uint64_t qi = 1;
        for (unsigned long k = 0; k < i; ++k) qi *= q;
        for (const auto& [p1, e] : oracle::trial_factor(qi - 1)) merged[p1] += e;
      }
      const auto bound = contribution_bound(BoundKind::a_eq_pm_q, q, l);
      for (const auto& [p1, e] : merged) {
        if (q % p1 == 0) continue;
        mpz_class contrib;
        mpz_pow_ui(contrib.get_mpz_t(), mpz_class(p1).get_mpz_t(), e);
        EXPECT_LE(contrib, bound) << q << " " << l << " " << p1;
      }
    }
  }
}

TEST(Inequality, Monotone) {
  for (long alpha : {2L, 4L}) {
    for (long q1 = 2; q1 <= 16; ++q1) {
      for (unsigned n1 = 1; n1 <= 16; ++n1) {
        if (pow(BigInt(q1), n1) < alpha * (q1 + 1)) continue;
        for (long q2 = q1; q2 <= 16; ++q2) {
          for (unsigned n2 = n1; n2 <= 16; ++n2) EXPECT_GE(pow(BigInt(q2), n2), alpha * (q2 + 1));
        }
      }
    }
  }
}

TEST(CyclotomicCache, ConcurrentReadsAgree) {
  std::vector<std::thread> pool;
  std::vector<BigInt> got(8);
  for (int i = 0; i < 8; ++i) {
    pool.emplace_back([&, i] { got[i] = cyclotomic_value(210 + i, 3); });
  }
  for (auto& t : pool) t.join();
  for (int i = 0; i < 8; ++i) EXPECT_EQ(got[i], oracle::cyclotomic_value_mobius(210 + i, 3, 1));
}
