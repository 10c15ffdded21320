#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ordco/recovery.hpp"

using namespace ordco;

namespace {

using Pair = std::pair<std::string, std::string>;  // (group, q)

std::set<Pair> as_set(const std::vector<RecoveryCandidate>& cands) {
  std::set<Pair> out;
  for (const auto& c : cands) out.emplace(c.group.to_string(), c.field ? to_string(c.field->q()) : "");
  return out;
}

// Every (H, q) with rank <= max_rank, nontrivial H and |H(F_q)| = order, by
// scanning all groups against all prime powers q with q^3 - q <= order.
std::set<Pair> brute_force_recover(std::uint64_t order, unsigned max_rank) {
  std::set<Pair> out;
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q * q * q - q <= order; ++q) {
    if (oracle::trial_factor(q).size() == 1) qs.push_back(q);
  }
  for (const auto& g : enumerate_groups(max_rank)) {
    if (g.trivial()) continue;
    const auto degs = group_degrees(g);
    for (std::uint64_t q : qs) {
      mpz_class v = 1, qq = static_cast<unsigned long>(q);
      for (unsigned d : degs.values) {
        mpz_class qd;
        mpz_pow_ui(qd.get_mpz_t(), qq.get_mpz_t(), d);
        v *= (qd - 1) * qd / qq;
      }
      if (v == static_cast<unsigned long>(order)) out.emplace(g.to_string(), std::to_string(q));
    }
  }
  return out;
}

}  // namespace

TEST(Counterexample, Membership) {
  const SimpleType a1(Family::A, 1), b2(Family::B, 2);
  auto f = [](unsigned long q) { return PrimePowerField::from_q(q); };
  EXPECT_TRUE(is_counterexample(a1, f(9)));
  EXPECT_TRUE(is_counterexample(b2, f(3)));
  EXPECT_FALSE(is_counterexample(a1, f(11)));
  EXPECT_FALSE(is_counterexample(b2, f(2)));
  EXPECT_FALSE(is_counterexample(SimpleType(Family::A, 2), f(2)));
  std::vector<unsigned long> hits;
  for (const auto& field : prime_powers_up_to(300)) {
    if (is_counterexample(a1, field)) hits.push_back(field.q().get_ui());
  }
  // 2^r with 2^r + 1 prime, primes 2^s +- 1, and 8, 9.
  EXPECT_EQ(hits, (std::vector<unsigned long>{2, 3, 4, 5, 7, 8, 9, 16, 17, 31, 127, 256, 257}));
}

TEST(Classification, SmallRank) {
  const auto report = verify_counterexample_classification(2, 9);
  EXPECT_TRUE(report.verified());
  std::set<Pair> found;
  for (const auto* row : report.counterexamples()) found.emplace(row->type.to_string(), to_string(row->q));
  EXPECT_EQ(found, (std::set<Pair>{{"A1", "2"}, {"A1", "3"}, {"A1", "4"}, {"A1", "5"}, {"A1", "7"}, {"A1", "8"},
                                   {"A1", "9"}, {"B2", "3"}}));
}

TEST(Classification, NamedRows) {
  const auto a2 = classify_contribution(SimpleType(Family::A, 2), PrimePowerField::from_q(2ul));
  EXPECT_TRUE(a2.characteristic_largest());
  const auto b2 = classify_contribution(SimpleType(Family::B, 2), PrimePowerField::from_q(3ul));
  EXPECT_FALSE(b2.characteristic_largest());
  EXPECT_TRUE(b2.characteristic_second());
  const auto g2 = verify_counterexample_classification({SimpleType(Family::G, 2)}, 9);
  EXPECT_TRUE(g2.counterexamples().empty());
  EXPECT_TRUE(g2.verified());
}

TEST(Classification, IndependentScanA1) {
  // Largest prime power of q(q^2 - 1) by trial division.
  for (const auto& f : prime_powers_up_to(300)) {
    const std::uint64_t q = f.q().get_ui();
    std::uint64_t best = 0, best_p = 0;
    for (const auto& [p, e] : oracle::trial_factor(q * (q * q - 1))) {
      std::uint64_t pe = 1;
      for (unsigned i = 0; i < e; ++i) pe *= p;
      if (pe > best) best = pe, best_p = p;
    }
    EXPECT_EQ(best_p != f.p().get_ui(), is_counterexample(SimpleType(Family::A, 1), f)) << q;
  }
}

TEST(RecoverCharacteristic, Examples) {
  EXPECT_EQ(recover_characteristic(factorize(5616)), 3);
  EXPECT_EQ(recover_characteristic(factorize(720)), 2);
  EXPECT_EQ(recover_characteristic(factorize(group_order(parse_group("E7"), BigInt(2)))), 2);
  EXPECT_THROW(recover_characteristic(factorize(1)), PreconditionError);
}

TEST(RecoverCandidates, Examples) {
  EXPECT_EQ(as_set(recover_candidates(720, 4)), (std::set<Pair>{{"A1", "9"}, {"B2", "2"}}));
  EXPECT_EQ(as_set(recover_candidates(24, 4)), (std::set<Pair>{{"A1", "3"}}));
  EXPECT_EQ(as_set(recover_candidates(12096, 4)), (std::set<Pair>{{"G2", "2"}}));
  const auto one = recover_candidates(1, 3);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_TRUE(one[0].group.trivial());
  EXPECT_FALSE(one[0].field.has_value());
  EXPECT_TRUE(recover_candidates(7, 4).empty());
  EXPECT_THROW(recover_candidates(720, -1), PreconditionError);
  EXPECT_THROW(recover_candidates(0, 3), PreconditionError);
}

TEST(RecoverCandidates, QMaxBound) {
  EXPECT_EQ(as_set(recover_candidates(720, 4, BigInt(8))), (std::set<Pair>{{"B2", "2"}}));
}

TEST(RecoverCandidates, CompleteAgainstBruteForce) {
  // Every order of a rank <= 4 group over q <= 9, plus some non-orders.
  std::set<std::uint64_t> orders;
  for (const auto& g : enumerate_groups(4)) {
    if (g.trivial()) continue;
    for (const auto& f : prime_powers_up_to(9)) {
      const BigInt v = group_order(g, f);
      if (v < BigInt("1000000000000")) orders.insert(v.get_ui());
    }
  }
  for (std::uint64_t extra : {2ul, 6ul, 60ul, 168ul, 1000ul, 20160ul}) orders.insert(extra);
  for (std::uint64_t n : orders) {
    EXPECT_EQ(as_set(recover_candidates(BigInt(static_cast<unsigned long>(n)), 4)), brute_force_recover(n, 4)) << n;
  }
}

TEST(RecoverCandidates, RoundTripRankSix) {
  for (const auto& g : enumerate_groups(6)) {
    if (g.trivial()) continue;
    for (unsigned long q : {2ul, 3ul, 4ul, 5ul, 8ul, 9ul, 16ul, 25ul, 27ul}) {
      const auto f = PrimePowerField::from_q(q);
      const BigInt order = group_order(g, f);
      const auto cands = recover_candidates(order, 6);
      bool found = false;
      for (const auto& c : cands) {
        ASSERT_TRUE(c.field);
        EXPECT_EQ(group_order(c.group, *c.field), order);
        found = found || (c.group == g && c.field->q() == q);
        // Same characteristic forces the same q and degrees.
        for (const auto& d : cands) {
          if (d.field->p() != c.field->p()) continue;
          EXPECT_EQ(d.field->q(), c.field->q());
          EXPECT_EQ(group_degrees(d.group), group_degrees(c.group));
        }
      }
      EXPECT_TRUE(found) << g.to_string() << " q=" << q;
    }
  }
}

TEST(RecoverCandidates, CharacteristicTwoAmbiguity) {
  // Phi_6(2) = Phi_2(2) = 3: degree peeling must backtrack in characteristic 2.
  for (const auto& g : enumerate_groups(5)) {
    if (g.trivial()) continue;
    const auto cands = recover_candidates(group_order(g, BigInt(2)), 5);
    EXPECT_TRUE(as_set(cands).count({g.to_string(), "2"})) << g.to_string();
  }
}

TEST(ExtensionPersistence, Examples) {
  const auto a2b2 = parse_group("A2*B2"), a1a3 = parse_group("A1*A3");
  EXPECT_EQ(group_order(a2b2, BigInt(3)), BigInt("291133440"));
  EXPECT_TRUE(check_extension_persistence(a2b2, a1a3, PrimePowerField::from_q(3ul), 3));
  EXPECT_THROW(check_extension_persistence(parse_group("A1"), parse_group("B2"), PrimePowerField::from_q(9ul), 2),
               PreconditionError);
  const auto g = parse_group("E6*A2");
  EXPECT_TRUE(check_extension_persistence(g, g, PrimePowerField::from_q(5ul), 4));
  EXPECT_THROW(check_extension_persistence(g, g, PrimePowerField::from_q(5ul), 0), PreconditionError);
}

TEST(CrossCharacteristic, BoundedSearch) {
  // Within these bounds the only hits are powers of (B2 over F_2, A1 over F_9).
  const auto hits = cross_characteristic_search(6, 16);
  ASSERT_EQ(hits.size(), 3u);
  std::string b2 = "B2", a1 = "A1";
  for (std::size_t k = 0; k < hits.size(); ++k) {
    const auto& h = hits[k];
    EXPECT_EQ(h.order, pow(BigInt(720), k + 1));
    EXPECT_EQ(h.first.group.to_string(), b2);
    EXPECT_EQ(h.first.field->q(), 2);
    EXPECT_EQ(h.second.group.to_string(), a1);
    EXPECT_EQ(h.second.field->q(), 9);
    EXPECT_TRUE(has_counterexample_factor(h.second.group, *h.second.field));
    b2 += "*B2";
    a1 += "*A1";
  }
}

TEST(DecomposeDegrees, AllDecompositions) {
  const auto gs = decompose_degrees(group_degrees(parse_group("A2*B2")));
  std::set<std::string> names;
  for (const auto& g : gs) names.insert(g.to_string());
  EXPECT_EQ(names, (std::set<std::string>{"A1*A3", "A2*B2"}));
  EXPECT_TRUE(decompose_degrees(DegreeMultiset({3})).empty());
}
