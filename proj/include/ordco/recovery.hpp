#pragma once

// Inverting group orders: which (group, field) pairs have a given order, when
// the characteristic dominates the order, and persistence of coincidences
// under field extension.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordco/factorization.hpp"
#include "ordco/lie_core.hpp"
#include "ordco/order_factorization.hpp"

namespace ordco {

namespace detail {

inline bool is_power_of_two(const BigInt& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

}  // namespace detail

/// Simple groups over F_q whose characteristic does not contribute the
/// largest prime power to the order: A_1 for q in {8, 9}, q = 2^r with
/// 2^r + 1 prime, or q a prime of the form 2^s +- 1; and B_2 over F_3.
inline bool is_counterexample(const SimpleType& t, const PrimePowerField& f) {
  const BigInt& q = f.q();
  if (t == SimpleType(Family::B, 2)) return q == 3;
  if (t != SimpleType(Family::A, 1)) return false;
  if (q == 8 || q == 9) return true;
  if (f.p() == 2 && is_prime(BigInt(q + 1))) return true;
  if (f.t() == 1 && (detail::is_power_of_two(q + 1) || detail::is_power_of_two(q - 1))) return true;
  return false;
}

struct ContributionRow {
  SimpleType type;
  BigInt q;
  PrimePower characteristic_part;
  PrimePower largest;
  std::optional<PrimePower> second;
  bool predicted_counterexample = false;

  bool characteristic_largest() const { return largest.prime == characteristic_part.prime; }
  bool characteristic_second() const { return second && second->prime == characteristic_part.prime; }

  /// Largest exactly off the counterexample set, second exactly on it.
  bool consistent() const {
    return predicted_counterexample ? (!characteristic_largest() && characteristic_second()) : characteristic_largest();
  }
};

struct ClassificationReport {
  std::vector<ContributionRow> rows;

  bool verified() const {
    for (const auto& r : rows) {
      if (!r.consistent()) return false;
    }
    return true;
  }

  std::vector<const ContributionRow*> counterexamples() const {
    std::vector<const ContributionRow*> out;
    for (const auto& r : rows) {
      if (!r.characteristic_largest()) out.push_back(&r);
    }
    return out;
  }
};

inline ContributionRow classify_contribution(const SimpleType& t, const PrimePowerField& f, const FactorOptions& opts = {}) {
  const SemisimpleGroup g{t};
  const Factorization fac = factor_group_order(g, f, opts);
  const LeadingContributions lead = largest_prime_power_contribution(fac);
  return ContributionRow{t, f.q(), PrimePower{f.p(), fac.exponent_of(f.p())}, lead.largest, lead.second,
                         is_counterexample(t, f)};
}

/// Scans the given simple types over every prime power q <= q_max.
inline ClassificationReport verify_counterexample_classification(const std::vector<SimpleType>& types, unsigned long q_max,
                                                                 const FactorOptions& opts = {}) {
  ClassificationReport report;
  const auto fields = prime_powers_up_to(q_max);
  for (const auto& t : types) {
    for (const auto& f : fields) report.rows.push_back(classify_contribution(t, f, opts));
  }
  return report;
}

/// Every simple type of rank <= max_rank over every prime power q <= q_max.
inline ClassificationReport verify_counterexample_classification(unsigned max_rank, unsigned long q_max,
                                                                 const FactorOptions& opts = {}) {
  std::vector<SimpleType> types;
  for (unsigned r = 1; r <= max_rank; ++r) {
    for (const auto& t : types_of_rank(r)) types.push_back(t);
  }
  return verify_counterexample_classification(types, q_max, opts);
}

/// The prime with the largest prime-power contribution. This is the
/// characteristic unless a counterexample factor is present (720 = |A_1(F_9)|
/// yields 2).
inline BigInt recover_characteristic(const Factorization& fac) {
  if (fac.value < 2) throw PreconditionError("cannot recover a characteristic from the value 1");
  return largest_prime_power_contribution(fac).largest.prime;
}

struct RecoveryCandidate {
  SemisimpleGroup group;
  /// Empty only for the trivial group, whose order 1 fixes no field.
  std::optional<PrimePowerField> field;

  friend bool operator==(const RecoveryCandidate& a, const RecoveryCandidate& b) {
    return a.group == b.group && a.field == b.field;
  }
  friend bool operator<(const RecoveryCandidate& a, const RecoveryCandidate& b) {
    const BigInt qa = a.field ? a.field->q() : BigInt(0);
    const BigInt qb = b.field ? b.field->q() : BigInt(0);
    if (qa != qb) return qa < qb;
    return a.group < b.group;
  }
};

/// Every multiset of simple types whose combined Weyl degrees equal d.
inline std::vector<SemisimpleGroup> decompose_degrees(const DegreeMultiset& d) {
  std::set<SemisimpleGroup> found;
  std::vector<SimpleType> chosen;
  auto rec = [&](auto&& self, std::vector<unsigned> rest) -> void {
    if (rest.empty()) {
      found.emplace(chosen);
      return;
    }
    // The largest remaining degree is the top degree of some factor.
    for (const auto& t : types_with_max_degree(rest.back())) {
      if (!chosen.empty() && max_degree(chosen.back()) == rest.back() && chosen.back() < t) continue;
      std::vector<unsigned> left = rest;
      bool fits = true;
      for (unsigned v : degrees(t).values) {
        auto it = std::find(left.begin(), left.end(), v);
        if (it == left.end()) {
          fits = false;
          break;
        }
        left.erase(it);
      }
      if (!fits) continue;
      chosen.push_back(t);
      self(self, std::move(left));
      chosen.pop_back();
    }
  };
  rec(rec, d.values);
  return {found.begin(), found.end()};
}

namespace detail {

/// Degree multisets D with prod_{d in D} (q^d - 1) = m, sum (d - 1) = exponent
/// and |D| <= max_count. Peels the largest factor q^d - 1 dividing m; in odd
/// characteristic a primitive prime divisor pins that choice, in
/// characteristic 2 Phi_6(2) = Phi_2(2) = 3 forces full backtracking.
inline std::vector<DegreeMultiset> peel_degrees(const BigInt& q, bool backtrack, const BigInt& m, unsigned long exponent,
                                                unsigned max_count) {
  std::vector<DegreeMultiset> out;
  std::vector<BigInt> factor(2);
  for (unsigned long d = 2; d <= exponent + 1; ++d) {
    BigInt f = pow(q, d) - 1;
    if (f > m) break;
    factor.push_back(std::move(f));
  }
  const unsigned long d_cap = factor.size() - 1;
  if (d_cap < 2) return m == 1 && exponent == 0 ? std::vector<DegreeMultiset>{DegreeMultiset()} : out;
  std::vector<unsigned> chosen;
  auto rec = [&](auto&& self, const BigInt& rest, unsigned long exp_left, unsigned long max_d) -> void {
    if (rest == 1) {
      if (exp_left == 0) out.emplace_back(chosen);
      return;
    }
    if (exp_left == 0 || chosen.size() >= max_count) return;
    for (unsigned long d = std::min({max_d, exp_left + 1, d_cap}); d >= 2; --d) {
      if (factor[d] > rest || !mpz_divisible_p(rest.get_mpz_t(), factor[d].get_mpz_t())) continue;
      chosen.push_back(static_cast<unsigned>(d));
      self(self, BigInt(rest / factor[d]), exp_left - (d - 1), d);
      chosen.pop_back();
      if (!backtrack) break;
    }
  };
  rec(rec, m, exponent, exponent + 1);
  return out;
}

}  // namespace detail

/// All (H, q) with rank(H) <= max_rank, q <= q_max (default: no bound beyond
/// the order itself) and |H(F_q)| = order, in every characteristic.
inline std::vector<RecoveryCandidate> recover_candidates(const BigInt& order, int max_rank,
                                                         const std::optional<BigInt>& q_max = std::nullopt,
                                                         const FactorOptions& opts = {}) {
  if (order < 1) throw PreconditionError("recover_candidates needs an order >= 1");
  if (max_rank < 0) throw PreconditionError("recover_candidates needs max_rank >= 0");
  std::vector<RecoveryCandidate> out;
  if (order == 1) {
    out.push_back({SemisimpleGroup(), std::nullopt});
    return out;
  }
  const Factorization fac = factorize(order, opts);
  for (const auto& [p, e] : fac.factors) {
    const BigInt m = order / pow(p, e);
    for (unsigned long t = 1; t <= e; ++t) {
      if (e % t) continue;
      const BigInt q = pow(p, t);
      if (q_max && q > *q_max) break;
      const unsigned long exponent = e / t;
      for (const auto& degs : detail::peel_degrees(q, p == 2, m, exponent, static_cast<unsigned>(max_rank))) {
        for (auto& g : decompose_degrees(degs)) {
          if (group_order(g, q) != order) throw Error("internal: recovered candidate does not reproduce the order");
          out.push_back({std::move(g), PrimePowerField::from_prime_power(p, static_cast<unsigned>(t))});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks |g1(F_{q^j})| = |g2(F_{q^j})| for j = 1..k. Throws
/// PreconditionError unless the orders already agree over F_q.
inline bool check_extension_persistence(const SemisimpleGroup& g1, const SemisimpleGroup& g2, const PrimePowerField& f,
                                        unsigned k) {
  if (k == 0) throw PreconditionError("extension degree bound k must be >= 1");
  if (group_order(g1, f) != group_order(g2, f)) {
    throw PreconditionError("orders of " + g1.to_string() + " and " + g2.to_string() + " differ over F_" + to_string(f.q()));
  }
  for (unsigned j = 2; j <= k; ++j) {
    const PrimePowerField ext = f.extension(j);
    if (group_order(g1, ext) != group_order(g2, ext)) return false;
  }
  return true;
}

struct CrossCharacteristicHit {
  BigInt order;
  RecoveryCandidate first;
  RecoveryCandidate second;
};

/// Pairs of nontrivial groups of rank <= max_rank over fields q <= q_max of
/// different characteristic with equal orders. A bounded search only.
inline std::vector<CrossCharacteristicHit> cross_characteristic_search(unsigned max_rank, unsigned long q_max) {
  std::map<BigInt, std::vector<RecoveryCandidate>> by_order;
  const auto fields = prime_powers_up_to(q_max);
  for (const auto& g : enumerate_groups(max_rank)) {
    if (g.trivial()) continue;
    for (const auto& f : fields) by_order[group_order(g, f)].push_back({g, f});
  }
  std::vector<CrossCharacteristicHit> hits;
  for (auto& [order, cands] : by_order) {
    std::sort(cands.begin(), cands.end());
    for (std::size_t i = 0; i < cands.size(); ++i) {
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        if (cands[i].field->p() != cands[j].field->p()) hits.push_back({order, cands[i], cands[j]});
      }
    }
  }
  return hits;
}

/// True when some simple factor of g is a counterexample over f.
inline bool has_counterexample_factor(const SemisimpleGroup& g, const PrimePowerField& f) {
  for (const auto& t : g.factors()) {
    if (is_counterexample(t, f)) return true;
  }
  return false;
}

}  // namespace ordco
