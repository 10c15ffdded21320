#pragma once

// Orders of the finite simple groups PSL, PSp and PSO (odd dimension): the
// simply connected order divided by the order of the centre.

#include <vector>

#include "ordco/lie_core.hpp"

namespace ordco {

/// |PSL_{n+1}(F_q)| = |SL_{n+1}(F_q)| / gcd(n + 1, q - 1).
inline BigInt psl_order(unsigned n_plus_1, const BigInt& q) {
  if (n_plus_1 < 2) throw PreconditionError("PSL_n needs n >= 2");
  return group_order({SimpleType(Family::A, n_plus_1 - 1)}, q) / gcd(BigInt(n_plus_1), BigInt(q - 1));
}

/// |PSp_{2n}(F_q)| = |Sp_{2n}(F_q)| / gcd(2, q - 1); Sp_{2n} has type C_n.
inline BigInt psp_order(unsigned n, const BigInt& q) {
  return group_order({SimpleType::b_or_a1(n)}, q) / gcd(BigInt(2), BigInt(q - 1));
}

/// |PSO_{2n+1}(F_q)| = |Spin_{2n+1}(F_q)| / gcd(2, q - 1); type B_n.
inline BigInt pso_odd_order(unsigned n, const BigInt& q) {
  return group_order({SimpleType::b_or_a1(n)}, q) / gcd(BigInt(2), BigInt(q - 1));
}

struct ArtinTitsRow {
  std::string label;
  BigInt left;
  BigInt right;
  bool equal() const { return left == right; }
};

/// |PSL_4(F_2)| vs |PSL_3(F_4)|, then |PSO_{2n+1}(F_q)| vs |PSp_{2n}(F_q)|
/// for 3 <= n <= n_max and odd prime powers q <= q_max.
inline std::vector<ArtinTitsRow> artin_tits_check(unsigned n_max, unsigned long q_max) {
  std::vector<ArtinTitsRow> rows;
  rows.push_back({"PSL_4(F_2) vs PSL_3(F_4)", psl_order(4, 2), psl_order(3, 4)});
  for (unsigned n = 3; n <= n_max; ++n) {
    for (const auto& f : prime_powers_up_to(q_max)) {
      if (f.p() == 2) continue;
      rows.push_back({"PSO_" + std::to_string(2 * n + 1) + "(F_" + to_string(f.q()) + ") vs PSp_" + std::to_string(2 * n) +
                          "(F_" + to_string(f.q()) + ")",
                      pso_odd_order(n, f.q()), psp_order(n, f.q())});
    }
  }
  return rows;
}

}  // namespace ordco
