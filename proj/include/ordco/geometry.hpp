#pragma once

// Transitive actions of compact Lie groups and the order identities they
// induce. If H_2 acts transitively on H/H_1, then over every F_q
//
//   |H| * |H_1 n H_2| = |H_1| * |H_2|
//
// for the split forms, so (H x (H_1 n H_2), H_1 x H_2) is a coincidence.
// Compact groups enter only through their split forms' orders.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordco/coincidence.hpp"
#include "ordco/errors.hpp"
#include "ordco/lie_core.hpp"

namespace ordco {

enum class Series : std::uint8_t { SU, Sp, SO, Spin, G2, F4, E6 };

struct CompactGroupSymbol {
  Series series = Series::SU;
  unsigned parameter = 0;

  static CompactGroupSymbol SU(unsigned n) { return {Series::SU, n}; }
  static CompactGroupSymbol Sp(unsigned n) { return {Series::Sp, n}; }
  static CompactGroupSymbol SO(unsigned n) { return {Series::SO, n}; }
  static CompactGroupSymbol Spin(unsigned n) { return {Series::Spin, n}; }
  static CompactGroupSymbol G2() { return {Series::G2, 2}; }
  static CompactGroupSymbol F4() { return {Series::F4, 4}; }
  static CompactGroupSymbol E6() { return {Series::E6, 6}; }

  std::string to_string() const {
    switch (series) {
      case Series::SU: return "SU_" + std::to_string(parameter);
      case Series::Sp: return "Sp_" + std::to_string(parameter);
      case Series::SO: return "SO_" + std::to_string(parameter);
      case Series::Spin: return "Spin_" + std::to_string(parameter);
      case Series::G2: return "G_2";
      case Series::F4: return "F_4";
      case Series::E6: return "E_6";
    }
    return "?";
  }

  friend bool operator==(const CompactGroupSymbol&, const CompactGroupSymbol&) = default;
};

inline CompactGroupSymbol parse_compact_symbol(std::string_view text) {
  const std::string s(text);
  if (s == "G_2") return CompactGroupSymbol::G2();
  if (s == "F_4") return CompactGroupSymbol::F4();
  if (s == "E_6") return CompactGroupSymbol::E6();
  const auto us = s.find('_');
  if (us == std::string::npos || us + 1 >= s.size() || s.size() - us > 7) {
    throw ParseError("malformed compact group symbol '" + s + "'");
  }
  const std::string head = s.substr(0, us), tail = s.substr(us + 1);
  for (char c : tail) {
    if (c < '0' || c > '9') throw ParseError("malformed compact group symbol '" + s + "'");
  }
  const unsigned n = static_cast<unsigned>(std::stoul(tail));
  if (head == "SU") return CompactGroupSymbol::SU(n);
  if (head == "Sp") return CompactGroupSymbol::Sp(n);
  if (head == "SO") return CompactGroupSymbol::SO(n);
  if (head == "Spin") return CompactGroupSymbol::Spin(n);
  throw ParseError("unknown compact series in '" + s + "'");
}

/// Split form up to order: SU_n -> A_{n-1}, Sp_n -> B_n (Sp_1 -> A_1),
/// SO/Spin_{2n+1} -> B_n (SO_3 -> A_1), SO/Spin_{2n} -> D_n for n >= 4,
/// SO_6 -> A_3. SU_1 and Sp_0 are trivial; SO_4 and SO_2 are rejected.
inline SemisimpleGroup split_form(const CompactGroupSymbol& c) {
  const unsigned n = c.parameter;
  auto miss = [&]() { return DictionaryMiss("no split form for " + c.to_string()); };
  switch (c.series) {
    case Series::SU:
      if (n == 0) throw miss();
      if (n == 1) return {};
      return {SimpleType(Family::A, n - 1)};
    case Series::Sp:
      if (n == 0) return {};
      return {SimpleType::b_or_a1(n)};
    case Series::SO:
    case Series::Spin:
      if (n % 2 == 1) {
        if (n < 3) throw miss();
        return {SimpleType::b_or_a1((n - 1) / 2)};
      }
      if (n == 6) return {SimpleType(Family::A, 3)};
      if (n >= 8) return {SimpleType(Family::D, n / 2)};
      throw miss();
    case Series::G2: return {SimpleType(Family::G, 2)};
    case Series::F4: return {SimpleType(Family::F, 4)};
    case Series::E6: return {SimpleType(Family::E, 6)};
  }
  throw miss();
}

/// (H, H_1, H_2; H_1 n H_2) with H_2 transitive on H/H_1.
struct TransitiveTriple {
  CompactGroupSymbol ambient;
  CompactGroupSymbol sub1;
  CompactGroupSymbol sub2;
  CompactGroupSymbol intersection;
  /// Family name for parameterized rows ("SU2n", "SO4n", "SO2n"), empty otherwise.
  std::string family;
  std::optional<unsigned> n;

  std::string to_string() const {
    return "(" + ambient.to_string() + ", " + sub1.to_string() + ", " + sub2.to_string() + "; " +
           intersection.to_string() + ")";
  }
};

/// Triples of inclusions of transitive actions with H simple; the three
/// parameterized families run over 2 <= n <= n_max (4 <= n for SO_{2n}).
inline std::vector<TransitiveTriple> triple_catalog(unsigned n_max) {
  using S = CompactGroupSymbol;
  if (n_max < 2) throw PreconditionError("triple_catalog needs n_max >= 2");
  std::vector<TransitiveTriple> out;
  for (unsigned n = 2; n <= n_max; ++n) out.push_back({S::SU(2 * n), S::Sp(n), S::SU(2 * n - 1), S::Sp(n - 1), "SU2n", n});
  for (unsigned n = 2; n <= n_max; ++n) out.push_back({S::SO(4 * n), S::SO(4 * n - 1), S::Sp(n), S::Sp(n - 1), "SO4n", n});
  out.push_back({S::SO(7), S::G2(), S::SO(6), S::SU(3), "", std::nullopt});
  out.push_back({S::SO(7), S::G2(), S::SO(5), S::SU(2), "", std::nullopt});
  out.push_back({S::SO(16), S::SO(15), S::Spin(9), S::Spin(7), "", std::nullopt});
  for (unsigned n = 4; n <= n_max; ++n) out.push_back({S::SO(2 * n), S::SO(2 * n - 1), S::SU(n), S::SU(n - 1), "SO2n", n});
  out.push_back({S::SO(8), S::Spin(7), S::SO(7), S::G2(), "", std::nullopt});
  out.push_back({S::SO(8), S::Spin(7), S::SO(6), S::SU(3), "", std::nullopt});
  out.push_back({S::SO(8), S::Spin(7), S::SO(5), S::SU(2), "", std::nullopt});
  return out;
}

/// |H(F_q)| * |(H_1 n H_2)(F_q)| == |H_1(F_q)| * |H_2(F_q)|, exactly.
inline bool verify_triple(const TransitiveTriple& t, const PrimePowerField& f) {
  const BigInt lhs = group_order(split_form(t.ambient), f) * group_order(split_form(t.intersection), f);
  const BigInt rhs = group_order(split_form(t.sub1), f) * group_order(split_form(t.sub2), f);
  return lhs == rhs;
}

inline CoincidenceClass triple_to_class(const TransitiveTriple& t) {
  return make_class(split_form(t.ambient) * split_form(t.intersection), split_form(t.sub1) * split_form(t.sub2));
}

struct MaximalExponentRow {
  CompactGroupSymbol subgroup;
  CompactGroupSymbol ambient;
  unsigned subgroup_max_degree = 0;
  unsigned ambient_max_degree = 0;

  bool ok() const { return subgroup_max_degree == ambient_max_degree; }
};

/// Subgroups of maximal exponent: Sp_n in SU_{2n} (n > 1), G_2 in SO_7,
/// SO_{2n-1} in SO_{2n} (n > 3), Spin_7 in SO_8, G_2 in SO_8, F_4 in E_6.
/// Checks that each subgroup's split form has the ambient's top degree.
inline std::vector<MaximalExponentRow> verify_maximal_exponent_pairs(unsigned n_max = 8) {
  using S = CompactGroupSymbol;
  std::vector<std::pair<S, S>> pairs;
  for (unsigned n = 2; n <= n_max; ++n) pairs.push_back({S::Sp(n), S::SU(2 * n)});
  pairs.push_back({S::G2(), S::SO(7)});
  for (unsigned n = 4; n <= n_max; ++n) pairs.push_back({S::SO(2 * n - 1), S::SO(2 * n)});
  pairs.push_back({S::Spin(7), S::SO(8)});
  pairs.push_back({S::G2(), S::SO(8)});
  pairs.push_back({S::F4(), S::E6()});
  std::vector<MaximalExponentRow> rows;
  for (const auto& [sub, amb] : pairs) {
    rows.push_back({sub, amb, group_degrees(split_form(sub)).max(), group_degrees(split_form(amb)).max()});
  }
  return rows;
}

}  // namespace ordco
