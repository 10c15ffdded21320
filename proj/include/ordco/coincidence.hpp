#pragma once

// The group of order-coincidence classes.
//
// A class [(H_1, H_2)] is stored as a signed multiset of simple types: +1 per
// factor of H_1, -1 per factor of H_2, common factors cancelled. Composition
// is addition, inversion is negation, and the identity is the empty multiset.
// Membership is degree balance: H_1 and H_2 have the same Weyl degree
// multiset, which over any fixed F_q is equivalent to |H_1(F_q)| = |H_2(F_q)|.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ordco/bigint.hpp"
#include "ordco/errors.hpp"
#include "ordco/lie_core.hpp"

namespace ordco {

class CoincidenceClass {
 public:
  using Delta = std::map<SimpleType, long>;

  /// The identity class.
  CoincidenceClass() = default;

  /// Throws NotACoincidence when the signed degree multiset is not zero.
  static CoincidenceClass from_delta(Delta delta) {
    std::erase_if(delta, [](const auto& kv) { return kv.second == 0; });
    std::map<unsigned, long> balance;
    for (const auto& [t, k] : delta) {
      for (unsigned d : degrees(t).values) balance[d] += k;
    }
    for (const auto& [d, k] : balance) {
      if (k != 0) throw NotACoincidence("degree " + std::to_string(d) + " is unbalanced by " + std::to_string(k));
    }
    CoincidenceClass c;
    c.delta_ = std::move(delta);
    return c;
  }

  const Delta& delta() const { return delta_; }
  bool is_identity() const { return delta_.empty(); }

  SemisimpleGroup left() const { return side(+1); }
  SemisimpleGroup right() const { return side(-1); }

  /// Largest Weyl degree among all factors; 0 for the identity.
  unsigned max_degree() const {
    unsigned m = 0;
    for (const auto& [t, k] : delta_) m = std::max(m, ordco::max_degree(t));
    return m;
  }

  CoincidenceClass operator*(const CoincidenceClass& other) const {
    CoincidenceClass c = *this;
    for (const auto& [t, k] : other.delta_) {
      if ((c.delta_[t] += k) == 0) c.delta_.erase(t);
    }
    return c;
  }

  CoincidenceClass inverse() const {
    CoincidenceClass c = *this;
    for (auto& [t, k] : c.delta_) k = -k;
    return c;
  }

  CoincidenceClass power(long k) const {
    CoincidenceClass c;
    if (k == 0) return c;
    c.delta_ = delta_;
    for (auto& [t, v] : c.delta_) v *= k;
    return c;
  }

  /// "LEFT|RIGHT" in the group grammar.
  std::string to_string() const { return left().to_string() + "|" + right().to_string(); }

  friend bool operator==(const CoincidenceClass&, const CoincidenceClass&) = default;
  friend bool operator<(const CoincidenceClass& a, const CoincidenceClass& b) {
    const auto la = a.left(), lb = b.left();
    if (la != lb) return la < lb;
    return a.right() < b.right();
  }

 private:
  SemisimpleGroup side(long sign) const {
    std::vector<SimpleType> f;
    for (const auto& [t, k] : delta_) {
      if (k * sign > 0) f.insert(f.end(), static_cast<std::size_t>(k * sign), t);
    }
    return SemisimpleGroup(std::move(f));
  }

  Delta delta_;
};

/// The reduced class of (left, right). Throws NotACoincidence when the
/// degree multisets differ.
inline CoincidenceClass make_class(const SemisimpleGroup& left, const SemisimpleGroup& right) {
  CoincidenceClass::Delta delta;
  for (const auto& t : left.factors()) ++delta[t];
  for (const auto& t : right.factors()) --delta[t];
  try {
    return CoincidenceClass::from_delta(std::move(delta));
  } catch (const NotACoincidence& e) {
    throw NotACoincidence("(" + left.to_string() + ", " + right.to_string() + ") is not a coincidence: " + e.what());
  }
}

inline CoincidenceClass compose(const CoincidenceClass& a, const CoincidenceClass& b) { return a * b; }
inline CoincidenceClass inverse(const CoincidenceClass& c) { return c.inverse(); }
inline bool is_identity(const CoincidenceClass& c) { return c.is_identity(); }

/// Parses "LEFT|RIGHT"; either side may be empty (trivial group).
inline CoincidenceClass parse_pair(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw ParseError("expected exactly one '|' in pair '" + std::string(text) + "'");
  }
  return make_class(parse_group(text.substr(0, bar)), parse_group(text.substr(bar + 1)));
}

/// The orientation of c (c or its inverse) whose left side sorts first. Used
/// to list unordered coincidences once.
inline CoincidenceClass canonical_orientation(const CoincidenceClass& c) {
  const auto l = c.left(), r = c.right();
  return std::lexicographical_compare(r.factors().begin(), r.factors().end(), l.factors().begin(), l.factors().end())
             ? c.inverse()
             : c;
}

// ---------------------------------------------------------------------------
// Generators

enum class GeneratorKind : std::uint8_t { G2, F4, E6, E7, E8, B, D };

struct GeneratorId {
  GeneratorKind kind = GeneratorKind::G2;
  unsigned n = 0;  // parameter for B and D; unused otherwise

  static GeneratorId B(unsigned n) { return {GeneratorKind::B, n}; }
  static GeneratorId D(unsigned n) { return {GeneratorKind::D, n}; }
  static GeneratorId G2() { return {GeneratorKind::G2, 0}; }
  static GeneratorId F4() { return {GeneratorKind::F4, 0}; }
  static GeneratorId E6() { return {GeneratorKind::E6, 0}; }
  static GeneratorId E7() { return {GeneratorKind::E7, 0}; }
  static GeneratorId E8() { return {GeneratorKind::E8, 0}; }

  bool valid() const {
    if (kind == GeneratorKind::B) return n >= 2;
    if (kind == GeneratorKind::D) return n >= 4;
    return true;
  }

  std::string to_string() const {
    switch (kind) {
      case GeneratorKind::G2: return "G2";
      case GeneratorKind::F4: return "F4";
      case GeneratorKind::E6: return "E6";
      case GeneratorKind::E7: return "E7";
      case GeneratorKind::E8: return "E8";
      case GeneratorKind::B: return "B" + std::to_string(n);
      case GeneratorKind::D: return "D" + std::to_string(n);
    }
    return "?";
  }

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

/// A finitely supported exponent vector over the generators.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  GeneratorWord(std::initializer_list<std::pair<const GeneratorId, long>> terms) {
    for (const auto& [id, k] : terms) add(id, k);
  }

  const std::map<GeneratorId, long>& exponents() const { return exp_; }
  bool empty() const { return exp_.empty(); }

  void add(const GeneratorId& id, long k) {
    if (k == 0) return;
    if ((exp_[id] += k) == 0) exp_.erase(id);
  }

  GeneratorWord operator+(const GeneratorWord& o) const {
    GeneratorWord w = *this;
    for (const auto& [id, k] : o.exp_) w.add(id, k);
    return w;
  }

  GeneratorWord operator-() const {
    GeneratorWord w = *this;
    for (auto& [id, k] : w.exp_) k = -k;
    return w;
  }

  /// "G2^1 * D4^-1"; "1" for the empty word.
  std::string to_string() const {
    if (exp_.empty()) return "1";
    std::string s;
    for (const auto& [id, k] : exp_) {
      if (!s.empty()) s += " * ";
      s += id.to_string() + "^" + std::to_string(k);
    }
    return s;
  }

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;

 private:
  std::map<GeneratorId, long> exp_;
};

inline GeneratorId parse_generator_id(std::string_view name) {
  const std::string s(name);
  if (s == "G2") return GeneratorId::G2();
  if (s == "F4") return GeneratorId::F4();
  if (s == "E6") return GeneratorId::E6();
  if (s == "E7") return GeneratorId::E7();
  if (s == "E8") return GeneratorId::E8();
  if (s.size() >= 2 && s.size() <= 7 && (s[0] == 'B' || s[0] == 'D') &&
      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    GeneratorId id = s[0] == 'B' ? GeneratorId::B(std::stoul(s.substr(1))) : GeneratorId::D(std::stoul(s.substr(1)));
    if (!id.valid()) throw InvalidRank("generator parameter out of range in '" + s + "'");
    return id;
  }
  throw ParseError("unknown generator '" + s + "'");
}

/// Parses "G2^1 * B2^-1"; a bare name means exponent 1, "1" or "" is empty.
inline GeneratorWord parse_word(std::string_view text) {
  text = detail::trim(text);
  GeneratorWord w;
  if (text.empty() || text == "1") return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t star = text.find('*', pos);
    const std::string_view term =
        detail::trim(text.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (term.empty()) throw ParseError("empty term in word '" + std::string(text) + "'");
    const auto caret = term.find('^');
    long k = 1;
    if (caret != std::string_view::npos) k = parse_bigint(detail::trim(term.substr(caret + 1))).get_si();
    if (k == 0) throw ParseError("zero exponent in '" + std::string(term) + "'");
    w.add(parse_generator_id(detail::trim(term.substr(0, caret))), k);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return w;
}

namespace detail {

inline SemisimpleGroup group_of(std::initializer_list<std::pair<Family, unsigned>> parts) {
  std::vector<SimpleType> f;
  for (const auto& [fam, r] : parts) f.push_back(fam == Family::B ? SimpleType::b_or_a1(r) : SimpleType(fam, r));
  return SemisimpleGroup(std::move(f));
}

}  // namespace detail

/// The generating classes:
///   B_n = (A_{2n-2} B_n | A_{2n-1} B_{n-1}), n >= 2, B_1 = A_1
///   D_n = (A_{n-2} D_n | A_{n-1} B_{n-1}), n >= 4
///   G_2 = (A_2 B_3 | A_3 G_2)
///   F_4 = (A_1 B_4 B_6 | B_2 B_5 F_4)
///   E_6 = (A_4 G_2 A_8 B_6 | A_3 A_6 B_5 E_6)
///   E_7 = (A_1 B_7 B_9 | B_2 B_8 E_7)
///   E_8 = (A_1 B_4 B_7 B_10 B_12 B_15 | B_3 B_5 B_8 B_11 B_14 E_8)
inline CoincidenceClass generator(const GeneratorId& id) {
  using F = Family;
  if (!id.valid()) throw InvalidRank("generator parameter out of range: " + id.to_string());
  const unsigned n = id.n;
  switch (id.kind) {
    case GeneratorKind::B:
      return make_class(detail::group_of({{F::A, 2 * n - 2}, {F::B, n}}), detail::group_of({{F::A, 2 * n - 1}, {F::B, n - 1}}));
    case GeneratorKind::D:
      return make_class(detail::group_of({{F::A, n - 2}, {F::D, n}}), detail::group_of({{F::A, n - 1}, {F::B, n - 1}}));
    case GeneratorKind::G2:
      return make_class(detail::group_of({{F::A, 2}, {F::B, 3}}), detail::group_of({{F::A, 3}, {F::G, 2}}));
    case GeneratorKind::F4:
      return make_class(detail::group_of({{F::A, 1}, {F::B, 4}, {F::B, 6}}),
                        detail::group_of({{F::B, 2}, {F::B, 5}, {F::F, 4}}));
    case GeneratorKind::E6:
      return make_class(detail::group_of({{F::A, 4}, {F::G, 2}, {F::A, 8}, {F::B, 6}}),
                        detail::group_of({{F::A, 3}, {F::A, 6}, {F::B, 5}, {F::E, 6}}));
    case GeneratorKind::E7:
      return make_class(detail::group_of({{F::A, 1}, {F::B, 7}, {F::B, 9}}),
                        detail::group_of({{F::B, 2}, {F::B, 8}, {F::E, 7}}));
    case GeneratorKind::E8:
      return make_class(detail::group_of({{F::A, 1}, {F::B, 4}, {F::B, 7}, {F::B, 10}, {F::B, 12}, {F::B, 15}}),
                        detail::group_of({{F::B, 3}, {F::B, 5}, {F::B, 8}, {F::B, 11}, {F::B, 14}, {F::E, 8}}));
  }
  throw InvalidRank("unknown generator");
}

inline CoincidenceClass evaluate_word(const GeneratorWord& w) {
  CoincidenceClass c;
  for (const auto& [id, k] : w.exponents()) c = c * generator(id).power(k);
  return c;
}

/// A word whose class has `left` on its left side, `right` on its right
/// side, and only factors of smaller top degree otherwise.
struct ConnectorEntry {
  SimpleType left;
  SimpleType right;
  GeneratorWord word;
};

/// Connector words for the simple types of top degree n = 2m. With B_m as a
/// pivot: B_m joins {B_m, A_{2m-1}}, D_{m+1} joins {D_{m+1}, B_m}, and each
/// exceptional generator X of top degree n joins {B_m, X}; every other pair
/// is a sum or difference of these.
inline std::vector<ConnectorEntry> connector_table(unsigned n) {
  std::vector<ConnectorEntry> out;
  if (n % 2 || n < 4) return out;
  const unsigned m = n / 2;
  const SimpleType a(Family::A, 2 * m - 1), b(Family::B, m);
  const GeneratorWord wb{{GeneratorId::B(m), 1}};
  out.push_back({b, a, wb});
  std::optional<SimpleType> d;
  GeneratorWord wd;
  if (m + 1 >= 4) {
    d = SimpleType(Family::D, m + 1);
    wd = GeneratorWord{{GeneratorId::D(m + 1), 1}};
    out.push_back({*d, b, wd});
    out.push_back({*d, a, wd + wb});
  }
  std::vector<std::pair<SimpleType, GeneratorId>> exceptional;
  if (n == 6) exceptional.push_back({SimpleType(Family::G, 2), GeneratorId::G2()});
  if (n == 12) {
    exceptional.push_back({SimpleType(Family::F, 4), GeneratorId::F4()});
    exceptional.push_back({SimpleType(Family::E, 6), GeneratorId::E6()});
  }
  if (n == 18) exceptional.push_back({SimpleType(Family::E, 7), GeneratorId::E7()});
  if (n == 30) exceptional.push_back({SimpleType(Family::E, 8), GeneratorId::E8()});
  for (std::size_t i = 0; i < exceptional.size(); ++i) {
    const auto& [x, id] = exceptional[i];
    const GeneratorWord wx{{id, 1}};
    out.push_back({b, x, wx});
    out.push_back({a, x, wx + -wb});
    if (d) out.push_back({*d, x, wd + wx});
    for (std::size_t j = i + 1; j < exceptional.size(); ++j) {
      out.push_back({x, exceptional[j].first, -wx + GeneratorWord{{exceptional[j].second, 1}}});
    }
  }
  return out;
}

/// Word whose class has t1 on the left and t2 on the right, all other
/// factors of smaller top degree. Throws NoConnector when t1 == t2 or the
/// top degrees differ.
inline GeneratorWord connector(const SimpleType& t1, const SimpleType& t2) {
  const unsigned n = max_degree(t1);
  if (t1 == t2 || n != max_degree(t2)) {
    throw NoConnector("no connector for " + t1.to_string() + " and " + t2.to_string());
  }
  for (const auto& e : connector_table(n)) {
    if (e.left == t1 && e.right == t2) return e.word;
    if (e.left == t2 && e.right == t1) return -e.word;
  }
  throw NoConnector("no connector for " + t1.to_string() + " and " + t2.to_string());
}

/// Expresses c as a word in the generators by repeatedly cancelling one
/// top-degree factor from each side with a connector. Factors are picked
/// in canonical type order. The result is checked by recomposition.
inline GeneratorWord reduce_to_word(const CoincidenceClass& c) {
  GeneratorWord word;
  CoincidenceClass rest = c;
  while (!rest.is_identity()) {
    const unsigned n = rest.max_degree();
    std::optional<SimpleType> k1, k2;
    for (const auto& [t, k] : rest.delta()) {
      if (max_degree(t) != n) continue;
      if (k > 0 && !k1) k1 = t;
      if (k < 0 && !k2) k2 = t;
    }
    if (!k1 || !k2) throw Error("internal: unbalanced top degree while reducing " + c.to_string());
    const GeneratorWord w = connector(*k1, *k2);
    rest = rest * evaluate_word(w).inverse();
    word = word + w;
  }
  if (evaluate_word(word) != c) throw Error("internal: reduction of " + c.to_string() + " does not recompose");
  return word;
}

// ---------------------------------------------------------------------------
// Searches

namespace detail {

inline std::vector<CoincidenceClass> join_by_degrees(const std::vector<SemisimpleGroup>& groups) {
  std::map<DegreeMultiset, std::vector<const SemisimpleGroup*>> buckets;
  for (const auto& g : groups) buckets[group_degrees(g)].push_back(&g);
  std::set<CoincidenceClass> found;
  for (const auto& [degs, members] : buckets) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto& fi = members[i]->factors();
        const auto& fj = members[j]->factors();
        std::vector<SimpleType> common;
        std::set_intersection(fi.begin(), fi.end(), fj.begin(), fj.end(), std::back_inserter(common));
        if (!common.empty()) continue;
        found.insert(canonical_orientation(make_class(*members[i], *members[j])));
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace detail

/// All reduced classes with exactly two simple factors per side and all
/// degrees <= max_degree, each listed once in canonical orientation.
inline std::vector<CoincidenceClass> search_two_factor_pairs(unsigned max_degree) {
  if (max_degree < 4) throw PreconditionError("search_two_factor_pairs needs max_degree >= 4");
  std::vector<SimpleType> atoms;
  for (unsigned n = 2; n <= max_degree; ++n) {
    for (const auto& t : types_with_max_degree(n)) atoms.push_back(t);
  }
  std::sort(atoms.begin(), atoms.end());
  std::vector<SemisimpleGroup> products;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i; j < atoms.size(); ++j) products.push_back(SemisimpleGroup{atoms[i], atoms[j]});
  }
  return detail::join_by_degrees(products);
}

/// The two-factor classification as a catalog: the families
///   (A_{2n-2}B_n, A_{2n-1}B_{n-1}), (A_{n-2}D_n, A_{n-1}B_{n-1}),
///   (B_{n-1}D_{2n}, B_{2n-1}B_n)
/// and the sporadic pairs (A_1A_5, A_4G_2), (A_1B_3, B_2G_2), (A_1D_6, B_5G_2),
/// (A_2B_3, A_3G_2), (B_3^2, D_4G_2), truncated to degrees <= max_degree.
inline std::vector<CoincidenceClass> two_factor_catalog(unsigned max_degree) {
  using F = Family;
  std::set<CoincidenceClass> out;
  auto keep = [&](const CoincidenceClass& c) {
    if (c.max_degree() <= max_degree) out.insert(canonical_orientation(c));
  };
  for (unsigned n = 2; 2 * n <= max_degree; ++n) keep(generator(GeneratorId::B(n)));
  for (unsigned n = 4; 2 * n - 2 <= max_degree; ++n) keep(generator(GeneratorId::D(n)));
  for (unsigned n = 2; 4 * n - 2 <= max_degree; ++n) {
    keep(make_class(detail::group_of({{F::B, n - 1}, {F::D, 2 * n}}), detail::group_of({{F::B, 2 * n - 1}, {F::B, n}})));
  }
  keep(make_class(detail::group_of({{F::A, 1}, {F::A, 5}}), detail::group_of({{F::A, 4}, {F::G, 2}})));
  keep(make_class(detail::group_of({{F::A, 1}, {F::B, 3}}), detail::group_of({{F::B, 2}, {F::G, 2}})));
  keep(make_class(detail::group_of({{F::A, 1}, {F::D, 6}}), detail::group_of({{F::B, 5}, {F::G, 2}})));
  keep(generator(GeneratorId::G2()));
  keep(make_class(detail::group_of({{F::B, 3}, {F::B, 3}}), detail::group_of({{F::D, 4}, {F::G, 2}})));
  return {out.begin(), out.end()};
}

/// All reduced classes whose sides have rank <= max_rank and at most
/// max_factors simple factors (default: unbounded), by joining every group
/// within the bounds on its degree multiset. Cost grows quickly with
/// max_rank; more than max_groups candidate groups throws BudgetExceeded.
inline std::vector<CoincidenceClass> search_coincidences(unsigned max_rank, std::optional<unsigned> max_factors = std::nullopt,
                                                         std::size_t max_groups = 2'000'000) {
  auto groups = enumerate_groups(max_rank, max_factors);
  if (groups.size() > max_groups) {
    throw BudgetExceeded("coincidence search over " + std::to_string(groups.size()) + " groups exceeds the budget");
  }
  std::erase_if(groups, [](const SemisimpleGroup& g) { return g.trivial(); });
  return detail::join_by_degrees(groups);
}

struct SideBalanceReport {
  unsigned rank_left = 0, rank_right = 0;
  std::size_t factors_left = 0, factors_right = 0;
  bool simple_vs_simple = false;

  bool passed() const { return rank_left == rank_right && factors_left == factors_right && !simple_vs_simple; }
};

/// Equal ranks, equal factor counts, and no nonidentity class with a simple
/// group on either side.
inline SideBalanceReport check_side_balance(const CoincidenceClass& c) {
  const auto l = c.left(), r = c.right();
  SideBalanceReport rep;
  rep.rank_left = l.rank();
  rep.rank_right = r.rank();
  rep.factors_left = l.factors().size();
  rep.factors_right = r.factors().size();
  rep.simple_vs_simple = !c.is_identity() && (rep.factors_left == 1 || rep.factors_right == 1);
  return rep;
}

/// Rank over the integers of the classes' delta vectors (fraction-free
/// elimination, exact).
inline std::size_t integer_rank(const std::vector<CoincidenceClass>& classes) {
  std::map<SimpleType, std::size_t> column;
  for (const auto& c : classes) {
    for (const auto& [t, k] : c.delta()) column.emplace(t, 0);
  }
  std::size_t idx = 0;
  for (auto& [t, col] : column) col = idx++;
  std::vector<std::vector<BigInt>> rows;
  for (const auto& c : classes) {
    std::vector<BigInt> row(column.size(), 0);
    for (const auto& [t, k] : c.delta()) row[column.at(t)] = k;
    rows.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < column.size() && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const BigInt a = rows[rank][col], b = rows[r][col];
      for (std::size_t k = col; k < column.size(); ++k) rows[r][k] = rows[r][k] * a - rows[rank][k] * b;
      BigInt g = 0;
      for (const auto& v : rows[r]) g = gcd(g, v);
      if (g > 1) {
        for (auto& v : rows[r]) v /= g;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace ordco
