#pragma once

// Simple and semisimple group symbols, Weyl degree tables, and exact orders
// of split simply connected groups over finite fields.
//
// For a split group H of rank n over F_q,
//
//   |H(F_q)| = q^N * (q^d_1 - 1) * ... * (q^d_n - 1),   N = sum (d_i - 1),
//
// where d_i are the fundamental degrees of the Weyl group W(H).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordco/bigint.hpp"
#include "ordco/errors.hpp"
#include "ordco/primality.hpp"

namespace ordco {

/// Family letters in canonical order. B also stands for C: the two have
/// identical orders and are never distinguished.
enum class Family : std::uint8_t { A, B, D, G, F, E };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
    case Family::G: return 'G';
    case Family::F: return 'F';
    case Family::E: return 'E';
  }
  return '?';
}

/// One simple factor, e.g. A_3 or E_8. Always holds a valid (family, rank).
class SimpleType {
 public:
  /// Throws InvalidRank when rank is outside the family's range. B_1 is
  /// rejected here; parsing normalizes it to A_1 before construction.
  SimpleType(Family family, unsigned rank) : family_(family), rank_(rank) {
    if (!valid(family, rank)) {
      throw InvalidRank(std::string("invalid rank ") + std::to_string(rank) + " for family " +
                        family_letter(family));
    }
  }

  static bool valid(Family family, unsigned rank) {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::D: return rank >= 4;
      case Family::G: return rank == 2;
      case Family::F: return rank == 4;
      case Family::E: return rank >= 6 && rank <= 8;
    }
    return false;
  }

  /// B_n with the convention B_1 = A_1.
  static SimpleType b_or_a1(unsigned rank) {
    return rank == 1 ? SimpleType(Family::A, 1) : SimpleType(Family::B, rank);
  }

  Family family() const { return family_; }
  unsigned rank() const { return rank_; }

  std::string to_string() const { return family_letter(family_) + std::to_string(rank_); }

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  unsigned rank_;
};

/// Sorted multiset of Weyl degrees (each >= 2).
struct DegreeMultiset {
  std::vector<unsigned> values;

  DegreeMultiset() = default;
  explicit DegreeMultiset(std::vector<unsigned> v) : values(std::move(v)) {
    std::sort(values.begin(), values.end());
  }

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  unsigned max() const { return values.empty() ? 0 : values.back(); }
  std::size_t count(unsigned d) const { return static_cast<std::size_t>(std::count(values.begin(), values.end(), d)); }

  DegreeMultiset& operator+=(const DegreeMultiset& other) {
    std::vector<unsigned> merged;
    merged.reserve(values.size() + other.values.size());
    std::merge(values.begin(), values.end(), other.values.begin(), other.values.end(), std::back_inserter(merged));
    values = std::move(merged);
    return *this;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(values[i]);
    }
    return s + "}";
  }

  friend auto operator<=>(const DegreeMultiset&, const DegreeMultiset&) = default;
  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;
};

inline DegreeMultiset degrees(const SimpleType& t) {
  std::vector<unsigned> d;
  const unsigned n = t.rank();
  switch (t.family()) {
    case Family::A:
      for (unsigned i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
      for (unsigned i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (unsigned i = 1; i + 1 <= n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::G: d = {2, 6}; break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  return DegreeMultiset(std::move(d));
}

inline unsigned max_degree(const SimpleType& t) { return degrees(t).max(); }

/// Every simple type whose largest Weyl degree is exactly n, in canonical order.
inline std::vector<SimpleType> types_with_max_degree(unsigned n) {
  std::vector<SimpleType> out;
  if (n < 2) return out;
  out.emplace_back(Family::A, n - 1);
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    if (m >= 2) out.emplace_back(Family::B, m);
    if (m + 1 >= 4) out.emplace_back(Family::D, m + 1);
  }
  if (n == 6) out.emplace_back(Family::G, 2);
  if (n == 12) {
    out.emplace_back(Family::F, 4);
    out.emplace_back(Family::E, 6);
  }
  if (n == 18) out.emplace_back(Family::E, 7);
  if (n == 30) out.emplace_back(Family::E, 8);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every simple type of rank exactly r, in canonical order.
inline std::vector<SimpleType> types_of_rank(unsigned r) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::D, Family::G, Family::F, Family::E}) {
    if (SimpleType::valid(f, r)) out.emplace_back(f, r);
  }
  return out;
}

/// Direct product of simple factors, stored in canonical order. The empty
/// product is the trivial group.
class SemisimpleGroup {
 public:
  SemisimpleGroup() = default;
  SemisimpleGroup(std::initializer_list<SimpleType> factors) : factors_(factors) { normalize(); }
  explicit SemisimpleGroup(std::vector<SimpleType> factors) : factors_(std::move(factors)) { normalize(); }

  const std::vector<SimpleType>& factors() const { return factors_; }
  bool trivial() const { return factors_.empty(); }

  unsigned rank() const {
    unsigned r = 0;
    for (const auto& t : factors_) r += t.rank();
    return r;
  }

  SemisimpleGroup operator*(const SemisimpleGroup& other) const {
    std::vector<SimpleType> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return SemisimpleGroup(std::move(all));
  }

  /// Canonical serialization: factors joined by '*'; trivial group is "".
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += '*';
      s += factors_[i].to_string();
    }
    return s;
  }

  friend auto operator<=>(const SemisimpleGroup&, const SemisimpleGroup&) = default;
  friend bool operator==(const SemisimpleGroup&, const SemisimpleGroup&) = default;

 private:
  void normalize() { std::sort(factors_.begin(), factors_.end()); }

  std::vector<SimpleType> factors_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline SimpleType parse_factor(std::string_view token) {
  const std::string tok(token);
  if (token.size() < 2 || !std::isalpha(static_cast<unsigned char>(token[0]))) {
    throw ParseError("malformed group factor '" + tok + "'");
  }
  Family family;
  switch (token[0]) {
    case 'A': family = Family::A; break;
    case 'B':
    case 'C': family = Family::B; break;
    case 'D': family = Family::D; break;
    case 'G': family = Family::G; break;
    case 'F': family = Family::F; break;
    case 'E': family = Family::E; break;
    default: throw ParseError("unknown family letter in '" + tok + "'");
  }
  std::string_view digits = token.substr(1);
  if (digits.size() > 6) throw InvalidRank("rank too large in '" + tok + "'");
  unsigned rank = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("malformed rank in '" + tok + "'");
    rank = rank * 10 + static_cast<unsigned>(c - '0');
  }
  if (family == Family::B && rank == 1) return SimpleType(Family::A, 1);
  if (!SimpleType::valid(family, rank)) throw InvalidRank("invalid rank in '" + tok + "'");
  return SimpleType(family, rank);
}

}  // namespace detail

/// Parses `factor ("*" factor)*`, e.g. "A3*B2". C_n is stored as B_n and B_1
/// as A_1. The empty string is the trivial group.
inline SemisimpleGroup parse_group(std::string_view text) {
  text = detail::trim(text);
  std::vector<SimpleType> factors;
  if (text.empty()) return SemisimpleGroup();
  std::size_t pos = 0;
  while (true) {
    std::size_t star = text.find('*', pos);
    std::string_view token = detail::trim(text.substr(pos, star == std::string_view::npos ? text.npos : star - pos));
    if (token.empty()) throw ParseError("empty factor in group '" + std::string(text) + "'");
    factors.push_back(detail::parse_factor(token));
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return SemisimpleGroup(std::move(factors));
}

inline DegreeMultiset group_degrees(const SemisimpleGroup& g) {
  DegreeMultiset all;
  for (const auto& t : g.factors()) all += degrees(t);
  return all;
}

/// N = sum (d - 1) over the degrees; the exponent of q in the order.
inline unsigned long exponent_N(const DegreeMultiset& d) {
  unsigned long n = 0;
  for (unsigned v : d.values) n += v - 1;
  return n;
}

inline unsigned long exponent_N(const SemisimpleGroup& g) { return exponent_N(group_degrees(g)); }

/// The order as a polynomial in q: q^N * prod (q^d - 1).
struct OrderPolynomial {
  unsigned long N = 0;
  DegreeMultiset degrees;

  BigInt evaluate(const BigInt& q) const {
    BigInt r = pow(q, N);
    for (unsigned d : degrees.values) r *= pow(q, d) - 1;
    return r;
  }

  friend bool operator==(const OrderPolynomial&, const OrderPolynomial&) = default;
};

inline OrderPolynomial order_polynomial(const SemisimpleGroup& g) {
  OrderPolynomial p;
  p.degrees = group_degrees(g);
  p.N = exponent_N(p.degrees);
  return p;
}

/// A finite field size q = p^t with p prime and t >= 1.
class PrimePowerField {
 public:
  /// Throws PreconditionError unless q is a prime power.
  static PrimePowerField from_q(const BigInt& q) {
    if (q < 2) throw PreconditionError("field size " + to_string(q) + " is not a prime power");
    if (is_prime(q)) return PrimePowerField(q, 1, q);
    const unsigned long bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long t = bits; t >= 2; --t) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), t) != 0 && is_prime(root)) {
        return PrimePowerField(root, static_cast<unsigned>(t), q);
      }
    }
    throw PreconditionError("field size " + to_string(q) + " is not a prime power");
  }

  static PrimePowerField from_q(unsigned long q) { return from_q(BigInt(q)); }

  static PrimePowerField from_prime_power(const BigInt& p, unsigned t) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + to_string(p) + " is not prime");
    if (t == 0) throw PreconditionError("field degree must be positive");
    return PrimePowerField(p, t, pow(p, t));
  }

  const BigInt& p() const { return p_; }
  unsigned t() const { return t_; }
  const BigInt& q() const { return q_; }

  /// The degree-k extension F_{q^k}.
  PrimePowerField extension(unsigned k) const { return from_prime_power(p_, t_ * k); }

  friend bool operator==(const PrimePowerField& a, const PrimePowerField& b) { return a.q_ == b.q_; }
  friend bool operator<(const PrimePowerField& a, const PrimePowerField& b) { return a.q_ < b.q_; }

 private:
  PrimePowerField(BigInt p, unsigned t, BigInt q) : p_(std::move(p)), t_(t), q_(std::move(q)) {}

  BigInt p_;
  unsigned t_;
  BigInt q_;
};

inline BigInt group_order(const SemisimpleGroup& g, const BigInt& q) {
  if (q < 2) throw PreconditionError("group_order needs q >= 2");
  return order_polynomial(g).evaluate(q);
}

inline BigInt group_order(const SemisimpleGroup& g, const PrimePowerField& f) { return group_order(g, f.q()); }

/// All prime powers 2 <= q <= limit, ascending.
inline std::vector<PrimePowerField> prime_powers_up_to(unsigned long limit) {
  std::vector<PrimePowerField> out;
  for (unsigned long q = 2; q <= limit; ++q) {
    unsigned long n = q, p = 0;
    for (unsigned long d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        p = d;
        break;
      }
    }
    if (p == 0) {
      out.push_back(PrimePowerField::from_q(q));
      continue;
    }
    while (n % p == 0) n /= p;
    if (n == 1) out.push_back(PrimePowerField::from_q(q));
  }
  return out;
}

/// Every semisimple group with rank <= max_rank (and at most max_factors
/// simple factors when given), in canonical order. Includes the trivial group.
inline std::vector<SemisimpleGroup> enumerate_groups(unsigned max_rank, std::optional<unsigned> max_factors = std::nullopt) {
  std::vector<SimpleType> atoms;
  for (unsigned r = 1; r <= max_rank; ++r) {
    auto ts = types_of_rank(r);
    atoms.insert(atoms.end(), ts.begin(), ts.end());
  }
  std::sort(atoms.begin(), atoms.end());
  const unsigned factor_cap = max_factors.value_or(max_rank);
  std::vector<SemisimpleGroup> out;
  std::vector<SimpleType> current;
  // Non-decreasing index sequences enumerate multisets exactly once.
  auto rec = [&](auto&& self, std::size_t start, unsigned rank_left) -> void {
    out.emplace_back(current);
    if (current.size() >= factor_cap) return;
    for (std::size_t i = start; i < atoms.size(); ++i) {
      if (atoms[i].rank() > rank_left) continue;
      current.push_back(atoms[i]);
      self(self, i, rank_left - atoms[i].rank());
      current.pop_back();
    }
  };
  rec(rec, 0, max_rank);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordco
