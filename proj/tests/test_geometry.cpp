#include <gtest/gtest.h>

#include "ordco/geometry.hpp"

using namespace ordco;

namespace {

using S = CompactGroupSymbol;

}  // namespace

TEST(SplitForm, Dictionary) {
  EXPECT_EQ(split_form(S::SO(6)), parse_group("A3"));
  EXPECT_EQ(split_form(S::Spin(9)), parse_group("B4"));
  EXPECT_EQ(split_form(S::Sp(1)), parse_group("A1"));
  EXPECT_EQ(split_form(S::SO(5)), parse_group("B2"));
  EXPECT_EQ(split_form(S::SU(2)), parse_group("A1"));
  EXPECT_EQ(split_form(S::SO(3)), parse_group("A1"));
  EXPECT_EQ(split_form(S::SO(16)), parse_group("D8"));
  EXPECT_EQ(split_form(S::G2()), parse_group("G2"));
  EXPECT_EQ(split_form(S::F4()), parse_group("F4"));
  EXPECT_EQ(split_form(S::E6()), parse_group("E6"));
  EXPECT_TRUE(split_form(S::Sp(0)).trivial());
  EXPECT_TRUE(split_form(S::SU(1)).trivial());
  EXPECT_THROW(split_form(S::SO(4)), DictionaryMiss);
  EXPECT_THROW(split_form(S::SO(2)), DictionaryMiss);
  EXPECT_THROW(split_form(S::SU(0)), DictionaryMiss);
}

TEST(CompactSymbol, ParseRoundTrip) {
  for (const char* s : {"SU_4", "Sp_2", "SO_16", "Spin_7", "G_2", "F_4", "E_6"}) {
    EXPECT_EQ(parse_compact_symbol(s).to_string(), s);
  }
  EXPECT_THROW(parse_compact_symbol("SU4"), ParseError);
  EXPECT_THROW(parse_compact_symbol("XY_3"), ParseError);
  EXPECT_THROW(parse_compact_symbol("SO_x"), ParseError);
}

TEST(TripleCatalog, Contents) {
  const auto rows = triple_catalog(2);
  auto has = [&](const std::string& s) {
    return std::any_of(rows.begin(), rows.end(), [&](const TransitiveTriple& t) { return t.to_string() == s; });
  };
  EXPECT_TRUE(has("(SU_4, Sp_2, SU_3; Sp_1)"));
  EXPECT_TRUE(has("(SO_7, G_2, SO_6; SU_3)"));
  EXPECT_TRUE(has("(SO_8, Spin_7, SO_7; G_2)"));
  EXPECT_TRUE(has("(SO_8, Spin_7, SO_6; SU_3)"));
  EXPECT_TRUE(has("(SO_8, Spin_7, SO_5; SU_2)"));
  EXPECT_TRUE(has("(SO_16, SO_15, Spin_9; Spin_7)"));
  // Two parameterized rows at n = 2 plus six fixed rows; SO_{2n} starts at 4.
  EXPECT_EQ(rows.size(), 8u);
  EXPECT_EQ(triple_catalog(8).size(), 7u + 7u + 6u + 5u);
  EXPECT_THROW(triple_catalog(1), PreconditionError);
}

TEST(TripleCatalog, OrderIdentityExact) {
  for (const auto& t : triple_catalog(8)) {
    for (unsigned long q : {2ul, 3ul, 5ul}) EXPECT_TRUE(verify_triple(t, PrimePowerField::from_q(q))) << t.to_string();
    auto lhs = group_degrees(split_form(t.ambient));
    lhs += group_degrees(split_form(t.intersection));
    auto rhs = group_degrees(split_form(t.sub1));
    rhs += group_degrees(split_form(t.sub2));
    EXPECT_EQ(lhs, rhs) << t.to_string();
  }
}

TEST(TripleCatalog, WorkedValues) {
  const auto f3 = PrimePowerField::from_q(3ul);
  EXPECT_EQ(group_order(parse_group("A3"), f3), 12130560);
  EXPECT_EQ(group_order(parse_group("A3"), f3) * group_order(parse_group("A1"), f3), BigInt("291133440"));
  EXPECT_EQ(group_order(parse_group("B2"), f3) * group_order(parse_group("A2"), f3), BigInt("291133440"));
  const TransitiveTriple t{S::SO(7), S::G2(), S::SO(5), S::SU(2), "", std::nullopt};
  EXPECT_TRUE(verify_triple(t, PrimePowerField::from_q(2ul)));
}

TEST(TripleCatalog, ClassesMatchGenerators) {
  for (const auto& t : triple_catalog(8)) {
    const auto c = triple_to_class(t);
    EXPECT_EQ(evaluate_word(reduce_to_word(c)), c);
    if (t.family == "SU2n") {
      EXPECT_EQ(c, generator(GeneratorId::B(*t.n)).inverse()) << t.to_string();
    } else if (t.family == "SO2n") {
      EXPECT_EQ(c, generator(GeneratorId::D(*t.n))) << t.to_string();
    }
  }
  const TransitiveTriple g{S::SO(7), S::G2(), S::SO(6), S::SU(3), "", std::nullopt};
  EXPECT_EQ(triple_to_class(g), generator(GeneratorId::G2()));
  EXPECT_EQ(triple_to_class(g).to_string(), "A2*B3|A3*G2");
}

TEST(MaximalExponent, Pairs) {
  const auto rows = verify_maximal_exponent_pairs();
  for (const auto& r : rows) EXPECT_TRUE(r.ok()) << r.subgroup.to_string() << " " << r.ambient.to_string();
  auto find = [&](const std::string& sub, const std::string& amb) {
    for (const auto& r : rows) {
      if (r.subgroup.to_string() == sub && r.ambient.to_string() == amb) return r.subgroup_max_degree;
    }
    return 0u;
  };
  EXPECT_EQ(find("Sp_2", "SU_4"), 4u);
  EXPECT_EQ(find("G_2", "SO_7"), 6u);
  EXPECT_EQ(find("F_4", "E_6"), 12u);
}
