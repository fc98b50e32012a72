#include <doctest.h>

#include "sylowscope/classifier.hpp"

using namespace sylow;

namespace {

GroupId alt(unsigned n) { return GroupId{Family::Alternating, n, 0, ""}; }
GroupId lie(Family f, unsigned n, unsigned long q) {
  return GroupId{f, n, q, ""};
}
GroupId spor(const char* name) {
  return GroupId{Family::Sporadic, 0, 0, name};
}

}  // namespace

TEST_CASE("rule tags serialize to their pinned names") {
  CHECK(std::string(rule_name(Rule::Thm2_1)) == "Thm2.1");
  CHECK(std::string(rule_name(Rule::Cor2_2)) == "Cor2.2");
  CHECK(std::string(rule_name(Rule::Thm3_7)) == "Thm3.7");
  CHECK(std::string(rule_name(Rule::Thm3_8)) == "Thm3.8");
  CHECK(std::string(rule_name(Rule::Cor3_9)) == "Cor3.9");
  CHECK(std::string(rule_name(Rule::ExcPSL3)) == "Exc-PSL3");
  CHECK(std::string(rule_name(Rule::ExcPSU3)) == "Exc-PSU3");
  CHECK(std::string(rule_name(Rule::Table4)) == "Table4");
  CHECK(std::string(rule_name(Rule::R17Cyclic)) == "R17-cyclic");
  CHECK(std::string(rule_name(Rule::Walter)) == "Walter");
}

TEST_CASE("alternating groups: abelian exactly below n = r^2") {
  auto v = classify(alt(10), 3);  // 10 >= 9
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::Thm2_1);
  CHECK(v.structure.empty());
  CHECK(v.m_tag == MTag::Absent);

  v = classify(alt(12), 5);  // 12 < 25, floor(12/5) = 2 copies
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Cor2_2);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 5);
  CHECK(v.structure[0].multiplicity == 2);

  v = classify(alt(24), 5);  // 4 copies: the two-copy rule no longer applies
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Thm2_1);
  CHECK(v.structure[0].multiplicity == 4);

  CHECK(classify(alt(25), 5).kind == VerdictKind::Nonabelian);

  v = classify(alt(7), 7);  // single copy
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Thm2_1);
  CHECK(v.structure[0].multiplicity == 1);

  v = classify(alt(7), 11);  // prime does not divide the order
  CHECK(v.kind == VerdictKind::Trivial);
  CHECK(v.rule == Rule::Thm2_1);
  CHECK(v.structure.empty());
}

TEST_CASE("defining characteristic: abelian only for PSL(2,q)") {
  auto v = classify(lie(Family::PSL, 2, 25), 5);
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Thm3_7);
  CHECK(v.m_tag == MTag::Defining);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 5);
  CHECK(v.structure[0].multiplicity == 2);  // q = 5^2: elementary of rank f

  v = classify(lie(Family::PSL, 3, 9), 3);
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::Thm3_7);
  CHECK(v.m_tag == MTag::Defining);

  CHECK(classify(lie(Family::PSp, 2, 7), 7).kind == VerdictKind::Nonabelian);
  CHECK(classify(lie(Family::G2, 0, 27), 3).kind == VerdictKind::Nonabelian);
  CHECK(r_valuation_of_order(lie(Family::G2, 0, 27), 3) == 18);  // f * h = 3 * 6
}

TEST_CASE("cross characteristic: the mr-th multiplicity decides") {
  auto v = classify(lie(Family::PSU, 4, 2), 3);  // m = 2, e(6) = 1 != 0
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::Thm3_8);
  CHECK(v.m_tag == MTag::Value);
  CHECK(v.m == 2);
  CHECK(v.t == 1);
  CHECK(r_valuation_of_order(lie(Family::PSU, 4, 2), 3) == 4);

  v = classify(lie(Family::PSL, 5, 11), 5);  // m = 1, e(5) = 1 != 0
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::Thm3_8);
  CHECK(v.m == 1);
  CHECK(r_valuation_of_order(lie(Family::PSL, 5, 11), 5) == 4);

  v = classify(lie(Family::PSp, 2, 19), 5);  // m = 2, e(10) = 0 beyond bound
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Cor3_9);
  CHECK(v.m == 2);
  CHECK(v.t == 1);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 5);
  CHECK(v.structure[0].multiplicity == 2);

  v = classify(lie(Family::F4, 0, 7), 5);  // m = 4, t = 2: homocyclic of exponent 25
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Cor3_9);
  CHECK(v.t == 2);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 25);
  CHECK(v.structure[0].multiplicity == 2);

  // Multiplicative order beyond the degree bound: no contribution at all.
  v = classify(lie(Family::PSL, 2, 4), 7);  // ord_7(4) = 3 > 2
  CHECK(v.kind == VerdictKind::Trivial);
  CHECK(v.rule == Rule::Cor3_9);
}

TEST_CASE("rank-3 exceptions at r = 3 split on t") {
  auto v = classify(lie(Family::PSL, 3, 4), 3);  // 4 = 4 mod 9: t = 1
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::ExcPSL3);
  CHECK(v.m == 1);
  CHECK(v.t == 1);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 3);
  CHECK(v.structure[0].multiplicity == 2);

  v = classify(lie(Family::PSL, 3, 19), 3);  // 19 = 1 mod 9: t = 2
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::ExcPSL3);
  CHECK(v.t == 2);

  v = classify(lie(Family::PSU, 3, 5), 3);  // 5 = 5 mod 9: t = 1
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::ExcPSU3);
  CHECK(v.m == 2);
  CHECK(v.t == 1);
  CHECK(v.structure[0].order == 3);

  v = classify(lie(Family::PSU, 3, 8), 3);  // 8 = 8 mod 9: t = 2
  CHECK(v.kind == VerdictKind::Nonabelian);
  CHECK(v.rule == Rule::ExcPSU3);
  CHECK(v.t == 2);
}

TEST_CASE("sporadic groups: embedded verdict table") {
  auto v = classify(spor("M11"), 3);
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Table4);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 3);
  CHECK(v.structure[0].multiplicity == 2);

  v = classify(spor("J2"), 7);
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.structure[0].multiplicity == 1);

  CHECK(classify(spor("M12"), 3).kind == VerdictKind::Nonabelian);
  CHECK(classify(spor("M12"), 3).rule == Rule::Table4);

  // Marked abelian in the table, but the prime does not divide the order.
  CHECK(classify(spor("M11"), 7).kind == VerdictKind::Trivial);
  CHECK(classify(spor("M12"), 7).kind == VerdictKind::Trivial);
  CHECK(classify(spor("Ru"), 11).kind == VerdictKind::Trivial);

  // The embedded grid is authoritative even where a first- or second-power
  // valuation would force an abelian subgroup; the verify suite surfaces
  // these cells as findings rather than overriding the grid.
  CHECK(classify(spor("M11"), 11).kind == VerdictKind::Nonabelian);
  CHECK(classify(spor("Ru"), 7).kind == VerdictKind::Nonabelian);
  CHECK(classify(spor("Fi22"), 13).kind == VerdictKind::Nonabelian);

  v = classify(spor("M"), 17);
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::R17Cyclic);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 17);
  CHECK(v.structure[0].multiplicity == 1);

  CHECK(classify(spor("M11"), 13).rule == Rule::Table4);   // trivial, r <= 13
  CHECK(classify(spor("M11"), 17).rule == Rule::R17Cyclic);  // trivial, r >= 17
}

TEST_CASE("classify rejects r = 2, non-primes, and invalid groups") {
  CHECK_THROWS_AS(classify(lie(Family::PSL, 3, 4), 2), ValidityError);
  CHECK_THROWS_AS(classify(alt(10), 9), ValidityError);
  CHECK_THROWS_AS(classify(alt(10), 1), ValidityError);
  CHECK_THROWS_AS(classify(lie(Family::PSL, 2, 2), 3), ValidityError);
  CHECK_THROWS_AS(r_valuation_of_order(alt(10), 4), ValidityError);
  CHECK_THROWS_AS(tilde_e(alt(5), 3, 1), std::invalid_argument);
}

TEST_CASE("tower-term sums") {
  CHECK(tilde_e(lie(Family::E8, 0, 2), 3, 2) == 5);
  CHECK(tilde_e(lie(Family::E8, 0, 4), 3, 1) == 5);
  CHECK(tilde_e(lie(Family::G2, 0, 5), 3, 2) == 1);
  CHECK(tilde_e(lie(Family::PSL, 2, 4), 3, 1) == 0);   // bound 2 < 3
  CHECK(tilde_e(lie(Family::PSp, 2, 19), 5, 2) == 0);  // 10 beyond bound 4
}

TEST_CASE("rank-two part of the order, remaining spot checks") {
  CHECK(r_valuation_of_order(alt(12), 5) == 2);
  CHECK(r_valuation_of_order(spor("M"), 17) == 1);
  CHECK(r_valuation_of_order(spor("M11"), 11) == 1);
  CHECK(r_valuation_of_order(spor("M11"), 7) == 0);
  CHECK(r_valuation_of_order(lie(Family::PSL, 2, 4), 7) == 0);
}

TEST_CASE("r = 2 route: abelian list and aliases") {
  auto v = classify_sylow2(lie(Family::PSL, 2, 4));
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.rule == Rule::Walter);
  REQUIRE(v.structure.size() == 1);
  CHECK(v.structure[0].order == 2);
  CHECK(v.structure[0].multiplicity == 2);

  v = classify_sylow2(alt(5));  // same group as PSL(2,4)
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK(v.structure[0].multiplicity == 2);

  CHECK(classify_sylow2(lie(Family::PSL, 2, 32)).structure[0].multiplicity == 5);
  CHECK(classify_sylow2(lie(Family::PSL, 2, 11)).kind == VerdictKind::Abelian);
  CHECK(classify_sylow2(lie(Family::PSL, 2, 13)).kind == VerdictKind::Abelian);
  CHECK(classify_sylow2(lie(Family::PSL, 2, 5)).structure[0].multiplicity == 2);

  CHECK(classify_sylow2(lie(Family::PSL, 2, 9)).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(alt(6)).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(lie(Family::PSL, 2, 7)).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(alt(8)).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(spor("M11")).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(lie(Family::OmegaOdd, 2, 3)).kind ==
        VerdictKind::Nonabelian);  // Omega(5,3) = PSp(4,3)

  v = classify_sylow2(spor("J1"));
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK_FALSE(v.structure_known);
  CHECK(v.structure.empty());

  v = classify_sylow2(lie(Family::Ree, 0, 27));
  CHECK(v.kind == VerdictKind::Abelian);
  CHECK_FALSE(v.structure_known);

  // Every simple group has even order: the verdict is never trivial.
  CHECK(classify_sylow2(spor("M")).kind == VerdictKind::Nonabelian);
  CHECK(classify_sylow2(alt(12)).kind == VerdictKind::Nonabelian);
}

TEST_CASE("elementary-abelian reports") {
  auto rep = is_elementary_abelian(lie(Family::F4, 0, 7), 5);  // t = 2
  CHECK_FALSE(rep.elementary);
  CHECK_FALSE(rep.always);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->modulus == 25);
  CHECK_FALSE(rep.witness->contains(7ul % 25));

  rep = is_elementary_abelian(lie(Family::PSp, 2, 19), 5);  // t = 1
  CHECK(rep.elementary);
  CHECK_FALSE(rep.always);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->contains(19ul));

  rep = is_elementary_abelian(lie(Family::PSL, 3, 4), 3);  // exception row
  CHECK(rep.elementary);
  CHECK(rep.always);
  CHECK_FALSE(rep.witness.has_value());

  rep = is_elementary_abelian(lie(Family::PSL, 2, 25), 5);  // defining char
  CHECK(rep.elementary);
  CHECK(rep.always);

  rep = is_elementary_abelian(alt(12), 5);
  CHECK(rep.elementary);
  CHECK(rep.always);

  rep = is_elementary_abelian(spor("M11"), 3);
  CHECK(rep.elementary);
  CHECK(rep.always);

  rep = is_elementary_abelian(alt(7), 11);  // trivial subgroup counts
  CHECK(rep.elementary);
  CHECK(rep.always);

  CHECK_THROWS_AS(is_elementary_abelian(lie(Family::PSU, 4, 2), 3),
                  ValidityError);
}
