#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "sylowscope/enumerator.hpp"

using namespace sylow;

namespace {

// Compact fingerprint of a match for order-sensitive comparisons.
std::string fingerprint(const EnumMatch& em) {
  std::string out;
  switch (em.kind) {
    case MatchKind::Defining: out = "def "; break;
    case MatchKind::Lie: out = "lie "; break;
    case MatchKind::Alternating: out = "alt "; break;
    case MatchKind::Sporadic: out = "spo "; break;
  }
  if (em.kind == MatchKind::Sporadic) {
    out += em.name;
    return out;
  }
  if (em.kind == MatchKind::Alternating) {
    out += std::to_string(em.alt_lo) + ".." + std::to_string(em.alt_hi);
    return out;
  }
  out += std::string(family_tag(em.family)) + " n" + std::to_string(em.n) +
         " m" + std::to_string(em.m);
  if (em.residues) {
    out += " mod" + std::to_string(em.residues->modulus) + " {";
    for (unsigned long x : em.residues->residues)
      out += std::to_string(x) + ",";
    out += "}";
  }
  if (em.t_required) out += " t" + std::to_string(em.t_required);
  if (!em.shape_note.empty()) out += " [" + em.shape_note + "]";
  for (const auto& note : em.notes) out += " " + note;
  if (em.kind == MatchKind::Defining) out += " " + em.name;
  return out;
}

std::vector<std::string> fingerprints(const std::vector<EnumMatch>& ms) {
  std::vector<std::string> out;
  for (const auto& em : ms) out.push_back(fingerprint(em));
  return out;
}

}  // namespace

TEST_CASE("structure strings parse to (r, s, k)") {
  StructureSpec s = parse_structure("C5^2");
  CHECK(s.r == 5);
  CHECK(s.s == 1);
  CHECK(s.k == 2);

  s = parse_structure("C25");
  CHECK(s.r == 5);
  CHECK(s.s == 2);
  CHECK(s.k == 1);

  s = parse_structure("C27^3");
  CHECK(s.r == 3);
  CHECK(s.s == 3);
  CHECK(s.k == 3);

  s = parse_structure("  C 7 ^ 4 ");
  CHECK(s.r == 7);
  CHECK(s.k == 4);

  CHECK_THROWS_AS(parse_structure(""), ParseError);
  CHECK_THROWS_AS(parse_structure("5^2"), ParseError);
  CHECK_THROWS_AS(parse_structure("Cx"), ParseError);
  CHECK_THROWS_AS(parse_structure("C^2"), ParseError);
  CHECK_THROWS_AS(parse_structure("C5^"), ParseError);
  CHECK_THROWS_AS(parse_structure("C5^0"), ParseError);
  CHECK_THROWS_AS(parse_structure("C99999999999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_structure("C12"), ValidityError);  // not a prime power
  CHECK_THROWS_AS(parse_structure("C1"), ValidityError);
}

TEST_CASE("enumeration rejects r = 2 and degenerate targets") {
  EnumScope all{true, true, true};
  CHECK_THROWS_AS(enumerate_by_structure(2, 3, 2, all, 12), ValidityError);
  CHECK_THROWS_AS(enumerate_by_structure(9, 1, 2, all, 12), ValidityError);
  CHECK_THROWS_AS(enumerate_by_structure(5, 0, 2, all, 12), ValidityError);
  CHECK_THROWS_AS(enumerate_by_structure(5, 1, 0, all, 12), ValidityError);
}

TEST_CASE("C3 x C3 across the Lie grid, including the exception rows") {
  const auto ms =
      enumerate_by_structure(3, 1, 2, EnumScope{false, true, false}, 5,
                             RunMode::Serial);
  const std::vector<std::string> expect = {
      "lie Omega n2 m1 mod9 {4,7,} Cor3.9",
      "lie Omega n2 m2 mod9 {2,5,} Cor3.9",
      "def PSL n2 m0 Thm3.7 PSL(2,9)",
      "lie PSL n3 m1 mod9 {4,7,} Exc-PSL3",
      "lie PSL n4 m2 mod9 {2,5,} Cor3.9",
      "lie PSL n5 m2 mod9 {2,5,} Cor3.9",
      "lie PSU n3 m2 mod9 {2,5,} Exc-PSU3",
      "lie PSU n4 m1 mod9 {4,7,} Cor3.9",
      "lie PSU n5 m1 mod9 {4,7,} Cor3.9",
      "lie PSp n2 m1 mod9 {4,7,} Cor3.9",
      "lie PSp n2 m2 mod9 {2,5,} Cor3.9",
  };
  CHECK(fingerprints(ms) == expect);
  CHECK(std::is_sorted(ms.begin(), ms.end(), enum_match_less));

  // Raising the rank bound adds nothing: larger ranks have e(1), e(2) > 2.
  const auto wide =
      enumerate_by_structure(3, 1, 2, EnumScope{false, true, false}, 12,
                             RunMode::Serial);
  CHECK(fingerprints(wide) == expect);
}

TEST_CASE("alternating windows") {
  auto ms = enumerate_by_structure(5, 1, 2, EnumScope{true, false, false}, 12);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].kind == MatchKind::Alternating);
  CHECK(ms[0].alt_lo == 10);
  CHECK(ms[0].alt_hi == 14);
  CHECK(ms[0].notes == std::vector<std::string>{"Cor2.2"});

  ms = enumerate_by_structure(3, 1, 2, EnumScope{true, false, false}, 12);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].alt_lo == 6);
  CHECK(ms[0].alt_hi == 8);  // capped by the abelian threshold n < 9

  ms = enumerate_by_structure(3, 1, 1, EnumScope{true, false, false}, 12);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0].alt_lo == 5);  // simplicity floor, not k*r = 3
  CHECK(ms[0].alt_hi == 5);
  CHECK(ms[0].notes == std::vector<std::string>{"Thm2.1"});

  // k >= r cannot happen below the abelian threshold.
  CHECK(enumerate_by_structure(3, 1, 3, EnumScope{true, false, false}, 12)
            .empty());
  // No alternating matches for non-elementary targets.
  CHECK(enumerate_by_structure(3, 2, 1, EnumScope{true, false, false}, 12)
            .empty());
}

TEST_CASE("sporadic matches take the grid and the valuation together") {
  const auto ms =
      enumerate_by_structure(7, 1, 1, EnumScope{false, false, true}, 12);
  std::vector<std::string> names;
  for (const auto& em : ms) {
    CHECK(em.kind == MatchKind::Sporadic);
    CHECK(em.notes == std::vector<std::string>{"Table4"});
    names.push_back(em.name);
  }
  const std::vector<std::string> expect = {
      "Co2", "Co3", "Fi22", "Fi23", "HN", "HS", "J1", "J2",
      "J4",  "Ly",  "M22",  "M23",  "M24", "McL", "Suz"};
  CHECK(names == expect);

  // M11/M12 print "+" at 7 but 7 does not divide their orders; Th, Co1, B
  // have valuation 2 at 7 and so match k = 2 instead.
  const auto squares =
      enumerate_by_structure(7, 1, 2, EnumScope{false, false, true}, 12);
  std::vector<std::string> square_names;
  for (const auto& em : squares) square_names.push_back(em.name);
  CHECK(square_names == std::vector<std::string>{"B", "Co1", "Th"});

  // r >= 17: cyclic targets only, from the first-power rule.
  const auto r19 =
      enumerate_by_structure(19, 1, 1, EnumScope{false, false, true}, 12);
  std::set<std::string> r19_names;
  for (const auto& em : r19) {
    CHECK(em.notes == std::vector<std::string>{"R17-cyclic"});
    r19_names.insert(em.name);
  }
  CHECK(r19_names ==
        std::set<std::string>{"J1", "J3", "ON", "HN", "Th", "B", "M"});
}

TEST_CASE("congruence conditions per family cell") {
  auto rep = congruence_conditions(Family::PSL, 4, 5, 2);
  CHECK(rep.m == 2);
  CHECK(rep.e_m == 2);
  CHECK(rep.e_mr == 0);
  CHECK_FALSE(rep.exception);
  CHECK(rep.residues.modulus == 25);
  CHECK(rep.residues.residues == std::vector<unsigned long>{4, 9, 14, 19});

  rep = congruence_conditions(Family::PSL, 3, 3, 1);
  CHECK(rep.exception);
  CHECK(rep.e_m == 2);
  CHECK(rep.e_mr == 1);
  CHECK(rep.residues.modulus == 9);
  CHECK(rep.residues.residues == std::vector<unsigned long>{4, 7});

  rep = congruence_conditions(Family::E8, 0, 7, 1);
  CHECK(rep.e_m == 8);
  CHECK(rep.e_mr == 1);  // nonabelian: e(7) = 1 in the E8 support
  CHECK(rep.residues.modulus == 49);
  CHECK(rep.residues.residues ==
        std::vector<unsigned long>{8, 15, 22, 29, 36, 43});

  CHECK_THROWS_AS(congruence_conditions(Family::Alternating, 5, 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(congruence_conditions(Family::PSL, 4, 5, 3),
                  std::invalid_argument);  // 3 does not divide r - 1 = 4
  CHECK_THROWS_AS(congruence_conditions(Family::POmegaPlus, 3, 5, 1),
                  ValidityError);  // rank below the family minimum
  CHECK_THROWS_AS(congruence_conditions(Family::PSL, 4, 4, 1), ValidityError);
}

TEST_CASE("instantiation materializes concrete groups") {
  // Defining-characteristic match: the single group, if within the bound.
  const auto c9 =
      enumerate_by_structure(3, 1, 2, EnumScope{false, true, false}, 5,
                             RunMode::Serial);
  const EnumMatch* def = nullptr;
  const EnumMatch* exc = nullptr;
  for (const auto& em : c9) {
    if (em.kind == MatchKind::Defining) def = &em;
    if (em.kind == MatchKind::Lie && em.family == Family::PSL && em.n == 3)
      exc = &em;
  }
  REQUIRE(def != nullptr);
  REQUIRE(exc != nullptr);
  CHECK(instantiate(*def, 8).empty());
  auto groups = instantiate(*def, 9);
  REQUIRE(groups.size() == 1);
  CHECK(render(groups[0]) == "PSL(2,9)");

  // Exception match: prime powers in {4,7} mod 9 (22 is not a prime power).
  groups = instantiate(*exc, 30);
  std::vector<unsigned long> qs;
  for (const auto& g : groups) qs.push_back(g.q);
  CHECK(qs == std::vector<unsigned long>{4, 7, 13, 16, 25});

  // Every instantiated group classifies to the target structure.
  for (const auto& em : c9)
    for (const GroupId& g : instantiate(em, 60)) {
      const SylowVerdict v = classify(g, 3);
      CHECK(v.kind == VerdictKind::Abelian);
      REQUIRE(v.structure.size() == 1);
      CHECK(v.structure[0].order == 3);
      CHECK(v.structure[0].multiplicity == 2);
    }
}

TEST_CASE("non-elementary targets carry explicit valuation side conditions") {
  const auto ms =
      enumerate_by_structure(5, 2, 2, EnumScope{false, true, false}, 2,
                             RunMode::Serial);
  CHECK(!ms.empty());
  const EnumMatch* psp = nullptr;
  bool saw_defining = false;
  bool saw_twisted_f4_low_m = false;
  for (const auto& em : ms) {
    if (em.kind == MatchKind::Defining) saw_defining = true;
    if (em.family == Family::PSp && em.m == 1) psp = &em;
    if (em.family == Family::TwistedF4 && em.m < 4) saw_twisted_f4_low_m = true;
    if (em.kind == MatchKind::Lie) CHECK(em.t_required == 2);
  }
  CHECK_FALSE(saw_defining);  // defining-characteristic Sylow is elementary
  // 2^(2k+1) is never 1 or 4 mod 5, so the shape filter must drop the
  // twisted-F4 candidates at m = 1 and m = 2 (m = 4 survives).
  CHECK_FALSE(saw_twisted_f4_low_m);
  REQUIRE(psp != nullptr);
  CHECK(psp->residues.has_value());
  CHECK(psp->residues->modulus == 5);
  CHECK(psp->residues->residues == std::vector<unsigned long>{1});
  CHECK(psp->t_required == 2);

  auto groups = instantiate(*psp, 200);
  std::vector<unsigned long> qs;
  for (const auto& g : groups) qs.push_back(g.q);
  CHECK(qs == std::vector<unsigned long>{101, 151});
  for (const auto& g : groups) {
    const SylowVerdict v = classify(g, 5);
    CHECK(v.kind == VerdictKind::Abelian);
    REQUIRE(v.structure.size() == 1);
    CHECK(v.structure[0].order == 25);
    CHECK(v.structure[0].multiplicity == 2);
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  for (unsigned long r : {3ul, 5ul, 7ul}) {
    const auto serial = enumerate_by_structure(
        r, 1, 2, EnumScope{true, true, true}, 12, RunMode::Serial);
    const auto parallel = enumerate_by_structure(
        r, 1, 2, EnumScope{true, true, true}, 12, RunMode::Parallel);
    CHECK(fingerprints(serial) == fingerprints(parallel));
  }
}

TEST_CASE("soundness: every instantiation classifies to the target") {
  // Desk-scale version of the checked-sweep property: all matches of
  // C5^2 over the Lie scope, instantiated up to q = 500.
  const auto ms =
      enumerate_by_structure(5, 1, 2, EnumScope{false, true, false}, 12,
                             RunMode::Serial);
  std::size_t instantiated = 0;
  for (const auto& em : ms)
    for (const GroupId& g : instantiate(em, 500)) {
      const SylowVerdict v = classify(g, 5);
      CHECK(v.kind == VerdictKind::Abelian);
      REQUIRE(v.structure.size() == 1);
      CHECK(v.structure[0].order == 5);
      CHECK(v.structure[0].multiplicity == 2);
      ++instantiated;
    }
  CHECK(instantiated > 100);
}

TEST_CASE("completeness at desk scale: classification implies coverage") {
  // Any valid Lie group with n <= 8, q <= 100 whose Sylow 5-subgroup is
  // C5 x C5 must be matched by some enumerated family entry.
  const auto ms =
      enumerate_by_structure(5, 1, 2, EnumScope{false, true, false}, 8,
                             RunMode::Serial);
  auto covered = [&](const GroupId& g) {
    for (const auto& em : ms) {
      if (em.kind == MatchKind::Defining) {
        if (g.family == Family::PSL && g.n == 2 && g.q == em.defining_q)
          return true;
        continue;
      }
      if (em.family != g.family || em.n != g.n) continue;
      if (em.residues && !em.residues->contains(g.q)) continue;
      if (em.t_required) {
        Int qm = 1;
        for (unsigned long i = 0; i < em.m; ++i) qm *= g.q;
        if (padic_val(Int(5), qm - 1) != em.t_required) continue;
      }
      return true;
    }
    return false;
  };

  std::vector<Family> classical = {Family::PSL,        Family::PSU,
                                   Family::PSp,        Family::OmegaOdd,
                                   Family::POmegaPlus, Family::POmegaMinus};
  std::vector<GroupId> universe;
  for (Family f : classical)
    for (unsigned n = 2; n <= 8; ++n)
      for (unsigned long q = 2; q <= 100; ++q)
        universe.push_back(GroupId{f, n, q, ""});
  for (Family f : {Family::Suzuki, Family::TriD4, Family::G2, Family::Ree,
                   Family::F4, Family::TwistedF4, Family::E6,
                   Family::TwistedE6, Family::E7, Family::E8})
    for (unsigned long q = 2; q <= 100; ++q)
      universe.push_back(GroupId{f, 0, q, ""});

  std::size_t hits = 0;
  for (const GroupId& g : universe) {
    try {
      validate(g);
    } catch (const ValidityError&) {
      continue;
    }
    SylowVerdict v = classify(g, 5);
    const bool is_target = v.kind == VerdictKind::Abelian &&
                           v.structure.size() == 1 &&
                           v.structure[0].order == 5 &&
                           v.structure[0].multiplicity == 2;
    if (!is_target) continue;
    ++hits;
    CHECK(covered(g));
  }
  CHECK(hits > 50);
}
