#include "sylowscope/sweeps.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sylowscope/catalog.hpp"
#include "sylowscope/classifier.hpp"
#include "sylowscope/numtheory.hpp"

namespace sylow {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kFailureSampleCap = 12;

struct Timer {
  Clock::time_point start = Clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void record_failure(SweepReport& rep, const std::string& msg) {
  ++rep.failures;
  if (rep.failure_samples.size() < kFailureSampleCap)
    rep.failure_samples.push_back(msg);
}

void check(SweepReport& rep, bool ok, const std::string& msg) {
  ++rep.checked;
  if (!ok) record_failure(rep, msg);
}

void merge(SweepReport& into, const SweepReport& part) {
  into.checked += part.checked;
  into.failures += part.failures;
  for (const auto& s : part.failure_samples)
    if (into.failure_samples.size() < kFailureSampleCap)
      into.failure_samples.push_back(s);
  for (const auto& f : part.findings) into.findings.push_back(f);
}

// Runs `body(part, slot)` over slots and merges the per-slot reports in slot
// order, so parallel and serial execution produce identical reports.
template <typename Body>
SweepReport run_slots(std::string suite, std::size_t slots, RunMode mode,
                      Body&& body) {
  Timer timer;
  std::vector<SweepReport> parts(slots);
  if (mode == RunMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long i = 0; i < static_cast<long>(slots); ++i)
      body(parts[static_cast<std::size_t>(i)], static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < slots; ++i) body(parts[i], i);
  }
  SweepReport rep;
  rep.suite = std::move(suite);
  for (const auto& p : parts) merge(rep, p);
  rep.seconds = timer.elapsed();
  return rep;
}

Int pow_ui(unsigned long base, unsigned long exp) {
  Int out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::string fam_str(Family fam) { return std::string(family_tag(fam)); }

}  // namespace

std::vector<GroupId> order_sweep_groups() {
  static const std::array<unsigned long, 12> qs = {2, 3,  4,  5,  7,  8,
                                                   9, 11, 13, 16, 25, 27};
  std::vector<GroupId> out;
  auto push_if_valid = [&](GroupId g) {
    try {
      validate(g);
    } catch (const ValidityError&) {
      return;
    }
    out.push_back(std::move(g));
  };
  for (Family fam : {Family::PSL, Family::PSU, Family::PSp, Family::OmegaOdd,
                     Family::POmegaPlus, Family::POmegaMinus})
    for (unsigned n = 2; n <= 12; ++n)
      for (unsigned long q : qs) push_if_valid(GroupId{fam, n, q});
  for (Family fam :
       {Family::Suzuki, Family::TriD4, Family::G2, Family::Ree, Family::F4,
        Family::TwistedF4, Family::E6, Family::TwistedE6, Family::E7,
        Family::E8})
    for (unsigned long q : qs) push_if_valid(GroupId{fam, 0, q});
  return out;
}

SweepReport sweep_cyclotomic(RunMode mode) {
  return run_slots("cyclotomic", 49, mode, [](SweepReport& part,
                                              std::size_t slot) {
    const unsigned long q = 2 + slot;
    const Int qz(q);
    for (unsigned long m = 1; m <= 72; ++m) {
      Int product = 1;
      for (unsigned long d = 1; d <= m; ++d)
        if (m % d == 0) product *= cyclotomic_eval(d, qz);
      check(part, product == pow_ui(q, m) - 1,
            "divisor product of cyclotomic values misses q^m - 1 at q=" +
                std::to_string(q) + ", m=" + std::to_string(m));
      const Int residue = cyclotomic_eval(m, qz) % qz;
      if (m == 1)
        check(part, residue == Int(q - 1),
              "Phi_1(q) is not -1 mod q at q=" + std::to_string(q));
      else
        check(part, residue == 1,
              "Phi_m(q) is not 1 mod q at q=" + std::to_string(q) +
                  ", m=" + std::to_string(m));
    }
  });
}

SweepReport sweep_valuation(RunMode mode) {
  SweepReport rep = run_slots(
      "valuation", 29, mode, [](SweepReport& part, std::size_t slot) {
        const unsigned long q = 2 + slot;
        for (unsigned long r : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul}) {
          if (q % r == 0) continue;
          const unsigned long m = mult_order(Int(q), Int(r));
          unsigned long x = m;
          for (int j = 1; j <= 3; ++j) {
            if (x > 200 / r) break;
            x *= r;
            check(part,
                  padic_val(r, cyclotomic_eval(x, Int(q))) == 1,
                  "v_r(Phi_{m r^j}(q)) != 1 at q=" + std::to_string(q) +
                      ", r=" + std::to_string(r) + ", j=" + std::to_string(j));
          }
        }
      });
  // The m = 2 towers obey the same first-power law as every other m; the
  // order-doubling case is sometimes described as carrying v_r = j instead,
  // which the computation does not bear out.
  const unsigned witness = padic_val(3, cyclotomic_eval(18, Int(2)));
  rep.findings.push_back(
      "m=2 towers follow the uniform first-power law: v_3(Phi_18(2)) = " +
      std::to_string(witness) + ", not 2 as an order-doubling special case "
      "would predict");
  if (witness != 1) {
    record_failure(rep, "v_3(Phi_18(2)) is not 1");
    ++rep.checked;
  }
  return rep;
}

SweepReport sweep_order_equality(RunMode mode) {
  const std::vector<GroupId> groups = order_sweep_groups();
  return run_slots("orders/equality", groups.size(), mode,
                   [&groups](SweepReport& part, std::size_t slot) {
                     const GroupId& g = groups[slot];
                     check(part, order_cyclotomic(g) == order_closed_form(g),
                           "order routes disagree for " + render(g));
                   });
}

SweepReport sweep_rpart(RunMode mode) {
  const std::vector<GroupId> groups = order_sweep_groups();
  return run_slots(
      "orders/r-part", groups.size(), mode,
      [&groups](SweepReport& part, std::size_t slot) {
        const GroupId& g = groups[slot];
        const Int order = order_closed_form(g);
        for (unsigned long r :
             {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
          check(part, r_valuation_of_order(g, Int(r)) == padic_val(r, order),
                "r-part valuation disagrees with the closed-form order for " +
                    render(g) + " at r=" + std::to_string(r));
        }
      });
}

namespace {

// Reference grid of tilde-e values for the exceptional families (suite
// "table3").  Columns follow kTable3Families; -1 marks a blank cell.  The one
// known erratum: the blank at (G2, m=2, r=3) computes to 1 and is adjudicated
// against the closed-form order valuation below.
constexpr std::array<Family, 10> kTable3Families = {
    Family::Suzuki, Family::TriD4,     Family::G2, Family::Ree, Family::F4,
    Family::TwistedF4, Family::E6, Family::TwistedE6, Family::E7, Family::E8};

struct Table3Row {
  unsigned long m;
  unsigned long r;
  std::array<int, 10> cells;
};

constexpr std::array<Table3Row, 7> kTable3Rows = {{
    {1, 3, {-1, 2, 1, -1, 2, -1, 4, 2, 4, 5}},
    {1, 5, {-1, -1, -1, -1, -1, -1, 1, -1, 1, 2}},
    {1, 7, {-1, -1, -1, -1, -1, -1, -1, -1, 1, 1}},
    {2, 3, {-1, 2, -1, -1, 2, 1, 2, 4, 4, 5}},
    {2, 5, {-1, -1, -1, -1, -1, -1, -1, 1, 1, 2}},
    {2, 7, {-1, -1, -1, -1, -1, -1, -1, -1, 1, 1}},
    {4, 5, {-1, -1, -1, -1, -1, -1, -1, -1, -1, 1}},
}};

// Smallest valid q for the family with mult_order(q, r) = m, or 0 when the
// family's q-shape admits none (then the cell is vacuously blank).
unsigned long table3_sample_q(Family fam, unsigned long r, unsigned long m) {
  for (unsigned long q = 2; q <= 600; ++q) {
    if (q % r == 0) continue;
    GroupId g{fam, 0, q};
    try {
      validate(g);
    } catch (const ValidityError&) {
      continue;
    }
    if (mult_order(Int(q), Int(r)) == m) return q;
  }
  return 0;
}

}  // namespace

SweepReport sweep_table3() {
  Timer timer;
  SweepReport rep;
  rep.suite = "table3";
  for (const Table3Row& row : kTable3Rows) {
    for (std::size_t col = 0; col < kTable3Families.size(); ++col) {
      const Family fam = kTable3Families[col];
      const int printed = row.cells[col];
      const bool erratum = fam == Family::G2 && row.m == 2 && row.r == 3;
      const unsigned long q = table3_sample_q(fam, row.r, row.m);
      if (q == 0) {
        if (printed >= 0)
          record_failure(rep, "no admissible q for a nonblank cell: " +
                                  fam_str(fam) + " at m=" +
                                  std::to_string(row.m) +
                                  ", r=" + std::to_string(row.r));
        else
          rep.findings.push_back("vacuous cell (q-shape admits no sample): " +
                                 fam_str(fam) + " at m=" +
                                 std::to_string(row.m) +
                                 ", r=" + std::to_string(row.r));
        continue;
      }
      const GroupId g{fam, 0, q};
      const unsigned expected =
          erratum ? 1u : static_cast<unsigned>(std::max(printed, 0));
      const unsigned computed = tilde_e(g, Int(row.r), row.m);
      check(rep, computed == expected,
            "tilde-e mismatch for " + fam_str(fam) + " at m=" +
                std::to_string(row.m) + ", r=" + std::to_string(row.r) +
                " (q=" + std::to_string(q) + "): computed " +
                std::to_string(computed) + ", reference " +
                std::to_string(expected));
      // Adjudicate every sampled cell against the closed-form order: tilde-e
      // is a summand of the full r-valuation, so a wrong cell shows up here.
      check(rep,
            r_valuation_of_order(g, Int(row.r)) ==
                padic_val(row.r, order_closed_form(g)),
            "order valuation disagrees at " + render(g) +
                ", r=" + std::to_string(row.r));
      if (erratum)
        rep.findings.push_back(
            "G2 at m=2, r=3: reference grid is blank but the value is 1 "
            "(order valuation at q=" + std::to_string(q) +
            " confirms); recorded as a reference erratum");
    }
  }
  rep.seconds = timer.elapsed();
  return rep;
}

namespace {

using Cell = std::pair<Family, unsigned>;  // (family, rank)

std::string cell_str(const Cell& c, unsigned long m) {
  return fam_str(c.first) +
         (c.second ? "(n=" + std::to_string(c.second) + ")" : "") +
         " at m=" + std::to_string(m);
}

// One adjudicated deviation between the computed C5 x C5 catalogue and the
// embedded reference lists.
struct Deviation {
  Cell cell;
  unsigned long m;
  bool computed_only;        // present honestly, absent from the reference
  unsigned long oracle_q;    // witness group parameter
  unsigned expect_copies;    // expected abelian structure at the witness
  unsigned expect_valuation; // expected v_5 of the witness order
};

const std::vector<Deviation> kExample312Deviations = {
    {{Family::PSU, 5}, 1, true, 11, 2, 2},
    {{Family::PSp, 2}, 2, true, 19, 2, 2},
    {{Family::POmegaMinus, 4}, 4, false, 2, 1, 1},
    {{Family::POmegaMinus, 6}, 4, false, 2, 3, 3},
};

}  // namespace

SweepReport sweep_example312() {
  Timer timer;
  SweepReport rep;
  rep.suite = "example312";

  // Reference lists: families whose Sylow 5-subgroup is C5 x C5 on the stated
  // residue classes of q, from the worked classification this suite replays.
  const std::map<unsigned long, std::set<Cell>> printed = {
      {1,
       {{Family::PSL, 3},
        {Family::PSU, 4},
        {Family::PSp, 2},
        {Family::OmegaOdd, 2},
        {Family::TriD4, 0},
        {Family::G2, 0}}},
      {2,
       {{Family::PSL, 4},
        {Family::PSL, 5},
        {Family::PSU, 3},
        {Family::OmegaOdd, 2},
        {Family::TriD4, 0},
        {Family::G2, 0}}},
      {4,
       {{Family::PSL, 8},
        {Family::PSL, 9},
        {Family::PSL, 10},
        {Family::PSL, 11},
        {Family::PSU, 8},
        {Family::PSU, 9},
        {Family::PSU, 10},
        {Family::PSU, 11},
        {Family::PSp, 4},
        {Family::PSp, 5},
        {Family::OmegaOdd, 4},
        {Family::OmegaOdd, 5},
        {Family::POmegaPlus, 4},
        {Family::POmegaPlus, 5},
        {Family::POmegaPlus, 6},
        {Family::POmegaMinus, 4},
        {Family::POmegaMinus, 5},
        {Family::POmegaMinus, 6},
        {Family::F4, 0},
        {Family::TwistedF4, 0},
        {Family::E6, 0},
        {Family::TwistedE6, 0},
        {Family::E7, 0}}}};
  const std::map<unsigned long, std::vector<unsigned long>> printed_residues = {
      {1, {6, 11, 16, 21}},
      {2, {4, 9, 14, 19, 24}},
      {4, {2, 3, 7, 8, 12, 13, 17, 18, 22, 23}}};

  const auto matches = enumerate_by_structure(
      5, 1, 2, EnumScope{false, true, false}, 12, RunMode::Serial);

  std::map<unsigned long, std::set<Cell>> computed;
  unsigned defining_matches = 0;
  for (const auto& em : matches) {
    if (em.kind == MatchKind::Defining) {
      ++defining_matches;
      check(rep, em.name == "PSL(2,25)" && em.defining_q == 25,
            "unexpected defining-characteristic match: " + em.name);
      continue;
    }
    check(rep, em.kind == MatchKind::Lie,
          "scope violation: non-Lie match in a Lie-only enumeration");
    if (em.kind != MatchKind::Lie) continue;
    computed[em.m].insert({em.family, em.n});
    check(rep, em.t_required == 0 && em.residues.has_value() &&
                   em.residues->modulus == 25,
          "s=1 match should carry residues mod 25: " +
              cell_str({em.family, em.n}, em.m));
    if (em.family == Family::TwistedF4)
      check(rep, !em.shape_note.empty(),
            "the 2F4 match must carry its q-shape constraint");
  }
  check(rep, defining_matches == 1,
        "expected exactly one defining-characteristic match");

  // Deviation registry, each entry adjudicated by classify + the closed-form
  // order before the reference diff is required to equal it.
  std::map<unsigned long, std::set<Cell>> expect_computed_only,
      expect_printed_only;
  for (const auto& dev : kExample312Deviations) {
    (dev.computed_only ? expect_computed_only : expect_printed_only)[dev.m]
        .insert(dev.cell);
    const GroupId g{dev.cell.first, dev.cell.second, dev.oracle_q};
    const SylowVerdict v = classify(g, 5);
    const bool verdict_ok = v.kind == VerdictKind::Abelian &&
                            v.structure.size() == 1 &&
                            v.structure[0].order == 5 &&
                            v.structure[0].multiplicity == dev.expect_copies;
    check(rep, verdict_ok,
          "deviation witness verdict mismatch at " + render(g));
    check(rep,
          padic_val(5, order_closed_form(g)) == dev.expect_valuation,
          "deviation witness valuation mismatch at " + render(g));
    std::ostringstream line;
    line << "deviation: " << cell_str(dev.cell, dev.m)
         << (dev.computed_only ? " satisfies the criterion but the reference "
                                 "list omits it"
                               : " fails the criterion but the reference list "
                                 "carries it")
         << "; classify(" << render(g) << ", 5) = C5"
         << (dev.expect_copies > 1 ? "^" + std::to_string(dev.expect_copies)
                                   : "")
         << ", v_5 = " << dev.expect_valuation;
    rep.findings.push_back(line.str());
  }

  for (unsigned long m : {1ul, 2ul, 4ul}) {
    std::set<Cell> computed_only, printed_only;
    const auto& comp = computed[m];
    const auto& prin = printed.at(m);
    std::set_difference(comp.begin(), comp.end(), prin.begin(), prin.end(),
                        std::inserter(computed_only, computed_only.end()));
    std::set_difference(prin.begin(), prin.end(), comp.begin(), comp.end(),
                        std::inserter(printed_only, printed_only.end()));
    check(rep, computed_only == expect_computed_only[m],
          "family diff (computed-only) is not the registered deviation set "
          "at m=" + std::to_string(m));
    check(rep, printed_only == expect_printed_only[m],
          "family diff (reference-only) is not the registered deviation set "
          "at m=" + std::to_string(m));
  }

  // Residue classes: the computed sets drop reference residues whose fifth
  // powers ramify (v_5(x^m - 1) = 2 puts the Sylow factors at order 25).
  const std::map<unsigned long, std::vector<unsigned long>> expect_dropped = {
      {1, {}}, {2, {24}}, {4, {7, 18}}};
  for (unsigned long m : {1ul, 2ul, 4ul}) {
    const ResidueClassSet honest = lifted_residues(5, m);
    std::vector<unsigned long> dropped;
    for (unsigned long x : printed_residues.at(m))
      if (!honest.contains(x)) dropped.push_back(x);
    std::vector<unsigned long> added;
    for (unsigned long x : honest.residues)
      if (std::find(printed_residues.at(m).begin(),
                    printed_residues.at(m).end(),
                    x) == printed_residues.at(m).end())
        added.push_back(x);
    check(rep, added.empty(),
          "computed residue class outside the reference set at m=" +
              std::to_string(m));
    check(rep, dropped == expect_dropped.at(m),
          "dropped reference residues are not the registered set at m=" +
              std::to_string(m));
    for (unsigned long x : dropped) {
      const unsigned val = padic_val(5, pow_ui(x, m) - 1);
      check(rep, val == 2,
            "dropped residue " + std::to_string(x) + " at m=" +
                std::to_string(m) + " should have v_5(x^m - 1) = 2");
      rep.findings.push_back(
          "deviation: residue " + std::to_string(x) + " mod 25 excluded at "
          "m=" + std::to_string(m) + " (v_5(" + std::to_string(x) + "^" +
          std::to_string(m) + " - 1) = " + std::to_string(val) +
          ", so the Sylow factors have order 25); the reference includes it");
    }
  }

  // Spot-check one dropped residue end to end: a group with q in that class
  // gets C25 factors, not C5.
  const SylowVerdict ramified = classify(GroupId{Family::PSL, 4, 149}, 5);
  check(rep,
        ramified.kind == VerdictKind::Abelian &&
            ramified.structure.size() == 1 &&
            ramified.structure[0].order == 25 &&
            ramified.structure[0].multiplicity == 2,
        "PSL(4,149) should have Sylow 5-structure C25 x C25");

  rep.seconds = timer.elapsed();
  return rep;
}

namespace {

struct SporadicReferenceRow {
  const char* name;
  std::set<unsigned> abelian;  // printed "+" cells among r = 3,5,7,11,13
};

const std::vector<SporadicReferenceRow> kSporadicReference = {
    {"M11", {3, 5, 7}},    {"M12", {5, 7}},        {"J1", {3, 5, 7, 11}},
    {"M22", {3, 5, 7, 11}}, {"J2", {5, 7}},        {"M23", {3, 5, 7, 11}},
    {"HS", {3, 7, 11}},    {"J3", {5}},            {"M24", {5, 7, 11}},
    {"McL", {7, 11}},      {"He", {5}},            {"Ru", {11, 13}},
    {"Suz", {7, 11, 13}},  {"ON", {5, 11}},        {"Co3", {7, 11}},
    {"Co2", {7, 11}},      {"Fi22", {5, 7, 11}},   {"HN", {7, 11}},
    {"Ly", {7, 11}},       {"Th", {7, 13}},        {"Fi23", {5, 7, 11}},
    {"Co1", {7, 11, 13}},  {"J4", {5, 7}},         {"Fi24'", {5, 11, 13}},
    {"B", {7, 11, 13}},    {"M", {11}}};

}  // namespace

SweepReport sweep_sporadic() {
  Timer timer;
  SweepReport rep;
  rep.suite = "sporadic";
  const auto& table = sporadic_table();
  check(rep, table.size() == kSporadicReference.size(),
        "sporadic table size mismatch");
  for (std::size_t i = 0; i < table.size() && i < kSporadicReference.size();
       ++i) {
    const SporadicRecord& rec = table[i];
    const SporadicReferenceRow& ref = kSporadicReference[i];
    check(rep, rec.name == ref.name,
          "sporadic table order mismatch at index " + std::to_string(i));
    check(rep, rec.abelian_odd_primes == ref.abelian,
          "abelian-prime set mismatch for " + rec.name);
    const GroupId g{Family::Sporadic, 0, 0, rec.name};
    for (const auto& [p, exp] : rec.order_factors) {
      if (p < 17) continue;
      check(rep, exp == 1,
            "prime >= 17 with exponent > 1 in the order of " + rec.name);
      const SylowVerdict v = classify(g, Int(p));
      check(rep,
            v.kind == VerdictKind::Abelian && v.structure.size() == 1 &&
                v.structure[0].order == Int(p) &&
                v.structure[0].multiplicity == 1 &&
                v.rule == Rule::R17Cyclic,
            "Sylow p-subgroup for p >= 17 should be C_p in " + rec.name);
    }
    for (unsigned r : {3u, 5u, 7u, 11u, 13u}) {
      const unsigned val = sporadic_valuation(rec, r);
      const SylowVerdict v = classify(g, Int(r));
      if (val == 0) {
        check(rep, v.kind == VerdictKind::Trivial,
              "expected a trivial Sylow subgroup for " + rec.name + " at r=" +
                  std::to_string(r));
        if (ref.abelian.count(r))
          rep.findings.push_back(
              rec.name + ": reference grid prints '+' at r=" +
              std::to_string(r) +
              " but r does not divide the order; classified trivial");
        continue;
      }
      const bool marked = ref.abelian.count(r) != 0;
      check(rep, (v.kind == VerdictKind::Abelian) == marked,
            "abelian verdict disagrees with the reference grid for " +
                rec.name + " at r=" + std::to_string(r));
      if (!marked && val <= 2)
        rep.findings.push_back(
            rec.name + ": reference grid is blank at r=" + std::to_string(r) +
            " although the order valuation is " + std::to_string(val) +
            " (a group of order r or r^2 is abelian a priori); the verdict "
            "follows the grid as embedded");
      if (v.kind == VerdictKind::Abelian) {
        check(rep,
              v.structure.size() == 1 && v.structure[0].order == Int(r) &&
                  v.structure[0].multiplicity == val &&
                  v.rule == Rule::Table4,
              "abelian sporadic structure should be C_r^" +
                  std::to_string(val) + " for " + rec.name + " at r=" +
                  std::to_string(r));
        const ElementaryReport el = is_elementary_abelian(g, Int(r));
        check(rep, el.elementary && el.always,
              "abelian sporadic Sylow subgroups must be elementary abelian (" +
                  rec.name + ", r=" + std::to_string(r) + ")");
      }
    }
  }
  rep.seconds = timer.elapsed();
  return rep;
}

SweepReport sweep_alternating() {
  Timer timer;
  SweepReport rep;
  rep.suite = "alternating";
  for (unsigned n = 5; n <= 200; ++n) {
    const GroupId g{Family::Alternating, n, 0};
    const Int order = order_closed_form(g);
    for (unsigned long r : {3ul, 5ul, 7ul, 11ul, 13ul}) {
      const unsigned vr = padic_val(r, order);
      check(rep, r_valuation_of_order(g, Int(r)) == vr,
            "alternating valuation disagrees with v_r(n!/2) at n=" +
                std::to_string(n) + ", r=" + std::to_string(r));
      const SylowVerdict v = classify(g, Int(r));
      const bool expect_nonabelian = n >= r * r;
      check(rep, (v.kind == VerdictKind::Nonabelian) == expect_nonabelian,
            "abelian threshold n < r^2 violated at n=" + std::to_string(n) +
                ", r=" + std::to_string(r));
      const bool is_crsq = v.kind == VerdictKind::Abelian &&
                           v.structure.size() == 1 &&
                           v.structure[0].order == Int(r) &&
                           v.structure[0].multiplicity == 2;
      check(rep, is_crsq == (2 * r <= n && n < 3 * r),
            "C_r x C_r window is not [2r, 3r) at n=" + std::to_string(n) +
                ", r=" + std::to_string(r));
      if (v.kind == VerdictKind::Abelian) {
        check(rep,
              v.structure.size() == 1 && v.structure[0].order == Int(r) &&
                  v.structure[0].multiplicity == n / r && n / r == vr,
              "abelian alternating structure should be C_r^floor(n/r) at n=" +
                  std::to_string(n) + ", r=" + std::to_string(r));
        check(rep, v.rule == (n / r == 2 ? Rule::Cor2_2 : Rule::Thm2_1),
              "rule tag mismatch at n=" + std::to_string(n) +
                  ", r=" + std::to_string(r));
      } else {
        check(rep, v.rule == Rule::Thm2_1 && (v.kind != VerdictKind::Trivial ||
                                              vr == 0),
              "trivial/nonabelian bookkeeping at n=" + std::to_string(n) +
                  ", r=" + std::to_string(r));
      }
    }
  }
  rep.seconds = timer.elapsed();
  return rep;
}

SweepReport sweep_exceptions() {
  Timer timer;
  SweepReport rep;
  rep.suite = "exceptions";
  for (unsigned long q = 2; q <= 200; ++q) {
    if (!is_prime_power(q)) continue;
    // PSL(3,q): the r=3 exception lives on q = 1 mod 3, split mod 9.
    if (q % 3 == 1) {
      const SylowVerdict v = classify(GroupId{Family::PSL, 3, q}, 3);
      check(rep, v.rule == Rule::ExcPSL3 && v.m_tag == MTag::Value &&
                     v.m == 1,
            "PSL(3,q) at r=3 should take the exceptional route for q=" +
                std::to_string(q));
      if (q % 9 == 4 || q % 9 == 7) {
        check(rep,
              v.kind == VerdictKind::Abelian && v.t == 1 &&
                  v.structure.size() == 1 && v.structure[0].order == 3 &&
                  v.structure[0].multiplicity == 2,
              "PSL(3,q) should be abelian C3^2 for q=" + std::to_string(q));
        const ElementaryReport el =
            is_elementary_abelian(GroupId{Family::PSL, 3, q}, 3);
        check(rep, el.elementary && el.always,
              "exceptional abelian PSL(3,q) is elementary without residue "
              "conditions (q=" + std::to_string(q) + ")");
      } else {
        check(rep, q % 9 == 1 && v.kind == VerdictKind::Nonabelian && v.t >= 2,
              "PSL(3,q) should be nonabelian for q=" + std::to_string(q));
      }
    }
    // PSU(3,q): dual exception on q = 2 mod 3, split mod 9.
    if (q % 3 == 2 && q > 2) {
      const SylowVerdict v = classify(GroupId{Family::PSU, 3, q}, 3);
      check(rep, v.rule == Rule::ExcPSU3 && v.m_tag == MTag::Value &&
                     v.m == 2,
            "PSU(3,q) at r=3 should take the exceptional route for q=" +
                std::to_string(q));
      if (q % 9 == 2 || q % 9 == 5) {
        check(rep,
              v.kind == VerdictKind::Abelian && v.t == 1 &&
                  v.structure.size() == 1 && v.structure[0].order == 3 &&
                  v.structure[0].multiplicity == 2,
              "PSU(3,q) should be abelian C3^2 for q=" + std::to_string(q));
      } else {
        check(rep, q % 9 == 8 && v.kind == VerdictKind::Nonabelian && v.t >= 2,
              "PSU(3,q) should be nonabelian for q=" + std::to_string(q));
      }
    }
    // Defining characteristic is never exceptional and never abelian here.
    if (q % 3 == 0) {
      check(rep,
            classify(GroupId{Family::PSL, 3, q}, 3).kind ==
                VerdictKind::Nonabelian,
            "PSL(3,3^k) should have a nonabelian Sylow 3-subgroup");
    }
  }
  rep.seconds = timer.elapsed();
  return rep;
}

}  // namespace sylow
