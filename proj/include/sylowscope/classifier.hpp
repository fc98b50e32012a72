// Decision procedures: the r-part-of-order law and the Sylow r-subgroup
// classification across all families, including the r = 2 case.
#pragma once

#include <optional>
#include <vector>

#include "sylowscope/catalog.hpp"
#include "sylowscope/groups.hpp"
#include "sylowscope/numtheory.hpp"

namespace sylow {

enum class VerdictKind { Trivial, Abelian, Nonabelian };

// Output contract: rule tags identifying which classification rule fired.
// Serialized names are part of the external interface and must not change.
enum class Rule {
  Thm2_1,     // alternating abelian-iff-n<r^2 criterion
  Cor2_2,     // alternating C_r x C_r window 2r <= n < 3r
  Thm3_7,     // defining characteristic: abelian iff PSL(2,q)
  Thm3_8,     // cross-characteristic nonabelian criterion e_L(mr) != 0
  Cor3_9,     // cross-characteristic abelian structure C_{r^t}^{e_L(m)}
  ExcPSL3,    // PSL(3,q) at r=3, m=1: abelian iff t=1
  ExcPSU3,    // PSU(3,q) at r=3, m=2: abelian iff t=1
  Table4,     // sporadic lookup, r <= 13
  R17Cyclic,  // sporadic r >= 17: Sylow subgroup is cyclic of order r
  Walter,     // r = 2 classification
};

const char* rule_name(Rule rule);

// How the multiplicative-order parameter applies to a verdict.
enum class MTag {
  Value,     // cross-characteristic: m = mult_order(q, r)
  Defining,  // r is the defining characteristic (r | q)
  Absent,    // not a Lie cross-characteristic situation
};

struct CyclicFactor {
  Int order;              // r^s
  unsigned multiplicity;  // number of copies
};

struct SylowVerdict {
  Int r;
  MTag m_tag = MTag::Absent;
  unsigned long m = 0;  // meaningful iff m_tag == Value
  unsigned t = 0;       // r-adic valuation of q^m - 1 when m_tag == Value
  VerdictKind kind = VerdictKind::Trivial;
  std::vector<CyclicFactor> structure;  // empty for trivial and nonabelian
  bool structure_known = true;  // false: abelian but structure not reported
  Rule rule = Rule::Walter;
};

// Sum over j >= 1 of v_r(Phi_{m r^j}(q)) * e_L(m r^j), truncated once
// m r^j exceeds the family degree bound (all later terms vanish).
unsigned tilde_e(const GroupId& g, const Int& r, unsigned long m);

// v_r(|g|), computed from the cyclotomic profile (Lie), Legendre's formula
// (alternating), or embedded data (sporadic) — never by factoring the order.
unsigned r_valuation_of_order(const GroupId& g, const Int& r);

SylowVerdict classify(const GroupId& g, const Int& r);

SylowVerdict classify_sylow2(const GroupId& g);

struct ElementaryReport {
  bool elementary = false;  // every cyclic factor has order exactly r
  bool always = false;      // true when no residue condition is involved
  // Present for Lie cross-characteristic non-exception verdicts with modest r:
  // q mod r^2 lies in this set iff t = 1.
  std::optional<ResidueClassSet> witness;
};

// Precondition: classify(g, r).kind is trivial or abelian.
ElementaryReport is_elementary_abelian(const GroupId& g, const Int& r);

}  // namespace sylow
