// Inverse queries: given a target abelian type C_{r^s}^k, produce the simple
// groups whose Sylow r-subgroup matches — symbolically as congruence
// conditions on q, plus alternating ranges and sporadic names.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sylowscope/classifier.hpp"

namespace sylow {

struct StructureSpec {
  unsigned long r;  // odd prime
  unsigned s;       // cyclic factors have order r^s
  unsigned k;       // number of factors
};

// Accepts "C<base>" and "C<base>^<k>" where base = r^s is an odd prime power.
StructureSpec parse_structure(const std::string& text);

enum class MatchKind { Defining, Lie, Alternating, Sporadic };

struct EnumMatch {
  MatchKind kind;
  Family family = Family::Sporadic;  // meaningful for Lie and Defining
  unsigned n = 0;                    // rank; 0 for exceptional families
  unsigned long m = 0;               // governing multiplicative order (Lie)
  std::optional<ResidueClassSet> residues;  // on q (Lie cross-characteristic)
  unsigned t_required = 0;  // if nonzero, side condition v_r(q^m - 1) = t_required
  unsigned alt_lo = 0, alt_hi = 0;   // alternating degree range [lo, hi]
  std::string name;                  // sporadic name, or rendered defining match
  unsigned long defining_q = 0;      // the unique q for a defining-char match
  std::string shape_note;            // extra constraint, e.g. "q=2^(2k+1), k>=1"
  std::vector<std::string> notes;    // rule tags
};

struct EnumScope {
  bool alternating = false;
  bool lie = false;
  bool sporadic = false;
};

// How the enumeration grid is executed; both orders produce identical output.
enum class RunMode { Serial, Parallel };

std::vector<EnumMatch> enumerate_by_structure(unsigned long r, unsigned s,
                                              unsigned k, EnumScope scope,
                                              unsigned rank_bound,
                                              RunMode mode = RunMode::Parallel);

struct CongruenceReport {
  unsigned long m = 0;
  ResidueClassSet residues;  // mod r^2 for elementary-abelian membership
  unsigned e_m = 0;          // target structure is C_r^{e_m} when e_mr = 0
  unsigned e_mr = 0;         // abelian criterion value; nonzero means nonabelian
  bool exception = false;    // PSL(3)/PSU(3) at r=3: special mod-9 set
};

CongruenceReport congruence_conditions(Family fam, unsigned n, unsigned long r,
                                       unsigned long m);

// Concrete groups with q <= q_bound satisfying the match's conditions
// (validity-checked; twisted shape constraints applied).
std::vector<GroupId> instantiate(const EnumMatch& match, unsigned long q_bound);

// Stable sort key used for the deterministic merge; exposed for tests.
bool enum_match_less(const EnumMatch& a, const EnumMatch& b);

}  // namespace sylow
