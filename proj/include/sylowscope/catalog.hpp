// Order machinery for the group universe: per-family cyclotomic order profiles
// (d, h, m -> e multiplicities), two independent order computations, and the
// embedded sporadic reference data.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "sylowscope/groups.hpp"
#include "sylowscope/numtheory.hpp"

namespace sylow {

// |L(q)| = (1/d) * q^h * prod_m Phi_m(q)^e(m)
struct CycloProfile {
  Int d;
  unsigned h = 0;
  std::map<unsigned long, unsigned> e;  // finite support
};

// Multiplicity of Phi_x(q) in the order of the family at rank n (n ignored for
// exceptional families). Throws for Alternating/Sporadic.
unsigned e_L(Family fam, unsigned n, unsigned long x);

// Largest x that can have e_L(fam,n,x) > 0; bounds the m*r^j sums.
unsigned long degree_bound(Family fam, unsigned n);

CycloProfile cyclo_profile(const GroupId& g);

// Order via the cyclotomic profile. Throws std::logic_error if the division by
// d is inexact (would indicate a table-encoding bug).
Int order_cyclotomic(const GroupId& g);

// Independent oracle: plain products of q^i +- 1 per family, n!/2 for
// alternating, embedded data for sporadic. Shares nothing with the profiles.
Int order_closed_form(const GroupId& g);

// Full prime factorization of the order, assembled piecewise (per cyclotomic
// factor for Lie groups, per prime for n!/2, embedded for sporadic) so no
// large composite ever reaches the factoring engine.
FactoredInteger order_factored(const GroupId& g);

struct SporadicRecord {
  std::string name;
  std::vector<std::pair<unsigned long, unsigned>> order_factors;
  std::string order_decimal;           // reference value, cross-checked on load
  std::set<unsigned> abelian_odd_primes;  // printed "+" cells, r <= 13
};

const std::vector<SporadicRecord>& sporadic_table();
const SporadicRecord& sporadic_record(const std::string& name);

Int sporadic_order(const SporadicRecord& rec);
unsigned sporadic_valuation(const SporadicRecord& rec, unsigned long r);

}  // namespace sylow
