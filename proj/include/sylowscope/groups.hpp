// Group identifiers: the 16 Lie-type families, alternating groups, and the 26
// sporadic groups, with parsing, validation (simplicity and field-shape rules),
// and canonical rendering.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sylow {

enum class Family {
  Alternating,
  PSL,
  PSU,
  PSp,
  OmegaOdd,
  POmegaPlus,
  POmegaMinus,
  Suzuki,      // 2B2
  TriD4,       // 3D4
  G2,
  Ree,         // 2G2
  F4,
  TwistedF4,   // 2F4
  E6,
  TwistedE6,   // 2E6
  E7,
  E8,
  Sporadic,
};

// n is the family's rank parameter: A_n, PSL_n, PSU_n, PSp_{2n}, Omega_{2n+1},
// POmega{+-}_{2n}. The grammar takes the full subscript (so "PSp(8,3)" has n=4).
struct GroupId {
  Family family = Family::Alternating;
  unsigned n = 0;
  unsigned long q = 0;
  std::string sporadic;

  bool operator==(const GroupId&) const = default;
};

// Grammar violation (unknown tag, malformed arguments).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed but invalid: non-prime-power q, excluded non-simple group,
// field-shape violation for twisted families, unknown sporadic name.
struct ValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  unsigned long p = 0;
  unsigned f = 0;
};

bool is_prime_power(unsigned long q);
PrimePower q_decompose(unsigned long q);  // throws ValidityError if not a prime power

bool is_lie(Family f);
bool is_classical(Family f);  // ranked Lie families (PSL..POmegaMinus)
std::string_view family_tag(Family f);

// Accepts: A(n) | PSL(n,q) | PSU(n,q) | PSp(2n,q) | Omega(2n+1,q) |
// POmega+(2n,q) | POmega-(2n,q) | 2B2(q) | 3D4(q) | G2(q) | 2G2(q) | F4(q) |
// 2F4(q) | E6(q) | 2E6(q) | E7(q) | E8(q) | sporadic name. Family tags are
// case-insensitive, sporadic names exact; whitespace is ignored around tokens.
GroupId parse_group(std::string_view text);

std::string render(const GroupId& g);

// Checks an already-assembled id against the same rules parse_group enforces.
void validate(const GroupId& g);

}  // namespace sylow
