// Exact integer number theory: factoring, cyclotomic evaluation, multiplicative
// orders, valuations, primitive prime divisors, and residue-class lifting mod r^2.
#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylow {

using Int = mpz_class;

// Prime -> exponent map. value() and factorize() round-trip exactly.
struct FactoredInteger {
  std::map<Int, unsigned> factors;

  Int value() const;
  std::string to_string() const;  // "2^4·3^2·5·11"; "1" for the empty map
};

// Deterministic for inputs below 3.3e24 (fixed Miller-Rabin witness set);
// BPSW-based beyond that, where this artifact never needs certainty anyway.
bool is_prime(const Int& n);

// Trial division over a sieve of primes < 10^6, then primality check and
// Pollard-Brent rho on what remains. Throws std::invalid_argument for n < 1.
FactoredInteger factorize(Int n);

int mobius(unsigned long n);
unsigned long euler_phi(unsigned long n);

// Phi_m(q), evaluated as prod_{d|m} (q^d - 1)^mu(m/d) with exact divisions.
Int cyclotomic_eval(unsigned long m, const Int& q);

// Largest s with r^s | n.
unsigned padic_val(const Int& r, const Int& n);
unsigned padic_val(unsigned long r, const Int& n);

// Smallest m >= 1 with q^m = 1 mod r; divides r-1. Throws if r | q.
unsigned long mult_order(const Int& q, const Int& r);

// All primes r with mult_order(q, r) = m, i.e. r | q^m - 1 but r | q^i - 1
// for no i < m. Computed by factoring Phi_m(q) and filtering by order.
std::vector<Int> zsigmondy_primes(const Int& q, unsigned long m);

// prod over those primes r of r^padic_val(r, Phi_m(q)); 1 if the set is empty.
Int zsigmondy_part(const Int& q, unsigned long m);

// Smallest generator of the multiplicative group mod r.
unsigned long primitive_root(unsigned long r);

// All residues mod r of multiplicative order exactly m; cardinality phi(m).
// Throws std::invalid_argument unless m | r-1.
std::vector<unsigned long> order_m_residues(unsigned long r, unsigned long m);

struct ResidueClassSet {
  unsigned long modulus = 0;
  std::vector<unsigned long> residues;  // strictly increasing, < modulus

  bool contains(unsigned long x) const;
  bool contains(const Int& x) const;
};

// Residues x mod r^2 such that x has order m mod r and r exactly divides
// x^m - 1. Each order-m residue mod r has r lifts mod r^2; the one lift whose
// order mod r^2 is still m (so r^2 | x^m - 1) is excluded, leaving
// phi(m)*(r-1) residues. Membership of q mod r^2 is equivalent to
// mult_order(q,r) = m and padic_val(r, q^m - 1) = 1.
ResidueClassSet lifted_residues(unsigned long r, unsigned long m);

}  // namespace sylow
