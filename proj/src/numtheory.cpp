#include "sylowscope/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace sylow {

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    d.push_back(i);
    if (i != n / i) d.push_back(n / i);
  }
  std::sort(d.begin(), d.end());
  return d;
}

Int pow_int(const Int& q, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

Int powm(const Int& base, const Int& exp, const Int& mod) {
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

unsigned long powm_ul(unsigned long base, unsigned long exp, unsigned long mod) {
  Int r = powm(Int(base), Int(exp), Int(mod));
  return r.get_ui();
}

}  // namespace

int mobius(unsigned long n) {
  if (n == 0) throw std::invalid_argument("mobius: argument must be positive");
  int sign = 1;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

unsigned long euler_phi(unsigned long n) {
  if (n == 0) throw std::invalid_argument("euler_phi: argument must be positive");
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Int cyclotomic_eval(unsigned long m, const Int& q) {
  if (m == 0) throw std::invalid_argument("cyclotomic_eval: m must be positive");
  if (q < 2) throw std::invalid_argument("cyclotomic_eval: q must be >= 2");
  Int num = 1, den = 1;
  for (unsigned long d : divisors(m)) {
    int mu = mobius(m / d);
    if (mu == 0) continue;
    Int term = pow_int(q, d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  Int quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (remainder != 0) throw std::logic_error("cyclotomic_eval: inexact division");
  return quotient;
}

unsigned padic_val(const Int& r, const Int& n) {
  if (r < 2 || !is_prime(r)) throw std::invalid_argument("padic_val: r must be prime");
  if (n < 1) throw std::invalid_argument("padic_val: n must be positive");
  Int rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), r.get_mpz_t()));
}

unsigned padic_val(unsigned long r, const Int& n) { return padic_val(Int(r), n); }

unsigned long mult_order(const Int& q, const Int& r) {
  if (!is_prime(r)) throw std::invalid_argument("mult_order: r must be prime");
  if (mpz_divisible_p(q.get_mpz_t(), r.get_mpz_t()))
    throw std::invalid_argument("mult_order: r divides q");
  Int d = r - 1;
  FactoredInteger f = factorize(d);
  for (const auto& [p, e] : f.factors) {
    for (unsigned i = 0; i < e; ++i) {
      Int cand = d / p;
      if (powm(q, cand, r) == 1)
        d = cand;
      else
        break;
    }
  }
  if (!d.fits_ulong_p()) throw std::overflow_error("mult_order: order exceeds machine range");
  return d.get_ui();
}

std::vector<Int> zsigmondy_primes(const Int& q, unsigned long m) {
  Int phi = cyclotomic_eval(m, q);
  std::vector<Int> primes;
  for (const auto& [p, e] : factorize(phi).factors) {
    if (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) continue;
    if (mult_order(q, p) == m) primes.push_back(p);
  }
  return primes;
}

Int zsigmondy_part(const Int& q, unsigned long m) {
  Int phi = cyclotomic_eval(m, q);
  Int z = 1;
  for (const Int& p : zsigmondy_primes(q, m)) z *= pow_int(p, padic_val(p, phi));
  return z;
}

unsigned long primitive_root(unsigned long r) {
  if (r < 3 || !is_prime(Int(r))) throw std::invalid_argument("primitive_root: r must be an odd prime");
  FactoredInteger f = factorize(Int(r - 1));
  for (unsigned long g = 2; g < r; ++g) {
    bool generator = true;
    for (const auto& [p, e] : f.factors) {
      unsigned long cofactor = (r - 1) / p.get_ui();
      if (powm_ul(g, cofactor, r) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

std::vector<unsigned long> order_m_residues(unsigned long r, unsigned long m) {
  if (r < 3 || !is_prime(Int(r))) throw std::invalid_argument("order_m_residues: r must be an odd prime");
  if (m == 0 || (r - 1) % m != 0)
    throw std::invalid_argument("order_m_residues: m does not divide r-1");
  unsigned long e = primitive_root(r);
  unsigned long step = (r - 1) / m;
  std::vector<unsigned long> out;
  for (unsigned long i = 1; i <= m; ++i) {
    if (std::gcd(i, m) != 1) continue;
    out.push_back(powm_ul(e, step * i, r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ResidueClassSet::contains(unsigned long x) const {
  return std::binary_search(residues.begin(), residues.end(), x % modulus);
}

bool ResidueClassSet::contains(const Int& x) const {
  Int red = x % modulus;
  return contains(red.get_ui());
}

ResidueClassSet lifted_residues(unsigned long r, unsigned long m) {
  if (r > (1ul << 31)) throw std::invalid_argument("lifted_residues: r too large to materialize");
  ResidueClassSet set;
  set.modulus = r * r;
  for (unsigned long base : order_m_residues(r, m)) {
    for (unsigned long k = 0; k < r; ++k) {
      unsigned long x = (base + k * r) % set.modulus;
      // Skip the one lift of exact order m mod r^2: for those q, r^2 | q^m - 1.
      if (powm_ul(x, m, set.modulus) == 1) continue;
      set.residues.push_back(x);
    }
  }
  std::sort(set.residues.begin(), set.residues.end());
  return set;
}

}  // namespace sylow
