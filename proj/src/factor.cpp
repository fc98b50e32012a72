#include "sylowscope/numtheory.hpp"

#include <algorithm>
#include <cstdint>

namespace sylow {

namespace {

constexpr unsigned long kSieveBound = 1000000;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kSieveBound, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i < kSieveBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j < kSieveBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin(const Int& n, const Int& a) {
  Int d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Int x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Below this bound the witness set {2,...,37} is known to be exact.
const Int kDeterministicBound("3317044064679887385961981");

Int pollard_brent(const Int& n) {
  // Brent's cycle variant with batched gcds; deterministic parameter sweep.
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1, q = 1, ys = 0;
    unsigned long r = 1;
    const unsigned long batch = 128;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && d == 1; k += batch) {
        ys = y;
        unsigned long lim = std::min(batch, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          Int diff = x - y;
          q = q * abs(diff) % n;
        }
        d = gcd(q, n);
      }
      r *= 2;
    }
    if (d == n) {
      // Batch overshot; replay one step at a time from the saved point.
      do {
        step(ys);
        Int diff = x - ys;
        d = gcd(abs(diff), n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Int d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  if (n < kDeterministicBound) {
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
      if (!miller_rabin(n, Int(a))) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

FactoredInteger factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: argument must be positive");
  FactoredInteger result;
  if (n == 1) return result;
  for (unsigned long p : small_primes()) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned long e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Int(p).get_mpz_t());
      result.factors[Int(p)] = static_cast<unsigned>(e);
    }
    if (n == 1) return result;
    if (Int(p) * p > n) break;  // remaining cofactor is prime
  }
  factor_into(n, result.factors);
  return result;
}

Int FactoredInteger::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

std::string FactoredInteger::to_string() const {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : factors) {
    if (!s.empty()) s += "·";
    s += p.get_str();
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

}  // namespace sylow
