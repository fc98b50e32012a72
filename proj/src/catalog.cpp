#include "sylowscope/catalog.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace sylow {

namespace {

unsigned long lcm2(unsigned long x) { return std::lcm(2ul, x); }

// Multiplicity grids for the ten exceptional families, indexed by m.
const std::map<unsigned long, unsigned>& exceptional_e(Family fam) {
  static const std::map<unsigned long, unsigned> suzuki{{1, 1}, {4, 1}};
  static const std::map<unsigned long, unsigned> tri_d4{
      {1, 2}, {2, 2}, {3, 2}, {6, 2}, {12, 1}};
  static const std::map<unsigned long, unsigned> g2{
      {1, 2}, {2, 2}, {3, 1}, {6, 1}};
  static const std::map<unsigned long, unsigned> ree{{1, 1}, {2, 1}, {6, 1}};
  static const std::map<unsigned long, unsigned> f4{
      {1, 4}, {2, 4}, {3, 2}, {4, 2}, {6, 2}, {8, 1}, {12, 1}};
  static const std::map<unsigned long, unsigned> twisted_f4{
      {1, 2}, {2, 2}, {4, 2}, {6, 1}, {12, 1}};
  static const std::map<unsigned long, unsigned> e6{
      {1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2},
      {8, 1}, {9, 1}, {12, 1}};
  static const std::map<unsigned long, unsigned> twisted_e6{
      {1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3}, {8, 1},
      {10, 1}, {12, 1}, {18, 1}};
  static const std::map<unsigned long, unsigned> e7{
      {1, 7}, {2, 7}, {3, 3}, {4, 2}, {5, 1}, {6, 3}, {7, 1},
      {8, 1}, {9, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}};
  static const std::map<unsigned long, unsigned> e8{
      {1, 8},  {2, 8},  {3, 4},  {4, 4},  {5, 2},  {6, 4},
      {7, 1},  {8, 2},  {9, 1},  {10, 2}, {12, 2}, {14, 1},
      {15, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1}};
  switch (fam) {
    case Family::Suzuki: return suzuki;
    case Family::TriD4: return tri_d4;
    case Family::G2: return g2;
    case Family::Ree: return ree;
    case Family::F4: return f4;
    case Family::TwistedF4: return twisted_f4;
    case Family::E6: return e6;
    case Family::TwistedE6: return twisted_e6;
    case Family::E7: return e7;
    case Family::E8: return e8;
    default: throw std::logic_error("not an exceptional family");
  }
}

unsigned exceptional_h(Family fam) {
  switch (fam) {
    case Family::Suzuki: return 2;
    case Family::TriD4: return 12;
    case Family::G2: return 6;
    case Family::Ree: return 3;
    case Family::F4: return 24;
    case Family::TwistedF4: return 12;
    case Family::E6: return 36;
    case Family::TwistedE6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    default: throw std::logic_error("not an exceptional family");
  }
}

Int pow_ui(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Int exact_div(const Int& num, const Int& den, const char* what) {
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
              den.get_mpz_t());
  if (rem != 0) throw std::logic_error(std::string("inexact division in ") + what);
  return q;
}

}  // namespace

unsigned e_L(Family fam, unsigned n, unsigned long x) {
  if (x == 0) throw std::invalid_argument("e_L: x must be positive");
  switch (fam) {
    case Family::PSL:
      return x == 1 ? n - 1 : n / x;
    case Family::PSU:
      if (x == 2) return n - 1;
      if (x > 2 && x % 4 == 2) return (2u * n) / x;
      return n / lcm2(x);
    case Family::PSp:
    case Family::OmegaOdd:
      return (2u * n) / lcm2(x);
    case Family::POmegaPlus:
      if (n % x != 0 && (2u * n) % x == 0) return (2u * n) / x - 1;
      return (2u * n) / lcm2(x);
    case Family::POmegaMinus:
      if (n % x == 0) return (2u * n) / lcm2(x) - 1;
      return (2u * n) / lcm2(x);
    case Family::Alternating:
    case Family::Sporadic:
      throw std::invalid_argument("e_L: defined only for Lie-type families");
    default: {
      const auto& grid = exceptional_e(fam);
      auto it = grid.find(x);
      return it == grid.end() ? 0u : it->second;
    }
  }
}

unsigned long degree_bound(Family fam, unsigned n) {
  switch (fam) {
    case Family::PSL: return n;
    case Family::PSU:
    case Family::PSp:
    case Family::OmegaOdd:
    case Family::POmegaPlus:
    case Family::POmegaMinus: return 2ul * n;
    case Family::Suzuki: return 4;
    case Family::TriD4: return 12;
    case Family::G2: return 6;
    case Family::Ree: return 6;
    case Family::F4: return 12;
    case Family::TwistedF4: return 12;
    case Family::E6: return 12;
    case Family::TwistedE6: return 18;
    case Family::E7: return 18;
    case Family::E8: return 30;
    default:
      throw std::invalid_argument("degree_bound: defined only for Lie-type families");
  }
}

CycloProfile cyclo_profile(const GroupId& g) {
  if (!is_lie(g.family))
    throw ValidityError("cyclotomic order profile exists only for groups of Lie type");
  validate(g);
  const Int q(g.q);
  const unsigned n = g.n;
  CycloProfile p;
  switch (g.family) {
    case Family::PSL:
      p.d = gcd(Int(n), q - 1);
      p.h = n * (n - 1) / 2;
      break;
    case Family::PSU:
      p.d = gcd(Int(n), q + 1);
      p.h = n * (n - 1) / 2;
      break;
    case Family::PSp:
    case Family::OmegaOdd:
      p.d = gcd(Int(2), q - 1);
      p.h = n * n;
      break;
    case Family::POmegaPlus:
      p.d = gcd(Int(4), pow_ui(q, n) - 1);
      p.h = n * (n - 1);
      break;
    case Family::POmegaMinus:
      p.d = gcd(Int(4), pow_ui(q, n) + 1);
      p.h = n * (n - 1);
      break;
    case Family::E6:
      p.d = gcd(Int(3), q - 1);
      p.h = exceptional_h(g.family);
      break;
    case Family::TwistedE6:
      p.d = gcd(Int(3), q + 1);
      p.h = exceptional_h(g.family);
      break;
    case Family::E7:
      p.d = gcd(Int(2), q - 1);
      p.h = exceptional_h(g.family);
      break;
    default:
      p.d = 1;
      p.h = exceptional_h(g.family);
      break;
  }
  for (unsigned long x = 1; x <= degree_bound(g.family, n); ++x) {
    unsigned e = e_L(g.family, n, x);
    if (e > 0) p.e[x] = e;
  }
  return p;
}

Int order_cyclotomic(const GroupId& g) {
  CycloProfile p = cyclo_profile(g);
  Int num = pow_ui(Int(g.q), p.h);
  for (const auto& [m, e] : p.e)
    num *= pow_ui(cyclotomic_eval(m, Int(g.q)), e);
  return exact_div(num, p.d, "order_cyclotomic");
}

Int order_closed_form(const GroupId& g) {
  validate(g);
  const Int q(g.q);
  const unsigned n = g.n;
  switch (g.family) {
    case Family::Alternating: {
      Int f;
      mpz_fac_ui(f.get_mpz_t(), n);
      return f / 2;
    }
    case Family::Sporadic:
      return sporadic_order(sporadic_record(g.sporadic));
    case Family::PSL: {
      Int o = pow_ui(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) o *= pow_ui(q, i) - 1;
      return exact_div(o, gcd(Int(n), q - 1), "order_closed_form");
    }
    case Family::PSU: {
      Int o = pow_ui(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i)
        o *= pow_ui(q, i) - (i % 2 == 0 ? 1 : -1);
      return exact_div(o, gcd(Int(n), q + 1), "order_closed_form");
    }
    case Family::PSp:
    case Family::OmegaOdd: {
      Int o = pow_ui(q, n * n);
      for (unsigned i = 1; i <= n; ++i) o *= pow_ui(q, 2 * i) - 1;
      return exact_div(o, gcd(Int(2), q - 1), "order_closed_form");
    }
    case Family::POmegaPlus: {
      Int o = pow_ui(q, n * (n - 1)) * (pow_ui(q, n) - 1);
      for (unsigned i = 1; i + 1 <= n; ++i) o *= pow_ui(q, 2 * i) - 1;
      return exact_div(o, gcd(Int(4), pow_ui(q, n) - 1), "order_closed_form");
    }
    case Family::POmegaMinus: {
      Int o = pow_ui(q, n * (n - 1)) * (pow_ui(q, n) + 1);
      for (unsigned i = 1; i + 1 <= n; ++i) o *= pow_ui(q, 2 * i) - 1;
      return exact_div(o, gcd(Int(4), pow_ui(q, n) + 1), "order_closed_form");
    }
    case Family::Suzuki:
      return pow_ui(q, 2) * (pow_ui(q, 2) + 1) * (q - 1);
    case Family::TriD4:
      return pow_ui(q, 12) * (pow_ui(q, 8) + pow_ui(q, 4) + 1) *
             (pow_ui(q, 6) - 1) * (pow_ui(q, 2) - 1);
    case Family::G2:
      return pow_ui(q, 6) * (pow_ui(q, 6) - 1) * (pow_ui(q, 2) - 1);
    case Family::Ree:
      return pow_ui(q, 3) * (pow_ui(q, 3) + 1) * (q - 1);
    case Family::F4:
      return pow_ui(q, 24) * (pow_ui(q, 12) - 1) * (pow_ui(q, 8) - 1) *
             (pow_ui(q, 6) - 1) * (pow_ui(q, 2) - 1);
    case Family::TwistedF4:
      return pow_ui(q, 12) * (pow_ui(q, 6) + 1) * (pow_ui(q, 4) - 1) *
             (pow_ui(q, 3) + 1) * (q - 1);
    case Family::E6: {
      Int o = pow_ui(q, 36) * (pow_ui(q, 12) - 1) * (pow_ui(q, 9) - 1) *
              (pow_ui(q, 8) - 1) * (pow_ui(q, 6) - 1) * (pow_ui(q, 5) - 1) *
              (pow_ui(q, 2) - 1);
      return exact_div(o, gcd(Int(3), q - 1), "order_closed_form");
    }
    case Family::TwistedE6: {
      Int o = pow_ui(q, 36) * (pow_ui(q, 12) - 1) * (pow_ui(q, 9) + 1) *
              (pow_ui(q, 8) - 1) * (pow_ui(q, 6) - 1) * (pow_ui(q, 5) + 1) *
              (pow_ui(q, 2) - 1);
      return exact_div(o, gcd(Int(3), q + 1), "order_closed_form");
    }
    case Family::E7: {
      Int o = pow_ui(q, 63);
      for (unsigned i : {18u, 14u, 12u, 10u, 8u, 6u, 2u})
        o *= pow_ui(q, i) - 1;
      return exact_div(o, gcd(Int(2), q - 1), "order_closed_form");
    }
    case Family::E8: {
      Int o = pow_ui(q, 120);
      for (unsigned i : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u})
        o *= pow_ui(q, i) - 1;
      return o;
    }
  }
  throw std::logic_error("order_closed_form: unhandled family");
}

FactoredInteger order_factored(const GroupId& g) {
  validate(g);
  FactoredInteger out;
  if (g.family == Family::Sporadic) {
    for (const auto& [p, e] : sporadic_record(g.sporadic).order_factors)
      out.factors[Int(p)] = e;
    return out;
  }
  if (g.family == Family::Alternating) {
    for (unsigned long p = 2; p <= g.n; ++p) {
      if (!is_prime(Int(p))) continue;
      unsigned e = 0;
      for (unsigned long pk = p; pk <= g.n; pk *= p) {
        e += static_cast<unsigned>(g.n / pk);
        if (pk > g.n / p) break;
      }
      if (p == 2) --e;  // n!/2, and v_2(n!) >= 3 for n >= 5
      if (e > 0) out.factors[Int(p)] = e;
    }
    return out;
  }
  const CycloProfile prof = cyclo_profile(g);
  const PrimePower pp = q_decompose(g.q);
  out.factors[Int(pp.p)] = pp.f * prof.h;
  for (const auto& [x, e] : prof.e) {
    const FactoredInteger piece = factorize(cyclotomic_eval(x, Int(g.q)));
    for (const auto& [p, k] : piece.factors) out.factors[p] += e * k;
  }
  for (const auto& [p, k] : factorize(prof.d).factors) {
    auto it = out.factors.find(p);
    if (it == out.factors.end() || it->second < k)
      throw std::logic_error("order_factored: d does not divide the product");
    it->second -= k;
    if (it->second == 0) out.factors.erase(it);
  }
  return out;
}

Int sporadic_order(const SporadicRecord& rec) {
  Int o = 1;
  for (const auto& [p, e] : rec.order_factors) o *= pow_ui(Int(p), e);
  return o;
}

unsigned sporadic_valuation(const SporadicRecord& rec, unsigned long r) {
  for (const auto& [p, e] : rec.order_factors)
    if (p == r) return e;
  return 0;
}

}  // namespace sylow
