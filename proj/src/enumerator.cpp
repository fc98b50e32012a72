#include "sylowscope/enumerator.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sylow {

namespace {

Int pow_ui(const Int& base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

struct ShapeInfo {
  unsigned long p;
  const char* note;
};

std::optional<ShapeInfo> shape_constraint(Family f) {
  switch (f) {
    case Family::Suzuki: return ShapeInfo{2, "q=2^(2k+1), k>=1"};
    case Family::TwistedF4: return ShapeInfo{2, "q=2^(2k+1), k>=1"};
    case Family::Ree: return ShapeInfo{3, "q=3^(2k+1), k>=1"};
    default: return std::nullopt;
  }
}

// Does some q = p^(2k+1) with k >= 1 satisfy mult_order(q,r) = m and
// v_r(q^m - 1) = s?  Decided exactly by walking the finite orbit of
// p^(2k+1) mod r^(s+1); the orbit is the coset p^3 * <p^2>.
bool shape_satisfiable(unsigned long p, unsigned long r, unsigned s,
                       unsigned long m) {
  if (p % r == 0) return false;
  const Int modulus = pow_ui(Int(r), s + 1);
  const Int rs = pow_ui(Int(r), s);
  const auto order_set = order_m_residues(r, m);
  const Int step = Int(p) * p % modulus;
  Int x = step * p % modulus;  // p^3
  const Int start = x;
  // Orbit size divides the unit-group order r^s * (r-1); cap defensively.
  for (unsigned long guard = 0; guard < 2000000; ++guard) {
    unsigned long x_mod_r = mpz_fdiv_ui(x.get_mpz_t(), r);
    if (std::binary_search(order_set.begin(), order_set.end(), x_mod_r)) {
      Int y;
      mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), m, modulus.get_mpz_t());
      Int z = (y + modulus - 1) % modulus;
      if (z != 0 && z % rs == 0) return true;  // v_r(q^m - 1) is exactly s
    }
    x = x * step % modulus;
    if (x == start) return false;
  }
  return true;  // orbit walk truncated: keep the match rather than drop it
}

void append_note_tags(EnumMatch& em, std::initializer_list<const char*> tags) {
  for (const char* t : tags) em.notes.emplace_back(t);
}

std::vector<EnumMatch> cell_matches(Family fam, unsigned n, unsigned long r,
                                    unsigned s, unsigned k) {
  std::vector<EnumMatch> out;
  const auto shape = shape_constraint(fam);
  if (shape && shape->p == r) return out;  // r is the defining characteristic
  const unsigned long bound = degree_bound(fam, n);
  for (unsigned long m = 1; m <= bound && m <= r - 1; ++m) {
    if ((r - 1) % m != 0) continue;
    // The two exceptional subcases are appended separately with their own
    // mod-9 conditions; the generic criterion does not govern them.
    if (fam == Family::PSL && n == 3 && r == 3 && m == 1) continue;
    if (fam == Family::PSU && n == 3 && r == 3 && m == 2) continue;
    if (e_L(fam, n, m) != k) continue;
    const unsigned e_mr = m > bound / r ? 0 : e_L(fam, n, m * r);
    if (e_mr != 0) continue;
    EnumMatch em;
    em.kind = MatchKind::Lie;
    em.family = fam;
    em.n = n;
    em.m = m;
    if (s == 1) {
      em.residues = lifted_residues(r, m);
    } else {
      em.residues = ResidueClassSet{r, order_m_residues(r, m)};
      em.t_required = s;
    }
    append_note_tags(em, {"Cor3.9"});
    if (shape) {
      em.shape_note = shape->note;
      em.notes.emplace_back("shape-filtered");
      if (!shape_satisfiable(shape->p, r, s, m)) continue;
    }
    out.push_back(std::move(em));
  }
  return out;
}

std::vector<std::pair<Family, unsigned>> grid_cells(unsigned rank_bound) {
  std::vector<std::pair<Family, unsigned>> cells;
  auto ranked = [&](Family f, unsigned lo) {
    for (unsigned n = lo; n <= rank_bound; ++n) cells.emplace_back(f, n);
  };
  ranked(Family::PSL, 2);
  ranked(Family::PSU, 3);
  ranked(Family::PSp, 2);
  ranked(Family::OmegaOdd, 2);
  ranked(Family::POmegaPlus, 4);
  ranked(Family::POmegaMinus, 4);
  for (Family f : {Family::Suzuki, Family::TriD4, Family::G2, Family::Ree,
                   Family::F4, Family::TwistedF4, Family::E6, Family::TwistedE6,
                   Family::E7, Family::E8})
    cells.emplace_back(f, 0);
  return cells;
}

std::tuple<std::string_view, unsigned, unsigned long, std::string_view>
sort_key(const EnumMatch& em) {
  if (em.kind == MatchKind::Sporadic)
    return {family_tag(Family::Sporadic), 0, 0, em.name};
  unsigned n = em.kind == MatchKind::Alternating ? em.alt_lo : em.n;
  return {family_tag(em.family), n, em.m, em.name};
}

}  // namespace

bool enum_match_less(const EnumMatch& a, const EnumMatch& b) {
  return sort_key(a) < sort_key(b);
}

StructureSpec parse_structure(const std::string& text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  if (compact.empty() || compact[0] != 'C')
    throw ParseError("structure must look like C5, C5^2, or C25^2");
  const auto caret = compact.find('^');
  const std::string base_text = compact.substr(1, caret == std::string::npos
                                                      ? std::string::npos
                                                      : caret - 1);
  if (base_text.empty() ||
      !std::all_of(base_text.begin(), base_text.end(),
                   [](unsigned char c) { return std::isdigit(c); }))
    throw ParseError("structure base must be a number: C<r^s>[^<k>]");
  unsigned long base = 0;
  unsigned long k = 1;
  try {
    base = std::stoul(base_text);
    if (caret != std::string::npos) {
      const std::string k_text = compact.substr(caret + 1);
      if (k_text.empty() ||
          !std::all_of(k_text.begin(), k_text.end(),
                       [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("structure multiplicity must be a number after '^'");
      k = std::stoul(k_text);
    }
  } catch (const std::out_of_range&) {
    throw ParseError("structure number out of range");
  }
  if (k == 0) throw ParseError("structure multiplicity must be positive");
  PrimePower pp = q_decompose(base);  // throws ValidityError if not a prime power
  return StructureSpec{pp.p, pp.f, static_cast<unsigned>(k)};
}

std::vector<EnumMatch> enumerate_by_structure(unsigned long r, unsigned s,
                                              unsigned k, EnumScope scope,
                                              unsigned rank_bound,
                                              RunMode mode) {
  if (r < 3 || !is_prime(Int(r)))
    throw ValidityError("enumeration requires an odd prime r");
  if (s == 0 || k == 0) throw ValidityError("target structure must be nontrivial");
  if (r > std::numeric_limits<unsigned long>::max() / r)
    throw ValidityError("r too large to enumerate residues mod r^2");

  std::vector<EnumMatch> out;

  if (scope.alternating && s == 1) {
    // A_n matches C_r^k exactly on the window where floor(n/r) = k, capped by
    // the abelian threshold n < r^2 and the simplicity floor n >= 5.
    if (k < r) {
      unsigned long lo = std::max<unsigned long>(5, k * r);
      unsigned long hi = std::min<unsigned long>((k + 1) * r - 1, r * r - 1);
      if (lo <= hi) {
        EnumMatch em;
        em.kind = MatchKind::Alternating;
        em.alt_lo = static_cast<unsigned>(lo);
        em.alt_hi = static_cast<unsigned>(hi);
        append_note_tags(em, {k == 2 ? "Cor2.2" : "Thm2.1"});
        out.push_back(std::move(em));
      }
    }
  }

  if (scope.lie) {
    const auto cells = grid_cells(rank_bound);
    std::vector<std::vector<EnumMatch>> slots(cells.size());
    if (mode == RunMode::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
      for (long i = 0; i < static_cast<long>(cells.size()); ++i)
        slots[i] = cell_matches(cells[i].first, cells[i].second, r, s, k);
    } else {
      for (std::size_t i = 0; i < cells.size(); ++i)
        slots[i] = cell_matches(cells[i].first, cells[i].second, r, s, k);
    }
    for (auto& slot : slots)
      for (auto& em : slot) out.push_back(std::move(em));

    if (r == 3 && s == 1 && k == 2 && rank_bound >= 3) {
      EnumMatch psl;
      psl.kind = MatchKind::Lie;
      psl.family = Family::PSL;
      psl.n = 3;
      psl.m = 1;
      psl.residues = ResidueClassSet{9, {4, 7}};
      append_note_tags(psl, {"Exc-PSL3"});
      out.push_back(std::move(psl));
      EnumMatch psu;
      psu.kind = MatchKind::Lie;
      psu.family = Family::PSU;
      psu.n = 3;
      psu.m = 2;
      psu.residues = ResidueClassSet{9, {2, 5}};
      append_note_tags(psu, {"Exc-PSU3"});
      out.push_back(std::move(psu));
    }

    if (s == 1) {
      // Defining characteristic: the only abelian case is PSL(2, q) with
      // q = r^k, excluding the non-simple PSL(2,3).
      bool fits = true;
      unsigned long q = 1;
      for (unsigned i = 0; i < k; ++i) {
        if (q > std::numeric_limits<unsigned long>::max() / r) {
          fits = false;
          break;
        }
        q *= r;
      }
      if (fits && q != 3) {
        EnumMatch em;
        em.kind = MatchKind::Defining;
        em.family = Family::PSL;
        em.n = 2;
        em.defining_q = q;
        em.name = render(GroupId{Family::PSL, 2, q, ""});
        append_note_tags(em, {"Thm3.7"});
        out.push_back(std::move(em));
      }
    }
  }

  if (scope.sporadic && s == 1) {
    for (const auto& rec : sporadic_table()) {
      bool matches = false;
      const char* tag = nullptr;
      if (r <= 13 && rec.abelian_odd_primes.count(static_cast<unsigned>(r)) &&
          sporadic_valuation(rec, r) == k) {
        matches = true;
        tag = "Table4";
      } else if (r >= 17 && k == 1 && sporadic_valuation(rec, r) == 1) {
        matches = true;
        tag = "R17-cyclic";
      }
      if (!matches) continue;
      EnumMatch em;
      em.kind = MatchKind::Sporadic;
      em.name = rec.name;
      append_note_tags(em, {tag});
      out.push_back(std::move(em));
    }
  }

  std::stable_sort(out.begin(), out.end(), enum_match_less);
  return out;
}

CongruenceReport congruence_conditions(Family fam, unsigned n, unsigned long r,
                                       unsigned long m) {
  if (!is_lie(fam))
    throw std::invalid_argument("congruence conditions apply to Lie-type families");
  if (is_classical(fam)) {
    unsigned min_n = 2;
    if (fam == Family::PSU) min_n = 3;
    if (fam == Family::POmegaPlus || fam == Family::POmegaMinus) min_n = 4;
    if (n < min_n) throw ValidityError("rank below the family minimum");
  }
  if (r < 3 || !is_prime(Int(r)))
    throw ValidityError("congruence conditions require an odd prime r");
  if (m == 0 || (r - 1) % m != 0)
    throw std::invalid_argument("m must divide r - 1");
  CongruenceReport rep;
  rep.m = m;
  const unsigned long bound = degree_bound(fam, n);
  rep.e_m = m <= bound ? e_L(fam, n, m) : 0;
  rep.e_mr = m <= bound / r ? e_L(fam, n, m * r) : 0;
  if (fam == Family::PSL && n == 3 && r == 3 && m == 1) {
    rep.exception = true;
    rep.residues = ResidueClassSet{9, {4, 7}};
  } else if (fam == Family::PSU && n == 3 && r == 3 && m == 2) {
    rep.exception = true;
    rep.residues = ResidueClassSet{9, {2, 5}};
  } else {
    rep.residues = lifted_residues(r, m);
  }
  return rep;
}

std::vector<GroupId> instantiate(const EnumMatch& match, unsigned long q_bound) {
  std::vector<GroupId> out;
  switch (match.kind) {
    case MatchKind::Alternating:
      for (unsigned n = match.alt_lo; n <= match.alt_hi; ++n)
        out.push_back(GroupId{Family::Alternating, n, 0, ""});
      return out;
    case MatchKind::Sporadic:
      out.push_back(GroupId{Family::Sporadic, 0, 0, match.name});
      return out;
    case MatchKind::Defining:
      if (match.defining_q <= q_bound)
        out.push_back(GroupId{Family::PSL, 2, match.defining_q, ""});
      return out;
    case MatchKind::Lie:
      break;
  }

  const auto shape = shape_constraint(match.family);
  const unsigned long r = match.residues
                              ? (match.t_required == 0
                                     ? q_decompose(match.residues->modulus).p
                                     : match.residues->modulus)
                              : 0;
  for (unsigned long q = 2; q <= q_bound; ++q) {
    if (!is_prime_power(q)) continue;
    if (r != 0 && q % r == 0) continue;
    if (shape) {
      PrimePower pp = q_decompose(q);
      if (pp.p != shape->p || pp.f % 2 == 0 || pp.f < 3) continue;
    }
    if (match.residues && !match.residues->contains(q)) continue;
    if (match.t_required != 0) {
      Int qm = pow_ui(Int(q), match.m) - 1;
      if (padic_val(Int(r), qm) != match.t_required) continue;
    }
    GroupId g{match.family, match.n, q, ""};
    try {
      validate(g);
    } catch (const ValidityError&) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace sylow
