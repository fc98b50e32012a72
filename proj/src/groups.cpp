#include "sylowscope/groups.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "sylowscope/numtheory.hpp"

namespace sylow {

namespace {

const std::array<std::string_view, 26> kSporadicNames = {
    "M11", "M12", "M22", "M23", "M24", "J1",   "J2",   "J3",   "J4",
    "HS",  "McL", "He",  "Ru",  "Suz", "ON",   "Co1",  "Co2",  "Co3",
    "Fi22", "Fi23", "Fi24'", "HN", "Ly", "Th", "B",    "M"};

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

unsigned long parse_number(std::string_view s, const char* what) {
  if (s.empty()) throw ParseError(std::string("missing ") + what);
  unsigned long v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    if (v > (~0ul - 9) / 10) throw ParseError(std::string(what) + " out of range");
    v = v * 10 + static_cast<unsigned long>(c - '0');
  }
  return v;
}

struct TagInfo {
  Family family;
  bool two_args;
};

// Lowercased tag -> family. Single-argument tags take just q.
const TagInfo* lookup_tag(const std::string& tag, TagInfo& storage) {
  static const std::pair<std::string_view, TagInfo> table[] = {
      {"a", {Family::Alternating, false}},
      {"psl", {Family::PSL, true}},
      {"psu", {Family::PSU, true}},
      {"psp", {Family::PSp, true}},
      {"omega", {Family::OmegaOdd, true}},
      {"pomega+", {Family::POmegaPlus, true}},
      {"pomega-", {Family::POmegaMinus, true}},
      {"2b2", {Family::Suzuki, false}},
      {"3d4", {Family::TriD4, false}},
      {"g2", {Family::G2, false}},
      {"2g2", {Family::Ree, false}},
      {"f4", {Family::F4, false}},
      {"2f4", {Family::TwistedF4, false}},
      {"e6", {Family::E6, false}},
      {"2e6", {Family::TwistedE6, false}},
      {"e7", {Family::E7, false}},
      {"e8", {Family::E8, false}},
  };
  for (const auto& [name, info] : table) {
    if (tag == name) {
      storage = info;
      return &storage;
    }
  }
  return nullptr;
}

bool is_odd_power_of(unsigned long q, unsigned long p) {
  // q = p^(2k+1) with k >= 1
  if (q < p * p * p) return false;
  unsigned exp = 0;
  while (q % p == 0) {
    q /= p;
    ++exp;
  }
  return q == 1 && exp % 2 == 1;
}

}  // namespace

bool is_prime_power(unsigned long q) {
  if (q < 2) return false;
  return factorize(Int(q)).factors.size() == 1;
}

PrimePower q_decompose(unsigned long q) {
  if (q < 2) throw ValidityError("q must be a prime power >= 2");
  FactoredInteger f = factorize(Int(q));
  if (f.factors.size() != 1) throw ValidityError("q is not a prime power");
  const auto& [p, e] = *f.factors.begin();
  return PrimePower{p.get_ui(), e};
}

bool is_lie(Family f) { return f != Family::Alternating && f != Family::Sporadic; }

bool is_classical(Family f) {
  switch (f) {
    case Family::PSL:
    case Family::PSU:
    case Family::PSp:
    case Family::OmegaOdd:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return true;
    default:
      return false;
  }
}

std::string_view family_tag(Family f) {
  switch (f) {
    case Family::Alternating: return "A";
    case Family::PSL: return "PSL";
    case Family::PSU: return "PSU";
    case Family::PSp: return "PSp";
    case Family::OmegaOdd: return "Omega";
    case Family::POmegaPlus: return "POmega+";
    case Family::POmegaMinus: return "POmega-";
    case Family::Suzuki: return "2B2";
    case Family::TriD4: return "3D4";
    case Family::G2: return "G2";
    case Family::Ree: return "2G2";
    case Family::F4: return "F4";
    case Family::TwistedF4: return "2F4";
    case Family::E6: return "E6";
    case Family::TwistedE6: return "2E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::Sporadic: return "(sporadic)";
  }
  return "?";
}

void validate(const GroupId& g) {
  switch (g.family) {
    case Family::Alternating:
      if (g.n < 5) throw ValidityError("A(n) is not simple for n < 5");
      return;
    case Family::Sporadic: {
      auto it = std::find(kSporadicNames.begin(), kSporadicNames.end(), g.sporadic);
      if (it == kSporadicNames.end())
        throw ValidityError("unknown sporadic group '" + g.sporadic + "'");
      return;
    }
    default:
      break;
  }
  q_decompose(g.q);
  switch (g.family) {
    case Family::PSL:
      if (g.n < 2) throw ValidityError("PSL(n,q) requires n >= 2");
      if (g.n == 2 && (g.q == 2 || g.q == 3))
        throw ValidityError("PSL(2," + std::to_string(g.q) + ") is not simple");
      break;
    case Family::PSU:
      if (g.n < 3) throw ValidityError("PSU(n,q) requires n >= 3");
      if (g.n == 3 && g.q == 2) throw ValidityError("PSU(3,2) is not simple");
      break;
    case Family::PSp:
      if (g.n < 2) throw ValidityError("PSp(2n,q) requires 2n >= 4");
      if (g.n == 2 && g.q == 2) throw ValidityError("PSp(4,2) is not simple");
      break;
    case Family::OmegaOdd:
      if (g.n < 2) throw ValidityError("Omega(2n+1,q) requires 2n+1 >= 5");
      if (g.n == 2 && g.q == 2) throw ValidityError("Omega(5,2) is not simple");
      break;
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (g.n < 4) throw ValidityError("POmega(2n,q) requires 2n >= 8");
      break;
    case Family::Suzuki:
      if (!is_odd_power_of(g.q, 2))
        throw ValidityError("2B2(q) requires q = 2^(2k+1) with k >= 1");
      break;
    case Family::Ree:
      if (!is_odd_power_of(g.q, 3))
        throw ValidityError("2G2(q) requires q = 3^(2k+1) with k >= 1");
      break;
    case Family::TwistedF4:
      if (!is_odd_power_of(g.q, 2))
        throw ValidityError("2F4(q) requires q = 2^(2k+1) with k >= 1");
      break;
    case Family::G2:
      if (g.q == 2) throw ValidityError("G2(2) is not simple");
      break;
    default:
      break;
  }
}

GroupId parse_group(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty group expression");

  auto open = s.find('(');
  if (open == std::string::npos) {
    // Sporadic name, matched exactly.
    GroupId g;
    g.family = Family::Sporadic;
    g.sporadic = s;
    validate(g);
    return g;
  }
  if (s.back() != ')') throw ParseError("missing ')' in group expression");

  std::string tag = lower(std::string_view(s).substr(0, open));
  std::string args = s.substr(open + 1, s.size() - open - 2);
  TagInfo storage{};
  const TagInfo* info = lookup_tag(tag, storage);
  if (!info) throw ParseError("unknown family tag '" + s.substr(0, open) + "'");

  GroupId g;
  g.family = info->family;

  auto comma = args.find(',');
  if (g.family == Family::Alternating) {
    if (comma != std::string::npos) throw ParseError("A(n) takes a single argument");
    g.n = static_cast<unsigned>(parse_number(args, "degree n"));
    validate(g);
    return g;
  }
  if (!info->two_args) {
    if (comma != std::string::npos)
      throw ParseError(std::string(family_tag(g.family)) + "(q) takes a single argument");
    g.q = parse_number(args, "field size q");
    validate(g);
    return g;
  }

  if (comma == std::string::npos) throw ParseError("expected two arguments '(n,q)'");
  unsigned long first = parse_number(args.substr(0, comma), "rank argument");
  g.q = parse_number(args.substr(comma + 1), "field size q");
  switch (g.family) {
    case Family::PSL:
    case Family::PSU:
      g.n = static_cast<unsigned>(first);
      break;
    case Family::PSp:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      if (first % 2 != 0)
        throw ParseError(std::string(family_tag(g.family)) + " dimension must be even");
      g.n = static_cast<unsigned>(first / 2);
      break;
    case Family::OmegaOdd:
      if (first % 2 == 0) throw ParseError("Omega dimension must be odd");
      g.n = static_cast<unsigned>(first / 2);
      break;
    default:
      break;
  }
  validate(g);
  return g;
}

std::string render(const GroupId& g) {
  switch (g.family) {
    case Family::Alternating:
      return "A(" + std::to_string(g.n) + ")";
    case Family::Sporadic:
      return g.sporadic;
    case Family::PSL:
    case Family::PSU:
      return std::string(family_tag(g.family)) + "(" + std::to_string(g.n) + "," +
             std::to_string(g.q) + ")";
    case Family::PSp:
    case Family::POmegaPlus:
    case Family::POmegaMinus:
      return std::string(family_tag(g.family)) + "(" + std::to_string(2 * g.n) + "," +
             std::to_string(g.q) + ")";
    case Family::OmegaOdd:
      return "Omega(" + std::to_string(2 * g.n + 1) + "," + std::to_string(g.q) + ")";
    default:
      return std::string(family_tag(g.family)) + "(" + std::to_string(g.q) + ")";
  }
}

}  // namespace sylow
