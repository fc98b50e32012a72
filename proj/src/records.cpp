#include "sylowscope/records.hpp"

namespace sylow {
namespace {

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Trivial:
      return "trivial";
    case VerdictKind::Abelian:
      return "abelian";
    case VerdictKind::Nonabelian:
      return "nonabelian";
  }
  return "?";
}

Json base(const char* command) {
  Json j;
  j["format"] = kFormatTag;
  j["command"] = command;
  return j;
}

Json string_or_null(const std::string& s) {
  return s.empty() ? Json(nullptr) : Json(s);
}

}  // namespace

std::string decimal(const Int& v) { return v.get_str(); }

std::string structure_string(const SylowVerdict& v) {
  if (v.kind == VerdictKind::Trivial) return "1";
  if (v.kind == VerdictKind::Nonabelian || !v.structure_known) return "";
  std::string out;
  for (const auto& f : v.structure) {
    if (!out.empty()) out += " x ";
    out += "C" + f.order.get_str();
    if (f.multiplicity > 1) out += "^" + std::to_string(f.multiplicity);
  }
  return out;
}

Json verdict_record(const std::string& command, const GroupId& g, const Int& r,
                    const SylowVerdict& v) {
  Json j = base(command.c_str());
  j["group"] = render(g);
  j["prime"] = decimal(r);
  j["kind"] = kind_name(v.kind);
  j["rule"] = rule_name(v.rule);
  j["structure"] = string_or_null(structure_string(v));
  Json factors = Json::array();
  for (const auto& f : v.structure)
    factors.push_back(
        Json{{"order", decimal(f.order)}, {"copies", f.multiplicity}});
  j["factors"] = std::move(factors);
  j["structure_known"] = v.structure_known;
  switch (v.m_tag) {
    case MTag::Value:
      j["m"] = v.m;
      j["t"] = v.t;
      break;
    case MTag::Defining:
      j["m"] = "defining";
      j["t"] = nullptr;
      break;
    case MTag::Absent:
      j["m"] = nullptr;
      j["t"] = nullptr;
      break;
  }
  return j;
}

Json order_record(const GroupId& g, bool factored, bool checked) {
  Json j = base("order");
  j["group"] = render(g);
  const Int closed = order_closed_form(g);
  j["order"] = decimal(closed);
  if (factored) j["factored"] = order_factored(g).to_string();
  if (checked) {
    Json c;
    Int other;
    if (is_lie(g.family)) {
      c["method"] = "cyclotomic-profile vs closed-form";
      other = order_cyclotomic(g);
    } else if (g.family == Family::Alternating) {
      c["method"] = "prime-valuation assembly vs n!/2";
      other = order_factored(g).value();
    } else {
      c["method"] = "embedded factorization vs reference decimal";
      other = Int(sporadic_record(g.sporadic).order_decimal);
    }
    c["value_a"] = decimal(other);
    c["value_b"] = decimal(closed);
    c["equal"] = other == closed;
    j["check"] = std::move(c);
  }
  return j;
}

Json enum_match_record(unsigned long r, const std::string& structure,
                       const EnumMatch& m,
                       const std::vector<GroupId>* concrete) {
  Json j = base("enumerate");
  j["prime"] = std::to_string(r);
  j["structure"] = structure;
  switch (m.kind) {
    case MatchKind::Defining:
      j["match"] = "defining";
      break;
    case MatchKind::Lie:
      j["match"] = "lie";
      break;
    case MatchKind::Alternating:
      j["match"] = "alternating";
      break;
    case MatchKind::Sporadic:
      j["match"] = "sporadic";
      break;
  }
  if (m.kind == MatchKind::Sporadic)
    j["family"] = nullptr;
  else if (m.kind == MatchKind::Alternating)
    j["family"] = "A";
  else
    j["family"] = std::string(family_tag(m.family));
  if (m.kind == MatchKind::Lie && m.n > 0)
    j["n"] = m.n;
  else if (m.kind == MatchKind::Defining)
    j["n"] = 2;
  else
    j["n"] = nullptr;
  if (m.kind == MatchKind::Lie)
    j["m"] = m.m;
  else if (m.kind == MatchKind::Defining)
    j["m"] = "defining";
  else
    j["m"] = nullptr;
  if (m.residues) {
    j["modulus"] = std::to_string(m.residues->modulus);
    Json res = Json::array();
    for (unsigned long x : m.residues->residues)
      res.push_back(std::to_string(x));
    j["residues"] = std::move(res);
  } else {
    j["modulus"] = nullptr;
    j["residues"] = nullptr;
  }
  j["t_required"] = m.t_required ? Json(m.t_required) : Json(nullptr);
  if (m.kind == MatchKind::Alternating)
    j["range"] = Json::array({m.alt_lo, m.alt_hi});
  else
    j["range"] = nullptr;
  j["name"] = string_or_null(m.name);
  j["shape"] = string_or_null(m.shape_note);
  j["rules"] = m.notes;
  if (concrete) {
    Json groups = Json::array();
    for (const GroupId& g : *concrete) groups.push_back(render(g));
    j["concrete"] = std::move(groups);
  }
  return j;
}

Json congruence_record(Family fam, unsigned n, unsigned long r,
                       const CongruenceReport& rep) {
  Json j = base("congruences");
  j["family"] = std::string(family_tag(fam));
  j["n"] = n ? Json(n) : Json(nullptr);
  j["prime"] = std::to_string(r);
  j["m"] = rep.m;
  j["modulus"] = std::to_string(rep.residues.modulus);
  Json res = Json::array();
  for (unsigned long x : rep.residues.residues)
    res.push_back(std::to_string(x));
  j["residues"] = std::move(res);
  j["e_m"] = rep.e_m;
  j["e_mr"] = rep.e_mr;
  const bool abelian = rep.exception || rep.e_mr == 0;
  j["abelian"] = abelian;
  j["exception"] = rep.exception;
  j["structure"] = abelian ? Json("C" + std::to_string(r) + "^" +
                                  std::to_string(rep.e_m))
                           : Json(nullptr);
  return j;
}

Json sporadic_row_record(const SporadicRecord& rec) {
  Json j = base("sporadic");
  j["name"] = rec.name;
  j["order"] = rec.order_decimal;
  j["factored"] = order_factored(GroupId{Family::Sporadic, 0, 0, rec.name})
                      .to_string();
  j["abelian_odd_primes"] = rec.abelian_odd_primes;
  return j;
}

Json sweep_record(const SweepReport& rep) {
  Json j = base("verify");
  j["suite"] = rep.suite;
  j["checked"] = rep.checked;
  j["failures"] = rep.failures;
  j["failure_samples"] = rep.failure_samples;
  j["findings"] = rep.findings;
  j["pass"] = rep.pass();
  return j;
}

}  // namespace sylow
