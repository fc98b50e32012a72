// Command-line front end: classification queries, order computations, inverse
// enumeration, congruence reports, the sporadic table, and the verification
// suites. Human-readable text by default; --json emits line-delimited records.
#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sylowscope/records.hpp"

namespace {

using namespace sylow;

struct GlobalFlags {
  bool json = false;
  bool quiet = false;
};

void emit(const GlobalFlags& flags, const Json& record,
          const std::string& text) {
  if (flags.json)
    std::cout << record.dump() << "\n";
  else if (!flags.quiet)
    std::cout << text << "\n";
}

Int parse_prime_text(const std::string& text) {
  if (text.empty() ||
      text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("prime must be a decimal integer: " + text);
  return Int(text);
}

Family parse_family_tag(const std::string& text) {
  auto lower = [](std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower((unsigned char)c));
    return s;
  };
  const std::string want = lower(text);
  for (Family f :
       {Family::PSL, Family::PSU, Family::PSp, Family::OmegaOdd,
        Family::POmegaPlus, Family::POmegaMinus, Family::Suzuki, Family::TriD4,
        Family::G2, Family::Ree, Family::F4, Family::TwistedF4, Family::E6,
        Family::TwistedE6, Family::E7, Family::E8})
    if (want == lower(std::string(family_tag(f)))) return f;
  throw ParseError("unknown Lie family tag: " + text);
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string residue_text(const ResidueClassSet& rs) {
  std::vector<std::string> parts;
  parts.reserve(rs.residues.size());
  for (unsigned long x : rs.residues) parts.push_back(std::to_string(x));
  return "q = " + join(parts, ", ") + " (mod " + std::to_string(rs.modulus) +
         ")";
}

std::string verdict_text(const GroupId& g, const Int& r,
                         const SylowVerdict& v) {
  std::ostringstream out;
  out << render(g) << ": Sylow " << r.get_str() << "-subgroup is ";
  switch (v.kind) {
    case VerdictKind::Trivial:
      out << "trivial (" << r.get_str()
          << " does not divide the group order)";
      break;
    case VerdictKind::Abelian:
      if (v.structure_known)
        out << "abelian " << structure_string(v);
      else
        out << "abelian (structure not reported)";
      break;
    case VerdictKind::Nonabelian:
      out << "nonabelian";
      break;
  }
  out << " [" << rule_name(v.rule);
  if (v.m_tag == MTag::Value) out << "; m=" << v.m << ", t=" << v.t;
  if (v.m_tag == MTag::Defining) out << "; defining characteristic";
  out << "]";
  return out.str();
}

int run_classify(const GlobalFlags& flags, const std::string& command,
                 const std::string& group_text, const Int& r) {
  const GroupId g = parse_group(group_text);
  const SylowVerdict v = r == 2 ? classify_sylow2(g) : classify(g, r);
  emit(flags, verdict_record(command, g, r, v), verdict_text(g, r, v));
  return 0;
}

int run_order(const GlobalFlags& flags, const std::string& group_text,
              bool factored, bool checked) {
  const GroupId g = parse_group(group_text);
  validate(g);
  const Json j = order_record(g, factored, checked);
  std::ostringstream text;
  text << "|" << render(g) << "| = " << j["order"].get<std::string>();
  if (factored) text << " = " << j["factored"].get<std::string>();
  if (checked)
    text << (j["check"]["equal"].get<bool>() ? "; routes agree ("
                                             : "; ROUTES DISAGREE (")
         << j["check"]["method"].get<std::string>() << ")";
  emit(flags, j, text.str());
  if (checked && !j["check"]["equal"].get<bool>()) return 1;
  return 0;
}

std::string match_text(const EnumMatch& m) {
  std::ostringstream out;
  switch (m.kind) {
    case MatchKind::Defining:
      out << m.name << " (defining characteristic)";
      break;
    case MatchKind::Alternating:
      out << "A(n), " << m.alt_lo << " <= n <= " << m.alt_hi;
      break;
    case MatchKind::Sporadic:
      out << m.name;
      break;
    case MatchKind::Lie:
      out << family_tag(m.family);
      if (m.n > 0) out << " (n=" << m.n << ")";
      out << ", m=" << m.m;
      if (m.residues) out << ": " << residue_text(*m.residues);
      if (m.t_required)
        out << " with v_r(q^m - 1) = " << m.t_required;
      if (!m.shape_note.empty()) out << "; " << m.shape_note;
      break;
  }
  if (!m.notes.empty()) out << " [" << join(m.notes, ", ") << "]";
  return out.str();
}

int run_enumerate(const GlobalFlags& flags, unsigned long r,
                  const std::string& structure_text,
                  const std::vector<std::string>& scope_names,
                  unsigned rank_bound, unsigned long concrete_bound,
                  bool serial) {
  const StructureSpec spec = parse_structure(structure_text);
  if (spec.r != r)
    throw ValidityError("--prime disagrees with the structure's prime");
  EnumScope scope;
  if (scope_names.empty()) {
    scope = EnumScope{true, true, true};
  } else {
    for (const auto& name : scope_names) {
      if (name == "alternating")
        scope.alternating = true;
      else if (name == "lie")
        scope.lie = true;
      else if (name == "sporadic")
        scope.sporadic = true;
      else if (name == "all")
        scope = EnumScope{true, true, true};
      else
        throw ParseError("unknown scope: " + name);
    }
  }
  const auto matches =
      enumerate_by_structure(r, spec.s, spec.k, scope, rank_bound,
                             serial ? RunMode::Serial : RunMode::Parallel);
  for (const auto& m : matches) {
    std::vector<GroupId> concrete;
    const bool want_concrete = concrete_bound > 0;
    if (want_concrete) concrete = instantiate(m, concrete_bound);
    emit(flags,
         enum_match_record(r, structure_text, m,
                           want_concrete ? &concrete : nullptr),
         match_text(m));
    if (want_concrete && !flags.json && !flags.quiet)
      for (const GroupId& g : concrete)
        std::cout << "  -> " << render(g) << "\n";
  }
  if (!flags.json && !flags.quiet)
    std::cout << "(" << matches.size() << " match"
              << (matches.size() == 1 ? "" : "es") << ")\n";
  return 0;
}

int run_congruences(const GlobalFlags& flags, const std::string& family_text,
                    unsigned n, unsigned long r, unsigned long m) {
  const Family fam = parse_family_tag(family_text);
  const CongruenceReport rep = congruence_conditions(fam, n, r, m);
  const Json j = congruence_record(fam, n, r, rep);
  std::ostringstream text;
  text << family_tag(fam);
  if (n > 0) text << " (n=" << n << ")";
  text << ", r=" << r << ", m=" << m << ": e(m)=" << rep.e_m
       << ", e(mr)=" << rep.e_mr << " -> ";
  if (j["abelian"].get<bool>())
    text << "abelian " << j["structure"].get<std::string>() << " for "
         << residue_text(rep.residues);
  else
    text << "nonabelian for every q with mult_order(q,r) = " << m;
  if (rep.exception) text << " (exceptional mod-9 rule)";
  emit(flags, j, text.str());
  return 0;
}

int run_sporadic(const GlobalFlags& flags) {
  for (const auto& rec : sporadic_table()) {
    const Json j = sporadic_row_record(rec);
    std::ostringstream text;
    text << rec.name << ": order " << rec.order_decimal << " = "
         << j["factored"].get<std::string>();
    std::vector<std::string> parts;
    for (unsigned r : rec.abelian_odd_primes)
      parts.push_back(std::to_string(r));
    text << "; abelian Sylow r-subgroups at r = "
         << (parts.empty() ? std::string("(none listed)") : join(parts, ", "));
    emit(flags, j, text.str());
  }
  return 0;
}

int run_verify(const GlobalFlags& flags, const std::string& suite,
               bool serial) {
  const RunMode mode = serial ? RunMode::Serial : RunMode::Parallel;
  std::vector<SweepReport> reports;
  auto want = [&suite](const char* name) {
    return suite == "all" || suite == name;
  };
  if (suite != "all" && suite != "cyclotomic" && suite != "valuation" &&
      suite != "orders" && suite != "table3" && suite != "example312" &&
      suite != "sporadic")
    throw ParseError("unknown verify suite: " + suite);
  if (want("cyclotomic")) reports.push_back(sweep_cyclotomic(mode));
  if (want("valuation")) reports.push_back(sweep_valuation(mode));
  if (want("orders")) {
    reports.push_back(sweep_order_equality(mode));
    reports.push_back(sweep_rpart(mode));
  }
  if (want("table3")) reports.push_back(sweep_table3());
  if (want("example312")) reports.push_back(sweep_example312());
  if (want("sporadic")) reports.push_back(sweep_sporadic());

  unsigned long failures = 0;
  for (const auto& rep : reports) {
    failures += rep.failures;
    std::ostringstream text;
    text << "suite " << rep.suite << ": " << rep.checked << " checks, "
         << rep.failures << " failures";
    if (!flags.json) {
      std::ostringstream block;
      block << text.str();
      for (const auto& f : rep.findings) block << "\n  finding: " << f;
      for (const auto& s : rep.failure_samples) block << "\n  FAIL: " << s;
      emit(flags, sweep_record(rep), block.str());
    } else {
      emit(flags, sweep_record(rep), text.str());
    }
  }
  if (!flags.json && !flags.quiet)
    std::cout << "verify: " << (failures == 0 ? "PASS" : "FAIL") << " ("
              << reports.size() << " suite" << (reports.size() == 1 ? "" : "s")
              << ", " << failures << " failure" << (failures == 1 ? "" : "s")
              << ")\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow r-subgroup classification for finite simple groups"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_flag("--json", flags.json,
               "emit line-delimited structured records on stdout");
  app.add_flag("--quiet", flags.quiet, "suppress human-readable output");

  std::string group_text, prime_text = "0", structure_text, family_text;
  std::string suite = "all";
  std::vector<std::string> scope_names;
  unsigned rank_bound = 12;
  unsigned n_value = 0;
  unsigned long prime_value = 0, m_value = 0, concrete_bound = 0;
  bool factored = false, checked = false, serial = false;

  CLI::App* c_classify =
      app.add_subcommand("classify", "classify the Sylow r-subgroup");
  c_classify->add_option("--group", group_text, "group expression")
      ->required();
  c_classify->add_option("--prime", prime_text, "the prime r")->required();

  CLI::App* c_order = app.add_subcommand("order", "compute the group order");
  c_order->add_option("--group", group_text, "group expression")->required();
  c_order->add_flag("--factored", factored, "print the prime factorization");
  c_order->add_flag("--check", checked,
                    "run both order routes and compare them");

  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "find all simple groups with a given Sylow structure");
  c_enum->add_option("--prime", prime_value, "the odd prime r")->required();
  c_enum->add_option("--structure", structure_text,
                     "target abelian type, e.g. C5^2 or C25")
      ->required();
  c_enum->add_option("--scope", scope_names,
                     "alternating, lie, sporadic, or all (default all)")
      ->delimiter(',');
  c_enum->add_option("--rank-bound", rank_bound,
                     "rank ceiling for classical families");
  c_enum->add_option("--concrete", concrete_bound,
                     "instantiate groups with q up to this bound");
  c_enum->add_flag("--serial", serial, "disable parallel enumeration");

  CLI::App* c_cong = app.add_subcommand(
      "congruences", "residue conditions for elementary abelian Sylow "
                     "subgroups of a Lie family");
  c_cong->add_option("--family", family_text, "Lie family tag, e.g. PSL")
      ->required();
  c_cong->add_option("--n", n_value, "rank (omit for exceptional families)");
  c_cong->add_option("--prime", prime_value, "the odd prime r")->required();
  c_cong->add_option("--m", m_value, "multiplicative order of q mod r")
      ->required();

  app.add_subcommand("sporadic",
                     "print the sporadic reference table with orders");

  CLI::App* c_walter =
      app.add_subcommand("walter", "classify the Sylow 2-subgroup");
  c_walter->add_option("--group", group_text, "group expression")->required();

  CLI::App* c_verify =
      app.add_subcommand("verify", "run the verification sweeps");
  c_verify->add_option("--suite", suite,
                       "cyclotomic, valuation, orders, table3, example312, "
                       "sporadic, or all");
  c_verify->add_flag("--serial", serial, "disable parallel sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand("classify"))
      return run_classify(flags, "classify", group_text,
                          parse_prime_text(prime_text));
    if (app.got_subcommand("order"))
      return run_order(flags, group_text, factored, checked);
    if (app.got_subcommand("enumerate"))
      return run_enumerate(flags, prime_value, structure_text, scope_names,
                           rank_bound, concrete_bound, serial);
    if (app.got_subcommand("congruences"))
      return run_congruences(flags, family_text, n_value, prime_value,
                             m_value);
    if (app.got_subcommand("sporadic")) return run_sporadic(flags);
    if (app.got_subcommand("walter"))
      return run_classify(flags, "walter", group_text, Int(2));
    if (app.got_subcommand("verify")) return run_verify(flags, suite, serial);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
