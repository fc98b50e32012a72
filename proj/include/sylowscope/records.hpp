// Structured-output assembly: line-delimited records with a fixed format tag
// and stable key order. Big integers, moduli, and residues are rendered as
// decimal strings so consumers never hit numeric-type truncation.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "sylowscope/catalog.hpp"
#include "sylowscope/classifier.hpp"
#include "sylowscope/enumerator.hpp"
#include "sylowscope/sweeps.hpp"

namespace sylow {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatTag = "sylowscope/1";

std::string decimal(const Int& v);

// "C3^2", "C25^2", "1" for trivial; "" when nonabelian or not reported.
std::string structure_string(const SylowVerdict& v);

// command is echoed so consumers can tell classify output from walter output.
Json verdict_record(const std::string& command, const GroupId& g, const Int& r,
                    const SylowVerdict& v);

// With `checked`, runs the second order route for the family and embeds a
// comparison object; with `factored`, embeds the full factorization string.
Json order_record(const GroupId& g, bool factored, bool checked);

// One record per match; `concrete` (optional) lists instantiated groups.
Json enum_match_record(unsigned long r, const std::string& structure,
                       const EnumMatch& m,
                       const std::vector<GroupId>* concrete);

Json congruence_record(Family fam, unsigned n, unsigned long r,
                       const CongruenceReport& rep);

Json sporadic_row_record(const SporadicRecord& rec);

// Timing is deliberately omitted: identical invocations must produce
// byte-identical structured output.
Json sweep_record(const SweepReport& rep);

}  // namespace sylow
