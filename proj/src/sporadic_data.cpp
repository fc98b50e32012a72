#include <stdexcept>

#include "sylowscope/catalog.hpp"

namespace sylow {

namespace {

SporadicRecord rec(std::string name,
                   std::vector<std::pair<unsigned long, unsigned>> factors,
                   std::string decimal, std::set<unsigned> abelian) {
  return SporadicRecord{std::move(name), std::move(factors), std::move(decimal),
                        std::move(abelian)};
}

// Rows in ascending order of group order, matching the reference grid layout.
std::vector<SporadicRecord> build_table() {
  std::vector<SporadicRecord> t;
  t.push_back(rec("M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}, "7920", {3, 5, 7}));
  t.push_back(rec("M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}, "95040", {5, 7}));
  t.push_back(rec("J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}},
                  "175560", {3, 5, 7, 11}));
  t.push_back(rec("M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}, "443520",
                  {3, 5, 7, 11}));
  t.push_back(rec("J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}, "604800", {5, 7}));
  t.push_back(rec("M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}},
                  "10200960", {3, 5, 7, 11}));
  t.push_back(rec("HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}, "44352000",
                  {3, 7, 11}));
  t.push_back(rec("J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}, "50232960",
                  {5}));
  t.push_back(rec("M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}},
                  "244823040", {5, 7, 11}));
  t.push_back(rec("McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}, "898128000",
                  {7, 11}));
  t.push_back(rec("He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}},
                  "4030387200", {5}));
  t.push_back(rec("Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}},
                  "145926144000", {11, 13}));
  t.push_back(rec("Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}},
                  "448345497600", {7, 11, 13}));
  t.push_back(rec("ON", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1},
                         {31, 1}},
                  "460815505920", {5, 11}));
  t.push_back(rec("Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}},
                  "495766656000", {7, 11}));
  t.push_back(rec("Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}},
                  "42305421312000", {7, 11}));
  t.push_back(rec("Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}},
                  "64561751654400", {5, 7, 11}));
  t.push_back(rec("HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}},
                  "273030912000000", {7, 11}));
  t.push_back(rec("Ly", {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1},
                         {37, 1}, {67, 1}},
                  "51765179004000000", {7, 11}));
  t.push_back(rec("Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1},
                         {31, 1}},
                  "90745943887872000", {7, 13}));
  t.push_back(rec("Fi23", {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1},
                           {17, 1}, {23, 1}},
                  "4089470473293004800", {5, 7, 11}));
  t.push_back(rec("Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1},
                          {23, 1}},
                  "4157776806543360000", {7, 11, 13}));
  t.push_back(rec("J4", {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1},
                         {29, 1}, {31, 1}, {37, 1}, {43, 1}},
                  "86775571046077562880", {5, 7}));
  t.push_back(rec("Fi24'", {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1},
                            {17, 1}, {23, 1}, {29, 1}},
                  "1255205709190661721292800", {5, 11, 13}));
  t.push_back(rec("B", {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1},
                        {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}},
                  "4154781481226426191177580544000000", {7, 11, 13}));
  t.push_back(rec("M", {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3},
                        {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1},
                        {47, 1}, {59, 1}, {71, 1}},
                  "808017424794512875886459904961710757005754368000000000",
                  {11}));
  // Each embedded factorization must multiply out to the reference decimal;
  // abort loudly otherwise rather than serve corrupted data.
  for (const auto& r : t) {
    if (sporadic_order(r) != Int(r.order_decimal))
      throw std::logic_error("sporadic order data mismatch for " + r.name);
    for (const auto& [p, e] : r.order_factors)
      if (!is_prime(Int(p)))
        throw std::logic_error("composite factor in sporadic data for " + r.name);
  }
  return t;
}

}  // namespace

const std::vector<SporadicRecord>& sporadic_table() {
  static const std::vector<SporadicRecord> table = build_table();
  return table;
}

const SporadicRecord& sporadic_record(const std::string& name) {
  for (const auto& r : sporadic_table())
    if (r.name == name) return r;
  throw ValidityError("unknown sporadic group: " + name);
}

}  // namespace sylow
