#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellroot/local_data.hpp"

namespace ellroot {

// One coefficient of F_q is a list of k residues mod p (a single entry when k = 1).
using CoeffList = std::vector<std::vector<std::uint32_t>>;

struct CurveRecord {
  std::string id;
  std::uint32_t p = 0;
  int k = 1;
  std::array<CoeffList, 5> a;  // a1, a2, a3, a4, a6; low to high powers of t
  // `expect key = value` lines, compared against report values by verify-corpus
  std::vector<std::pair<std::string, std::string>> expect;

  bool operator==(const CurveRecord& o) const {
    return id == o.id && p == o.p && k == o.k && a == o.a && expect == o.expect;
  }
};

// Parse errors carry the line number; singular curves are rejected by id.
std::vector<CurveRecord> parse_catalog(const std::string& text);
std::vector<CurveRecord> load_catalog(const std::string& path);
std::string emit_catalog(const std::vector<CurveRecord>& records);

WeierstrassModel to_model(const CurveRecord& r);
CurveRecord to_record(const std::string& id, const WeierstrassModel& E);

// "[c0,c1,...]" with the same coefficient syntax as the catalog.
Poly parse_poly(const FieldPtr& F, const std::string& text);

}  // namespace ellroot
