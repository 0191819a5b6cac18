#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellroot/lfunction.hpp"
#include "ellroot/local_data.hpp"
#include "ellroot/weil_deligne.hpp"

namespace ellroot {

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string lhs, rhs;
};

CheckRecord make_check(std::string name, long long lhs, long long rhs);

struct LocalRootNumber {
  int w = 1;
  wd::WDRep rep;
  wd::LocalFieldTag tag;
};

// sigma' of H^1 at the place (over the extension recorded in d.ext_degree).
LocalRootNumber local_root_number_ec(const LocalData& d);

// Product over the reduction table (good places contribute +1).
int global_root_number(const std::vector<LocalData>& table);
int global_root_number(const WeierstrassModel& E);
// Root number of E over F_{q^m}(t): a place of degree d splits into gcd(d, m)
// places with residue degree m / gcd(d, m) over it.
int global_root_number_const_ext(const std::vector<LocalData>& table, int m);

CheckRecord check_st_root(const LocalData& d, int n);

// Conductor exponents of E over F_{q^m}(t), one per place dividing its
// discriminant and infinity, from valuations over F_{q^m}[t].
std::vector<int> extended_conductor_exponents(const WeierstrassModel& E, int m);

// (-1)^(sum of a_w over places of F_{q^m}(t)) against the root number of the
// base change, the regrouped sum, and the rank parity when the rank is <= 1.
std::vector<CheckRecord> check_even_glob(const WeierstrassModel& E, const std::vector<LocalData>& table,
                                         const LPolynomial& L, int m);

CheckRecord check_cond_comp(const LocalData& d, int l);

enum class ParityStatus { Verified, Predicted };
const char* to_string(ParityStatus s);

struct PlaceRow {
  LocalData data;
  int w = 1;
  std::optional<std::int64_t> a_v;
};

struct ParityReport {
  std::string id;
  std::uint64_t q = 0;
  int l = 3;
  std::vector<PlaceRow> places;
  LPolynomial L, L_q2;
  int global_w = 1, global_w_q2 = 1;
  ParityStatus status = ParityStatus::Predicted, status_q2 = ParityStatus::Predicted;
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

ParityReport l_parity_report(const WeierstrassModel& E, int l, const std::string& id = "");

}  // namespace ellroot
