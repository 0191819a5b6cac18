#pragma once

#include <cstdint>
#include <vector>

#include "ellroot/local_data.hpp"

namespace ellroot {

// a = -sum_x chi(x^3 + A x + B) over a field with exp/log tables, using Zech
// logarithms so that the inner loop never leaves log space.
class PointCounter {
 public:
  explicit PointCounter(FieldPtr field);
  const FieldPtr& field() const { return field_; }
  // q + 1 - #E(F) for y^2 = x^3 + A x + B
  std::int64_t trace(Code A, Code B) const;

 private:
  FieldPtr field_;
  std::vector<std::int32_t> zech_;  // log(1 + g^i), -1 when 1 + g^i = 0
};

// Same count by plain enumeration with field operations.
std::int64_t trace_by_enumeration(const FieldPtr& field, Code A, Code B);

struct LocalFactor {
  enum class Kind { Good, SplitMult, NonsplitMult, Additive };
  Place place;
  Kind kind = Kind::Good;
  std::int64_t a_v = 0;
};

// Good places are counted on the local minimal model.
LocalFactor local_factor(const WeierstrassModel& E, const Place& v, const LocalData& d);

struct LPolynomial {
  std::vector<std::int64_t> coeffs{1};
  int N = 0;
  std::uint64_t q = 0;
  int fe_sign = 1;
  int analytic_rank = 0;
};

struct LComputation {
  LPolynomial L;
  std::vector<LocalData> reduction;
  std::vector<LocalFactor> bad_factors;
  std::int64_t truncation = 0;  // coefficient of T^(N+1) in the Euler product
  std::int64_t good_places = 0;
  std::int64_t hasse_violations = 0;
};

int conductor_degree(const std::vector<LocalData>& table);

// Throws Unsupported (isotrivial), ConductorTooSmall, InternalConsistency
// (truncation), FunctionalEquation.
LComputation compute_l_function(const WeierstrassModel& E);
LPolynomial l_polynomial(const WeierstrassModel& E);

int functional_equation_sign(const std::vector<std::int64_t>& c, std::uint64_t q, int N);
int analytic_rank(const std::vector<std::int64_t>& c, std::uint64_t q);
LPolynomial constant_extension_l(const LPolynomial& L, int m);

// max over complex roots of | |T| - 1/q |
double rh_deviation(const LPolynomial& L);

}  // namespace ellroot
