#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellroot/finite_field.hpp"

namespace ellroot {

// Dense univariate polynomial over a finite field, low-to-high, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<Code> coeffs);

  static Poly constant(const FieldPtr& field, Code c);
  static Poly monomial(const FieldPtr& field, Code c, int degree);
  static Poly x(const FieldPtr& field) { return monomial(field, field->one(), 1); }

  const FieldPtr& field() const { return field_; }
  const std::vector<Code>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Code coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Code leading() const { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_->one(); }
  // Multiplicity of the root 0 (index of the lowest nonzero coefficient).
  int low_order() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(Code c) const;
  bool operator==(const Poly& o) const { return c_ == o.c_ && (c_.empty() || field_ == o.field_); }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Code evaluate(Code x) const;
  Poly derivative() const;
  Poly monic() const;
  // Drop the lowest `n` coefficients, i.e. divide by x^n (exact division required).
  Poly shift_down(int n) const;
  Poly shift_up(int n) const;

  std::string to_string() const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Code> c_;
};

// Ordering by degree, then coefficient codes low-to-high.
bool poly_less(const Poly& a, const Poly& b);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus);
// Multiplicity of b as a factor of a (b nonconstant, a nonzero).
int multiplicity(Poly a, const Poly& b);

// Map coefficients along an embedding of fields.
Poly map_coeffs(const Poly& a, const Embedding& e);
// Coefficients of a(theta + u) as a polynomial in u, a having coefficients in
// a subfield of theta's field.
Poly taylor_shift(const Poly& a, const Embedding& e, Code theta);

// Distinct monic irreducible factors, sorted by poly_less.
std::vector<Poly> irreducible_factors(const Poly& f);
// Distinct roots in the coefficient field, in increasing code order.
std::vector<Code> roots(const Poly& f);

}  // namespace ellroot
