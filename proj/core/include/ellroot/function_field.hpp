#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ellroot/finite_field.hpp"
#include "ellroot/polynomial.hpp"

namespace ellroot {

// A place of F_q(t): a monic irreducible polynomial, or the point at infinity.
class Place {
 public:
  static Place infinity(const FieldPtr& field);
  // `poly` must be monic irreducible of positive degree.
  static Place finite(const Poly& poly);
  // Skips the irreducibility test.
  static Place from_irreducible(const Poly& poly);

  bool is_infinite() const { return infinite_; }
  const Poly& poly() const { return poly_; }
  const FieldPtr& field() const { return field_; }
  int degree() const { return infinite_ ? 1 : poly_.degree(); }
  std::string to_string() const;

  // Infinity first, then by degree, then coefficient-lexicographically.
  bool operator<(const Place& o) const;
  bool operator==(const Place& o) const { return infinite_ == o.infinite_ && poly_ == o.poly_; }

  Place() = default;

 private:
  FieldPtr field_;
  Poly poly_;
  bool infinite_ = false;
};

// Residue field F_{q^deg v} with the embedding of F_q and the chosen root of
// the place polynomial (the smallest code). At infinity the local coordinate
// is u = 1/t and the root is 0.
struct PlaceResidue {
  FieldPtr field;
  std::shared_ptr<const Embedding> embedding;
  Code root = 0;
};

PlaceResidue place_residue(const Place& v);

// All places of degree <= dmax (1 <= dmax <= 8), sorted.
std::vector<Place> enumerate_places(const FieldPtr& field, int dmax);

// Number of monic irreducible polynomials of degree d over F_q.
std::uint64_t irreducible_count(std::uint64_t q, int d);

// Places dividing a nonzero polynomial, sorted.
std::vector<Place> places_dividing(const Poly& f);

class RationalFunction {
 public:
  RationalFunction(Poly num, Poly den);
  explicit RationalFunction(Poly num);
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

 private:
  Poly num_, den_;
};

int valuation(const RationalFunction& f, const Place& v);
FieldElement residue(const RationalFunction& f, const Place& v);

}  // namespace ellroot
