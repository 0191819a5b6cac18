#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellroot/finite_field.hpp"

namespace ellroot::wd {

using Complex = std::complex<double>;

// Local field with residue field F_{q0^degree}, a fixed uniformizer pi, psi of
// conductor exponent 0 built from psi_0 of the residue field, and dx with
// vol(O) = 1.
struct LocalFieldTag {
  FieldPtr base;  // F_{q0}
  int degree = 1;

  std::uint64_t residue_size() const;
  FieldPtr residue() const;
  std::string to_string() const;
};

LocalFieldTag local_field(const FieldPtr& base, int degree = 1);

// Tame character trivial on pi up to the unramified twist: on units it is
// chi_j o N, N the norm from the residue field to F_{q0^field_degree}, and
// chi(pi) = frobenius_value.
struct TameCharacter {
  std::uint64_t residue_index = 0;
  int field_degree = 1;
  Complex frobenius_value{1.0, 0.0};

  bool ramified() const { return residue_index != 0; }
  int conductor() const { return ramified() ? 1 : 0; }
};

TameCharacter unramified_character(Complex frobenius_value);
// Brought to the smallest field_degree through which the residue part factors.
TameCharacter tame_character(const FieldPtr& base, int field_degree, std::uint64_t j, Complex frobenius_value = 1.0);
// Character of order dividing q0 - 1 with chi(g) = exp(2 pi i j / (q0 - 1)).
TameCharacter base_character(const FieldPtr& base, std::uint64_t j, Complex frobenius_value = 1.0);

TameCharacter inverse(const TameCharacter& chi, const FieldPtr& base);
bool same_character(const TameCharacter& a, const TameCharacter& b, const FieldPtr& base);

// Index of the residue part with respect to the generator of F_{q0^degree}.
std::uint64_t residue_index_over(const TameCharacter& chi, const FieldPtr& base, int degree);

struct Summand {
  enum class Kind { Char, Induced, Sp2 };
  Kind kind = Kind::Char;
  // For Induced: a character of the unramified quadratic extension.
  TameCharacter chi;
  // Sp2: the lines chi |.|^scale-twisted with Frobenius values
  // alpha * scale (the kernel of N) and alpha * scale * Q.
  double scale = 1.0;

  int dimension() const { return kind == Kind::Char ? 1 : 2; }
  Complex kernel_eigenvalue() const { return chi.frobenius_value * scale; }
};

class WDRep {
 public:
  WDRep() = default;
  explicit WDRep(std::vector<Summand> summands, int swan = 0);

  static WDRep character(const TameCharacter& chi);
  static WDRep induced(const TameCharacter& theta);
  static WDRep steinberg(const TameCharacter& chi, double scale = 1.0);

  const std::vector<Summand>& summands() const { return summands_; }
  int swan() const { return swan_; }
  int dimension() const;

  WDRep operator+(const WDRep& o) const;

 private:
  std::vector<Summand> summands_;
  int swan_ = 0;
};

// Splits induced summands whose character is Frobenius-invariant.
WDRep normalize(const WDRep& r, const LocalFieldTag& tag);

int conductor(const WDRep& r, const LocalFieldTag& tag);
Complex epsilon0(const WDRep& r, const LocalFieldTag& tag);
// det(-Frob | (Ker N)^I)
Complex invariant_determinant(const WDRep& r, const LocalFieldTag& tag);
Complex epsilon(const WDRep& r, const LocalFieldTag& tag);
Complex root_number(const WDRep& r, const LocalFieldTag& tag);

std::pair<WDRep, LocalFieldTag> restrict_unramified(const WDRep& r, const LocalFieldTag& tag, int n);

struct StabilityCheck {
  Complex lhs, rhs;  // epsilon of the restriction and the predicted value
  bool pass = false;
  Complex eps0_lhs, eps0_rhs;
  bool eps0_pass = false;
};

StabilityCheck verify_stability(const WDRep& r, const LocalFieldTag& tag, int n);

bool approx_equal(Complex a, Complex b, double tol = 1e-9);
// Order m <= max_order with z^m = 1 within tolerance, or 0.
int root_of_unity_order(Complex z, int max_order = 12);

std::string to_string(const TameCharacter& chi);
std::string to_string(const WDRep& r);

}  // namespace ellroot::wd
