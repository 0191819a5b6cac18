#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ellroot {

// Field elements are handled as integer codes. The coefficient vector
// (c_0, ..., c_{k-1}) in the power basis of the defining polynomial is packed
// with c_0 as the most significant base-p digit, so numeric order of codes is
// the coefficient-lexicographic order.
using Code = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

// Largest field (q) that gets exp/log tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 23;

class FiniteField {
 public:
  FiniteField(std::uint32_t p, int k);

  std::uint32_t p() const { return p_; }
  int k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Monic defining polynomial over F_p, low-to-high, k + 1 entries.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Code generator() const { return generator_; }
  bool has_tables() const { return !exp_.empty(); }

  Code zero() const { return 0; }
  Code one() const { return top_; }
  Code from_int(std::int64_t n) const;
  Code from_coeffs(const std::vector<std::uint32_t>& c) const;
  std::vector<std::uint32_t> coeffs(Code a) const;
  bool in_range(Code a) const { return a < q_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  // a^(p^times)
  Code frobenius(Code a, int times = 1) const;

  // Discrete logarithm to the base generator(); a must be nonzero.
  std::uint64_t log(Code a) const;
  Code exp(std::uint64_t m) const;

  // Tr_{F_q/F_p}(a) as an integer in [0, p).
  std::uint32_t abs_trace(Code a) const;
  // 0 for a = 0, else +1 / -1.
  int quadratic_character(Code a) const;
  bool is_square(Code a) const { return quadratic_character(a) >= 0; }
  // Square root with the smaller code, if any.
  std::optional<Code> sqrt(Code a) const;

  std::string to_string(Code a) const;

  const std::uint32_t* exp_table() const { return exp_.data(); }
  const std::uint32_t* log_table() const { return log_.data(); }
  const std::uint8_t* trace_table() const { return trace_.data(); }

 private:
  Code mul_generic(Code a, Code b) const;
  Code pow_generic(Code a, std::uint64_t e) const;
  std::uint64_t log_bsgs(Code a) const;
  void find_modulus();
  void find_generator();
  void build_tables();

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  Code top_;  // p^(k-1): code of 1
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> place_;  // place_[i] = p^(k-1-i), weight of c_i
  Code generator_ = 0;
  std::vector<std::uint32_t> basis_trace_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
};

// F_{p^k} for a prime p >= 5 and p^k <= 2^31.
FieldPtr make_field(std::uint32_t p, int k);
// Same construction for any odd prime; residue fields of local fields may have p = 3.
FieldPtr make_residue_field(std::uint32_t p, int k);

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldPtr field, Code code);
  static FieldElement from_int(const FieldPtr& field, std::int64_t n);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::optional<FieldElement> sqrt() const;
  bool is_square() const;
  std::string to_string() const;

 private:
  const FiniteField& checked(const FieldElement& o) const;
  FieldPtr field_;
  Code code_ = 0;
};

// Embedding of F_{p^a} into F_{p^b}, a | b, sending the defining root of the
// smaller field to the smallest root (by code) of its defining polynomial.
class Embedding {
 public:
  Embedding(FieldPtr sub, FieldPtr over);
  const FieldPtr& sub() const { return sub_; }
  const FieldPtr& over() const { return over_; }
  Code map(Code a) const;
  std::optional<Code> preimage(Code b) const;

 private:
  FieldPtr sub_, over_;
  std::vector<Code> powers_;  // images of root^i
  std::uint64_t index_ = 1;    // (|over| - 1) / (|sub| - 1)
  std::uint64_t gen_log_ = 0;  // log in `over` of the image of sub's generator
};

std::shared_ptr<const Embedding> embedding(const FieldPtr& sub, const FieldPtr& over);

FieldElement trace_to(const FieldElement& x, const FieldPtr& sub);
FieldElement norm_to(const FieldElement& x, const FieldPtr& sub);

// exp(2 pi i num / den)
std::complex<double> unit_root(std::int64_t num, std::uint64_t den);

// psi_0(x) = exp(2 pi i Tr(x) / p)
std::complex<double> additive_character(const FieldElement& x);
// chi_j(g^m) = exp(2 pi i j m / (q - 1)); x must be nonzero.
std::complex<double> multiplicative_character(std::uint64_t j, const FieldElement& x);

// sum over u != 0 of chi_j(u)^{-1} psi_0(u)
std::complex<double> gauss_sum(const FieldPtr& field, std::uint64_t j);

// Gauss sum over F_{q^m} (q = |field|) of chi_j composed with the norm down to
// `field`, paired with psi_0 of the big field.
std::complex<double> lifted_gauss_sum(const FieldPtr& field, std::uint64_t j, int m);

// Largest q^m for which lifted Gauss sums are summed directly.
inline constexpr std::uint64_t kDirectGaussLimit = std::uint64_t{1} << 22;

}  // namespace ellroot
