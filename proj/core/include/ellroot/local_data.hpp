#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ellroot/function_field.hpp"
#include "ellroot/polynomial.hpp"

namespace ellroot {

// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q[t].
class WeierstrassModel {
 public:
  WeierstrassModel(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6);
  // Clears denominators with (x, y) -> (x / D^2, y / D^3).
  static WeierstrassModel from_rational(const std::array<RationalFunction, 5>& a);

  const FieldPtr& field() const { return a1_.field(); }
  const Poly& a1() const { return a1_; }
  const Poly& a2() const { return a2_; }
  const Poly& a3() const { return a3_; }
  const Poly& a4() const { return a4_; }
  const Poly& a6() const { return a6_; }
  const Poly& b2() const { return b2_; }
  const Poly& b4() const { return b4_; }
  const Poly& b6() const { return b6_; }
  const Poly& b8() const { return b8_; }
  const Poly& c4() const { return c4_; }
  const Poly& c6() const { return c6_; }
  const Poly& discriminant() const { return delta_; }

  // y^2 = x^3 + A x + B with A = -27 c4, B = -54 c6.
  WeierstrassModel short_model() const;
  bool is_short() const { return a1_.is_zero() && a2_.is_zero() && a3_.is_zero(); }
  // Same equation over a larger constant field.
  WeierstrassModel base_extend(const FieldPtr& over) const;
  // j-invariant lies in F_q.
  bool is_isotrivial() const;

 private:
  Poly a1_, a2_, a3_, a4_, a6_;
  Poly b2_, b4_, b6_, b8_, c4_, c6_, delta_;
};

struct MinimalModel {
  // In the coordinate t for finite places and u = 1/t at infinity.
  WeierstrassModel model;
  int scalings = 0;
  int v_delta = 0;
  std::optional<int> v_c4;  // nullopt when c4 = 0
};

MinimalModel minimal_model_at(const WeierstrassModel& E, const Place& v);

enum class Kodaira { Good, I, II, III, IV, I0Star, IStar, IVStar, IIIStar, IIStar };

struct ReductionType {
  Kodaira kind = Kodaira::Good;
  int n = 0;  // index of I_n and I_n*
  std::string to_string() const;
  bool operator==(const ReductionType& o) const { return kind == o.kind && n == o.n; }
};

enum class ComponentShape { Cyclic, KleinFour };

// Frobenius of the residue field acting on the component group: x -> sign * x
// on cyclic groups, a permutation with the given cycle lengths on the three
// nonzero elements of the Klein four-group.
struct FrobeniusAction {
  int sign = 1;
  std::vector<int> cycles;
  bool operator==(const FrobeniusAction& o) const { return sign == o.sign && cycles == o.cycles; }
};

// Minimal short model at a place in the local coordinate s = t - theta (u at
// infinity), over the residue field F_{q^deg v}.
struct LocalModel {
  Place place;
  FieldPtr residue;
  Poly A, B;
  int v_delta = 0;
  int v_c4 = 0;  // INT32_MAX when c4 = 0
};

struct LocalData {
  Place place;
  FieldPtr residue;    // F_{q^deg v}
  int ext_degree = 1;  // data describes the base change to F_{q^(deg v * ext_degree)}
  ReductionType kodaira;
  int v_delta_min = 0;
  int cond_exp = 0;
  int comp_order = 1;
  ComponentShape comp_structure = ComponentShape::Cyclic;
  FrobeniusAction frobenius;
  bool split = false;
  int tamagawa = 1;
  std::shared_ptr<const LocalModel> model;

  // Number of geometric components of the special fiber of the minimal model.
  int components() const;
  // |Phi(F_{q^(deg v * ext_degree * n)})|
  int rational_components(int n) const;
  bool is_good() const { return kodaira.kind == Kodaira::Good; }
  bool is_multiplicative() const { return kodaira.kind == Kodaira::I; }
};

std::shared_ptr<const LocalModel> local_model(const WeierstrassModel& E, const Place& v);

// Requires E minimal at v.
LocalData classify_reduction(const WeierstrassModel& E, const Place& v);
// Minimizes first.
LocalData reduction_data(const WeierstrassModel& E, const Place& v);
LocalData classify_local(const std::shared_ptr<const LocalModel>& m, int ext_degree);

LocalData unramified_base_change(const WeierstrassModel& E, const Place& v, int n);
LocalData unramified_base_change(const LocalData& d, int n);

// Reduction data at infinity and at every place dividing the discriminant, sorted.
std::vector<LocalData> reduction_table(const WeierstrassModel& E);

// dim over F_l of the l-torsion of the special fiber of the Neron model over the
// algebraic closure; l odd, l != p.
int special_fiber_l_torsion(const LocalData& d, int l);

struct PhiDims {
  int rational = 0;
  int geometric = 0;
};
// dim Phi[l] over the residue field extended by n, and over the algebraic closure.
PhiDims phi_l_dims(const LocalData& d, int l, int n);

}  // namespace ellroot
