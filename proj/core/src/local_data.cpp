#include "ellroot/local_data.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "ellroot/error.hpp"

namespace ellroot {

namespace {

Poly times(std::int64_t n, const Poly& a) { return a.scaled(a.field()->from_int(n)); }

Poly with_field(const Poly& a, const FieldPtr& F) { return a.field() ? a : Poly(F); }

// valuation of a polynomial at a finite place, INT_MAX for zero
int poly_valuation(const Poly& f, const Place& v) {
  if (f.is_zero()) return INT_MAX;
  if (f.degree() < v.degree() || !(f % v.poly()).is_zero()) return 0;
  return multiplicity(f, v.poly());
}

// u^(w m) f(1/u) for deg f <= w m
Poly reverse_weighted(const Poly& f, int total) {
  if (f.is_zero()) return f;
  std::vector<Code> c(total + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) c[total - i] = f.coeff(i);
  return Poly(f.field(), std::move(c));
}

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

Poly discriminant_short(const Poly& A, const Poly& B) {
  return times(4, A * A * A) + times(27, B * B);
}

std::vector<int> power_cycles(const std::vector<int>& cycles, int n) {
  std::vector<int> out;
  for (int f : cycles) {
    const int g = std::gcd(f, n);
    for (int i = 0; i < g; ++i) out.push_back(f / g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WeierstrassModel::WeierstrassModel(Poly a1, Poly a2, Poly a3, Poly a4, Poly a6) {
  FieldPtr F;
  for (const Poly* a : {&a1, &a2, &a3, &a4, &a6})
    if (a->field()) {
      F = a->field();
      break;
    }
  if (!F) raise(ErrorKind::Precondition, "Weierstrass coefficients without a field");
  for (const Poly* a : {&a1, &a2, &a3, &a4, &a6})
    if (a->field() && a->field() != F) raise(ErrorKind::Domain, "coefficients over different fields");
  if (F->p() < 5) raise(ErrorKind::UnsupportedCharacteristic, "residue characteristic must be at least 5");
  a1_ = with_field(a1, F);
  a2_ = with_field(a2, F);
  a3_ = with_field(a3, F);
  a4_ = with_field(a4, F);
  a6_ = with_field(a6, F);
  b2_ = a1_ * a1_ + times(4, a2_);
  b4_ = times(2, a4_) + a1_ * a3_;
  b6_ = a3_ * a3_ + times(4, a6_);
  b8_ = a1_ * a1_ * a6_ + times(4, a2_ * a6_) - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
  c4_ = b2_ * b2_ - times(24, b4_);
  c6_ = -(b2_ * b2_ * b2_) + times(36, b2_ * b4_) - times(216, b6_);
  delta_ = -(b2_ * b2_ * b8_) - times(8, b4_ * b4_ * b4_) - times(27, b6_ * b6_) + times(9, b2_ * b4_ * b6_);
  if (delta_.is_zero()) raise(ErrorKind::SingularCurve, "discriminant vanishes");
}

WeierstrassModel WeierstrassModel::from_rational(const std::array<RationalFunction, 5>& a) {
  Poly D = a[0].den();
  for (const RationalFunction& f : a) D = (D * f.den()) / gcd(D, f.den());
  static constexpr int weight[5] = {1, 2, 3, 4, 6};
  std::array<Poly, 5> out;
  for (int i = 0; i < 5; ++i) {
    Poly s = Poly::constant(D.field(), D.field()->one());
    for (int j = 0; j < weight[i]; ++j) s = s * D;
    out[i] = a[i].num() * (s / a[i].den());
  }
  return WeierstrassModel(out[0], out[1], out[2], out[3], out[4]);
}

WeierstrassModel WeierstrassModel::short_model() const {
  const FieldPtr& F = field();
  return WeierstrassModel(Poly(F), Poly(F), Poly(F), times(-27, c4_), times(-54, c6_));
}

WeierstrassModel WeierstrassModel::base_extend(const FieldPtr& over) const {
  auto e = embedding(field(), over);
  return WeierstrassModel(map_coeffs(a1_, *e), map_coeffs(a2_, *e), map_coeffs(a3_, *e), map_coeffs(a4_, *e),
                          map_coeffs(a6_, *e));
}

bool WeierstrassModel::is_isotrivial() const {
  if (c4_.is_zero()) return true;
  const Poly c43 = c4_ * c4_ * c4_;
  return c43.scaled(delta_.leading()) == delta_.scaled(c43.leading());
}

std::string ReductionType::to_string() const {
  switch (kind) {
    case Kodaira::Good: return "Good";
    case Kodaira::I: return "I" + std::to_string(n);
    case Kodaira::II: return "II";
    case Kodaira::III: return "III";
    case Kodaira::IV: return "IV";
    case Kodaira::I0Star: return "I0*";
    case Kodaira::IStar: return "I" + std::to_string(n) + "*";
    case Kodaira::IVStar: return "IV*";
    case Kodaira::IIIStar: return "III*";
    case Kodaira::IIStar: return "II*";
  }
  return "?";
}

MinimalModel minimal_model_at(const WeierstrassModel& E, const Place& v) {
  const FieldPtr& F = E.field();
  if (v.is_infinite()) {
    const WeierstrassModel S = E.is_short() ? E : E.short_model();
    const int m = std::max(ceil_div(S.a4().degree(), 4), ceil_div(S.a6().degree(), 6));
    WeierstrassModel M{Poly(F), Poly(F), Poly(F), reverse_weighted(S.a4(), 4 * m), reverse_weighted(S.a6(), 6 * m)};
    MinimalModel out{M, 0, M.discriminant().low_order(), std::nullopt};
    if (!M.c4().is_zero()) out.v_c4 = M.c4().low_order();
    return out;
  }
  const int vc4 = poly_valuation(E.c4(), v);
  const int vd = poly_valuation(E.discriminant(), v);
  if (vc4 < 4 || vd < 12) {
    MinimalModel out{E, 0, vd, std::nullopt};
    if (vc4 != INT_MAX) out.v_c4 = vc4;
    return out;
  }
  const WeierstrassModel S = E.is_short() ? E : E.short_model();
  Poly A = S.a4(), B = S.a6();
  int k = 0;
  while (poly_valuation(A, v) >= 4 && poly_valuation(discriminant_short(A, B), v) >= 12) {
    Poly p2 = v.poly() * v.poly();
    A = A / (p2 * p2);
    B = B / (p2 * p2 * p2);
    ++k;
  }
  WeierstrassModel M{Poly(F), Poly(F), Poly(F), A, B};
  MinimalModel out{M, k, poly_valuation(M.discriminant(), v), std::nullopt};
  const int c = poly_valuation(M.c4(), v);
  if (c != INT_MAX) out.v_c4 = c;
  return out;
}

std::shared_ptr<const LocalModel> local_model(const WeierstrassModel& E, const Place& v) {
  MinimalModel mm = minimal_model_at(E, v);
  const WeierstrassModel S = mm.model.is_short() ? mm.model : mm.model.short_model();
  auto m = std::make_shared<LocalModel>();
  m->place = v;
  PlaceResidue r = place_residue(v);
  m->residue = r.field;
  if (v.is_infinite()) {
    m->A = S.a4();
    m->B = S.a6();
  } else {
    m->A = taylor_shift(S.a4(), *r.embedding, r.root);
    m->B = taylor_shift(S.a6(), *r.embedding, r.root);
  }
  if (m->A.is_zero()) m->A = Poly(r.field);
  if (m->B.is_zero()) m->B = Poly(r.field);
  m->v_delta = discriminant_short(m->A, m->B).low_order();
  m->v_c4 = m->A.is_zero() ? INT_MAX : m->A.low_order();
  if (m->v_delta != mm.v_delta) raise(ErrorKind::InternalConsistency, "local and global discriminant valuations differ");
  return m;
}

namespace {

// Tate's subprocedure for I_n* on y^2 = x^3 + A x + B; returns the
// discriminant of the final quadratic.
Code istar_discriminant(const LocalModel& m, int nstar) {
  const FiniteField& F = *m.residue;
  const FieldPtr& field = m.residue;
  Poly a2(field), a4 = m.A, a6 = m.B;
  auto shift_x = [&](const Poly& s) {
    Poly n6 = a6 + a4 * s + a2 * s * s + s * s * s;
    Poly n4 = a4 + times(2, a2 * s) + times(3, s * s);
    Poly n2 = a2 + times(3, s);
    a2 = n2;
    a4 = n4;
    a6 = n6;
  };
  Poly cubic(field, {a6.coeff(3), a4.coeff(2), 0, F.one()});
  Poly g = gcd(cubic, cubic.derivative());
  if (g.degree() != 1) raise(ErrorKind::InternalConsistency, "I_n* cubic lacks a double root");
  shift_x(Poly::monomial(field, F.neg(g.coeff(0)), 1));
  int ex = 2, ey = 2;
  for (int level = 1; level <= nstar; ++level) {
    if (a4.low_order() < ex + 1 || a6.low_order() < ex + ey || a2.coeff(1) == 0)
      raise(ErrorKind::InternalConsistency, "I_n* subprocedure left its normal form");
    if (level % 2 == 1) {
      const Code a6t = a6.coeff(ex + ey);
      if (a6t != 0) {
        if (level != nstar) break;
        return a6t;
      }
      ++ey;
    } else {
      const Code a2t = a2.coeff(1), a4t = a4.coeff(ex + 1), a6t = a6.coeff(ex + ey);
      const Code disc = F.sub(F.mul(a4t, a4t), F.mul(F.from_int(4), F.mul(a2t, a6t)));
      if (disc != 0) {
        if (level != nstar) break;
        return disc;
      }
      const Code r = F.neg(F.div(a4t, F.mul(F.from_int(2), a2t)));
      shift_x(Poly::monomial(field, r, ex));
      ++ex;
    }
  }
  raise(ErrorKind::InternalConsistency, "I_n* subprocedure stopped at the wrong level");
}

}  // namespace

LocalData classify_local(const std::shared_ptr<const LocalModel>& m, int n) {
  if (n < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  const FiniteField& F = *m->residue;
  // quadratic character of the residue field extended by n
  auto square = [&](Code a) { return n % 2 == 0 || F.quadratic_character(a) >= 0; };

  LocalData d;
  d.place = m->place;
  d.residue = m->residue;
  d.ext_degree = n;
  d.model = m;
  d.v_delta_min = m->v_delta;
  const int vD = m->v_delta, vA = m->v_c4;

  auto cyclic = [&](int order, int sign) {
    d.comp_structure = ComponentShape::Cyclic;
    d.comp_order = order;
    d.frobenius.sign = order <= 2 ? 1 : sign;
    d.tamagawa = d.rational_components(1);
  };
  auto klein = [&](std::vector<int> base_cycles) {
    d.comp_structure = ComponentShape::KleinFour;
    d.comp_order = 4;
    d.frobenius.sign = 1;
    d.frobenius.cycles = power_cycles(base_cycles, n);
    d.tamagawa = d.rational_components(1);
  };

  if (vD == 0) {
    d.kodaira = {Kodaira::Good, 0};
    d.cond_exp = 0;
    cyclic(1, 1);
    return d;
  }
  if (vA == 0) {
    d.kodaira = {Kodaira::I, vD};
    d.cond_exp = 1;
    // -c6 = 864 B
    d.split = square(F.mul(F.from_int(864), m->B.coeff(0)));
    cyclic(vD, d.split ? 1 : -1);
    return d;
  }
  d.cond_exp = 2;
  if (3 * vA < vD) {
    const int nstar = vD - 6;
    d.kodaira = {Kodaira::IStar, nstar};
    const bool trivial = square(istar_discriminant(*m, nstar));
    if (nstar % 2 == 1)
      cyclic(4, trivial ? 1 : -1);
    else
      klein(trivial ? std::vector<int>{1, 1, 1} : std::vector<int>{1, 2});
    return d;
  }
  switch (vD) {
    case 2:
      d.kodaira = {Kodaira::II, 0};
      cyclic(1, 1);
      break;
    case 3:
      d.kodaira = {Kodaira::III, 0};
      cyclic(2, 1);
      break;
    case 4:
      d.kodaira = {Kodaira::IV, 0};
      cyclic(3, square(m->B.coeff(2)) ? 1 : -1);
      break;
    case 6: {
      d.kodaira = {Kodaira::I0Star, 0};
      Poly cubic(m->residue, {m->B.coeff(3), m->A.coeff(2), 0, F.one()});
      const std::size_t r = roots(cubic).size();
      klein(r == 3 ? std::vector<int>{1, 1, 1} : r == 1 ? std::vector<int>{1, 2} : std::vector<int>{3});
      break;
    }
    case 8:
      d.kodaira = {Kodaira::IVStar, 0};
      cyclic(3, square(m->B.coeff(4)) ? 1 : -1);
      break;
    case 9:
      d.kodaira = {Kodaira::IIIStar, 0};
      cyclic(2, 1);
      break;
    case 10:
      d.kodaira = {Kodaira::IIStar, 0};
      cyclic(1, 1);
      break;
    default:
      raise(ErrorKind::InternalConsistency, "unexpected discriminant valuation " + std::to_string(vD));
  }
  return d;
}

int LocalData::components() const {
  switch (kodaira.kind) {
    case Kodaira::Good: return 1;
    case Kodaira::I: return kodaira.n;
    case Kodaira::II: return 1;
    case Kodaira::III: return 2;
    case Kodaira::IV: return 3;
    case Kodaira::I0Star: return 5;
    case Kodaira::IStar: return 5 + kodaira.n;
    case Kodaira::IVStar: return 7;
    case Kodaira::IIIStar: return 8;
    case Kodaira::IIStar: return 9;
  }
  return 0;
}

int LocalData::rational_components(int n) const {
  if (comp_structure == ComponentShape::KleinFour) {
    int fixed = 1;
    for (int f : frobenius.cycles)
      if (n % f == 0) fixed += f;
    return fixed;
  }
  if (frobenius.sign == 1 || n % 2 == 0) return comp_order;
  return comp_order % 2 == 0 ? 2 : 1;
}

LocalData reduction_data(const WeierstrassModel& E, const Place& v) { return classify_local(local_model(E, v), 1); }

LocalData classify_reduction(const WeierstrassModel& E, const Place& v) {
  if (!v.is_infinite()) {
    const int vc4 = poly_valuation(E.c4(), v);
    const int vd = poly_valuation(E.discriminant(), v);
    if (vc4 >= 4 && vd >= 12) raise(ErrorKind::Precondition, "model is not minimal at " + v.to_string());
  }
  return reduction_data(E, v);
}

LocalData unramified_base_change(const WeierstrassModel& E, const Place& v, int n) {
  return classify_local(local_model(E, v), n);
}

LocalData unramified_base_change(const LocalData& d, int n) {
  if (n < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  return classify_local(d.model, d.ext_degree * n);
}

std::vector<LocalData> reduction_table(const WeierstrassModel& E) {
  std::vector<LocalData> out{reduction_data(E, Place::infinity(E.field()))};
  for (const Place& v : places_dividing(E.discriminant())) out.push_back(reduction_data(E, v));
  return out;
}

namespace {

void check_l(const LocalData& d, int l, bool odd_only) {
  if (l < 2 || (odd_only && l == 2)) raise(ErrorKind::Unsupported, "l must be an odd prime");
  for (int r = 2; r * r <= l; ++r)
    if (l % r == 0) raise(ErrorKind::InvalidParameter, "l must be prime");
  if (static_cast<std::uint32_t>(l) == d.residue->p()) raise(ErrorKind::Unsupported, "l equals the characteristic");
}

}  // namespace

int special_fiber_l_torsion(const LocalData& d, int l) {
  check_l(d, l, true);
  switch (d.kodaira.kind) {
    case Kodaira::Good: return 2;
    case Kodaira::I: return 1 + (d.kodaira.n % l == 0 ? 1 : 0);
    default:
      if (d.comp_structure == ComponentShape::KleinFour) return 0;
      return d.comp_order % l == 0 ? 1 : 0;
  }
}

PhiDims phi_l_dims(const LocalData& d, int l, int n) {
  check_l(d, l, false);
  if (n < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  PhiDims out;
  if (d.comp_structure == ComponentShape::KleinFour) {
    if (l != 2) return out;
    out.geometric = 2;
    const int fixed = d.rational_components(n);
    out.rational = fixed == 4 ? 2 : fixed == 2 ? 1 : 0;
    return out;
  }
  if (d.comp_order % l != 0) return out;
  out.geometric = 1;
  const bool trivial = d.frobenius.sign == 1 || n % 2 == 0 || l == 2;
  out.rational = trivial ? 1 : 0;
  return out;
}

}  // namespace ellroot
