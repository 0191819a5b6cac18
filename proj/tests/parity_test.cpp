#include <gtest/gtest.h>

#include <random>

#include "ellroot/error.hpp"
#include "ellroot/parity.hpp"

using namespace ellroot;

namespace {

Poly P(const FieldPtr& F, std::vector<Code> c) { return Poly(F, std::move(c)); }

WeierstrassModel short_curve(const Poly& A, const Poly& B) {
  return WeierstrassModel(Poly(A.field()), Poly(A.field()), Poly(A.field()), A, B);
}

// Legendre symbol of a small integer in F_{p^D}
int legendre_in(std::uint32_t p, int D, std::int64_t a) {
  if (D % 2 == 0) return 1;
  a = ((a % p) + p) % p;
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < (p - 1) / 2; ++i) r = r * a % p;
  return r == 1 ? 1 : -1;
}

// Closed-form local root numbers for p >= 5
int closed_form_root_number(const LocalData& d) {
  const FieldPtr& F = d.place.field();
  const int D = F->k() * d.place.degree() * d.ext_degree;
  switch (d.kodaira.kind) {
    case Kodaira::Good: return 1;
    case Kodaira::I: return d.split ? -1 : 1;
    case Kodaira::IStar:
    case Kodaira::I0Star: return legendre_in(F->p(), D, -1);
    case Kodaira::II:
    case Kodaira::IIStar: return legendre_in(F->p(), D, -1);
    case Kodaira::IV:
    case Kodaira::IVStar: return legendre_in(F->p(), D, -3);
    case Kodaira::III:
    case Kodaira::IIIStar: return legendre_in(F->p(), D, -2);
  }
  return 0;
}

}  // namespace

TEST(LocalRootNumber, Examples) {
  FieldPtr F = make_field(5, 1);
  Place t = Place::finite(P(F, {0, 1}));
  LocalData good = reduction_data(short_curve(P(F, {1}), P(F, {1, 1})), Place::finite(P(F, {2, 1})));
  ASSERT_TRUE(good.is_good());
  EXPECT_EQ(local_root_number_ec(good).w, 1);
  for (Code u = 1; u < 5; ++u) {
    LocalData d = reduction_data(WeierstrassModel(Poly(F), P(F, {u}), Poly(F), Poly(F), Poly::monomial(F, 1, 3)), t);
    EXPECT_EQ(local_root_number_ec(d).w, d.split ? -1 : 1);
  }
  // I_1* over F_5: eta(-1) = +1
  LocalData istar = reduction_data(WeierstrassModel(Poly(F), P(F, {0, 1}), Poly(F), Poly(F), P(F, {0, 0, 0, 0, 1})), t);
  ASSERT_EQ(istar.kodaira.to_string(), "I1*");
  EXPECT_EQ(local_root_number_ec(istar).w, 1);
}

TEST(LocalRootNumber, MatchesClosedFormForEveryType) {
  struct Case {
    int a, b;
  };
  int seen = 0;
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    FieldPtr F = make_field(p, 1);
    // places of degree 1 and 2
    std::vector<Place> places{Place::finite(P(F, {0, 1}))};
    for (const Place& v : enumerate_places(F, 2))
      if (v.degree() == 2) {
        places.push_back(v);
        break;
      }
    for (const Place& v : places) {
      const Poly pi = v.poly();
      auto power = [&](int e) {
        Poly r = P(F, {1});
        for (int i = 0; i < e; ++i) r = r * pi;
        return r;
      };
      for (Case c : {Case{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {2, 4}})
        for (Code u = 1; u < 3; ++u) {
          WeierstrassModel E = short_curve(power(c.a).scaled(u), power(c.b) + power(c.b + 1));
          LocalData d = reduction_data(E, v);
          for (int n = 1; n <= 4; ++n) {
            LocalData dn = unramified_base_change(d, n);
            EXPECT_EQ(local_root_number_ec(dn).w, closed_form_root_number(dn))
                << "p=" << p << " v=" << v.to_string() << " type " << d.kodaira.to_string() << " n=" << n;
            ++seen;
          }
        }
    }
  }
  EXPECT_GT(seen, 200);
}

TEST(LocalRootNumber, PairChoiceDoesNotMatter) {
  FieldPtr F = make_field(7, 1);
  wd::LocalFieldTag tag = wd::local_field(F);
  for (std::uint64_t j : {1u, 2u, 4u, 5u})
    for (double c : {0.5, 1.0, 3.0}) {
      const wd::TameCharacter a = wd::base_character(F, j, std::sqrt(7.0) * c);
      const wd::TameCharacter b = wd::base_character(F, 6 - j, std::sqrt(7.0) / c);
      const wd::TameCharacter a0 = wd::base_character(F, j, 1.0), b0 = wd::base_character(F, 6 - j, 1.0);
      EXPECT_LT(std::abs(wd::root_number(wd::WDRep::character(a) + wd::WDRep::character(b), tag) -
                         wd::root_number(wd::WDRep::character(a0) + wd::WDRep::character(b0), tag)),
                1e-9);
    }
}

TEST(Checks, StRootExamples) {
  FieldPtr F = make_field(5, 1);
  Place t = Place::finite(P(F, {0, 1}));
  LocalData good = reduction_data(short_curve(P(F, {1}), P(F, {1, 1})), Place::finite(P(F, {2, 1})));
  CheckRecord g = check_st_root(good, 2);
  EXPECT_TRUE(g.pass);
  EXPECT_EQ(g.lhs, "1");
  // nonsplit I_3: u = 2 is not a square mod 5
  LocalData ns = reduction_data(WeierstrassModel(Poly(F), P(F, {2}), Poly(F), Poly(F), Poly::monomial(F, 1, 3)), t);
  ASSERT_FALSE(ns.split);
  CheckRecord c = check_st_root(ns, 2);
  EXPECT_EQ(c.lhs, "-1");
  EXPECT_EQ(c.rhs, "-1");
  EXPECT_TRUE(c.pass);
  LocalData sp = reduction_data(WeierstrassModel(Poly(F), P(F, {1}), Poly(F), Poly(F), Poly::monomial(F, 1, 5)), t);
  ASSERT_TRUE(sp.split);
  CheckRecord s = check_st_root(sp, 3);
  EXPECT_EQ(s.lhs, "-1");
  EXPECT_EQ(s.rhs, "-1");
  EXPECT_THROW(check_st_root(sp, 7), Error);
}

TEST(Checks, CondCompExamples) {
  FieldPtr F = make_field(5, 1);
  Place t = Place::finite(P(F, {0, 1}));
  LocalData good = reduction_data(short_curve(P(F, {1}), P(F, {1, 1})), Place::finite(P(F, {2, 1})));
  CheckRecord g = check_cond_comp(good, 3);
  EXPECT_EQ(g.lhs, "0");
  EXPECT_EQ(g.rhs, "0");
  LocalData i6 = reduction_data(WeierstrassModel(Poly(F), P(F, {1}), Poly(F), Poly(F), Poly::monomial(F, 1, 6)), t);
  ASSERT_EQ(i6.kodaira.to_string(), "I6");
  CheckRecord m = check_cond_comp(i6, 3);
  EXPECT_EQ(m.lhs, "1");
  EXPECT_TRUE(m.pass);
  LocalData iii = reduction_data(short_curve(P(F, {0, 1}), Poly(F)), t);
  CheckRecord a = check_cond_comp(iii, 3);
  EXPECT_EQ(a.lhs, "2");
  EXPECT_EQ(a.rhs, "2");
}

TEST(ProductFormula, RandomCurves) {
  std::mt19937 gen(31);
  int checked = 0, minus = 0;
  for (std::uint32_t p : {5u, 7u}) {
    FieldPtr F = make_field(p, 1);
    for (int i = 0; i < 600 && checked < 40 * (p == 5 ? 1 : 2); ++i) {
      auto rp = [&](int deg) {
        std::vector<Code> c(deg + 1);
        for (Code& x : c) x = gen() % p;
        return P(F, c);
      };
      Poly A = rp(gen() % 3), B = rp(gen() % 4);
      const Poly s = rp(1);
      if (i % 2) A = A * s * s, B = B * s * s * s;
      if (i % 3 == 0) B = B * s;
      try {
        if (A.is_zero() && B.is_zero()) continue;
        WeierstrassModel E = short_curve(A.is_zero() ? Poly(F) : A, B.is_zero() ? Poly(F) : B);
        if (E.is_isotrivial()) continue;
        auto table = reduction_table(E);
        const int N = conductor_degree(table) - 4;
        if (N > (p == 5 ? 4 : 3)) continue;
        LPolynomial L = l_polynomial(E);
        EXPECT_EQ(global_root_number(table), L.fe_sign) << "A=" << A.to_string() << " B=" << B.to_string();
        if (L.fe_sign < 0) ++minus;
        ++checked;
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularCurve) << e.what();
      }
    }
  }
  EXPECT_GE(checked, 60);
  EXPECT_GT(minus, 0);
}

TEST(ParityReport, AllChecksPassOnSmallCurves) {
  FieldPtr F = make_field(5, 1);
  // y^2 = x^3 + t x + t^2 + 1 and y^2 = x^3 + x^2 + t^3 (long form)
  std::vector<WeierstrassModel> curves{short_curve(P(F, {0, 1}), P(F, {1, 0, 1})),
                                       WeierstrassModel(Poly(F), P(F, {1}), Poly(F), Poly(F), P(F, {1, 0, 0, 1}))};
  for (const WeierstrassModel& E : curves) {
    ParityReport r = l_parity_report(E, 3, "c");
    for (const CheckRecord& c : r.checks) EXPECT_TRUE(c.pass) << c.name << " lhs=" << c.lhs << " rhs=" << c.rhs;
    EXPECT_EQ(r.places.size(), reduction_table(E).size());
  }
  EXPECT_THROW(l_parity_report(curves[0], 5), Error);
  EXPECT_THROW(l_parity_report(curves[0], 2), Error);
}

TEST(EvenGlob, ExtendedConductorsRegroup) {
  FieldPtr F = make_field(7, 1);
  // bad places of degrees 1 and 2
  WeierstrassModel E = short_curve(P(F, {1, 0, 1}), P(F, {0, 1, 0, 1}));
  auto table = reduction_table(E);
  for (int m : {2, 4}) {
    int sum = 0, regrouped = 0;
    for (int a : extended_conductor_exponents(E, m)) sum += a;
    for (const LocalData& d : table) regrouped += std::gcd(d.place.degree(), m) * d.cond_exp;
    EXPECT_EQ(sum, regrouped);
  }
}
