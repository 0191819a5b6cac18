#include <gtest/gtest.h>

#include <random>

#include "ellroot/error.hpp"
#include "ellroot/function_field.hpp"

using namespace ellroot;

namespace {

Poly P(const FieldPtr& F, std::vector<Code> c) { return Poly(F, std::move(c)); }

// Monic irreducibles of degree d by exhaustive trial division against all
// monic polynomials of degree <= d/2.
std::uint64_t brute_irreducible_count(const FieldPtr& F, int d) {
  const std::uint64_t q = F->q();
  std::vector<Poly> small;
  for (int e = 1; e <= d / 2; ++e) {
    std::uint64_t total = 1;
    for (int i = 0; i < e; ++i) total *= q;
    for (std::uint64_t c = 0; c < total; ++c) {
      std::vector<Code> v(e + 1);
      std::uint64_t rest = c;
      for (int i = 0; i < e; ++i) {
        v[i] = static_cast<Code>(rest % q);
        rest /= q;
      }
      v[e] = F->one();
      small.emplace_back(F, v);
    }
  }
  std::uint64_t total = 1, count = 0;
  for (int i = 0; i < d; ++i) total *= q;
  for (std::uint64_t c = 0; c < total; ++c) {
    std::vector<Code> v(d + 1);
    std::uint64_t rest = c;
    for (int i = 0; i < d; ++i) {
      v[i] = static_cast<Code>(rest % q);
      rest /= q;
    }
    v[d] = F->one();
    Poly f(F, v);
    bool irreducible = true;
    for (const Poly& g : small)
      if ((f % g).is_zero()) {
        irreducible = false;
        break;
      }
    if (irreducible) ++count;
  }
  return count;
}

}  // namespace

TEST(Places, DegreeOneOverF5) {
  FieldPtr F = make_field(5, 1);
  auto places = enumerate_places(F, 1);
  ASSERT_EQ(places.size(), 6u);
  EXPECT_TRUE(places[0].is_infinite());
  for (Code c = 0; c < 5; ++c) EXPECT_EQ(places[c + 1].poly(), P(F, {c, 1}));
}

TEST(Places, CountsMatchNecklaceFormulaAndBruteForce) {
  for (std::uint32_t p : {5u, 7u}) {
    FieldPtr F = make_field(p, 1);
    auto places = enumerate_places(F, 6);
    std::vector<std::uint64_t> per(7, 0);
    for (const Place& v : places)
      if (!v.is_infinite()) ++per[v.degree()];
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(per[d], irreducible_count(p, d)) << "q=" << p << " d=" << d;
    // necklace identity sum_{d|n} d N_d = q^n
    for (int n = 1; n <= 6; ++n) {
      std::uint64_t s = 0, qn = 1;
      for (int i = 0; i < n; ++i) qn *= p;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += d * per[d];
      EXPECT_EQ(s, qn);
    }
    EXPECT_TRUE(std::is_sorted(places.begin(), places.end()));
  }
  FieldPtr F5 = make_field(5, 1);
  EXPECT_EQ(brute_irreducible_count(F5, 2), 10u);
  EXPECT_EQ(brute_irreducible_count(F5, 3), 40u);
  FieldPtr F25 = make_field(5, 2);
  auto p25 = enumerate_places(F25, 2);
  EXPECT_EQ(p25.size(), 1u + 25u + brute_irreducible_count(F25, 2));
}

TEST(Places, RejectsBadDegree) {
  try {
    enumerate_places(make_field(7, 1), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
  }
  EXPECT_THROW(enumerate_places(make_field(7, 1), 9), Error);
  EXPECT_THROW(Place::finite(P(make_field(5, 1), {4, 0, 1})), Error);  // t^2 - 1
}

TEST(Valuation, Examples) {
  FieldPtr F = make_field(5, 1);
  Place t = Place::finite(P(F, {0, 1}));
  Place inf = Place::infinity(F);
  EXPECT_EQ(valuation(RationalFunction(P(F, {0, 0, 0, 1})), t), 3);
  EXPECT_EQ(valuation(RationalFunction(P(F, {0, 1})), inf), -1);
  Place v = Place::finite(P(F, {2, 0, 1}));
  EXPECT_EQ(valuation(RationalFunction(P(F, {4, 0, 4, 0, 1})), v), 2);
  EXPECT_THROW(valuation(RationalFunction(Poly(F)), t), Error);
}

TEST(Residue, Examples) {
  FieldPtr F = make_field(5, 1);
  Place v = Place::finite(P(F, {3, 1}));
  EXPECT_EQ(residue(RationalFunction(P(F, {0, 1})), v).code(), 2u);
  Place t = Place::finite(P(F, {0, 1}));
  try {
    residue(RationalFunction(P(F, {1}), P(F, {0, 1})), t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Pole);
  }
  // degree-2 place: residue of t^2 + 1 is theta^2 + 1 for the chosen root
  Place w = Place::finite(P(F, {2, 0, 1}));
  PlaceResidue r = place_residue(w);
  const FiniteField& E = *r.field;
  EXPECT_EQ(E.q(), 25u);
  EXPECT_EQ(E.add(E.mul(r.root, r.root), E.from_int(2)), 0u);
  EXPECT_EQ(residue(RationalFunction(P(F, {1, 0, 1})), w).code(), E.add(E.mul(r.root, r.root), E.one()));
  // infinity: (2t^2 + 1)/(t^2 + 3) -> 2
  Place inf = Place::infinity(F);
  EXPECT_EQ(residue(RationalFunction(P(F, {1, 0, 2}), P(F, {3, 0, 1})), inf).code(), 2u);
}

TEST(Valuation, ProductFormulaAndUltrametric) {
  FieldPtr F = make_field(7, 1);
  std::mt19937 gen(11);
  auto random_poly = [&](int deg) {
    std::vector<Code> c(deg + 1);
    for (Code& x : c) x = gen() % 7;
    if (c.back() == 0) c.back() = 1;
    return Poly(F, c);
  };
  for (int i = 0; i < 200; ++i) {
    RationalFunction f(random_poly(gen() % 6), random_poly(gen() % 6));
    int total = valuation(f, Place::infinity(F));
    for (const Place& v : places_dividing(f.num())) total += valuation(f, v) * v.degree();
    for (const Place& v : places_dividing(f.den())) total += valuation(f, v) * v.degree();
    EXPECT_EQ(total, 0);
  }
  auto places = enumerate_places(F, 2);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(gen() % 5), b = random_poly(gen() % 5);
    if ((a + b).is_zero()) continue;
    const Place& v = places[gen() % places.size()];
    const int va = valuation(RationalFunction(a), v), vb = valuation(RationalFunction(b), v);
    const int vs = valuation(RationalFunction(a + b), v);
    EXPECT_GE(vs, std::min(va, vb));
    if (va != vb) EXPECT_EQ(vs, std::min(va, vb));
  }
}
