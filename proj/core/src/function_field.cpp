#include "ellroot/function_field.hpp"

#include <algorithm>

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot {

Place Place::infinity(const FieldPtr& field) {
  Place v;
  v.field_ = field;
  v.poly_ = Poly(field);
  v.infinite_ = true;
  return v;
}

Place Place::finite(const Poly& poly) {
  if (poly.degree() < 1 || !poly.is_monic()) raise(ErrorKind::InvalidParameter, "place polynomial must be monic of positive degree");
  std::vector<Poly> f = irreducible_factors(poly);
  if (f.size() != 1 || f[0] != poly) raise(ErrorKind::InvalidParameter, "place polynomial is reducible: " + poly.to_string());
  return from_irreducible(poly);
}

Place Place::from_irreducible(const Poly& poly) {
  Place v;
  v.field_ = poly.field();
  v.poly_ = poly;
  return v;
}

std::string Place::to_string() const { return infinite_ ? "inf" : poly_.to_string(); }

bool Place::operator<(const Place& o) const {
  if (infinite_ != o.infinite_) return infinite_;
  if (infinite_) return false;
  return poly_less(poly_, o.poly_);
}

PlaceResidue place_residue(const Place& v) {
  PlaceResidue r;
  const FieldPtr& F = v.field();
  if (v.is_infinite()) {
    r.field = F;
    r.embedding = embedding(F, F);
    r.root = 0;
    return r;
  }
  r.field = make_field(F->p(), F->k() * v.degree());
  r.embedding = embedding(F, r.field);
  std::vector<Code> rs = roots(map_coeffs(v.poly(), *r.embedding));
  if (rs.empty()) raise(ErrorKind::InternalConsistency, "place polynomial has no root in its residue field");
  r.root = rs.front();
  return r;
}

std::uint64_t irreducible_count(std::uint64_t q, int d) {
  // necklace formula: (1/d) sum_{e | d} mu(e) q^(d/e)
  __int128 total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    int mu = 1, n = e;
    for (int r = 2; r <= n; ++r) {
      if (n % r) continue;
      n /= r;
      if (n % r == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu == 0) continue;
    __int128 pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= q;
    total += mu * pw;
  }
  return static_cast<std::uint64_t>(total / d);
}

std::vector<Place> enumerate_places(const FieldPtr& field, int dmax) {
  if (dmax < 1 || dmax > 8) raise(ErrorKind::InvalidParameter, "max degree must be in [1, 8]");
  std::vector<Place> out{Place::infinity(field)};
  const std::uint64_t q = field->q();
  for (int d = 1; d <= dmax; ++d) {
    FieldPtr big = make_field(field->p(), field->k() * d);
    auto emb = embedding(field, big);
    const std::uint64_t n = big->q() - 1;
    std::vector<Place> level;
    if (d == 1) {
      for (Code c = 0; c < field->q(); ++c) {
        level.push_back(Place::from_irreducible(Poly(field, {c, field->one()})));
      }
    } else {
      for (std::uint64_t m = 0; m < n; ++m) {
        // keep m only when it is the smallest exponent in an orbit of size d
        std::uint64_t cur = m;
        bool rep = true;
        for (int i = 1; i < d; ++i) {
          cur = static_cast<std::uint64_t>(static_cast<unsigned __int128>(cur) * q % n);
          if (cur <= m) {
            rep = false;
            break;
          }
        }
        if (!rep) continue;
        const Code theta = big->exp(m);
        std::vector<Code> mp{big->one()};
        Code conj = theta;
        for (int i = 0; i < d; ++i) {
          std::vector<Code> next(mp.size() + 1, 0);
          const Code nc = big->neg(conj);
          for (std::size_t j = 0; j < mp.size(); ++j) {
            next[j + 1] = big->add(next[j + 1], mp[j]);
            next[j] = big->add(next[j], big->mul(nc, mp[j]));
          }
          mp = std::move(next);
          conj = big->pow(conj, q);
        }
        std::vector<Code> c(mp.size());
        for (std::size_t j = 0; j < mp.size(); ++j) {
          auto pre = emb->preimage(mp[j]);
          if (!pre) raise(ErrorKind::InternalConsistency, "minimal polynomial not over the base field");
          c[j] = *pre;
        }
        level.push_back(Place::from_irreducible(Poly(field, c)));
      }
    }
    std::sort(level.begin(), level.end());
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Place> places_dividing(const Poly& f) {
  std::vector<Place> out;
  for (const Poly& g : irreducible_factors(f)) out.push_back(Place::from_irreducible(g));
  std::sort(out.begin(), out.end());
  return out;
}

RationalFunction::RationalFunction(Poly num, Poly den) {
  if (den.is_zero()) raise(ErrorKind::DivisionByZero, "rational function with zero denominator");
  Poly g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  const Code lc = den_.leading();
  const Code inv = den_.field()->inv(lc);
  num_ = num_.scaled(inv);
  den_ = den_.scaled(inv);
  if (num_.is_zero()) num_ = Poly(den_.field());
}

RationalFunction::RationalFunction(Poly num) : RationalFunction(num, Poly::constant(num.field(), num.field()->one())) {}

int valuation(const RationalFunction& f, const Place& v) {
  if (f.is_zero()) raise(ErrorKind::Domain, "valuation of zero");
  if (v.is_infinite()) return f.den().degree() - f.num().degree();
  if (f.num().degree() >= v.degree()) {
    if ((f.num() % v.poly()).is_zero()) return multiplicity(f.num(), v.poly());
  }
  if (f.den().degree() >= v.degree() && (f.den() % v.poly()).is_zero()) return -multiplicity(f.den(), v.poly());
  return 0;
}

FieldElement residue(const RationalFunction& f, const Place& v) {
  PlaceResidue r = place_residue(v);
  if (f.is_zero()) return FieldElement(r.field, 0);
  const int val = valuation(f, v);
  if (val < 0) raise(ErrorKind::Pole, "function has a pole at " + v.to_string());
  if (val > 0) return FieldElement(r.field, 0);
  if (v.is_infinite()) {
    const FiniteField& F = *r.field;
    return FieldElement(r.field, F.div(f.num().leading(), f.den().leading()));
  }
  const Code a = map_coeffs(f.num(), *r.embedding).evaluate(r.root);
  const Code b = map_coeffs(f.den(), *r.embedding).evaluate(r.root);
  return FieldElement(r.field, r.field->div(a, b));
}

}  // namespace ellroot
