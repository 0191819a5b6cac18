#include "ellroot/polynomial.hpp"

#include <algorithm>
#include <random>

#include "ellroot/error.hpp"

namespace ellroot {

Poly::Poly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) raise(ErrorKind::Precondition, "polynomial without a field");
  for (Code c : c_)
    if (!field_->in_range(c)) raise(ErrorKind::InvalidParameter, "coefficient out of range");
  normalize();
}

Poly Poly::constant(const FieldPtr& field, Code c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldPtr& field, Code c, int degree) {
  std::vector<Code> v(degree + 1, 0);
  v[degree] = c;
  return Poly(field, std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::low_order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return INT32_MAX;
}

Poly Poly::operator+(const Poly& o) const {
  const FieldPtr& f = field_ ? field_ : o.field_;
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add(coeff(static_cast<int>(i)), o.coeff(static_cast<int>(i)));
  return Poly(f, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (Code& c : r.c_) c = field_->neg(c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  const FieldPtr& f = field_ ? field_ : o.field_;
  if (c_.empty() || o.c_.empty()) return Poly(f);
  std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j]) r[i + j] = f->add(r[i + j], f->mul(c_[i], o.c_[j]));
  }
  return Poly(f, std::move(r));
}

Poly Poly::scaled(Code c) const {
  Poly r = *this;
  for (Code& x : r.c_) x = field_->mul(x, c);
  r.normalize();
  return r;
}

Code Poly::evaluate(Code x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Code> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i)), c_[i]);
  return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
  if (c_.empty()) raise(ErrorKind::DivisionByZero, "monic of zero polynomial");
  return scaled(field_->inv(c_.back()));
}

Poly Poly::shift_down(int n) const {
  if (n <= 0) return *this;
  if (n > low_order() && !c_.empty()) raise(ErrorKind::InternalConsistency, "inexact division by a power of x");
  if (n >= static_cast<int>(c_.size())) return Poly(field_);
  return Poly(field_, std::vector<Code>(c_.begin() + n, c_.end()));
}

Poly Poly::shift_up(int n) const {
  if (c_.empty() || n <= 0) return *this;
  std::vector<Code> r(n, 0);
  r.insert(r.end(), c_.begin(), c_.end());
  return Poly(field_, std::move(r));
}

std::string Poly::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += field_->to_string(c_[i]);
  }
  return s + "]";
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs() < b.coeffs();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldPtr& f = b.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Code> r = a.coeffs();
  std::vector<Code> qt(a.degree() - b.degree() + 1, 0);
  const Code inv = f->inv(b.leading());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Code c = f->mul(r[i], inv);
    qt[i - db] = c;
    if (c == 0) continue;
    const Code nc = f->neg(c);
    for (int j = 0; j <= db; ++j)
      if (b.coeff(j)) r[i - db + j] = f->add(r[i - db + j], f->mul(nc, b.coeff(j)));
  }
  r.resize(db);
  return {Poly(f, std::move(qt)), Poly(f, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& modulus) {
  Poly r = Poly::constant(modulus.field(), modulus.field()->one()) % modulus;
  base = base % modulus;
  while (e) {
    if (e & 1) r = (r * base) % modulus;
    e >>= 1;
    if (e) base = (base * base) % modulus;
  }
  return r;
}

int multiplicity(Poly a, const Poly& b) {
  if (b.degree() < 1 || a.is_zero()) raise(ErrorKind::Precondition, "multiplicity needs a nonzero a and nonconstant b");
  int m = 0;
  for (;;) {
    auto [qt, r] = divmod(a, b);
    if (!r.is_zero()) return m;
    a = std::move(qt);
    ++m;
  }
}

Poly map_coeffs(const Poly& a, const Embedding& e) {
  std::vector<Code> r(a.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = e.map(a.coeffs()[i]);
  return Poly(e.over(), std::move(r));
}

Poly taylor_shift(const Poly& a, const Embedding& e, Code theta) {
  const FiniteField& F = *e.over();
  std::vector<Code> b = map_coeffs(a, e).coeffs();
  const int n = static_cast<int>(b.size()) - 1;
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) b[j] = F.add(b[j], F.mul(theta, b[j + 1]));
  return Poly(e.over(), std::move(b));
}

namespace {

std::mt19937_64& rng() {
  thread_local std::mt19937_64 gen(0x5eed);
  return gen;
}

// Cantor-Zassenhaus splitting of a monic squarefree g whose irreducible
// factors all have degree d.
void split_equal_degree(const Poly& g, int d, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const FiniteField& F = *g.field();
  const std::uint64_t q = F.q();
  std::uniform_int_distribution<Code> coeff(0, F.q() - 1);
  for (;;) {
    std::vector<Code> c(g.degree());
    for (Code& x : c) x = coeff(rng());
    Poly a(g.field(), c);
    if (a.degree() < 1) continue;
    // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q - 1)/2)
    Poly b = a % g, cur = b;
    for (int i = 1; i < d; ++i) {
      cur = pow_mod(cur, q, g);
      b = (b * cur) % g;
    }
    b = pow_mod(b, (q - 1) / 2, g) - Poly::constant(g.field(), F.one());
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_equal_degree(h, d, out);
      split_equal_degree(g / h, d, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> irreducible_factors(const Poly& f) {
  if (f.is_zero()) raise(ErrorKind::Precondition, "factoring the zero polynomial");
  std::vector<Poly> out;
  if (f.degree() < 1) return out;
  const FieldPtr& field = f.field();
  const Poly x = Poly::x(field);
  Poly rem = f.monic();
  Poly h = x % rem;
  for (int d = 1; rem.degree() > 0; ++d) {
    h = pow_mod(h, field->q(), rem);
    Poly g = gcd(rem, h - x);
    if (g.degree() > 0) {
      split_equal_degree(g, d, out);
      Poly c = gcd(rem, g);
      while (c.degree() > 0) {
        rem = rem / c;
        c = gcd(rem, c);
      }
      if (rem.degree() > 0) h = h % rem;
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<Code> roots(const Poly& f) {
  if (f.is_zero()) raise(ErrorKind::Precondition, "roots of the zero polynomial");
  std::vector<Code> out;
  if (f.degree() < 1) return out;
  const FieldPtr& field = f.field();
  const Poly m = f.monic();
  const Poly x = Poly::x(field);
  Poly g = gcd(m, pow_mod(x, field->q(), m) - x);
  if (g.degree() < 1) return out;
  std::vector<Poly> linear;
  split_equal_degree(g, 1, linear);
  for (const Poly& l : linear) out.push_back(field->neg(l.coeff(0)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ellroot
