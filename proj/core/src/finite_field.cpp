#include "ellroot/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <unordered_map>

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot {

namespace {

constexpr std::uint32_t kNoLog = UINT32_MAX;

// Dense polynomials over F_p, low-to-high, used only while choosing the
// defining polynomial.
using FpPoly = std::vector<std::uint64_t>;

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  const std::size_t k = f.size() - 1;
  for (std::size_t i = r.size(); i-- > k;) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * f[j]) % p;
  }
  trim(r);
  return r;
}

FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
  FpPoly r{1};
  while (e) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t c = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

// Rabin's test for a monic f of degree k over F_p.
bool irreducible(const FpPoly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  auto x_frob = [&](std::size_t j) {
    FpPoly h{0, 1};
    for (std::size_t i = 0; i < j; ++i) h = powmod(h, p, f, p);
    return h;
  };
  FpPoly top = x_frob(k);
  if (top != FpPoly{0, 1}) return false;
  for (std::uint64_t r : prime_factors(k)) {
    FpPoly h = x_frob(k / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (poly_gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, int k) : p_(p), k_(k) {
  q_ = static_cast<std::uint32_t>(*checked_pow(p, k));
  place_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) place_[i] = place_[i + 1] * p;
  top_ = place_[0];
  find_modulus();
  basis_trace_.assign(k_, 0);
  for (int i = 0; i < k_; ++i) {
    std::vector<std::uint32_t> c(k_, 0);
    c[i] = 1;
    Code b = from_coeffs(c), acc = 0;
    for (int j = 0; j < k_; ++j) {
      acc = add(acc, b);
      b = pow_generic(b, p_);
    }
    basis_trace_[i] = acc / top_;
  }
  find_generator();
  if (q_ <= kTableLimit) build_tables();
}

void FiniteField::find_modulus() {
  if (k_ == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (Code c = 0; c < q_; ++c) {
    std::vector<std::uint32_t> digits = coeffs(c);
    if (digits[0] == 0) continue;
    FpPoly f(digits.begin(), digits.end());
    f.push_back(1);
    if (irreducible(f, p_)) {
      modulus_.assign(f.begin(), f.end());
      return;
    }
  }
  raise(ErrorKind::InternalConsistency, "no irreducible polynomial found");
}

void FiniteField::find_generator() {
  const std::vector<std::uint64_t> factors = prime_factors(q_ - 1);
  for (Code c = 1; c < q_; ++c) {
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (pow_generic(c, (q_ - 1) / r) == top_) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = c;
      return;
    }
  }
  raise(ErrorKind::InternalConsistency, "no primitive element found");
}

void FiniteField::build_tables() {
  const std::uint32_t n = q_ - 1;
  exp_.resize(n);
  log_.assign(q_, kNoLog);
  // multiplication by the generator is F_p-linear; tabulate it on the basis
  std::vector<std::vector<std::uint32_t>> image(k_);
  for (int i = 0; i < k_; ++i) {
    std::vector<std::uint32_t> c(k_, 0);
    c[i] = 1;
    image[i] = coeffs(mul_generic(from_coeffs(c), generator_));
  }
  std::vector<std::uint32_t> cur(k_, 0), next(k_);
  cur[0] = 1;
  for (std::uint32_t m = 0; m < n; ++m) {
    const Code code = from_coeffs(cur);
    exp_[m] = code;
    log_[code] = m;
    std::fill(next.begin(), next.end(), 0);
    for (int i = 0; i < k_; ++i) {
      if (cur[i] == 0) continue;
      for (int j = 0; j < k_; ++j) next[j] += cur[i] * image[i][j];
    }
    for (int j = 0; j < k_; ++j) cur[j] = next[j] % p_;
  }
  trace_.resize(q_);
  for (Code c = 0; c < q_; ++c) {
    std::uint64_t t = 0;
    Code rest = c;
    for (int i = k_ - 1; i >= 0; --i) {
      t += static_cast<std::uint64_t>(rest % p_) * basis_trace_[i];
      rest /= p_;
    }
    trace_[c] = static_cast<std::uint8_t>(t % p_);
  }
}

Code FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r) * top_;
}

Code FiniteField::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (static_cast<int>(c.size()) > k_) raise(ErrorKind::InvalidParameter, "too many coefficients");
  Code r = 0;
  for (std::size_t i = 0; i < c.size(); ++i) r += (c[i] % p_) * place_[i];
  return r;
}

std::vector<std::uint32_t> FiniteField::coeffs(Code a) const {
  std::vector<std::uint32_t> c(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Code FiniteField::add(Code a, Code b) const {
  if (k_ == 1) {
    const Code s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Code r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    Code s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * w;
    w *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

Code FiniteField::neg(Code a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Code r = 0, w = 1;
  for (int i = 0; i < k_; ++i) {
    const Code d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * w;
    w *= p_;
    a /= p_;
  }
  return r;
}

Code FiniteField::sub(Code a, Code b) const { return add(a, neg(b)); }

Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  return mul_generic(a, b);
}

Code FiniteField::mul_generic(Code a, Code b) const {
  if (k_ == 1) return static_cast<Code>(static_cast<std::uint64_t>(a) * b % p_);
  const std::vector<std::uint32_t> x = coeffs(a), y = coeffs(b);
  std::vector<std::uint64_t> r(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < k_; ++j) r[i + j] = (r[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_;
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t c = r[i];
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) r[i - k_ + j] = (r[i - k_ + j] + (p_ - c) * modulus_[j]) % p_;
  }
  Code out = 0;
  for (int i = 0; i < k_; ++i) out += static_cast<Code>(r[i]) * place_[i];
  return out;
}

Code FiniteField::pow_generic(Code a, std::uint64_t e) const {
  Code r = top_;
  while (e) {
    if (e & 1) r = mul_generic(r, a);
    a = mul_generic(a, a);
    e >>= 1;
  }
  return r;
}

Code FiniteField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return top_;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const unsigned __int128 l = static_cast<unsigned __int128>(log_[a]) * (e % (q_ - 1));
    return exp_[static_cast<std::uint32_t>(l % (q_ - 1))];
  }
  return pow_generic(a, e);
}

Code FiniteField::frobenius(Code a, int times) const {
  if (a == 0) return 0;
  return pow(a, pow_mod(p_, static_cast<std::uint64_t>(times), q_ - 1) + (q_ - 1));
}

Code FiniteField::inv(Code a) const {
  if (a == 0) raise(ErrorKind::DivisionByZero, "inverse of zero");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow_generic(a, q_ - 2);
}

std::uint64_t FiniteField::log(Code a) const {
  if (a == 0) raise(ErrorKind::Domain, "logarithm of zero");
  if (!exp_.empty()) return log_[a];
  return log_bsgs(a);
}

std::uint64_t FiniteField::log_bsgs(Code a) const {
  const std::uint64_t n = q_ - 1;
  const auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<Code, std::uint64_t> baby;
  baby.reserve(m * 2);
  Code cur = top_;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_generic(cur, generator_);
  }
  const Code giant = inv(pow_generic(generator_, m));
  Code gamma = a;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % n;
    gamma = mul_generic(gamma, giant);
  }
  raise(ErrorKind::InternalConsistency, "discrete logarithm not found");
}

Code FiniteField::exp(std::uint64_t m) const {
  m %= q_ - 1;
  if (!exp_.empty()) return exp_[m];
  return pow_generic(generator_, m);
}

std::uint32_t FiniteField::abs_trace(Code a) const {
  if (!trace_.empty()) return trace_[a];
  std::uint64_t t = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    t += static_cast<std::uint64_t>(a % p_) * basis_trace_[i];
    a /= p_;
  }
  return static_cast<std::uint32_t>(t % p_);
}

int FiniteField::quadratic_character(Code a) const {
  if (a == 0) return 0;
  if (!exp_.empty()) return (log_[a] & 1) ? -1 : 1;
  return pow_generic(a, (q_ - 1) / 2) == top_ ? 1 : -1;
}

std::optional<Code> FiniteField::sqrt(Code a) const {
  if (a == 0) return Code{0};
  if (quadratic_character(a) < 0) return std::nullopt;
  Code r;
  if (!exp_.empty()) {
    r = exp_[log_[a] / 2];
  } else {
    // Tonelli-Shanks
    std::uint64_t t = q_ - 1;
    int s = 0;
    while ((t & 1) == 0) {
      t >>= 1;
      ++s;
    }
    Code z = 1;
    while (quadratic_character(z) >= 0) ++z;
    Code c = pow_generic(z, t);
    Code x = pow_generic(a, (t + 1) / 2);
    Code b = pow_generic(a, t);
    int m = s;
    while (b != top_) {
      int i = 0;
      Code bb = b;
      while (bb != top_) {
        bb = mul_generic(bb, bb);
        ++i;
      }
      Code w = c;
      for (int j = 0; j < m - i - 1; ++j) w = mul_generic(w, w);
      x = mul_generic(x, w);
      c = mul_generic(w, w);
      b = mul_generic(b, c);
      m = i;
    }
    r = x;
  }
  return std::min(r, neg(r));
}

std::string FiniteField::to_string(Code a) const {
  if (k_ == 1) return std::to_string(a);
  std::string s = "[";
  const std::vector<std::uint32_t> c = coeffs(a);
  for (int i = 0; i < k_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

namespace {

FieldPtr cached_field(std::uint32_t p, int k) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, int>, FieldPtr> cache;
  if (k < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  const std::optional<std::uint64_t> q = checked_pow(p, static_cast<std::uint64_t>(k));
  if (!q || *q > (std::uint64_t{1} << 31))
    raise(ErrorKind::Capacity, "field of size " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^31");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({p, k});
  if (it != cache.end()) return it->second;
  auto field = std::make_shared<const FiniteField>(p, k);
  cache.emplace(std::make_pair(p, k), field);
  return field;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, int k) {
  if (p < 5 || !is_prime(p))
    raise(ErrorKind::InvalidParameter, "characteristic must be a prime >= 5, got " + std::to_string(p));
  return cached_field(p, k);
}

FieldPtr make_residue_field(std::uint32_t p, int k) {
  if (p < 3 || !is_prime(p)) raise(ErrorKind::InvalidParameter, "characteristic must be an odd prime");
  return cached_field(p, k);
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) raise(ErrorKind::Precondition, "element without a field");
  if (!field_->in_range(code_)) raise(ErrorKind::InvalidParameter, "code out of range");
}

FieldElement FieldElement::from_int(const FieldPtr& field, std::int64_t n) {
  return FieldElement(field, field->from_int(n));
}

const FiniteField& FieldElement::checked(const FieldElement& o) const {
  if (!field_ || !o.field_) raise(ErrorKind::Precondition, "element without a field");
  if (field_ != o.field_) raise(ErrorKind::Domain, "elements belong to different fields");
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return FieldElement(field_, checked(o).add(code_, o.code_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return FieldElement(field_, checked(o).sub(code_, o.code_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return FieldElement(field_, checked(o).mul(code_, o.code_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return FieldElement(field_, checked(o).div(code_, o.code_));
}
FieldElement FieldElement::operator-() const { return FieldElement(field_, field_->neg(code_)); }
FieldElement FieldElement::inverse() const { return FieldElement(field_, field_->inv(code_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field_, field_->pow(code_, e)); }
bool FieldElement::operator==(const FieldElement& o) const { return field_ == o.field_ && code_ == o.code_; }

std::optional<FieldElement> FieldElement::sqrt() const {
  auto r = field_->sqrt(code_);
  if (!r) return std::nullopt;
  return FieldElement(field_, *r);
}
bool FieldElement::is_square() const { return field_->is_square(code_); }
std::string FieldElement::to_string() const { return field_->to_string(code_); }

Embedding::Embedding(FieldPtr sub, FieldPtr over) : sub_(std::move(sub)), over_(std::move(over)) {
  if (sub_->p() != over_->p() || over_->k() % sub_->k() != 0)
    raise(ErrorKind::InvalidParameter, "not a subfield");
  const FiniteField& S = *sub_;
  const FiniteField& O = *over_;
  index_ = (static_cast<std::uint64_t>(O.q()) - 1) / (S.q() - 1);
  Code root = 0;
  if (S.k() > 1) {
    bool found = false;
    for (std::uint64_t i = 0; i + 1 < S.q(); ++i) {
      const Code cand = O.exp(i * index_);
      Code acc = 0;
      for (int j = S.k(); j >= 0; --j) acc = O.add(O.mul(acc, cand), O.from_int(S.modulus()[j]));
      if (acc == 0 && (!found || cand < root)) {
        root = cand;
        found = true;
      }
    }
    if (!found) raise(ErrorKind::InternalConsistency, "defining polynomial has no root in the overfield");
  }
  powers_.assign(S.k(), O.one());
  for (int i = 1; i < S.k(); ++i) powers_[i] = O.mul(powers_[i - 1], root);
  gen_log_ = O.log(map(S.generator()));
}

Code Embedding::map(Code a) const {
  const std::vector<std::uint32_t> c = sub_->coeffs(a);
  Code r = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) r = over_->add(r, over_->mul(over_->from_int(c[i]), powers_[i]));
  return r;
}

std::optional<Code> Embedding::preimage(Code b) const {
  if (b == 0) return Code{0};
  const std::uint64_t l = over_->log(b);
  if (l % index_ != 0) return std::nullopt;
  const std::uint64_t n = sub_->q() - 1;
  const std::uint64_t s0 = (gen_log_ / index_) % n;
  const std::uint64_t e = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>((l / index_) % n) * inverse_mod(s0, n) % n);
  return sub_->exp(e);
}

std::shared_ptr<const Embedding> embedding(const FieldPtr& sub, const FieldPtr& over) {
  static std::mutex mutex;
  static std::map<std::pair<const FiniteField*, const FiniteField*>, std::shared_ptr<const Embedding>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({sub.get(), over.get()});
    if (it != cache.end()) return it->second;
  }
  auto e = std::make_shared<const Embedding>(sub, over);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(sub.get(), over.get()), e).first->second;
}

FieldElement trace_to(const FieldElement& x, const FieldPtr& sub) {
  const FiniteField& O = *x.field();
  auto emb = embedding(sub, x.field());
  Code acc = 0, cur = x.code();
  for (int i = 0; i < O.k() / sub->k(); ++i) {
    acc = O.add(acc, cur);
    cur = O.frobenius(cur, sub->k());
  }
  auto pre = emb->preimage(acc);
  if (!pre) raise(ErrorKind::InternalConsistency, "trace left the subfield");
  return FieldElement(sub, *pre);
}

FieldElement norm_to(const FieldElement& x, const FieldPtr& sub) {
  const FiniteField& O = *x.field();
  auto emb = embedding(sub, x.field());
  const std::uint64_t e = (static_cast<std::uint64_t>(O.q()) - 1) / (sub->q() - 1);
  auto pre = emb->preimage(O.pow(x.code(), e));
  if (!pre) raise(ErrorKind::InternalConsistency, "norm left the subfield");
  return FieldElement(sub, *pre);
}

std::complex<double> unit_root(std::int64_t num, std::uint64_t den) {
  const auto d = static_cast<std::int64_t>(den);
  std::int64_t r = num % d;
  if (r < 0) r += d;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == d) return {-1.0, 0.0};
  if (4 * r == d) return {0.0, 1.0};
  if (4 * r == 3 * d) return {0.0, -1.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d));
}

std::complex<double> additive_character(const FieldElement& x) {
  return unit_root(x.field()->abs_trace(x.code()), x.field()->p());
}

std::complex<double> multiplicative_character(std::uint64_t j, const FieldElement& x) {
  if (x.is_zero()) raise(ErrorKind::Domain, "multiplicative character at zero");
  const std::uint64_t n = x.field()->q() - 1;
  const auto e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j % n) * x.field()->log(x.code()) % n);
  return unit_root(static_cast<std::int64_t>(e), n);
}

namespace {

// counts[r * p + t] = #{ m : m = r mod (q - 1), Tr(G^m) = t } over the big
// field, with scale s = log of the norm of the big generator.
struct GaussBins {
  std::uint64_t period = 0;
  std::uint32_t p = 0;
  std::uint64_t scale = 1;
  std::vector<std::uint32_t> counts;
};

std::shared_ptr<const GaussBins> gauss_bins(const FieldPtr& field, int m) {
  static std::mutex mutex;
  static std::map<std::tuple<std::uint32_t, int, int>, std::shared_ptr<const GaussBins>> cache;
  const auto key = std::make_tuple(field->p(), field->k(), m);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto bins = std::make_shared<GaussBins>();
  FieldPtr big = make_residue_field(field->p(), field->k() * m);
  bins->period = field->q() - 1;
  bins->p = field->p();
  if (m > 1) {
    const std::uint64_t index = (static_cast<std::uint64_t>(big->q()) - 1) / bins->period;
    auto pre = embedding(field, big)->preimage(big->exp(index));
    bins->scale = field->log(*pre);
  }
  bins->counts.assign(bins->period * bins->p, 0);
  std::uint64_t r = 0;
  for (std::uint64_t e = 0; e + 1 < big->q(); ++e) {
    ++bins->counts[r * bins->p + big->abs_trace(big->exp(e))];
    if (++r == bins->period) r = 0;
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, bins).first->second;
}

}  // namespace

std::complex<double> lifted_gauss_sum(const FieldPtr& field, std::uint64_t j, int m) {
  if (m < 1) raise(ErrorKind::InvalidParameter, "lift degree must be positive");
  const std::uint64_t n = field->q() - 1;
  j %= n;
  const std::optional<std::uint64_t> big_q = checked_pow(field->q(), m);
  if (!big_q || *big_q > kDirectGaussLimit) {
    if (m == 1) raise(ErrorKind::Capacity, "field too large for a direct Gauss sum");
    // Hasse-Davenport
    const std::complex<double> base = -lifted_gauss_sum(field, j, 1);
    std::complex<double> r{1.0, 0.0};
    for (int i = 0; i < m; ++i) r *= base;
    return -r;
  }
  auto bins = gauss_bins(field, m);
  std::vector<std::complex<double>> add_roots(bins->p);
  for (std::uint32_t t = 0; t < bins->p; ++t) add_roots[t] = unit_root(t, bins->p);
  const std::uint64_t step = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j) * bins->scale % n);
  std::complex<double> total{0.0, 0.0};
  for (std::uint64_t r = 0; r < n; ++r) {
    std::complex<double> inner{0.0, 0.0};
    const std::uint32_t* row = &bins->counts[r * bins->p];
    for (std::uint32_t t = 0; t < bins->p; ++t)
      if (row[t]) inner += static_cast<double>(row[t]) * add_roots[t];
    const auto e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(step) * r % n);
    total += inner * unit_root(-static_cast<std::int64_t>(e), n);
  }
  return total;
}

std::complex<double> gauss_sum(const FieldPtr& field, std::uint64_t j) { return lifted_gauss_sum(field, j, 1); }

}  // namespace ellroot
