#include "ellroot/lfunction.hpp"

#include <cmath>
#include <complex>

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer overflow in L-function arithmetic");
  return r;
}

i128 checked_add(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) raise(ErrorKind::Overflow, "integer overflow in L-function arithmetic");
  return r;
}

i128 ipow(i128 b, int e) {
  i128 r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) raise(ErrorKind::Overflow, "coefficient does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

// R <- R / (1 - a T^d + [good] Q T^(2d)), truncated
void divide_factor(std::vector<i128>& R, int d, std::int64_t a, i128 Q, bool good) {
  for (std::size_t i = d; i < R.size(); ++i) {
    R[i] += a * R[i - d];
    if (good && i >= static_cast<std::size_t>(2 * d)) R[i] -= Q * R[i - 2 * d];
  }
}

}  // namespace

PointCounter::PointCounter(FieldPtr field) : field_(std::move(field)) {
  if (!field_->has_tables()) raise(ErrorKind::Capacity, "point counting needs a tabulated field");
  const std::uint64_t n = field_->q() - 1;
  zech_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Code s = field_->add(field_->exp(i), field_->one());
    zech_[i] = s == 0 ? -1 : static_cast<std::int32_t>(field_->log(s));
  }
}

std::int64_t PointCounter::trace(Code A, Code B) const {
  const std::int64_t n = static_cast<std::int64_t>(field_->q()) - 1;
  std::int64_t sum = field_->quadratic_character(B);
  const bool has_a = A != 0, has_b = B != 0;
  const std::int64_t la = has_a ? static_cast<std::int64_t>(field_->log(A)) : 0;
  const std::int64_t lb = has_b ? static_cast<std::int64_t>(field_->log(B)) : 0;
  const std::int32_t* Z = zech_.data();
  std::int64_t u = 0, w = la;  // logs of x^3 and A x for x = g^i
  for (std::int64_t i = 0; i < n; ++i) {
    bool zero = false;
    std::int64_t l = u;
    if (has_a) {
      std::int64_t d = w - u;
      if (d < 0) d += n;
      const std::int32_t z = Z[d];
      if (z < 0)
        zero = true;
      else {
        l = u + z;
        if (l >= n) l -= n;
      }
    }
    if (has_b) {
      if (zero) {
        l = lb;
        zero = false;
      } else {
        std::int64_t d = lb - l;
        if (d < 0) d += n;
        const std::int32_t z = Z[d];
        if (z < 0)
          zero = true;
        else
          l += z;  // parity is all that matters from here on
      }
    }
    if (!zero) sum += (l & 1) ? -1 : 1;
    u += 3;
    if (u >= n) u -= n;
    if (u >= n) u -= n;
    if (u >= n) u -= n;
    if (++w >= n) w -= n;
  }
  return -sum;
}

std::int64_t trace_by_enumeration(const FieldPtr& field, Code A, Code B) {
  const FiniteField& F = *field;
  std::int64_t sum = 0;
  for (Code x = 0; x < F.q(); ++x) {
    const Code f = F.add(F.add(F.mul(F.mul(x, x), x), F.mul(A, x)), B);
    sum += F.quadratic_character(f);
  }
  return -sum;
}

LocalFactor local_factor(const WeierstrassModel&, const Place& v, const LocalData& d) {
  LocalFactor f;
  f.place = v;
  switch (d.kodaira.kind) {
    case Kodaira::Good: {
      f.kind = LocalFactor::Kind::Good;
      const LocalModel& m = *d.model;
      if (m.residue->has_tables())
        f.a_v = PointCounter(m.residue).trace(m.A.coeff(0), m.B.coeff(0));
      else
        f.a_v = trace_by_enumeration(m.residue, m.A.coeff(0), m.B.coeff(0));
      break;
    }
    case Kodaira::I:
      f.kind = d.split ? LocalFactor::Kind::SplitMult : LocalFactor::Kind::NonsplitMult;
      f.a_v = d.split ? 1 : -1;
      break;
    default:
      f.kind = LocalFactor::Kind::Additive;
      f.a_v = 0;
  }
  return f;
}

int conductor_degree(const std::vector<LocalData>& table) {
  int deg = 0;
  for (const LocalData& d : table) deg += d.cond_exp * d.place.degree();
  return deg;
}

LComputation compute_l_function(const WeierstrassModel& E) {
  if (E.is_isotrivial()) raise(ErrorKind::Unsupported, "isotrivial curve");
  LComputation out;
  out.reduction = reduction_table(E);
  const int N = conductor_degree(out.reduction) - 4;
  if (N < 0) raise(ErrorKind::ConductorTooSmall, "conductor degree below 4");
  const int D = N + 1;
  const FieldPtr& base = E.field();
  const std::uint64_t q = base->q();
  const WeierstrassModel S = E.is_short() ? E : E.short_model();

  std::vector<i128> R(D + 1, 0);
  R[0] = 1;
  auto hasse = [&](std::int64_t a, i128 Q) {
    ++out.good_places;
    if (static_cast<i128>(a) * a > 4 * Q) ++out.hasse_violations;
  };

  for (int d = 1; d <= D; ++d) {
    const i128 Q = ipow(q, d);
    if (Q > static_cast<i128>(kTableLimit)) raise(ErrorKind::Capacity, "conductor too large for point counting");
    FieldPtr F = make_field(base->p(), base->k() * d);
    auto emb = embedding(base, F);
    const Poly A = map_coeffs(S.a4(), *emb), B = map_coeffs(S.a6(), *emb), Dl = map_coeffs(S.discriminant(), *emb);
    const PointCounter counter(F);
    const std::uint64_t n = F->q() - 1;
    auto visit = [&](Code theta) {
      if (Dl.evaluate(theta) == 0) return;
      const std::int64_t a = counter.trace(A.evaluate(theta), B.evaluate(theta));
      hasse(a, Q);
      divide_factor(R, d, a, Q, true);
    };
    if (d == 1) visit(0);
    for (std::uint64_t m = 0; m < n; ++m) {
      // keep m if it is the smallest log in a Frobenius orbit of size d
      std::uint64_t x = m;
      int size = 0;
      bool smallest = true;
      for (int i = 1; i <= d; ++i) {
        x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * q % n);
        if (x < m) {
          smallest = false;
          break;
        }
        if (x == m) {
          size = i;
          break;
        }
      }
      if (smallest && size == d) visit(F->exp(m));
    }
  }

  for (const LocalData& ld : out.reduction) {
    const int d = ld.place.degree();
    if (!ld.place.is_infinite() && ld.is_good() && d > D) continue;
    LocalFactor f = local_factor(E, ld.place, ld);
    if (f.kind != LocalFactor::Kind::Good) out.bad_factors.push_back(f);
    if (d > D) continue;
    const i128 Q = ipow(q, d);
    if (f.kind == LocalFactor::Kind::Good) hasse(f.a_v, Q);
    divide_factor(R, d, f.a_v, Q, f.kind == LocalFactor::Kind::Good);
  }

  out.truncation = narrow(R[D]);
  if (out.truncation != 0)
    raise(ErrorKind::InternalConsistency,
          "Euler product coefficient at T^" + std::to_string(D) + " is " + std::to_string(out.truncation));
  out.L.N = N;
  out.L.q = q;
  out.L.coeffs.clear();
  for (int i = 0; i <= N; ++i) out.L.coeffs.push_back(narrow(R[i]));
  out.L.fe_sign = functional_equation_sign(out.L.coeffs, q, N);
  out.L.analytic_rank = analytic_rank(out.L.coeffs, q);
  return out;
}

LPolynomial l_polynomial(const WeierstrassModel& E) { return compute_l_function(E).L; }

int functional_equation_sign(const std::vector<std::int64_t>& c, std::uint64_t q, int N) {
  if (N < 0 || static_cast<int>(c.size()) != N + 1 || c[0] != 1)
    raise(ErrorKind::FunctionalEquation, "malformed L-polynomial");
  const i128 qN = ipow(q, N);
  int w;
  if (c[N] == qN)
    w = 1;
  else if (c[N] == -qN)
    w = -1;
  else
    raise(ErrorKind::FunctionalEquation, "leading coefficient is not +-q^N");
  for (int i = 0; i <= N / 2; ++i)
    if (static_cast<i128>(c[N - i]) != w * ipow(q, N - 2 * i) * c[i])
      raise(ErrorKind::FunctionalEquation, "coefficient " + std::to_string(N - i) + " breaks the symmetry");
  return w;
}

int analytic_rank(const std::vector<std::int64_t>& c, std::uint64_t q) {
  std::vector<i128> cur(c.begin(), c.end());
  while (!cur.empty() && cur.back() == 0) cur.pop_back();
  int r = 0;
  while (cur.size() > 1) {
    // cur = (1 - qT) b
    std::vector<i128> b(cur.size());
    b[0] = cur[0];
    for (std::size_t i = 1; i < cur.size(); ++i) b[i] = checked_add(cur[i], checked_mul(q, b[i - 1]));
    if (b.back() != 0) break;
    b.pop_back();
    cur = std::move(b);
    ++r;
  }
  return r;
}

LPolynomial constant_extension_l(const LPolynomial& L, int m) {
  if (m < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  const int N = L.N;
  // power sums of the inverse roots from Newton's identities
  const int K = m * N;
  std::vector<i128> c(K + 1, 0), p(K + 1, 0);
  for (int i = 0; i <= N; ++i) c[i] = L.coeffs[i];
  for (int k = 1; k <= K; ++k) {
    i128 s = checked_mul(-k, c[k]);
    for (int i = 1; i < k; ++i) s = checked_add(s, -checked_mul(c[i], p[k - i]));
    p[k] = s;
  }
  std::vector<i128> e(N + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= N; ++k) {
    i128 s = 0;
    for (int i = 0; i < k; ++i) s = checked_add(s, checked_mul(e[i], p[m * (k - i)]));
    if (s % k != 0) raise(ErrorKind::InternalConsistency, "inexact Newton division");
    e[k] = -s / k;
  }
  LPolynomial out;
  out.N = N;
  out.q = narrow(ipow(L.q, m));
  out.coeffs.clear();
  for (i128 v : e) out.coeffs.push_back(narrow(v));
  out.fe_sign = functional_equation_sign(out.coeffs, out.q, N);
  out.analytic_rank = analytic_rank(out.coeffs, out.q);
  return out;
}

double rh_deviation(const LPolynomial& L) {
  const int N = L.N;
  if (N == 0) return 0.0;
  using C = std::complex<long double>;
  // monic in T after dividing by the leading coefficient
  std::vector<C> a(N + 1);
  for (int i = 0; i <= N; ++i) a[i] = C(static_cast<long double>(L.coeffs[i]) / L.coeffs[N], 0);
  std::vector<C> z(N);
  const long double r0 = 1.0L / L.q;
  for (int i = 0; i < N; ++i) z[i] = std::polar(r0, 0.4L + 2.0L * 3.14159265358979323846L * i / N);
  auto eval = [&](C x) {
    C s = a[N];
    for (int i = N - 1; i >= 0; --i) s = s * x + a[i];
    return s;
  };
  for (int it = 0; it < 2000; ++it) {
    long double change = 0;
    for (int i = 0; i < N; ++i) {
      C den = 1;
      for (int j = 0; j < N; ++j)
        if (j != i) den *= z[i] - z[j];
      const C step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-24L) break;
  }
  double worst = 0;
  for (const C& x : z) worst = std::max(worst, static_cast<double>(std::fabs(std::abs(x) - r0)));
  return worst;
}

}  // namespace ellroot
