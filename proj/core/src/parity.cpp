#include "ellroot/parity.hpp"

#include <cmath>
#include <numeric>

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot {

namespace {

int sign_of(int parity) { return parity % 2 ? -1 : 1; }

int potentially_good_e(int v_delta) { return 12 / std::gcd(v_delta, 12); }

int multiplicative_order(std::uint64_t q, int e) {
  std::uint64_t x = q % e;
  for (int f = 1; f <= e; ++f) {
    if (x == 1 % static_cast<std::uint64_t>(e)) return f;
    x = x * (q % e) % e;
  }
  raise(ErrorKind::InternalConsistency, "q is not a unit modulo e");
}

std::string place_key(const LocalData& d) { return d.place.to_string(); }

// indices i with c_{N-i} != w q^{N-2i} c_i, compared as c_{N-i} q^{2i} = w q^N c_i
int fe_mismatches(const LPolynomial& L) {
  int bad = 0;
  const int N = L.N;
  if (static_cast<int>(L.coeffs.size()) != N + 1) return N + 1;
  for (int i = 0; i <= N; ++i) {
    const int j = N - i;
    // both sides scaled by q^{max(0, 2i - N)} to stay integral
    __int128 lhs = L.coeffs[j], rhs = static_cast<__int128>(L.fe_sign) * L.coeffs[i];
    for (int e = 0; e < N - 2 * i; ++e) rhs *= static_cast<__int128>(L.q);
    for (int e = 0; e < 2 * i - N; ++e) lhs *= static_cast<__int128>(L.q);
    if (lhs != rhs) ++bad;
  }
  return bad;
}

}  // namespace

CheckRecord make_check(std::string name, long long lhs, long long rhs) {
  return CheckRecord{std::move(name), lhs == rhs, std::to_string(lhs), std::to_string(rhs)};
}

LocalRootNumber local_root_number_ec(const LocalData& d) {
  const FieldPtr& base = d.place.field();
  if (base->p() < 5) raise(ErrorKind::Unsupported, "residue characteristic below 5");
  const int degree = d.place.degree() * d.ext_degree;
  LocalRootNumber out;
  out.tag = wd::local_field(base, degree);
  const double Q = std::pow(static_cast<double>(base->q()), degree);
  const double root_q = std::sqrt(Q);
  using wd::WDRep;
  const wd::TameCharacter eta = wd::base_character(base, (base->q() - 1) / 2);
  switch (d.kodaira.kind) {
    case Kodaira::Good:
      out.rep = WDRep::character(wd::unramified_character(root_q)) + WDRep::character(wd::unramified_character(root_q));
      break;
    case Kodaira::I:
      out.rep = WDRep::steinberg(wd::unramified_character(d.split ? 1.0 : -1.0));
      break;
    case Kodaira::IStar:
      out.rep = WDRep::steinberg(eta);
      break;
    default: {
      const int e = potentially_good_e(d.v_delta_min);
      if (e == 2) {
        wd::TameCharacter x = eta;
        x.frobenius_value = root_q;
        out.rep = WDRep::character(x) + WDRep::character(x);
        break;
      }
      const int f = multiplicative_order(base->q(), e);
      const std::uint64_t j = (*checked_pow(base->q(), f) - 1) / e;
      if (pow_mod(base->q(), degree, e) == 1) {
        const wd::TameCharacter theta = wd::tame_character(base, f, j, root_q);
        out.rep = WDRep::character(theta) + WDRep::character(wd::tame_character(base, f, (*checked_pow(base->q(), f) - 1) - j, root_q));
      } else {
        // det(Ind theta)(Frob) = -theta(pi) = Q
        out.rep = WDRep::induced(wd::tame_character(base, f, j, -Q));
      }
    }
  }
  const wd::Complex w = wd::root_number(out.rep, out.tag);
  if (std::abs(w - 1.0) < 1e-9)
    out.w = 1;
  else if (std::abs(w + 1.0) < 1e-9)
    out.w = -1;
  else
    raise(ErrorKind::InternalConsistency, "local root number of an elliptic curve is not +-1 at " + place_key(d));
  return out;
}

int global_root_number(const std::vector<LocalData>& table) {
  int w = 1;
  for (const LocalData& d : table) w *= local_root_number_ec(d).w;
  return w;
}

int global_root_number(const WeierstrassModel& E) { return global_root_number(reduction_table(E)); }

int global_root_number_const_ext(const std::vector<LocalData>& table, int m) {
  if (m < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  int w = 1;
  for (const LocalData& d : table) {
    const int g = std::gcd(d.place.degree(), m);
    const int wl = local_root_number_ec(unramified_base_change(d, m / g)).w;
    if (g % 2 == 1) w *= wl;
  }
  return w;
}

CheckRecord check_st_root(const LocalData& d, int n) {
  if (n < 1 || n > 6) raise(ErrorKind::InvalidParameter, "extension degree must lie in [1, 6]");
  const int lhs = local_root_number_ec(unramified_base_change(d, n)).w;
  const int rhs = n % 2 ? local_root_number_ec(d).w : sign_of(d.cond_exp);
  return make_check("st_root." + place_key(d) + ".n" + std::to_string(n), lhs, rhs);
}

std::vector<int> extended_conductor_exponents(const WeierstrassModel& E, int m) {
  const FieldPtr& F = E.field();
  const WeierstrassModel Em = E.base_extend(make_field(F->p(), F->k() * m));
  std::vector<Place> places{Place::infinity(Em.field())};
  for (const Place& v : places_dividing(Em.discriminant())) places.push_back(v);
  std::vector<int> out;
  for (const Place& v : places) {
    const MinimalModel mm = minimal_model_at(Em, v);
    if (mm.v_delta == 0)
      out.push_back(0);
    else
      out.push_back(mm.v_c4 && *mm.v_c4 == 0 ? 1 : 2);
  }
  return out;
}

std::vector<CheckRecord> check_even_glob(const WeierstrassModel& E, const std::vector<LocalData>& table,
                                         const LPolynomial& L, int m) {
  if (m < 2 || m % 2) raise(ErrorKind::InvalidParameter, "even extension degree expected");
  const std::string tag = "even_glob.m" + std::to_string(m);
  int sum = 0;
  for (int a : extended_conductor_exponents(E, m)) sum += a;
  int regrouped = 0;
  for (const LocalData& d : table) regrouped += std::gcd(d.place.degree(), m) * d.cond_exp;
  std::vector<CheckRecord> out;
  out.push_back(make_check(tag + ".sign", sign_of(sum), global_root_number_const_ext(table, m)));
  out.push_back(make_check(tag + ".regroup", sum, regrouped));
  const LPolynomial Lm = constant_extension_l(L, m);
  out.push_back(make_check(tag + ".fe", sign_of(sum), Lm.fe_sign));
  if (Lm.analytic_rank <= 1) out.push_back(make_check(tag + ".rank", Lm.analytic_rank % 2, sum % 2));
  return out;
}

CheckRecord check_cond_comp(const LocalData& d, int l) {
  const int rhs = (2 - special_fiber_l_torsion(d, l)) + phi_l_dims(d, l, 1).geometric;
  return make_check("cond_comp." + place_key(d) + ".l" + std::to_string(l), d.cond_exp, rhs);
}

const char* to_string(ParityStatus s) { return s == ParityStatus::Verified ? "VERIFIED" : "PREDICTED"; }

bool ParityReport::all_pass() const {
  for (const CheckRecord& c : checks)
    if (!c.pass) return false;
  return true;
}

ParityReport l_parity_report(const WeierstrassModel& E, int l, const std::string& id) {
  if (l < 3 || !is_prime(l) || static_cast<std::uint32_t>(l) == E.field()->p())
    raise(ErrorKind::InvalidParameter, "l must be an odd prime different from p");
  const LComputation c = compute_l_function(E);
  ParityReport r;
  r.id = id;
  r.q = E.field()->q();
  r.l = l;
  r.L = c.L;
  for (const LocalData& d : c.reduction) {
    PlaceRow row{d, local_root_number_ec(d).w, local_factor(E, d.place, d).a_v};
    r.places.push_back(row);
  }
  r.global_w = global_root_number(c.reduction);
  r.L_q2 = constant_extension_l(r.L, 2);
  r.global_w_q2 = global_root_number_const_ext(c.reduction, 2);
  r.status = r.L.analytic_rank <= 1 ? ParityStatus::Verified : ParityStatus::Predicted;
  r.status_q2 = r.L_q2.analytic_rank <= 1 ? ParityStatus::Verified : ParityStatus::Predicted;

  auto& ch = r.checks;
  ch.push_back(make_check("product_formula", r.global_w, r.L.fe_sign));
  ch.push_back(make_check("product_formula_q2", r.global_w_q2, r.L_q2.fe_sign));
  ch.push_back(make_check("truncation", c.truncation, 0));
  ch.push_back(make_check("hasse", c.hasse_violations, 0));
  ch.push_back(make_check("fe_symmetry", fe_mismatches(r.L), 0));
  for (const LocalData& d : c.reduction)
    for (int n = 1; n <= 6; ++n) ch.push_back(check_st_root(d, n));
  for (int m : {2, 4})
    for (CheckRecord& x : check_even_glob(E, c.reduction, r.L, m)) ch.push_back(std::move(x));
  ch.push_back(make_check("odd_ext.m3", global_root_number_const_ext(c.reduction, 3), r.global_w));
  ch.push_back(make_check("odd_ext.m3.fe", constant_extension_l(r.L, 3).fe_sign, r.global_w));
  for (const LocalData& d : c.reduction) ch.push_back(check_cond_comp(d, l));
  ch.push_back(make_check("parity", sign_of(r.L.analytic_rank), r.global_w));
  ch.push_back(make_check("parity_q2", sign_of(r.L_q2.analytic_rank), r.global_w_q2));
  // growth parity: rank_q2 = sum over odd-degree places of a_v, rank = [w = -1]
  int inert = 0;
  for (const LocalData& d : c.reduction)
    if (d.place.degree() % 2) inert += d.cond_exp;
  ch.push_back(make_check("rank_growth", (r.L_q2.analytic_rank - r.L.analytic_rank) % 2,
                          (inert + (r.global_w == -1 ? 1 : 0)) % 2));
  CheckRecord grow{"rank_nondecreasing", r.L_q2.analytic_rank >= r.L.analytic_rank,
                   std::to_string(r.L_q2.analytic_rank), std::to_string(r.L.analytic_rank)};
  ch.push_back(grow);
  return r;
}

}  // namespace ellroot
