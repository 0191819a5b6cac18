#include "ellroot/report.hpp"

#include <cmath>
#include <cstdio>

namespace ellroot {

namespace {

std::string format_real(double x) {
  if (std::abs(x) < 5e-13) x = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

void Report::add(const std::string& key, const std::string& value) { lines_.emplace_back(key, value); }

void Report::add_check(const CheckRecord& c) {
  ++checks_;
  if (!c.pass) ++failures_;
  add("check." + c.name, std::string(c.pass ? "pass" : "fail") + " lhs=" + c.lhs + " rhs=" + c.rhs);
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
  checks_ += other.checks_;
  failures_ += other.failures_;
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : lines_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::text() const {
  std::string s;
  for (const auto& [k, v] : lines_) s += k + " = " + v + "\n";
  return s;
}

std::string format_complex(wd::Complex z) { return format_real(z.real()) + "," + format_real(z.imag()); }

std::string format_coeffs(const std::vector<std::int64_t>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "]";
}

Report local_data_report(const LocalData& d) {
  Report r;
  r.add("place", d.place.to_string());
  r.add("degree", d.place.degree());
  r.add("ext", d.ext_degree);
  r.add("kodaira", d.kodaira.to_string());
  r.add("v_delta_min", d.v_delta_min);
  r.add("cond_exp", d.cond_exp);
  r.add("comp_order", d.comp_order);
  r.add("comp_structure", d.comp_structure == ComponentShape::KleinFour
                              ? std::string("klein_four")
                              : "cyclic(" + std::to_string(d.comp_order) + ")");
  std::string frob = "sign=" + std::to_string(d.frobenius.sign);
  if (!d.frobenius.cycles.empty()) {
    frob += " cycles=";
    for (std::size_t i = 0; i < d.frobenius.cycles.size(); ++i) frob += (i ? "," : "") + std::to_string(d.frobenius.cycles[i]);
  }
  r.add("frobenius", frob);
  if (d.is_multiplicative()) r.add("split", flag(d.split));
  r.add("tamagawa", d.tamagawa);
  return r;
}

Report l_poly_report(const LPolynomial& L) {
  Report r;
  r.add("q", static_cast<long long>(L.q));
  r.add("n_degree", L.N + 4);
  r.add("l_degree", L.N);
  r.add("l_coeffs", format_coeffs(L.coeffs));
  r.add("fe_sign", L.fe_sign);
  r.add("rank", L.analytic_rank);
  return r;
}

Report stability_report(const wd::WDRep& rep, const wd::LocalFieldTag& tag, int n) {
  Report r;
  r.add("rep", wd::to_string(rep));
  r.add("field", tag.to_string());
  r.add("n", n);
  r.add("conductor", wd::conductor(rep, tag));
  r.add("eps0", format_complex(wd::epsilon0(rep, tag)));
  r.add("epsilon", format_complex(wd::epsilon(rep, tag)));
  const wd::StabilityCheck s = wd::verify_stability(rep, tag, n);
  r.add_check(CheckRecord{"stability", s.pass, format_complex(s.lhs), format_complex(s.rhs)});
  r.add_check(CheckRecord{"eps0_stability", s.eps0_pass, format_complex(s.eps0_lhs), format_complex(s.eps0_rhs)});
  return r;
}

Report parity_block(const ParityReport& p) {
  Report r;
  r.add("id", p.id);
  r.add("q", static_cast<long long>(p.q));
  r.add("l", p.l);
  r.add("n_degree", p.L.N + 4);
  r.add("l_coeffs", format_coeffs(p.L.coeffs));
  r.add("fe_sign", p.L.fe_sign);
  r.add("global_w", p.global_w);
  r.add("rank", p.L.analytic_rank);
  r.add("status", to_string(p.status));
  r.add("l_coeffs_q2", format_coeffs(p.L_q2.coeffs));
  r.add("fe_sign_q2", p.L_q2.fe_sign);
  r.add("global_w_q2", p.global_w_q2);
  r.add("rank_q2", p.L_q2.analytic_rank);
  r.add("status_q2", to_string(p.status_q2));
  for (const PlaceRow& row : p.places) {
    const LocalData& d = row.data;
    std::string v = d.kodaira.to_string() + " deg=" + std::to_string(d.place.degree()) +
                    " v_delta=" + std::to_string(d.v_delta_min) + " a=" + std::to_string(d.cond_exp) +
                    " tamagawa=" + std::to_string(d.tamagawa) + " w=" + std::to_string(row.w);
    if (d.is_multiplicative()) v += std::string(" split=") + flag(d.split);
    if (row.a_v) v += " a_v=" + std::to_string(*row.a_v);
    r.add("place." + d.place.to_string(), v);
  }
  for (const CheckRecord& c : p.checks) r.add_check(c);
  return r;
}

}  // namespace ellroot
