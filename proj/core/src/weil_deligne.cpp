#include "ellroot/weil_deligne.hpp"

#include <cmath>
#include <sstream>

#include "ellroot/arith.hpp"
#include "ellroot/error.hpp"

namespace ellroot::wd {

namespace {

FieldPtr over_base(const FieldPtr& base, int degree) {
  if (degree < 1) raise(ErrorKind::InvalidParameter, "field degree must be positive");
  return make_residue_field(base->p(), base->k() * degree);
}

std::uint64_t field_size(const FieldPtr& base, int degree) {
  auto q = checked_pow(base->q(), degree);
  if (!q || *q > (std::uint64_t{1} << 31)) raise(ErrorKind::Capacity, "residue field too large");
  return *q;
}

// log of N(g_big) in the smaller field, N the norm F_{q0^big} -> F_{q0^small}
std::uint64_t norm_exponent(const FieldPtr& base, int big, int small) {
  FieldPtr B = over_base(base, big), S = over_base(base, small);
  return S->log(norm_to(FieldElement(B, B->generator()), S).code());
}

Complex cpow(Complex z, int n) {
  Complex r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

void check_character(const TameCharacter& chi, const FieldPtr& base, int containing_degree) {
  if (chi.field_degree < 1 || containing_degree % chi.field_degree != 0)
    raise(ErrorKind::InvalidParameter, "character field does not divide the residue field");
  if (chi.residue_index >= field_size(base, chi.field_degree) - 1)
    raise(ErrorKind::InvalidParameter, "residue index out of range");
  if (std::abs(chi.frobenius_value) == 0.0) raise(ErrorKind::InvalidParameter, "zero Frobenius value");
}

// residue part of a character of the residue field F_{q0^degree}
Complex gauss(const TameCharacter& chi, const FieldPtr& base, int degree) {
  return lifted_gauss_sum(over_base(base, chi.field_degree), chi.residue_index, degree / chi.field_degree);
}

// epsilon_0 of a line over the residue field F_{q0^degree}, Frobenius value alpha
Complex line_eps0(const TameCharacter& chi, Complex alpha, const FieldPtr& base, int degree) {
  if (!chi.ramified()) return -alpha;
  return alpha * gauss(chi, base, degree);
}

}  // namespace

std::uint64_t LocalFieldTag::residue_size() const {
  auto q = checked_pow(base->q(), degree);
  if (!q) raise(ErrorKind::Overflow, "residue field size overflows");
  return *q;
}

FieldPtr LocalFieldTag::residue() const { return over_base(base, degree); }

std::string LocalFieldTag::to_string() const {
  std::ostringstream os;
  os << "F_" << base->q() << "^" << degree;
  return os.str();
}

LocalFieldTag local_field(const FieldPtr& base, int degree) {
  if (!base) raise(ErrorKind::InvalidParameter, "missing residue field");
  if (degree < 1) raise(ErrorKind::InvalidParameter, "degree must be positive");
  LocalFieldTag tag{base, degree};
  tag.residue_size();
  return tag;
}

TameCharacter unramified_character(Complex frobenius_value) { return TameCharacter{0, 1, frobenius_value}; }

TameCharacter tame_character(const FieldPtr& base, int field_degree, std::uint64_t j, Complex frobenius_value) {
  const std::uint64_t n = field_size(base, field_degree) - 1;
  j %= n;
  if (j == 0) return unramified_character(frobenius_value);
  for (int e = 1; e < field_degree; ++e) {
    if (field_degree % e) continue;
    const std::uint64_t m = field_size(base, e) - 1;
    const std::uint64_t index = n / m;
    if (j % index) continue;
    // chi_j = chi'_{j'} o N with j = j' s index, s the norm exponent
    const std::uint64_t s = norm_exponent(base, field_degree, e);
    const std::uint64_t jp = static_cast<std::uint64_t>(static_cast<unsigned __int128>(j / index) * inverse_mod(s, m) % m);
    return TameCharacter{jp, e, frobenius_value};
  }
  return TameCharacter{j, field_degree, frobenius_value};
}

TameCharacter base_character(const FieldPtr& base, std::uint64_t j, Complex frobenius_value) {
  return tame_character(base, 1, j, frobenius_value);
}

TameCharacter inverse(const TameCharacter& chi, const FieldPtr& base) {
  const std::uint64_t n = field_size(base, chi.field_degree) - 1;
  return TameCharacter{(n - chi.residue_index) % n, chi.field_degree, 1.0 / chi.frobenius_value};
}

bool same_character(const TameCharacter& a, const TameCharacter& b, const FieldPtr& base) {
  const TameCharacter x = tame_character(base, a.field_degree, a.residue_index, a.frobenius_value);
  const TameCharacter y = tame_character(base, b.field_degree, b.residue_index, b.frobenius_value);
  return x.residue_index == y.residue_index && x.field_degree == y.field_degree &&
         approx_equal(x.frobenius_value, y.frobenius_value);
}

std::uint64_t residue_index_over(const TameCharacter& chi, const FieldPtr& base, int degree) {
  if (degree % chi.field_degree) raise(ErrorKind::InvalidParameter, "character field does not divide the residue field");
  if (!chi.ramified()) return 0;
  const std::uint64_t big = field_size(base, degree) - 1, small = field_size(base, chi.field_degree) - 1;
  const std::uint64_t L = chi.field_degree == degree ? 1 : norm_exponent(base, degree, chi.field_degree);
  const auto jl = static_cast<std::uint64_t>(static_cast<unsigned __int128>(chi.residue_index) * L % small);
  return jl * (big / small);
}

WDRep::WDRep(std::vector<Summand> summands, int swan) : summands_(std::move(summands)), swan_(swan) {
  if (swan_ != 0) raise(ErrorKind::Unsupported, "wild ramification is not supported");
  for (const Summand& s : summands_)
    if (s.kind == Summand::Kind::Sp2 && !(s.scale > 0.0)) raise(ErrorKind::InvalidParameter, "scale must be positive");
}

WDRep WDRep::character(const TameCharacter& chi) { return WDRep({Summand{Summand::Kind::Char, chi, 1.0}}); }

WDRep WDRep::induced(const TameCharacter& theta) { return WDRep({Summand{Summand::Kind::Induced, theta, 1.0}}); }

WDRep WDRep::steinberg(const TameCharacter& chi, double scale) { return WDRep({Summand{Summand::Kind::Sp2, chi, scale}}); }

int WDRep::dimension() const {
  int d = 0;
  for (const Summand& s : summands_) d += s.dimension();
  return d;
}

WDRep WDRep::operator+(const WDRep& o) const {
  std::vector<Summand> all = summands_;
  all.insert(all.end(), o.summands_.begin(), o.summands_.end());
  return WDRep(std::move(all), swan_ + o.swan_);
}

WDRep normalize(const WDRep& r, const LocalFieldTag& tag) {
  std::vector<Summand> out;
  for (const Summand& s : r.summands()) {
    check_character(s.chi, tag.base, s.kind == Summand::Kind::Induced ? 2 * tag.degree : tag.degree);
    if (s.kind != Summand::Kind::Induced) {
      out.push_back(s);
      continue;
    }
    const TameCharacter theta = tame_character(tag.base, s.chi.field_degree, s.chi.residue_index, s.chi.frobenius_value);
    if (tag.degree % theta.field_degree != 0) {
      out.push_back(Summand{Summand::Kind::Induced, theta, 1.0});
      continue;
    }
    // theta = chi o N: Ind theta = chi + chi eta with chi(pi)^2 = theta(pi)
    const Complex root = std::sqrt(theta.frobenius_value);
    out.push_back(Summand{Summand::Kind::Char, TameCharacter{theta.residue_index, theta.field_degree, root}, 1.0});
    out.push_back(Summand{Summand::Kind::Char, TameCharacter{theta.residue_index, theta.field_degree, -root}, 1.0});
  }
  return WDRep(std::move(out), r.swan());
}

int conductor(const WDRep& r, const LocalFieldTag& tag) {
  const WDRep n = normalize(r, tag);
  int invariants = 0;
  for (const Summand& s : n.summands())
    if (s.kind != Summand::Kind::Induced && !s.chi.ramified()) ++invariants;
  return n.swan() + n.dimension() - invariants;
}

Complex epsilon0(const WDRep& r, const LocalFieldTag& tag) {
  const WDRep n = normalize(r, tag);
  const double Q = static_cast<double>(tag.residue_size());
  // lambda = eps0(Ind 1) / eps0(1 over the quadratic extension), Ind 1 = 1 + eta_unr
  const Complex lambda = line_eps0(TameCharacter{}, 1.0, tag.base, tag.degree) *
                         line_eps0(TameCharacter{}, -1.0, tag.base, tag.degree) /
                         line_eps0(TameCharacter{}, 1.0, tag.base, 2 * tag.degree);
  Complex e{1.0, 0.0};
  for (const Summand& s : n.summands()) {
    const Complex alpha = s.chi.frobenius_value;
    switch (s.kind) {
      case Summand::Kind::Char: e *= line_eps0(s.chi, alpha, tag.base, tag.degree); break;
      case Summand::Kind::Induced: e *= lambda * line_eps0(s.chi, alpha, tag.base, 2 * tag.degree); break;
      case Summand::Kind::Sp2:
        e *= line_eps0(s.chi, alpha * s.scale, tag.base, tag.degree) *
             line_eps0(s.chi, alpha * s.scale * Q, tag.base, tag.degree);
        break;
    }
  }
  return e;
}

Complex invariant_determinant(const WDRep& r, const LocalFieldTag& tag) {
  const WDRep n = normalize(r, tag);
  Complex d{1.0, 0.0};
  for (const Summand& s : n.summands()) {
    if (s.kind == Summand::Kind::Induced || s.chi.ramified()) continue;
    d *= s.kind == Summand::Kind::Char ? -s.chi.frobenius_value : -s.kernel_eigenvalue();
  }
  return d;
}

Complex epsilon(const WDRep& r, const LocalFieldTag& tag) { return epsilon0(r, tag) / invariant_determinant(r, tag); }

Complex root_number(const WDRep& r, const LocalFieldTag& tag) {
  const Complex e = epsilon(r, tag);
  const double m = std::abs(e);
  if (m < 1e-12) raise(ErrorKind::DegenerateEpsilon, "epsilon factor vanishes");
  Complex w = e / m;
  for (Complex u : {Complex{1, 0}, Complex{-1, 0}, Complex{0, 1}, Complex{0, -1}})
    if (std::abs(w - u) < 1e-9) return u;
  return w;
}

std::pair<WDRep, LocalFieldTag> restrict_unramified(const WDRep& r, const LocalFieldTag& tag, int n) {
  if (n < 1) raise(ErrorKind::InvalidParameter, "extension degree must be positive");
  const LocalFieldTag out_tag = local_field(tag.base, tag.degree * n);
  const WDRep norm = normalize(r, tag);
  std::vector<Summand> out;
  for (const Summand& s : norm.summands()) {
    TameCharacter chi = s.chi;
    switch (s.kind) {
      case Summand::Kind::Char:
        chi.frobenius_value = cpow(chi.frobenius_value, n);
        out.push_back(Summand{Summand::Kind::Char, chi, 1.0});
        break;
      case Summand::Kind::Sp2:
        chi.frobenius_value = cpow(chi.frobenius_value, n);
        out.push_back(Summand{Summand::Kind::Sp2, chi, std::pow(s.scale, n)});
        break;
      case Summand::Kind::Induced:
        if (n % 2 == 1) {
          chi.frobenius_value = cpow(chi.frobenius_value, n);
          out.push_back(Summand{Summand::Kind::Induced, chi, 1.0});
        } else {
          // theta and its conjugate theta o Frob_Q, both restricted to k_n
          chi.frobenius_value = cpow(chi.frobenius_value, n / 2);
          TameCharacter conj = chi;
          const std::uint64_t m = field_size(tag.base, chi.field_degree) - 1;
          const std::uint64_t Q = tag.residue_size() % m;
          conj.residue_index = static_cast<std::uint64_t>(static_cast<unsigned __int128>(chi.residue_index) * Q % m);
          out.push_back(Summand{Summand::Kind::Char, chi, 1.0});
          out.push_back(Summand{Summand::Kind::Char, conj, 1.0});
        }
        break;
    }
  }
  return {WDRep(std::move(out), r.swan()), out_tag};
}

StabilityCheck verify_stability(const WDRep& r, const LocalFieldTag& tag, int n) {
  auto [rn, tn] = restrict_unramified(r, tag, n);
  StabilityCheck c;
  c.lhs = epsilon(rn, tn);
  const Complex en = cpow(epsilon(r, tag), n);
  c.rhs = (n % 2 == 0 && conductor(r, tag) % 2 == 1) ? -en : en;
  c.pass = approx_equal(c.lhs, c.rhs);
  c.eps0_lhs = epsilon0(rn, tn);
  const Complex e0n = cpow(epsilon0(r, tag), n);
  c.eps0_rhs = ((n - 1) * (r.swan() + r.dimension())) % 2 ? -e0n : e0n;
  c.eps0_pass = approx_equal(c.eps0_lhs, c.eps0_rhs);
  return c;
}

bool approx_equal(Complex a, Complex b, double tol) { return std::abs(a - b) < tol * std::max(1.0, std::abs(b)); }

int root_of_unity_order(Complex z, int max_order) {
  Complex w{1.0, 0.0};
  for (int m = 1; m <= max_order; ++m) {
    w *= z;
    if (std::abs(w - 1.0) < 1e-9 * m) return m;
  }
  return 0;
}

namespace {
std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real() << "," << z.imag();
  return os.str();
}
}  // namespace

std::string to_string(const TameCharacter& chi) {
  std::ostringstream os;
  os << "chi(j=" << chi.residue_index << ",e=" << chi.field_degree << ",frob=" << fmt(chi.frobenius_value) << ")";
  return os.str();
}

std::string to_string(const WDRep& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.summands().size(); ++i) {
    const Summand& s = r.summands()[i];
    if (i) os << " + ";
    switch (s.kind) {
      case Summand::Kind::Char: os << to_string(s.chi); break;
      case Summand::Kind::Induced: os << "Ind " << to_string(s.chi); break;
      case Summand::Kind::Sp2: os << "sp(2) " << to_string(s.chi) << " scale=" << s.scale; break;
    }
  }
  return os.str();
}

}  // namespace ellroot::wd
