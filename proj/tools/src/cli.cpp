#include "ellroot/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "ellroot/arith.hpp"
#include "ellroot/catalog.hpp"
#include "ellroot/error.hpp"
#include "ellroot/report.hpp"

namespace ellroot {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<std::uint32_t, int> split_prime_power(std::uint64_t q) {
  const auto f = prime_factors(q);
  if (f.size() != 1) throw Usage("--q must be a prime power");
  int k = 0;
  for (std::uint64_t x = q; x > 1; x /= f[0]) ++k;
  return {static_cast<std::uint32_t>(f[0]), k};
}

CurveRecord find_curve(const std::string& catalog, const std::string& id) {
  for (CurveRecord& r : load_catalog(catalog))
    if (r.id == id) return r;
  throw Usage("no curve '" + id + "' in " + catalog);
}

Place parse_place(const FieldPtr& F, const std::string& s) {
  if (s == "inf") return Place::infinity(F);
  return Place::finite(parse_poly(F, s));
}

int exit_code(const std::vector<Report>& blocks) {
  for (const Report& b : blocks)
    if (!b.all_pass()) return 1;
  return 0;
}

std::vector<Report> cmd_places(std::uint64_t q, int dmax) {
  const auto [p, k] = split_prime_power(q);
  FieldPtr F = make_field(p, k);
  const std::vector<Place> places = enumerate_places(F, dmax);
  Report r;
  r.add("q", static_cast<long long>(q));
  r.add("max_degree", dmax);
  for (const Place& v : places) r.add("place", v.to_string() + " deg=" + std::to_string(v.degree()));
  for (int d = 1; d <= dmax; ++d) {
    const auto n = std::count_if(places.begin(), places.end(), [&](const Place& v) { return v.degree() == d; });
    const std::uint64_t expected = irreducible_count(q, d) + (d == 1 ? 1 : 0);
    r.add_check(make_check("count.d" + std::to_string(d), n, static_cast<long long>(expected)));
  }
  return {r};
}

std::vector<Report> cmd_local_data(const CurveRecord& rec, const std::string& place, int ext) {
  const WeierstrassModel E = to_model(rec);
  std::vector<LocalData> data;
  if (place.empty())
    data = reduction_table(E);
  else
    data.push_back(reduction_data(E, parse_place(E.field(), place)));
  std::vector<Report> out;
  for (LocalData d : data) {
    if (ext > 1) d = unramified_base_change(d, ext);
    Report r;
    r.add("id", rec.id);
    r.append(local_data_report(d));
    r.add("w", local_root_number_ec(d).w);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Report> cmd_l_poly(const CurveRecord& rec, int m) {
  const LComputation c = compute_l_function(to_model(rec));
  Report r;
  r.add("id", rec.id);
  if (m > 1) r.add("const_ext", m);
  r.append(l_poly_report(m > 1 ? constant_extension_l(c.L, m) : c.L));
  r.add_check(make_check("truncation", c.truncation, 0));
  r.add_check(make_check("hasse", c.hasse_violations, 0));
  return {r};
}

std::vector<Report> cmd_root_number(const CurveRecord& rec, int m) {
  const std::vector<LocalData> table = reduction_table(to_model(rec));
  Report r;
  r.add("id", rec.id);
  if (m > 1) r.add("const_ext", m);
  for (const LocalData& d : table) {
    const int g = std::gcd(d.place.degree(), m);
    r.add("w." + d.place.to_string(), local_root_number_ec(unramified_base_change(d, m / g)).w);
  }
  r.add("global_w", m > 1 ? global_root_number_const_ext(table, m) : global_root_number(table));
  return {r};
}

std::vector<Report> cmd_epsilon_demo(std::uint64_t q, std::uint64_t j, int frob, int n) {
  const auto [p, k] = split_prime_power(q);
  if (j >= q - 1) throw Usage("--char-index must lie in [0, q - 1)");
  if (frob != 1 && frob != -1) throw Usage("--frob must be 1 or -1");
  FieldPtr F = make_residue_field(p, k);
  const wd::WDRep rep = wd::WDRep::character(wd::base_character(F, j, static_cast<double>(frob)));
  return {stability_report(rep, wd::local_field(F), n)};
}

}  // namespace

Report verify_curve(const CurveRecord& rec) {
  Report r;
  try {
    const WeierstrassModel E = to_model(rec);
    const FieldPtr& F = E.field();
    const int l = F->p() == 3 ? 5 : 3;
    const ParityReport pr = l_parity_report(E, l, rec.id);
    r = parity_block(pr);
    for (int l2 : {3, 5, 7}) {
      if (l2 == l || static_cast<std::uint32_t>(l2) == F->p()) continue;
      for (const PlaceRow& row : pr.places) r.add_check(check_cond_comp(row.data, l2));
    }
    long long disc_degree = 0;
    for (const PlaceRow& row : pr.places) {
      const LocalData& d = row.data;
      r.add_check(make_check("ogg." + d.place.to_string(), d.cond_exp, d.v_delta_min - d.components() + 1));
      disc_degree += static_cast<long long>(d.v_delta_min) * d.place.degree();
    }
    r.add_check(make_check("disc_degree_mod12", disc_degree % 12, 0));
    if (pr.L.N <= 3) {
      const LPolynomial direct = l_polynomial(E.base_extend(make_field(F->p(), 2 * F->k())));
      r.add_check(CheckRecord{"base_change_q2", direct.coeffs == pr.L_q2.coeffs, format_coeffs(direct.coeffs),
                              format_coeffs(pr.L_q2.coeffs)});
    }
    for (const auto& [key, value] : rec.expect) {
      const auto got = r.get(key);
      r.add_check(CheckRecord{"expect." + key, got && *got == value, got.value_or("missing"), value});
    }
  } catch (const Error& e) {
    r.add("id", rec.id);
    r.add_check(CheckRecord{"error", false, e.what(), "none"});
  }
  return r;
}

std::vector<Report> verify_corpus(const std::vector<CurveRecord>& records) {
  std::vector<Report> out;
  int checks = 0, failures = 0, failed_curves = 0;
  for (const CurveRecord& rec : records) {
    out.push_back(verify_curve(rec));
    checks += out.back().checks();
    failures += out.back().failures();
    if (!out.back().all_pass()) ++failed_curves;
  }
  Report summary;
  summary.add("curves", static_cast<long long>(out.size()));
  summary.add("checks", checks);
  summary.add("failures", failures);
  summary.add("failed_curves", failed_curves);
  out.push_back(summary);
  return out;
}

std::string render(const std::vector<Report>& blocks) {
  std::string s;
  for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "\n" : "") + blocks[i].text();
  return s;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local and global invariants of elliptic curves over F_q(t)", "ellroot"};
  app.require_subcommand(1);

  std::uint64_t q = 0, j = 0;
  int dmax = 1, ext = 1, m = 1, frob = 1, n = 1, l = 3;
  std::string catalog, id, place;

  auto* places = app.add_subcommand("places", "List places of F_q(t) up to a degree");
  places->add_option("--q", q)->required();
  places->add_option("--max-degree", dmax)->required()->check(CLI::Range(1, 8));

  auto* local = app.add_subcommand("local-data", "Reduction data of a catalog curve");
  local->add_option("--catalog", catalog)->required();
  local->add_option("--id", id)->required();
  local->add_option("--place", place);
  local->add_option("--ext", ext)->check(CLI::Range(1, 64));

  auto* lpoly = app.add_subcommand("l-poly", "L-polynomial of a catalog curve");
  lpoly->add_option("--catalog", catalog)->required();
  lpoly->add_option("--id", id)->required();
  lpoly->add_option("--const-ext", m)->check(CLI::Range(1, 64));

  auto* root = app.add_subcommand("root-number", "Global root number of a catalog curve");
  root->add_option("--catalog", catalog)->required();
  root->add_option("--id", id)->required();
  root->add_option("--const-ext", m)->check(CLI::Range(1, 64));

  auto* demo = app.add_subcommand("epsilon-demo", "Epsilon factor of a tame character and its restriction");
  demo->add_option("--q", q)->required();
  demo->add_option("--char-index", j)->required();
  demo->add_option("--frob", frob)->required();
  demo->add_option("--n", n)->required()->check(CLI::Range(1, 64));

  auto* parity = app.add_subcommand("parity-check", "Parity report of a catalog curve");
  parity->add_option("--catalog", catalog)->required();
  parity->add_option("--id", id)->required();
  parity->add_option("--l", l)->required();

  auto* corpus = app.add_subcommand("verify-corpus", "Run every check on every catalog curve");
  corpus->add_option("--catalog", catalog)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::vector<Report> blocks;
    if (*places)
      blocks = cmd_places(q, dmax);
    else if (*local)
      blocks = cmd_local_data(find_curve(catalog, id), place, ext);
    else if (*lpoly)
      blocks = cmd_l_poly(find_curve(catalog, id), m);
    else if (*root)
      blocks = cmd_root_number(find_curve(catalog, id), m);
    else if (*demo)
      blocks = cmd_epsilon_demo(q, j, frob, n);
    else if (*parity)
      blocks = {parity_block(l_parity_report(to_model(find_curve(catalog, id)), l, id))};
    else if (*corpus)
      blocks = verify_corpus(load_catalog(catalog));
    out << render(blocks);
    const int code = exit_code(blocks);
    if (code) {
      for (const Report& b : blocks)
        for (const auto& [key, value] : b.lines())
          if (key.rfind("check.", 0) == 0 && value.rfind("fail", 0) == 0) err << key << " = " << value << "\n";
    }
    return code;
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool usage = e.kind() == ErrorKind::Parse || e.kind() == ErrorKind::SingularCurve ||
                       e.kind() == ErrorKind::InvalidParameter || e.kind() == ErrorKind::UnsupportedCharacteristic;
    return usage ? 2 : 1;
  }
}

}  // namespace ellroot
