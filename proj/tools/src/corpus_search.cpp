// Random search for catalog curves with small conductor; prints candidate
// records with their reduction tables as comments.
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "ellroot/catalog.hpp"
#include "ellroot/error.hpp"
#include "ellroot/parity.hpp"

using namespace ellroot;

int main(int argc, char** argv) {
  CLI::App app{"corpus search"};
  std::uint32_t p = 5;
  int tries = 1000, min_n = 0, max_n = 4, seed = 1;
  bool with_l = false;
  app.add_option("--p", p);
  app.add_option("--tries", tries);
  app.add_option("--min-n", min_n);
  app.add_option("--max-n", max_n);
  app.add_option("--seed", seed);
  app.add_flag("--with-l", with_l);
  CLI11_PARSE(app, argc, argv);

  FieldPtr F = make_field(p, 1);
  std::mt19937 gen(seed);
  auto rp = [&](int deg) {
    std::vector<Code> c(deg + 1);
    for (Code& x : c) x = gen() % p;
    return Poly(F, c);
  };
  auto tpow = [&](int e) { return Poly::monomial(F, 1, e); };
  for (int i = 0; i < tries; ++i) {
    try {
      const bool lng = gen() % 3 == 0;
      Poly a1(F), a2(F), a3(F), a4 = rp(gen() % 3), a6 = rp(gen() % 3);
      if (gen() % 2) a4 = a4 * tpow(gen() % 5);
      if (gen() % 2) a6 = a6 * tpow(gen() % 7);
      if (lng) a2 = rp(gen() % 2);
      if (lng && gen() % 2) a1 = rp(gen() % 2), a3 = rp(gen() % 2);
      if (gen() % 3 == 0) {
        const Poly s = rp(1 + gen() % 2);
        a4 = a4 * s * s;
        a6 = a6 * s * s * s;
      }
      if (a4.is_zero() && a6.is_zero()) continue;
      WeierstrassModel E(a1, a2, a3, a4, a6);
      if (E.is_isotrivial()) continue;
      auto table = reduction_table(E);
      const int N = conductor_degree(table) - 4;
      if (N < 0 || N < min_n || N > max_n || N == 3) continue;
      std::string types;
      for (const LocalData& d : table)
        if (!d.is_good())
          types += " " + d.place.to_string() + ":" + d.kodaira.to_string() + (d.is_multiplicative() ? (d.split ? "s" : "ns") : "");
      std::cout << "N=" << N << types;
      if (with_l) {
        LPolynomial L = l_polynomial(E);
        LPolynomial L2 = constant_extension_l(L, 2);
        std::cout << " fe=" << L.fe_sign << " rank=" << L.analytic_rank << " rank_q2=" << L2.analytic_rank;
      }
      std::cout << "\n" << emit_catalog({to_record("x", E)});
    } catch (const Error&) {
    }
  }
}
