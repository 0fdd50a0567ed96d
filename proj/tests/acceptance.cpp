// Acceptance run: one line per criterion, nonzero exit if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cqg/crystal.hpp"
#include "cqg/datum_io.hpp"
#include "cqg/verify.hpp"

using namespace cqg;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

const std::vector<std::string> kPairData = {"osp(1|2)+A1", "osp(1|4)", "osp(1|6)", "B(0,1)^(1)"};

FreeElement th(std::initializer_list<int> letters, const PiScalar& c = PiScalar(1)) {
  return FreeElement::monomial(make_word(letters), c);
}

Outcome example_reproduction() {
  Outcome o;
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  FreeElement b = f_tilde(Q, 0, f_tilde(Q, 1, f_tilde(Q, 0, FreeElement::one())));
  PiScalar v2 = power(PiScalar::v(), 2);
  FreeElement expect = th({0}) * (th({1, 0}) - th({0, 1}, v2)) + v2 * (divided_power(D, 0, 2) * th({1}));
  o.require(Q.equal(b, expect), "f~1 f~2 f~1 1");
  Crystal B(Q, 3);
  for (std::size_t k = 0; k < B.elements().size(); ++k) {
    if (B.element(k).label != make_word({0, 1, 0})) continue;
    const auto& G = B.canonical(k);
    o.require(Q.equal(G.G, th({0, 1, 0})), "G(b)");
    o.require(Q.equal(twistor_free(D, G.G), PiScalar::t_power(-1) * G.G), "Psi(G(b))");
    o.require(G.ell_mod4 == 3, "ell(b)");
  }
  return o;
}

Outcome half_twistor() {
  Outcome o;
  for (const auto& name : kPairData) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int i = 0; i < D.rank(); ++i)
      for (int j = 0; j < D.rank(); ++j) {
        if (i == j) continue;
        o.require(verify_twistor_serre(Q, i, j), name + " pair");
        o.require(!verify_twistor_serre(Q, i, j, true), name + " mutation");
      }
  }
  return o;
}

// Crystal of osp(1|4) through height 6, shared by criteria 3 and 4.
Crystal& osp14_crystal() {
  static Datum D = catalog_datum("osp(1|4)");
  static QuotientContext Q(D);
  static Crystal B(Q, 6);
  return B;
}

Outcome canonical_comparison() {
  Outcome o;
  Crystal& B = osp14_crystal();
  auto rep = verify_canonical(B);
  o.require(rep.pass(), "canonical basis triple");
  o.require(rep.entries.size() == B.elements().size(), "coverage");
  return o;
}

Outcome lattice_preservation() {
  Outcome o;
  for (const std::string name : {"osp(1|4)", "osp(1|2)", "osp(1|2)+A1"}) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    Crystal local(Q, name == "osp(1|4)" ? 0 : 6);
    Crystal& B = name == "osp(1|4)" ? osp14_crystal() : local;
    o.require(verify_psi_lattice(B).pass(), name + " Psi(L[t]) in L[t]");
    for (const auto& el : B.elements())
      o.require(B.in_lattice(inverse_twistor(B.quotient().datum(), el.rep)), name + " Psi^-1(L[t]) in L[t]");
    o.require(verify_psi_strings(B).pass(), name + " string exponents");
    o.require(verify_rho_lattice(B).pass(), name + " rho(L) in L");
    QuotientContext& BQ = B.quotient();
    o.require(psi_eigen_exponent(BQ, FreeElement::one()) == 0, "ell(1)");
    o.require(psi_eigen_exponent(BQ, FreeElement::monomial(Word{}, PiScalar::pi())) == 2, "ell(pi)");
  }
  return o;
}

Outcome rho_conjugation() {
  Outcome o;
  SuiteConfig cfg;
  cfg.height = 5;
  for (const auto& name : catalog_names())
    for (const auto& r : run_suites(catalog_datum(name), "rho-psi", cfg)) o.require(r.pass, name);
  return o;
}

Outcome character_coincidence() {
  Outcome o;
  Datum A = catalog_datum("osp(1|2)");
  QuotientContext QA(A);
  for (long long n = 0; n <= 3; ++n) {
    WeightModule plus(QA, {n}, 6, Component::Plus), minus(QA, {n}, 6, Component::Minus);
    auto cp = character(plus);
    std::size_t total = 0;
    for (const auto& [w, d] : cp) total += d;
    o.require(total == static_cast<std::size_t>(n + 1), "osp(1|2) dimension n+1");
    o.require(cp == character(minus), "osp(1|2) characters");
  }
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 0; b <= 2; ++b) {
      WeightModule plus(Q, {a, b}, 6, Component::Plus), minus(Q, {a, b}, 6, Component::Minus);
      o.require(character(plus) == character(minus), "osp(1|4) characters");
    }
  return o;
}

Outcome module_twistors() {
  Outcome o;
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    SuiteConfig cfg;
    cfg.height = 5;
    for (const std::string suite : {"modified-twistor", "hat-twistor", "clubsuit"})
      for (const auto& r : run_suites(D, suite, cfg)) o.require(r.pass, name + " " + suite);
    if (D.rank() < 2) continue;
    cfg.mutate = true;
    cfg.height = 4;
    for (const std::string suite : {"modified-twistor", "hat-twistor"})
      for (const auto& r : run_suites(D, suite, cfg)) o.require(!r.pass, name + " " + suite + " mutation");
  }
  return o;
}

Outcome structural() {
  Outcome o;
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int h = 0; h <= 6; ++h)
      for (const auto& nu : weights_of_height(D.rank(), h))
        o.require(Q.dim(nu, Component::Plus) == Q.dim(nu, Component::Minus), name + " dims");
    SuiteConfig cfg;
    cfg.height = 4;
    for (const auto& r : run_suites(D, "chi", cfg)) o.require(r.pass, name + " chi");
  }
  for (int d = 1; d <= 3; ++d)
    for (int n = -8; n <= 8; ++n)
      for (int k = 0; k <= 8; ++k) o.require(qbinomial(n, k, d).is_laurent(), "qbinomial");
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> c(-3, 3), e(-4, 4);
  for (int k = 0; k < 100; ++k) {
    auto fn = [&] {
      LaurentPoly num(GaussianRational(mpq_class(c(rng)), mpq_class(c(rng))), e(rng));
      num += LaurentPoly(GaussianRational(c(rng)), e(rng));
      LaurentPoly den = LaurentPoly(GaussianRational(c(rng) == 0 ? 1 : 2), 0) + LaurentPoly(GaussianRational(c(rng)), e(rng));
      if (den.is_zero()) den = LaurentPoly(1);
      return RationalFn(num, den);
    };
    PiScalar s(fn(), fn());
    o.require(bar(twist(s)) == twist(bar(s)), "bar/twist");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"osp(1|4) example reproduction", example_reproduction},
      {"half twistor Serre relations", half_twistor},
      {"canonical basis comparison, osp(1|4) through height 6", canonical_comparison},
      {"lattice preservation and ell(1), ell(pi)", lattice_preservation},
      {"twistor conjugate of rho, monomials of height <= 5", rho_conjugation},
      {"character coincidence", character_coincidence},
      {"modified and extended twistors at H=5", module_twistors},
      {"structural properties", structural},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu: %s (%.1f s)%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs,
                o.pass ? "" : " first failure: ", o.note.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
