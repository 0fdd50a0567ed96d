#include <doctest.h>

#include "cqg/crystal.hpp"
#include "cqg/datum_io.hpp"

using namespace cqg;

namespace {

FreeElement th(std::initializer_list<int> letters, const PiScalar& c = PiScalar(1)) {
  return FreeElement::monomial(make_word(letters), c);
}

std::size_t find_label(const Crystal& B, const Word& label) {
  for (std::size_t b = 0; b < B.elements().size(); ++b)
    if (B.element(b).label == label) return b;
  FAIL("label not found");
  return 0;
}

bool equal_up_to_unit(QuotientContext& Q, const FreeElement& x, const FreeElement& y) {
  for (const PiScalar& u : {PiScalar(1), PiScalar(-1), PiScalar::pi(), -PiScalar::pi()})
    if (Q.equal(x, u * y)) return true;
  return false;
}

}  // namespace

TEST_CASE("string decomposition oracles") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  auto s = string_decompose(Q, 0, th({1, 0}));
  REQUIRE(s.parts.size() == 2);
  CHECK(s.parts[0].first == 0);
  CHECK(Q.equal(s.parts[0].second, th({1, 0}) - th({0, 1}, power(PiScalar::v(), 2))));
  CHECK(s.parts[1].first == 1);
  CHECK(Q.equal(s.parts[1].second, th({1}, power(PiScalar::v(), 2))));
  auto k = string_decompose(Q, 0, th({1}));
  REQUIRE(k.parts.size() == 1);
  CHECK(k.parts[0].first == 0);
  auto p = string_decompose(Q, 1, theta_power(1, 3));
  REQUIRE(p.parts.size() == 1);
  CHECK(p.parts[0].first == 3);
  CHECK(Q.equal(reassemble(D, s), th({1, 0})));
}

TEST_CASE("Kashiwara operators on osp(1|4)") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  FreeElement b = f_tilde(Q, 0, f_tilde(Q, 1, f_tilde(Q, 0, FreeElement::one())));
  PiScalar v2 = power(PiScalar::v(), 2);
  FreeElement expect = th({0}) * (th({1, 0}) - th({0, 1}, v2)) + v2 * (divided_power(D, 0, 2) * th({1}));
  CHECK(Q.equal(b, expect));
  CHECK(e_tilde(Q, 0, FreeElement::one()).is_zero());
  for (FreeElement x : {th({1}), b, th({0, 1})})
    for (int i = 0; i < 2; ++i) CHECK(Q.equal(e_tilde(Q, i, f_tilde(Q, i, x)), x));
}

TEST_CASE("crystal counts match dimensions") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    Crystal B(Q, 4);
    for (int h = 0; h <= 4; ++h)
      for (const auto& nu : weights_of_height(D.rank(), h)) {
        CHECK(B.at_weight(nu).size() == Q.dim(nu, Component::Plus));
        for (std::size_t b : B.at_weight(nu)) CHECK(B.in_lattice(B.element(b).rep));
      }
  }
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  Crystal B1(Q, 1);
  CHECK(B1.elements().size() == 3);
}

TEST_CASE("canonical basis of the osp(1|4) example") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  Crystal B(Q, 3);
  std::size_t b = find_label(B, make_word({0, 1, 0}));
  const auto& G = B.canonical(b);
  CHECK(Q.equal(G.G, th({0, 1, 0})));
  CHECK(G.ell_mod4 == 3);
  CHECK(Q.equal(twistor_free(D, G.G), PiScalar::t_power(-1) * G.G));
  for (int i = 0; i < 2; ++i) {
    const auto& g = B.canonical(find_label(B, make_word({i})));
    CHECK(g.G == FreeElement::generator(i));
    CHECK(g.ell_mod4 == 0);
  }
}

TEST_CASE("twistor exponents of 1 and pi") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  CHECK(psi_eigen_exponent(Q, FreeElement::one()) == 0);
  CHECK(psi_eigen_exponent(Q, FreeElement::monomial(Word{}, PiScalar::pi())) == 2);
  CHECK_FALSE(psi_eigen_exponent(Q, th({0, 1, 0}) + th({0, 0, 1})).has_value());
}

TEST_CASE("rank one and orthogonal data give divided power monomials") {
  Datum A = catalog_datum("osp(1|2)");
  QuotientContext QA(A);
  Crystal BA(QA, 5);
  for (std::size_t b = 0; b < BA.elements().size(); ++b) {
    int n = static_cast<int>(BA.element(b).label.size());
    CHECK(equal_up_to_unit(QA, BA.canonical(b).G, divided_power(A, 0, n)));
  }
  Datum D = catalog_datum("osp(1|2)+A1");
  QuotientContext Q(D);
  Crystal B(Q, 4);
  for (std::size_t b = 0; b < B.elements().size(); ++b) {
    const Weight& nu = B.element(b).weight;
    FreeElement m = divided_power(D, 0, nu[0]) * divided_power(D, 1, nu[1]);
    CHECK(equal_up_to_unit(Q, B.canonical(b).G, m));
  }
}

TEST_CASE("lattice invariants through height 4") {
  for (const auto& name : {"osp(1|4)", "osp(1|6)", "B(0,1)^(1)"}) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    Crystal B(Q, 4);
    CHECK(verify_psi_lattice(B).pass());
    CHECK(verify_psi_strings(B).pass());
    CHECK(verify_rho_lattice(B).pass());
    CHECK(verify_canonical(B).pass());
  }
}

TEST_CASE("lattice membership negative control") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  Crystal B(Q, 2);
  CHECK_FALSE(B.in_lattice(th({0}, PiScalar::monomial(0, -1))));
  CHECK(B.in_v_lattice(th({0}, PiScalar::v())));
  CHECK_FALSE(B.in_v_lattice(th({0})));
  auto m = B.classify(th({1, 0}));
  REQUIRE(m.has_value());
  CHECK(B.element(m->element).label == make_word({1, 0}));
}

TEST_CASE("bar completion") {
  RationalFn f = RationalFn(LaurentPoly(1, -2)) + RationalFn(LaurentPoly(3));
  for (Component c : kComponents) {
    RationalFn g = bar_completion(f, c);
    CHECK(g.is_laurent());
    PiScalar s = c == Component::Plus ? PiScalar(g, 0) : PiScalar(0, g);
    CHECK(bar(s).component(c) == g);
  }
}
