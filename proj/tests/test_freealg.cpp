#include <doctest.h>

#include "cqg/datum_io.hpp"
#include "cqg/freealg.hpp"
#include "generators.hpp"

using namespace cqg;

namespace {

const Datum& osp14() {
  static const Datum D = catalog_datum("osp(1|4)");
  return D;
}

FreeElement th(std::initializer_list<int> letters, const PiScalar& c = PiScalar(1)) {
  return FreeElement::monomial(make_word(letters), c);
}

const PiScalar kV = PiScalar::v();
const PiScalar kPi = PiScalar::pi();

}  // namespace

TEST_CASE("words and weights") {
  Word w = make_word({0, 1, 0});
  CHECK(weight_of(w, 2) == Weight{2, 1});
  CHECK(render_word(w, osp14().cartan().names()) == "θ[1]θ[2]θ[1]");
  CHECK(parse_word("θ[1]θ[2]θ[1]", osp14().cartan().names()) == w);
  CHECK(parse_word("121", osp14().cartan().names()) == w);
}

TEST_CASE("elements store no zero coefficients and split by weight") {
  FreeElement x = th({0}) + th({1, 0}) - th({0});
  CHECK(x.size() == 1);
  CHECK(x.homogeneous(2));
  FreeElement y = th({0}) + th({1});
  CHECK_FALSE(y.homogeneous(2));
  CHECK(y.part(Weight{1, 0}, 2) == th({0}));
}

TEST_CASE("twisted multiplication oracles") {
  const Datum& D = osp14();
  CHECK(star_mul(D, th({0}), th({1})) == th({0, 1}));
  CHECK(star_mul(D, th({1}), th({0})) == -th({1, 0}));
  FreeElement y = th({1, 0, 0}, kV);
  CHECK(star_mul(D, FreeElement::one(), y) == y);
}

TEST_CASE("derivation oracles") {
  const Datum& D = osp14();
  CHECK(e_prime(D, 0, th({0, 1})) == th({1}));
  CHECK(e_prime(D, 0, th({1, 0})) == th({1}, power(kV, 2)));
  CHECK(e_prime(D, 0, th({1, 0}) - th({0, 1}, power(kV, 2))).is_zero());
  CHECK(e_prime(D, 0, FreeElement::one()).is_zero());
}

TEST_CASE("bilinear form oracles") {
  const Datum& D = osp14();
  CHECK(pairing(D, th({0}), th({0})).is_one());
  CHECK(pairing(D, th({1}), th({1})).is_one());
  CHECK(pairing(D, th({0, 1}), th({1, 0})) == power(kV, 2));
  CHECK(pairing(D, th({0, 0}), th({0, 0})) == PiScalar(1) + kPi * power(kV, -2));
  CHECK(pairing(D, th({0}), th({1})).is_zero());
}

TEST_CASE("anti-automorphism and bar") {
  CHECK(rho(th({0, 1, 0})) == th({0, 1, 0}));
  CHECK(rho(th({0, 1}, kV)) == th({1, 0}, kV));
  CHECK(bar_free(th({0}, kV)) == th({0}, kPi * power(kV, -1)));
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    for (int i = 0; i < D.rank(); ++i)
      for (int n = 0; n <= 4; ++n) CHECK(bar_free(divided_power(D, i, n)) == divided_power(D, i, n));
  }
}

TEST_CASE("divided powers") {
  const Datum& D = osp14();
  CHECK(divided_power(D, 0, 0) == FreeElement::one());
  CHECK(divided_power(D, 0, 1) == th({0}));
  CHECK(divided_power(D, 0, 2) == th({0, 0}, (kPi * kV + power(kV, -1)).inverse()));
  for (int n = 0; n <= 4; ++n) CHECK(qfactorial(n, 2) * divided_power(D, 1, n) == theta_power(1, n));
}

TEST_CASE("twistor on the free algebra") {
  const Datum& D = osp14();
  CHECK(twistor_free(D, th({0})) == th({0}));
  CHECK(word_exponent(D, make_word({0, 1, 0})) == -1);
  CHECK(twistor_free(D, th({0, 1, 0})) == th({0, 1, 0}, PiScalar::t_power(-1)));
  for (int i = 0; i < D.rank(); ++i)
    for (int n = 0; n <= 4; ++n) CHECK(twistor_free(D, divided_power(D, i, n)) == divided_power(D, i, n));
}

TEST_CASE("property: involutions and inverse maps") {
  gen::Rng rng(31);
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    for (int k = 0; k < 15; ++k) {
      FreeElement x = gen::element(rng, D.rank(), 4);
      CHECK(rho(rho(x)) == x);
      CHECK(bar_free(bar_free(x)) == x);
      CHECK(inverse_twistor(D, twistor_free(D, x)) == x);
      CHECK(twistor_free(D, inverse_twistor(D, x)) == x);
    }
  }
}

TEST_CASE("property: twistor is multiplicative for the twisted product") {
  gen::Rng rng(32);
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    for (int k = 0; k < 10; ++k) {
      FreeElement x = gen::element(rng, D.rank(), 3), y = gen::element(rng, D.rank(), 3);
      CHECK(twistor_free(D, x * y) == star_mul(D, twistor_free(D, x), twistor_free(D, y)));
    }
  }
}

TEST_CASE("property: pairing is symmetric and the derivation is adjoint to left multiplication") {
  gen::Rng rng(33);
  const Datum& D = osp14();
  for (int k = 0; k < 15; ++k) {
    Weight nu{gen::uniform(rng, 0, 2), gen::uniform(rng, 0, 2)};
    if (height(nu) == 0) continue;
    FreeElement x = gen::homogeneous(rng, nu), y = gen::homogeneous(rng, nu);
    CHECK(pairing(D, x, y) == pairing(D, y, x));
    for (int i = 0; i < 2; ++i) {
      if (nu[i] == 0) continue;
      Weight lower = nu;
      --lower[i];
      FreeElement z = gen::homogeneous(rng, lower);
      CHECK(pairing(D, FreeElement::generator(i) * z, x) == pairing(D, z, e_prime(D, i, x)));
    }
  }
}
