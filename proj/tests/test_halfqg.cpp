#include <doctest.h>

#include <filesystem>

#include "cqg/datum_io.hpp"
#include "cqg/halfqg.hpp"
#include "generators.hpp"

using namespace cqg;

namespace {

FreeElement th(std::initializer_list<int> letters, const PiScalar& c = PiScalar(1)) {
  return FreeElement::monomial(make_word(letters), c);
}

}  // namespace

TEST_CASE("small Gram matrices") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  const PiMatrix& g1 = Q.gram(Weight{1, 0});
  CHECK(g1.plus.rows == 1);
  CHECK(g1.plus(0, 0).is_one());
  const PiMatrix& g12 = Q.gram(Weight{1, 1});
  // words 12, 21; off-diagonal pi^{p(1)p(2)} v^{-1.2} = v^2
  CHECK(g12.plus(0, 0).is_one());
  CHECK(g12.plus(1, 1).is_one());
  CHECK(g12.plus(0, 1) == LaurentPoly(1, 2));
  CHECK(g12.minus(1, 0) == LaurentPoly(1, 2));
  for (Component c : kComponents) {
    CHECK(Q.gram_rank(Weight{3, 1}, c) == 3);
    CHECK(Q.dim(Weight{3, 1}, c) == 3);
    CHECK(Q.gram_rank(Weight{3, 1}, c) + Q.radical(Weight{3, 1}, c).size() == Q.gram_words(Weight{3, 1}).size());
  }
}

TEST_CASE("Serre elements vanish and the quotient is not trivial") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int i = 0; i < D.rank(); ++i)
      for (int j = 0; j < D.rank(); ++j)
        if (i != j) CHECK(Q.is_zero(serre_element(D, i, j)));
  }
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  CHECK_FALSE(Q.is_zero(th({0, 1}) - th({1, 0})));
  FreeElement s = serre_element(D, 1, 0);
  FreeElement x = th({0, 1}, PiScalar::v());
  CHECK(Q.equal(x, x + s * th({0})));
  CHECK(Q.equal(x, x + th({1}) * s));
}

TEST_CASE("Serre element shapes") {
  Datum A = catalog_datum("osp(1|2)+A1");
  // a_ij = 0: theta_i theta_j - pi^{p(i)p(j)} theta_j theta_i
  CHECK(serre_element(A, 0, 1) == th({0, 1}) - th({1, 0}));
  Datum D = catalog_datum("osp(1|4)");
  FreeElement s21 = serre_element(D, 1, 0);
  CHECK(s21.size() == 3);
  CHECK(s21.coeff(make_word({1, 1, 0})).is_one());
  CHECK(s21.coeff(make_word({1, 0, 1})) == -qinteger(2, 2));
  CHECK(s21.coeff(make_word({0, 1, 1})).is_one());
  FreeElement s12 = serre_element(D, 0, 1);
  CHECK(s12.size() == 4);
  for (int k = 0; k <= 3; ++k) CHECK(serre_coefficient(D.cartan(), 0, 1, k) == power(PiScalar(-1), k) * power(PiScalar::pi(), k * (k - 1) / 2) * qbinomial(3, k, 1));
}

TEST_CASE("dimensions agree between components") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int h = 0; h <= 5; ++h)
      for (const auto& nu : weights_of_height(D.rank(), h))
        CHECK(Q.dim(nu, Component::Plus) == Q.dim(nu, Component::Minus));
  }
}

TEST_CASE("derivation coordinates agree with the Gram radical") {
  for (const auto& name : {"osp(1|4)", "B(0,1)^(1)"}) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int h = 1; h <= 5; ++h)
      for (const auto& nu : weights_of_height(D.rank(), h))
        for (Component c : kComponents) CHECK(Q.gram_rank(nu, c) == Q.dim(nu, c));
  }
}

TEST_CASE("normal forms represent the same element") {
  gen::Rng rng(41);
  Datum D = catalog_datum("osp(1|6)");
  QuotientContext Q(D);
  for (int k = 0; k < 10; ++k) {
    FreeElement x = gen::homogeneous(rng, Weight{gen::uniform(rng, 1, 2), gen::uniform(rng, 0, 2), gen::uniform(rng, 0, 1)});
    FreeElement n = Q.normal_form(x);
    CHECK(Q.equal(x, n));
    CHECK(Q.normal_form(n) == n);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Datum D = catalog_datum("osp(1|6)");
  for (const auto& nu : {Weight{1, 1, 1}, Weight{2, 1, 1}, Weight{2, 2, 1}}) {
    auto words = words_of_weight(nu);
    CHECK(gram_matrix_serial(D.cartan(), words) == gram_matrix_parallel(D.cartan(), words));
  }
  gen::Rng rng(42);
  FieldMatrix a(7, 5), b(5, 6);
  for (auto& x : a.data) x = gen::rational(rng);
  for (auto& x : b.data) x = gen::rational(rng);
  CHECK(matmul_serial(a, b) == matmul_parallel(a, b));
  CHECK(matmul(a, b) == matmul_serial(a, b));
}

TEST_CASE("Gram cache round trip") {
  auto dir = std::filesystem::temp_directory_path() / "cqg_gram_cache_test";
  std::filesystem::remove_all(dir);
  Datum D = catalog_datum("osp(1|4)");
  Weight nu{2, 2};
  PiMatrix fresh;
  {
    QuotientContext Q(D, dir);
    fresh = Q.gram(nu);
    CHECK_FALSE(Q.gram_cache_hit(nu));
  }
  CHECK_FALSE(std::filesystem::is_empty(dir));
  {
    QuotientContext Q(D, dir);
    CHECK(Q.gram(nu) == fresh);
    CHECK(Q.gram_cache_hit(nu));
    CHECK(Q.gram_rank(nu, Component::Minus) == Q.dim(nu, Component::Minus));
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("twisted Serre relations hold and the mutation breaks them") {
  for (const auto& name : {"osp(1|2)+A1", "osp(1|4)", "osp(1|6)", "B(0,1)^(1)"}) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    for (int i = 0; i < D.rank(); ++i)
      for (int j = 0; j < D.rank(); ++j) {
        if (i == j) continue;
        CHECK(verify_twistor_serre(Q, i, j));
        CHECK_FALSE(verify_twistor_serre(Q, i, j, true));
      }
  }
}

TEST_CASE("sign of the twistor conjugate of rho") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  CHECK(rho_psi_sign(D.cartan(), Weight{1, 0}) == 1);
  CHECK(rho_psi_sign(D.cartan(), Weight{2, 1}) == 1);
  CHECK(verify_rho_psi(Q, th({0, 1, 0})));
  gen::Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    FreeElement x = FreeElement::monomial(gen::word(rng, 2, gen::uniform(rng, 1, 5)));
    CHECK(verify_rho_psi(Q, x));
  }
}
