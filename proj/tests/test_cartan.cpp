#include <doctest.h>

#include "cqg/datum_io.hpp"
#include "generators.hpp"

using namespace cqg;

namespace {

bool has_condition(const std::vector<Finding>& fs, const std::string& c) {
  return std::any_of(fs.begin(), fs.end(), [&](const Finding& f) { return f.condition == c; });
}

SuperCartanDatum make(std::vector<std::vector<int>> dot, std::vector<int> parity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < parity.size(); ++i) names.push_back(std::to_string(i + 1));
  return SuperCartanDatum(names, std::move(dot), std::move(parity));
}

}  // namespace

TEST_CASE("validation of super Cartan data") {
  CHECK(validate(make({{2, -2}, {-2, 4}}, {1, 0})).empty());
  CHECK(has_condition(validate(make({{2, -2}, {-2, 4}}, {0, 0})), "(d)"));
  CHECK(has_condition(validate(make({{2, -1}, {-1, 4}}, {1, 0})), "even"));
  CHECK(has_condition(validate(make({{2, -2}, {0, 4}}, {1, 0})), "symmetric"));
  // odd index with an odd Cartan integer: 2*(-2)/4 = -1 for the odd row
  CHECK(has_condition(validate(make({{4, -2}, {-2, 4}}, {1, 0})), "(c)"));
  CHECK(has_condition(remarks(make({{2, -2}, {-2, 4}}, {0, 0})), "no-odd-index"));
  for (const auto& name : catalog_names()) CHECK(validate(catalog_datum(name).cartan()).empty());
}

TEST_CASE("malformed datum shapes are input errors") {
  CHECK_THROWS_AS(parse_datum_spec(nlohmann::json{{"indices", {"1", "2"}}, {"dot", {{2, -2}}}, {"parity", {1, 0}}}),
                  InputError);
  CHECK_THROWS_AS(parse_datum_spec(nlohmann::json::array()), InputError);
  CHECK_THROWS_AS(build_datum(parse_datum_spec(nlohmann::json{{"indices", {"1"}}, {"dot", {{2}}}, {"parity", {0}}})),
                  InputError);
}

TEST_CASE("phi on osp(1|4)") {
  Datum D = catalog_datum("osp(1|4)");
  CHECK(D.phi(0, 0) == 1);
  CHECK(D.phi(0, 1) == 0);
  CHECK(D.phi(1, 0) == -2);
  CHECK(D.phi(1, 1) == 2);
  CHECK(D.phi(Weight{1, 1}, Weight{1, 1}) == 1);
}

TEST_CASE("statistics N and p") {
  Datum D = catalog_datum("osp(1|4)");
  CHECK(stats_N(D.cartan(), Weight{1, 0}) == 0);
  CHECK(stats_p(D.cartan(), Weight{1, 0}) == 0);
  CHECK(stats_N(D.cartan(), Weight{2, 1}) == -2);
  CHECK(stats_p(D.cartan(), Weight{2, 1}) == 1);
  CHECK(height(Weight{2, 1}) == 3);
}

TEST_CASE("phi_dot through the transversal") {
  Datum D = catalog_datum("osp(1|4)");
  // X is the weight lattice here, so lambda is given by its pairings.
  LatticeVec one_plus_two = D.to_x(Weight{1, 1});
  CHECK(D.phi_dot(Weight{1, 0}, one_plus_two) == D.phi(0, 0) + D.phi(0, 1));
  CHECK(D.phi_dot(Weight{0, 1}, D.to_x(Weight{0, 1})) == D.phi(1, 1));
  CHECK(D.dominant(LatticeVec{0, 0}));
  CHECK_FALSE(catalog_datum("osp(1|2)").dominant(LatticeVec{-1}));
}

TEST_CASE("property: phi antisymmetry mod 4 and Z[I]-equivariance of phi_dot") {
  gen::Rng rng(21);
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    const auto& C = D.cartan();
    int r = D.rank();
    for (int k = 0; k < 25; ++k) {
      Weight nu(r), mu(r), kappa(r);
      for (int i = 0; i < r; ++i) {
        nu[i] = gen::uniform(rng, 0, 3);
        mu[i] = gen::uniform(rng, 0, 3);
        kappa[i] = gen::uniform(rng, -2, 2);
      }
      int lhs = D.phi(nu, mu) - D.phi(mu, nu);
      int rhs = C.dot(nu, mu) + 2 * C.parity(nu) * C.parity(mu);
      CHECK(((lhs - rhs) % 4 + 4) % 4 == 0);
      CHECK(stats_N(C, nu) % 2 == 0);
      LatticeVec lambda(static_cast<std::size_t>(D.root().rank_x));
      for (auto& c : lambda) c = gen::uniform(rng, -3, 3);
      LatticeVec shifted = lambda;
      LatticeVec kx = D.to_x(kappa);
      for (std::size_t a = 0; a < shifted.size(); ++a) shifted[a] += kx[a];
      CHECK(D.phi_dot(nu, shifted) == D.phi_dot(nu, lambda) + D.phi(nu, kappa));
    }
  }
}

TEST_CASE("transversal decomposes every weight uniquely") {
  gen::Rng rng(22);
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    const auto& T = D.transversal();
    for (int k = 0; k < 30; ++k) {
      LatticeVec lambda(static_cast<std::size_t>(D.root().rank_x));
      for (auto& c : lambda) c = gen::uniform(rng, -5, 5);
      auto split = T.decompose(lambda);
      LatticeVec back = D.to_x(split.mu);
      for (std::size_t a = 0; a < back.size(); ++a) back[a] += split.c[a];
      CHECK(back == lambda);
      CHECK(T.reduce(split.c) == split.c);
    }
  }
}

TEST_CASE("affine datum gets a regular extended root datum") {
  Datum D = catalog_datum("B(0,1)^(1)");
  CHECK(D.root().rank_x == 3);
  CHECK(validate_root(D.cartan(), D.root()).empty());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(D.pair(i, D.to_x(D.cartan().unit(j))) == D.cartan().a(i, j));
}

TEST_CASE("datum JSON round trip and hash") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    Datum E = build_datum(parse_datum_spec(datum_to_json(D)));
    CHECK(datum_to_json(E) == datum_to_json(D));
    CHECK(datum_hash(E) == datum_hash(D));
    CHECK(datum_hash(D).size() == 16);
  }
  CHECK(datum_hash(catalog_datum("osp(1|4)")) != datum_hash(catalog_datum("osp(1|6)")));
}
