#include <doctest.h>

#include "cqg/datum_io.hpp"
#include "cqg/umod.hpp"

using namespace cqg;

namespace {

std::vector<std::size_t> dims_along_depth(const WeightModule& V) {
  std::vector<std::size_t> out;
  for (const auto& nu : V.depths())
    if (V.dim(nu) > 0) out.push_back(V.dim(nu));
  return out;
}

}  // namespace

TEST_CASE("osp(1|2) modules have dimension n+1") {
  Datum D = catalog_datum("osp(1|2)");
  QuotientContext Q(D);
  for (long long n = 0; n <= 3; ++n)
    for (Component c : kComponents) {
      WeightModule V(Q, LatticeVec{n}, 6, c);
      CHECK(dims_along_depth(V) == std::vector<std::size_t>(static_cast<std::size_t>(n + 1), 1));
    }
  WeightModule V(Q, LatticeVec{2}, 6, Component::Minus);
  CHECK(character(V) == std::map<LatticeVec, std::size_t>{{{2}, 1}, {{0}, 1}, {{-2}, 1}});
}

TEST_CASE("trivial module") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    WeightModule V(Q, LatticeVec(static_cast<std::size_t>(D.root().rank_x), 0), 4, Component::Plus);
    auto ch = character(V);
    CHECK(ch.size() == 1);
    CHECK(ch.begin()->second == 1);
  }
}

TEST_CASE("highest weight vector is killed by every E") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  WeightModule V(Q, LatticeVec{1, 1}, 4, Component::Minus);
  Weight top{0, 0};
  CHECK(V.dim(top) == 1);
  for (int i = 0; i < 2; ++i) {
    Weight down{0, 0};
    down[i] = 1;
    const FieldMatrix& e = V.E(i, down);
    CHECK(e.rows == 1);
    CHECK(is_zero(matmul(e, V.F(i, top))) == (D.pair(i, V.lambda()) == 0));
  }
}

TEST_CASE("non-dominant weights still build to the height bound") {
  Datum D = catalog_datum("osp(1|2)");
  QuotientContext Q(D);
  WeightModule V(Q, LatticeVec{-1}, 4, Component::Plus);
  CHECK(dims_along_depth(V).size() == 5);
}

TEST_CASE("characters agree between the two specializations") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  for (const LatticeVec& l : {LatticeVec{1, 0}, LatticeVec{0, 1}, LatticeVec{1, 1}, LatticeVec{2, 1}}) {
    WeightModule plus(Q, l, 5, Component::Plus), minus(Q, l, 5, Component::Minus);
    CHECK(character(plus) == character(minus));
  }
}

TEST_CASE("module relations hold for all three operator families") {
  for (const auto& name : catalog_names()) {
    Datum D = catalog_datum(name);
    QuotientContext Q(D);
    LatticeVec l(static_cast<std::size_t>(D.root().rank_x), 1);
    if (!D.dominant(l)) l.assign(l.size(), 0);
    for (Component c : kComponents) {
      WeightModule V(Q, l, 4, c);
      CHECK(check_relations(V, untwisted_family(V)).pass());
      CHECK(verify_modified_twistor(V).pass());
      CHECK(verify_hat_twistor(V, UpsilonSign::Minus).pass());
      CHECK(verify_hat_twistor(V, UpsilonSign::Plus).pass());
    }
  }
}

TEST_CASE("mutated exponent tables fail") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  WeightModule V(Q, LatticeVec{1, 1}, 4, Component::Plus);
  CHECK_FALSE(verify_modified_twistor(V, true).pass());
  CHECK_FALSE(verify_hat_twistor(V, UpsilonSign::Minus, true).pass());
}

TEST_CASE("modified twistor exponents") {
  Datum D = catalog_datum("osp(1|4)");
  for (int i = 0; i < 2; ++i) {
    LatticeVec j = D.to_x(D.cartan().unit(1 - i));
    CHECK(modified_f_exponent(D, i, j) == D.phi(i, 1 - i));
    CHECK(modified_e_exponent(D, i, j) == D.cartan().d(i) * D.pair(i, j) - D.phi(i, 1 - i));
  }
}

TEST_CASE("clubsuit congruence") {
  Datum D = catalog_datum("osp(1|4)");
  for (int k = 0; k <= 3; ++k) CHECK(clubsuit_congruence(D, 0, 1, k));
  for (const auto& name : catalog_names()) {
    Datum E = catalog_datum(name);
    for (int i = 0; i < E.rank(); ++i)
      for (int j = 0; j < E.rank(); ++j)
        if (i != j)
          for (int k = 0; k <= E.cartan().b(i, j); ++k) CHECK(clubsuit_congruence(E, i, j, k));
  }
}

TEST_CASE("literal correction term fails when the larger index comes first") {
  Datum D = catalog_datum("osp(1|4)");
  CHECK(clubsuit_correction(D, 1, 0, true) != clubsuit_correction(D, 1, 0, false));
  bool any_fail = false;
  for (int k = 0; k <= D.cartan().b(1, 0); ++k) any_fail = any_fail || !clubsuit_congruence(D, 1, 0, k, true);
  CHECK(any_fail);
  // the i < j case is unaffected
  for (int k = 0; k <= 3; ++k) CHECK(clubsuit_congruence(D, 0, 1, k, true));
}

TEST_CASE("chi diagram") {
  Datum D = catalog_datum("osp(1|4)");
  QuotientContext Q(D);
  WeightModule V(Q, LatticeVec{1, 1}, 4, Component::Plus);
  CHECK(verify_chi_diagram(V, make_word({0})));
  CHECK(verify_chi_diagram(V, make_word({0, 1})));
  CHECK(verify_chi_diagram(V, make_word({0, 1, 0, 1})));
  CHECK(verify_chi_diagram(V, make_word({0, 0})));
  // the opposite Upsilon convention breaks words with a repeated odd letter
  CHECK_FALSE(verify_chi_diagram(V, make_word({0, 0}), UpsilonSign::Plus));
}
