#include <doctest.h>

#include "cqg/datum_io.hpp"
#include "cqg/verify.hpp"

using namespace cqg;

TEST_CASE("default highest weights") {
  Datum D = catalog_datum("osp(1|4)");
  CHECK(default_lambdas(D) == std::vector<LatticeVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  for (const auto& name : catalog_names()) {
    Datum E = catalog_datum(name);
    for (const auto& l : default_lambdas(E)) CHECK(E.dominant(l));
  }
}

TEST_CASE("labels") {
  CHECK(label_string(make_word({0, 1, 0}), {"1", "2"}) == "121");
  CHECK(label_string(make_word({1, 0}), {"a1", "b"}) == "b,a1");
  CHECK(label_string(Word{}, {"1"}).empty());
}

TEST_CASE("suite selection") {
  Datum D = catalog_datum("osp(1|4)");
  SuiteConfig cfg;
  cfg.height = 3;
  CHECK_THROWS_AS(run_suites(D, "no-such-suite", cfg), InputError);
  auto all = run_suites(D, "all", cfg);
  CHECK(all.size() == suite_names().size());
  for (const auto& r : all) {
    CHECK_MESSAGE(r.pass, r.suite);
    CHECK(r.report["failed"] == 0);
    CHECK(r.report["checked"].get<std::size_t>() > 0);
  }
  cfg.lambdas = {{1, 2, 3}};
  CHECK_THROWS_AS(run_suites(D, "characters", cfg), InputError);
}

TEST_CASE("every suite has a failing negative control on osp(1|4)") {
  Datum D = catalog_datum("osp(1|4)");
  SuiteConfig cfg;
  cfg.height = 3;
  cfg.mutate = true;
  for (const auto& r : run_suites(D, "all", cfg)) CHECK_MESSAGE(!r.pass, r.suite);
}

TEST_CASE("canonical table output") {
  Datum D = catalog_datum("osp(1|4)");
  auto tables = canonical_tables(D, 3);
  bool found = false;
  for (const auto& w : tables) {
    CHECK(w["crystal"].size() == w["canonical"].size());
    for (const auto& e : w["canonical"])
      if (e["label"] == "121") {
        found = true;
        CHECK(e["element"] == "θ[1]θ[2]θ[1]");
        CHECK(e["ell_mod4"] == 3);
        CHECK(w["weight"] == nlohmann::json({2, 1}));
      }
  }
  CHECK(found);
  CHECK(canonical_tables(D, 3).dump() == tables.dump());
}

TEST_CASE("character output") {
  Datum D = catalog_datum("osp(1|2)");
  QuotientContext Q(D);
  auto j = character_json(WeightModule(Q, LatticeVec{2}, 4, Component::Minus));
  CHECK(j["pi"] == "-1");
  CHECK(j["lambda"] == nlohmann::json({2}));
  CHECK(j["character"].size() == 3);
  CHECK(j["character"][1] == nlohmann::json({{"weight", {0}}, {"dim", 1}}));
}

TEST_CASE("output header carries the datum") {
  Datum D = catalog_datum("B(0,1)^(1)");
  auto h = output_header(D, "verify");
  CHECK(h["datum_hash"] == datum_hash(D));
  CHECK(h["datum"] == datum_to_json(D));
  CHECK(h["datum"]["transversal"].contains("representatives"));
}
