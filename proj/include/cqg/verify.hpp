// Verification suites with JSON reports, shared by the command line tool and tests.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqg/umod.hpp"

namespace cqg {

struct SuiteConfig {
  int height = 4;
  // Highest weights for the module suites; empty selects default_lambdas().
  std::vector<LatticeVec> lambdas;
  // Apply the suite's negative control instead of the real check.
  bool mutate = false;
  std::optional<std::filesystem::path> cache_dir;
};

struct SuiteResult {
  std::string suite;
  bool pass = true;
  nlohmann::json report;
};

std::vector<std::string> suite_names();
// Dominant weights with every coordinate in {0, 1}, zero included.
std::vector<LatticeVec> default_lambdas(const Datum& D);

// Throws InputError for unknown suite names; "all" runs every suite.
std::vector<SuiteResult> run_suites(const Datum& D, const std::string& suite, const SuiteConfig& cfg);

// Canonical basis tables through height H.
nlohmann::json canonical_tables(const Datum& D, int H, const std::optional<std::filesystem::path>& cache_dir = {});
// Character of V(lambda) at pi = sign.
nlohmann::json character_json(const WeightModule& V);

// Header common to every output: datum hash and normalized datum.
nlohmann::json output_header(const Datum& D, const std::string& command);

std::string label_string(const Word& label, const std::vector<std::string>& names);
nlohmann::json to_json(const LatticeVec& v);
nlohmann::json to_json(const Weight& v);

}  // namespace cqg
