// JSON form of a datum, its canonical hash, and the built-in catalog.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cqg/cartan.hpp"

namespace cqg {

struct DatumSpec {
  SuperCartanDatum cartan;
  std::optional<RootDatum> root;
  std::vector<LatticeVec> transversal;
};

// Throws InputError on shape problems; does not check the Cartan conditions.
DatumSpec parse_datum_spec(const nlohmann::json& j);
DatumSpec load_datum_spec(const std::string& path);
// Throws InputError when the datum violates any condition.
Datum build_datum(const DatumSpec& spec);

nlohmann::json datum_to_json(const Datum& D);
// 16 hex digits of FNV-1a over the normalized JSON text.
std::string datum_hash(const Datum& D);
std::string fnv1a_hex(const std::string& text);

std::vector<std::string> catalog_names();
nlohmann::json catalog_json(const std::string& name);
Datum catalog_datum(const std::string& name);

}  // namespace cqg
