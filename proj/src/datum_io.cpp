#include "cqg/datum_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cqg {

using nlohmann::json;

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("datum is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("datum field '") + key + "' has the wrong type");
  }
}

std::vector<LatticeVec> get_vectors(const json& j, const char* what) {
  try {
    return j.get<std::vector<LatticeVec>>();
  } catch (const json::exception&) {
    throw InputError(std::string("'") + what + "' must be a list of integer vectors");
  }
}

}  // namespace

DatumSpec parse_datum_spec(const json& j) {
  if (!j.is_object()) throw InputError("datum must be a JSON object");
  std::vector<std::string> names;
  const json& idx = j.contains("indices") ? j.at("indices") : json();
  if (!idx.is_array()) throw InputError("datum is missing 'indices'");
  for (const auto& e : idx) {
    if (e.is_string()) names.push_back(e.get<std::string>());
    else if (e.is_number_integer()) names.push_back(std::to_string(e.get<long long>()));
    else throw InputError("index names must be strings or integers");
  }
  auto dot = get_field<std::vector<std::vector<int>>>(j, "dot");
  auto parity = get_field<std::vector<int>>(j, "parity");
  DatumSpec spec{SuperCartanDatum(names, dot, parity), std::nullopt, {}};
  bool has_x = j.contains("X"), has_y = j.contains("Y");
  if (has_x != has_y) throw InputError("'X' and 'Y' must be given together");
  if (has_x) {
    RootDatum R;
    const json& X = j.at("X");
    const json& Y = j.at("Y");
    if (!X.is_object() || !Y.is_object()) throw InputError("'X' and 'Y' must be objects");
    R.rank_x = get_field<int>(X, "rank");
    R.rank_y = get_field<int>(Y, "rank");
    R.emb_x = get_vectors(X.at("simple"), "X.simple");
    R.emb_y = get_vectors(Y.at("simple"), "Y.simple");
    if (j.contains("pairing")) {
      R.pairing = get_vectors(j.at("pairing"), "pairing");
    } else {
      R.pairing.assign(static_cast<std::size_t>(R.rank_y), std::vector<long long>(static_cast<std::size_t>(R.rank_x), 0));
      for (int k = 0; k < std::min(R.rank_x, R.rank_y); ++k) R.pairing[k][k] = 1;
    }
    spec.root = R;
  }
  if (j.contains("transversal")) {
    const json& t = j.at("transversal");
    if (t.is_array()) {
      spec.transversal = get_vectors(t, "transversal");
    } else if (t.is_object()) {
      if (t.value("kind", "") == "user") spec.transversal = get_vectors(t.at("representatives"), "transversal");
    } else {
      throw InputError("'transversal' must be a list or an object");
    }
  }
  return spec;
}

DatumSpec load_datum_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open datum file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("datum file '" + path + "' is not valid JSON");
  }
  return parse_datum_spec(j);
}

Datum build_datum(const DatumSpec& spec) {
  auto findings = validate(spec.cartan);
  if (!findings.empty())
    throw InputError("invalid datum: condition " + findings.front().condition + ": " + findings.front().message);
  if (spec.root) {
    auto rf = validate_root(spec.cartan, *spec.root);
    if (!rf.empty()) throw InputError("invalid root datum: " + rf.front().message);
  }
  return Datum(spec.cartan, spec.root, spec.transversal);
}

json datum_to_json(const Datum& D) {
  const auto& C = D.cartan();
  const auto& R = D.root();
  const auto& T = D.transversal();
  json t;
  if (T.user_supplied()) {
    t["kind"] = "user";
    t["representatives"] = T.user();
  } else {
    t["kind"] = "hermite";
    t["pivot_rows"] = T.pivot_rows();
    t["columns"] = T.hermite_columns();
    if (auto reps = T.representatives()) t["representatives"] = *reps;
    else t["representatives"] = nullptr;
  }
  return json{{"indices", C.names()},
              {"dot", C.dot_matrix()},
              {"parity", C.parities()},
              {"X", {{"rank", R.rank_x}, {"simple", R.emb_x}}},
              {"Y", {{"rank", R.rank_y}, {"simple", R.emb_y}}},
              {"pairing", R.pairing},
              {"transversal", t}};
}

std::string fnv1a_hex(const std::string& text) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h);
  return buf;
}

std::string datum_hash(const Datum& D) { return fnv1a_hex(datum_to_json(D).dump()); }

// ---------------------------------------------------------------- catalog

std::vector<std::string> catalog_names() { return {"osp(1|2)", "osp(1|2)+A1", "osp(1|4)", "osp(1|6)", "B(0,1)^(1)"}; }

json catalog_json(const std::string& name) {
  if (name == "osp(1|2)") return json{{"indices", {"1"}}, {"dot", {{2}}}, {"parity", {1}}};
  if (name == "osp(1|2)+A1")
    return json{{"indices", {"1", "2"}}, {"dot", {{2, 0}, {0, 4}}}, {"parity", {1, 0}}};
  if (name == "osp(1|4)")
    return json{{"indices", {"1", "2"}}, {"dot", {{2, -2}, {-2, 4}}}, {"parity", {1, 0}}};
  if (name == "osp(1|6)")
    return json{{"indices", {"1", "2", "3"}},
                {"dot", {{2, -2, 0}, {-2, 4, -2}, {0, -2, 4}}},
                {"parity", {1, 0, 0}}};
  if (name == "B(0,1)^(1)")
    return json{{"indices", {"0", "1"}}, {"dot", {{8, -4}, {-4, 2}}}, {"parity", {0, 1}}};
  throw InputError("unknown catalog datum '" + name + "'");
}

Datum catalog_datum(const std::string& name) { return build_datum(parse_datum_spec(catalog_json(name))); }

}  // namespace cqg
