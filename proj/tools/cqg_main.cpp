// cqg: command line front end. Every output is JSON carrying the datum hash and
// the normalized datum. Exit codes: 0 pass, 1 verification failure or invalid
// datum, 2 malformed input.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cqg/datum_io.hpp"
#include "cqg/verify.hpp"

using nlohmann::json;
using namespace cqg;

namespace {

struct Options {
  std::string datum;
  int height = 4;
  int height_cap = 8;
  std::vector<std::string> lambdas;
  std::string out;
  std::string cache;
  std::string suite = "all";
  std::string pi = "both";
  bool mutate = false;
};

// A path if such a file exists, otherwise a catalog name.
DatumSpec read_spec(const std::string& ref) {
  if (std::filesystem::exists(ref)) return load_datum_spec(ref);
  auto names = catalog_names();
  if (std::find(names.begin(), names.end(), ref) != names.end()) return parse_datum_spec(catalog_json(ref));
  throw InputError("no datum file or catalog entry named '" + ref + "'");
}

LatticeVec parse_lambda(const std::string& text) {
  LatticeVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("cannot read lambda '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty lambda");
  return out;
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
  if (o.cache.empty()) return std::nullopt;
  return std::filesystem::path(o.cache);
}

void check_height(const Options& o) {
  if (o.height < 0) throw InputError("height must be nonnegative");
  if (o.height > o.height_cap)
    throw InputError("height " + std::to_string(o.height) + " exceeds the cap " + std::to_string(o.height_cap) +
                     "; raise it with --height-cap");
}

void emit(const Options& o, const json& j) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + o.out + "'");
  f << text;
}

json findings_json(const std::vector<Finding>& fs, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& f : fs) {
    json idx = json::array();
    for (int i : f.indices) idx.push_back(names[static_cast<std::size_t>(i)]);
    out.push_back({{"condition", f.condition}, {"indices", idx}, {"message", f.message}});
  }
  return out;
}

int cmd_validate(const Options& o) {
  DatumSpec spec = read_spec(o.datum);
  const auto& names = spec.cartan.names();
  auto findings = validate(spec.cartan);
  if (findings.empty() && spec.root) {
    auto rf = validate_root(spec.cartan, *spec.root);
    findings.insert(findings.end(), rf.begin(), rf.end());
  }
  json j;
  if (findings.empty()) {
    Datum D = build_datum(spec);
    j = output_header(D, "validate");
  } else {
    j = {{"command", "validate"}, {"datum_hash", nullptr}, {"datum", nullptr}};
  }
  j["valid"] = findings.empty();
  j["findings"] = findings_json(findings, names);
  j["remarks"] = findings_json(remarks(spec.cartan), names);
  emit(o, j);
  return findings.empty() ? 0 : 1;
}

int cmd_canonical(const Options& o) {
  check_height(o);
  Datum D = build_datum(read_spec(o.datum));
  json j = output_header(D, "canonical");
  j["height"] = o.height;
  j["weights"] = canonical_tables(D, o.height, cache_dir(o));
  emit(o, j);
  return 0;
}

std::vector<Component> components(const std::string& pi) {
  if (pi == "+1" || pi == "1") return {Component::Plus};
  if (pi == "-1") return {Component::Minus};
  if (pi == "both") return {Component::Plus, Component::Minus};
  throw InputError("--pi must be +1, -1 or both");
}

int cmd_character(const Options& o) {
  check_height(o);
  Datum D = build_datum(read_spec(o.datum));
  if (o.lambdas.empty()) throw InputError("character needs --lambda");
  auto comps = components(o.pi);
  QuotientContext Q(D, cache_dir(o));
  json j = output_header(D, "character");
  j["height"] = o.height;
  json list = json::array();
  for (const auto& text : o.lambdas) {
    LatticeVec l = parse_lambda(text);
    if (static_cast<int>(l.size()) != D.root().rank_x)
      throw InputError("lambda must have " + std::to_string(D.root().rank_x) + " coordinates");
    if (!D.dominant(l)) throw InputError("lambda '" + text + "' is not dominant");
    for (Component c : comps) list.push_back(character_json(WeightModule(Q, l, o.height, c)));
  }
  j["characters"] = list;
  emit(o, j);
  return 0;
}

int cmd_verify(const Options& o) {
  check_height(o);
  Datum D = build_datum(read_spec(o.datum));
  SuiteConfig cfg;
  cfg.height = o.height;
  cfg.mutate = o.mutate;
  cfg.cache_dir = cache_dir(o);
  for (const auto& text : o.lambdas) {
    LatticeVec l = parse_lambda(text);
    if (static_cast<int>(l.size()) == D.root().rank_x && !D.dominant(l))
      throw InputError("lambda '" + text + "' is not dominant");
    cfg.lambdas.push_back(l);
  }
  auto results = run_suites(D, o.suite, cfg);
  json j = output_header(D, "verify");
  j["height"] = o.height;
  j["mutate"] = o.mutate;
  json suites = json::array();
  bool pass = true;
  for (auto& r : results) {
    pass = pass && r.pass;
    suites.push_back(std::move(r.report));
  }
  j["suites"] = suites;
  j["pass"] = pass;
  emit(o, j);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering quantum groups: canonical bases, modules and twistors"};
  app.require_subcommand(1);
  Options o;

  auto add_datum = [&](CLI::App* sub) {
    sub->add_option("--datum", o.datum, "Datum JSON file or catalog name")->required();
    sub->add_option("--out", o.out, "Write JSON here instead of stdout");
  };
  auto add_height = [&](CLI::App* sub) {
    sub->add_option("--height", o.height, "Height bound H");
    sub->add_option("--height-cap", o.height_cap, "Largest accepted H (default 8)");
    sub->add_option("--cache", o.cache, "Directory for Gram matrix caches");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the conditions on a datum");
  add_datum(validate_cmd);

  auto* canonical_cmd = app.add_subcommand("canonical", "Crystal and canonical basis tables");
  add_datum(canonical_cmd);
  add_height(canonical_cmd);

  auto* character_cmd = app.add_subcommand("character", "Weight space dimensions of V(lambda)");
  add_datum(character_cmd);
  add_height(character_cmd);
  character_cmd->add_option("--lambda", o.lambdas, "Highest weight \"c1,c2,...\" (repeatable)");
  character_cmd->add_option("--pi", o.pi, "+1, -1 or both");

  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  add_datum(verify_cmd);
  add_height(verify_cmd);
  verify_cmd->add_option("--lambda", o.lambdas, "Highest weights for module suites (repeatable)");
  verify_cmd->add_option("--suite", o.suite, "Suite name or all");
  verify_cmd->add_flag("--mutate", o.mutate, "Run the negative controls");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(o);
    if (*canonical_cmd) return cmd_canonical(o);
    if (*character_cmd) return cmd_character(o);
    if (*verify_cmd) return cmd_verify(o);
  } catch (const InputError& e) {
    std::cerr << json{{"error", "invalid-input"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "failure"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
  return 2;
}
