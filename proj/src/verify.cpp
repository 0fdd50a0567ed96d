#include "cqg/verify.hpp"

#include <algorithm>
#include <random>

#include "cqg/crystal.hpp"
#include "cqg/datum_io.hpp"

namespace cqg {

using nlohmann::json;

json to_json(const LatticeVec& v) { return json(v); }
json to_json(const Weight& v) { return json(v); }

std::string label_string(const Word& label, const std::vector<std::string>& names) {
  bool short_names = std::all_of(names.begin(), names.end(), [](const auto& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < label.size(); ++k) {
    if (!short_names && k > 0) out += ",";
    out += names[static_cast<std::size_t>(label[k])];
  }
  return out;
}

json output_header(const Datum& D, const std::string& command) {
  json j;
  j["command"] = command;
  j["datum_hash"] = datum_hash(D);
  j["datum"] = datum_to_json(D);
  return j;
}

std::vector<std::string> suite_names() {
  return {"half-twistor", "rho-psi",  "psi-lattice", "psi-strings", "rho-lattice", "canonical",
          "modified-twistor", "hat-twistor", "clubsuit", "chi", "characters", "structural"};
}

std::vector<LatticeVec> default_lambdas(const Datum& D) {
  int r = D.root().rank_x;
  std::vector<LatticeVec> out;
  for (int mask = 0; mask < (1 << r); ++mask) {
    LatticeVec l(static_cast<std::size_t>(r), 0);
    for (int k = 0; k < r; ++k) l[static_cast<std::size_t>(k)] = (mask >> k) & 1;
    if (D.dominant(l)) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Word> all_words(int rank, int max_height) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int h = 1; h <= max_height; ++h) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int i = 0; i < rank; ++i) next.push_back(w + static_cast<char>(i));
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

struct Tally {
  json instances = json::array();
  std::size_t failed = 0;
  void add(json inst, bool pass) {
    inst["pass"] = pass;
    if (!pass) ++failed;
    instances.push_back(std::move(inst));
  }
  SuiteResult finish(const std::string& name, json extra = json::object()) {
    SuiteResult r;
    r.suite = name;
    r.pass = failed == 0;
    r.report = std::move(extra);
    r.report["suite"] = name;
    r.report["pass"] = r.pass;
    r.report["checked"] = instances.size();
    r.report["failed"] = failed;
    r.report["instances"] = std::move(instances);
    return r;
  }
};

const char* component_name(Component c) { return c == Component::Plus ? "+1" : "-1"; }

PiScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(-3, 3), len(1, 3);
  auto poly = [&] {
    LaurentPoly p;
    for (int k = len(rng); k > 0; --k) p += LaurentPoly(GaussianRational(mpq_class(coef(rng)), mpq_class(coef(rng))), expo(rng));
    return p;
  };
  auto fn = [&] {
    LaurentPoly den = poly();
    if (den.is_zero()) den = LaurentPoly(1);
    return RationalFn(poly(), den);
  };
  return {fn(), fn()};
}

// ------------------------------------------------------------ half algebra

SuiteResult half_twistor(QuotientContext& Q, const SuiteConfig& cfg) {
  const Datum& D = Q.datum();
  const auto& names = D.cartan().names();
  Tally t;
  for (int i = 0; i < D.rank(); ++i)
    for (int j = 0; j < D.rank(); ++j) {
      if (i == j) continue;
      t.add({{"i", names[i]}, {"j", names[j]}}, verify_twistor_serre(Q, i, j, cfg.mutate));
    }
  return t.finish("half-twistor");
}

SuiteResult rho_psi(QuotientContext& Q, const SuiteConfig& cfg) {
  const Datum& D = Q.datum();
  Tally t;
  for (const auto& w : all_words(D.rank(), cfg.height)) {
    FreeElement x = FreeElement::monomial(w);
    bool ok;
    if (!cfg.mutate) {
      ok = verify_rho_psi(Q, x);
    } else {
      int s = -rho_psi_sign(D.cartan(), weight_of(w, D.rank()));
      ok = Q.equal(twistor_free(D, rho(inverse_twistor(D, x))), PiScalar(s) * rho(x));
    }
    t.add({{"word", render_word(w, D.cartan().names())}}, ok);
  }
  return t.finish("rho-psi");
}

// ------------------------------------------------------------ crystal

json element_json(Crystal& B, std::size_t b) {
  const auto& names = B.quotient().datum().cartan().names();
  const auto& el = B.element(b);
  return {{"label", label_string(el.label, names)}, {"weight", to_json(el.weight)}};
}

SuiteResult psi_lattice(Crystal& B, const SuiteConfig& cfg) {
  Tally t;
  if (!cfg.mutate) {
    auto rep = verify_psi_lattice(B);
    for (const auto& e : rep.entries) {
      json j = element_json(B, e.element);
      if (e.ell_mod4) j["ell_mod4"] = *e.ell_mod4;
      if (!e.detail.empty()) j["detail"] = e.detail;
      t.add(j, e.pass);
    }
    // The inverse twistor keeps the lattice too, so the image is all of L[t].
    for (std::size_t b = 0; b < B.elements().size(); ++b) {
      json j = element_json(B, b);
      j["map"] = "inverse";
      t.add(j, B.in_lattice(inverse_twistor(B.quotient().datum(), B.element(b).rep)));
    }
  } else {
    // Negative control: v^{-1} Psi leaves the lattice.
    for (std::size_t b = 0; b < B.elements().size(); ++b) {
      FreeElement px = PiScalar::monomial(0, -1) * twistor_free(B.quotient().datum(), B.element(b).rep);
      t.add(element_json(B, b), B.in_lattice(px));
    }
  }
  return t.finish("psi-lattice");
}

SuiteResult psi_strings(Crystal& B, const SuiteConfig& cfg) {
  Tally t;
  if (!cfg.mutate) {
    for (const auto& e : verify_psi_strings(B).entries) t.add(element_json(B, e.element), e.pass);
  } else {
    // Negative control: drop the n^2 d_i correction from the string exponents.
    QuotientContext& Q = B.quotient();
    const Datum& D = Q.datum();
    for (std::size_t b = 0; b < B.elements().size(); ++b) {
      const auto& el = B.element(b);
      bool ok = true;
      for (int i = 0; i < D.rank() && ok; ++i) {
        auto s = string_decompose(Q, i, el.rep);
        FreeElement expect;
        for (const auto& [n, xn] : s.parts) {
          Weight ni(static_cast<std::size_t>(D.rank()), 0);
          ni[i] = n;
          expect += PiScalar::t_power(D.phi(ni, el.weight)) * (divided_power(D, i, n) * twistor_free(D, xn));
        }
        ok = Q.equal(twistor_free(D, el.rep), expect);
      }
      t.add(element_json(B, b), ok);
    }
  }
  return t.finish("psi-strings");
}

SuiteResult rho_lattice(Crystal& B, const SuiteConfig& cfg) {
  Tally t;
  for (std::size_t b = 0; b < B.elements().size(); ++b) {
    FreeElement r = rho(B.element(b).rep);
    if (cfg.mutate) r = PiScalar::monomial(0, -1) * r;
    t.add(element_json(B, b), B.in_lattice(r));
  }
  return t.finish("rho-lattice");
}

SuiteResult canonical(Crystal& B, const SuiteConfig& cfg) {
  Tally t;
  QuotientContext& Q = B.quotient();
  if (!cfg.mutate) {
    for (const auto& e : verify_canonical(B).entries) {
      json j = element_json(B, e.element);
      if (e.ell_mod4) j["ell_mod4"] = *e.ell_mod4;
      if (!e.detail.empty()) j["detail"] = e.detail;
      t.add(j, e.pass);
    }
  } else {
    // Negative control: v G(b) is not bar-invariant.
    for (std::size_t b = 0; b < B.elements().size(); ++b) {
      FreeElement g = PiScalar::v() * B.canonical(b).G;
      t.add(element_json(B, b), Q.equal(bar_free(g), g));
    }
  }
  return t.finish("canonical");
}

// ------------------------------------------------------------ modules

json report_json(const RelationReport& r, const Datum& D) {
  json inst = json::array();
  for (const auto& c : r.checks) {
    json j = {{"relation", c.relation}, {"depth", to_json(c.depth)}, {"pass", c.pass}};
    json idx = json::array();
    for (int k : c.indices) idx.push_back(k);
    j["indices"] = idx;
    if (!c.detail.empty()) j["detail"] = c.detail;
    inst.push_back(j);
  }
  (void)D;
  return {{"checked", r.checks.size()}, {"failed", r.failures()}, {"boundary_skipped", r.boundary_skipped}, {"checks", inst}};
}

template <class Fn>
SuiteResult per_module(const std::string& name, QuotientContext& Q, const SuiteConfig& cfg, const std::vector<LatticeVec>& lambdas,
                       Fn&& body) {
  Tally t;
  for (const auto& l : lambdas)
    for (Component c : kComponents) {
      WeightModule V(Q, l, cfg.height, c);
      json j = {{"lambda", to_json(l)}, {"pi", component_name(c)}};
      bool ok = body(V, j);
      t.add(j, ok);
    }
  return t.finish(name);
}

SuiteResult modified_twistor(QuotientContext& Q, const SuiteConfig& cfg, const std::vector<LatticeVec>& lambdas) {
  return per_module("modified-twistor", Q, cfg, lambdas, [&](WeightModule& V, json& j) {
    auto r = verify_modified_twistor(V, cfg.mutate);
    j["report"] = report_json(r, Q.datum());
    return r.pass();
  });
}

SuiteResult hat_twistor(QuotientContext& Q, const SuiteConfig& cfg, const std::vector<LatticeVec>& lambdas) {
  return per_module("hat-twistor", Q, cfg, lambdas, [&](WeightModule& V, json& j) {
    auto r = verify_hat_twistor(V, UpsilonSign::Minus, cfg.mutate);
    j["report"] = report_json(r, Q.datum());
    return r.pass();
  });
}

SuiteResult chi(QuotientContext& Q, const SuiteConfig& cfg, const std::vector<LatticeVec>& lambdas) {
  const Datum& D = Q.datum();
  auto words = all_words(D.rank(), std::min(cfg.height, 4));
  UpsilonSign sign = cfg.mutate ? UpsilonSign::Plus : UpsilonSign::Minus;
  return per_module("chi", Q, cfg, lambdas, [&](WeightModule& V, json& j) {
    json fails = json::array();
    for (const auto& w : words)
      if (!verify_chi_diagram(V, w, sign)) fails.push_back(render_word(w, D.cartan().names()));
    j["words"] = words.size();
    j["failed_words"] = fails;
    return fails.empty();
  });
}

SuiteResult characters(QuotientContext& Q, const SuiteConfig& cfg, const std::vector<LatticeVec>& lambdas) {
  const Datum& D = Q.datum();
  Tally t;
  for (const auto& l : lambdas) {
    if (!D.dominant(l)) continue;
    WeightModule plus(Q, l, cfg.height, Component::Plus);
    LatticeVec other = l;
    if (cfg.mutate) other[0] += 1;  // negative control: compare against a different highest weight
    WeightModule minus(Q, other, cfg.height, Component::Minus);
    json j = {{"lambda", to_json(l)}, {"plus", character_json(plus)["character"]}, {"minus", character_json(minus)["character"]}};
    t.add(j, character(plus) == character(minus));
  }
  return t.finish("characters");
}

// ------------------------------------------------------------ structural

SuiteResult structural(QuotientContext& Q, const SuiteConfig& cfg) {
  const Datum& D = Q.datum();
  Tally t;
  for (int h = 0; h <= cfg.height; ++h)
    for (const auto& nu : weights_of_height(D.rank(), h)) {
      std::size_t dp = Q.dim(nu, Component::Plus), dm = Q.dim(nu, Component::Minus);
      if (cfg.mutate) ++dm;
      t.add({{"check", "dim"}, {"weight", to_json(nu)}, {"plus", dp}, {"minus", dm}}, dp == dm);
    }
  // The Gram radical cuts out the same quotient; Gram sizes grow fast, so stop at 5.
  for (int h = 1; h <= std::min(cfg.height, 5); ++h)
    for (const auto& nu : weights_of_height(D.rank(), h))
      for (Component c : kComponents) {
        std::size_t g = Q.gram_rank(nu, c), d = Q.dim(nu, c);
        t.add({{"check", "gram-rank"}, {"weight", to_json(nu)}, {"pi", component_name(c)}, {"rank", g}, {"dim", d}}, g == d);
      }
  bool qb = true;
  for (int d = 1; d <= 3; ++d)
    for (int n = -8; n <= 8; ++n)
      for (int k = 0; k <= 8; ++k) qb = qb && qbinomial(n, k, d).is_laurent();
  t.add({{"check", "qbinomial-laurent"}}, qb);
  std::mt19937_64 rng(20240601);
  bool comm = true;
  for (int k = 0; k < 100; ++k) {
    PiScalar s = random_scalar(rng);
    comm = comm && bar(twist(s)) == twist(bar(s));
  }
  t.add({{"check", "bar-twist-commute"}, {"samples", 100}}, comm);
  return t.finish("structural");
}

SuiteResult clubsuit_suite(const Datum& D, const SuiteConfig& cfg) {
  const auto& names = D.cartan().names();
  Tally t;
  for (int i = 0; i < D.rank(); ++i)
    for (int j = 0; j < D.rank(); ++j) {
      if (i == j) continue;
      for (int k = 0; k <= D.cartan().b(i, j); ++k)
        t.add({{"i", names[i]}, {"j", names[j]}, {"k", k}, {"c", clubsuit_correction(D, i, j, cfg.mutate)}},
              clubsuit_congruence(D, i, j, k, cfg.mutate));
    }
  return t.finish("clubsuit");
}

}  // namespace

json character_json(const WeightModule& V) {
  json ch = json::array();
  for (const auto& nu : V.depths())
    if (V.dim(nu) > 0) ch.push_back({{"weight", to_json(V.weight(nu))}, {"dim", V.dim(nu)}});
  return {{"lambda", to_json(V.lambda())}, {"pi", component_name(V.component())}, {"character", ch}};
}

json canonical_tables(const Datum& D, int H, const std::optional<std::filesystem::path>& cache_dir) {
  QuotientContext Q(D, cache_dir);
  Crystal B(Q, H);
  const auto& names = D.cartan().names();
  json out = json::array();
  for (const auto& nu : B.weights()) {
    json crystal = json::array(), canon = json::array();
    for (std::size_t b : B.at_weight(nu)) crystal.push_back(label_string(B.element(b).label, names));
    for (const auto& cb : B.canonical_basis(nu)) {
      const auto& el = B.element(cb.element);
      canon.push_back({{"label", label_string(el.label, names)},
                       {"element", render(cb.G, names)},
                       {"crystal_element", render(el.rep, names)},
                       {"ell_mod4", cb.ell_mod4}});
    }
    out.push_back({{"weight", to_json(nu)}, {"crystal", crystal}, {"canonical", canon}});
  }
  return out;
}

std::vector<SuiteResult> run_suites(const Datum& D, const std::string& suite, const SuiteConfig& cfg) {
  auto names = suite_names();
  if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
    throw InputError("unknown suite '" + suite + "'");
  for (const auto& l : cfg.lambdas)
    if (static_cast<int>(l.size()) != D.root().rank_x)
      throw InputError("lambda must have " + std::to_string(D.root().rank_x) + " coordinates");
  auto want = [&](const std::string& s) { return suite == "all" || suite == s; };
  std::vector<LatticeVec> lambdas = cfg.lambdas.empty() ? default_lambdas(D) : cfg.lambdas;
  QuotientContext Q(D, cfg.cache_dir);
  std::vector<SuiteResult> out;
  if (want("half-twistor")) out.push_back(half_twistor(Q, cfg));
  if (want("rho-psi")) out.push_back(rho_psi(Q, cfg));
  if (want("psi-lattice") || want("psi-strings") || want("rho-lattice") || want("canonical")) {
    Crystal B(Q, cfg.height);
    if (want("psi-lattice")) out.push_back(psi_lattice(B, cfg));
    if (want("psi-strings")) out.push_back(psi_strings(B, cfg));
    if (want("rho-lattice")) out.push_back(rho_lattice(B, cfg));
    if (want("canonical")) out.push_back(canonical(B, cfg));
  }
  if (want("modified-twistor")) out.push_back(modified_twistor(Q, cfg, lambdas));
  if (want("hat-twistor")) out.push_back(hat_twistor(Q, cfg, lambdas));
  if (want("clubsuit")) out.push_back(clubsuit_suite(D, cfg));
  if (want("chi")) out.push_back(chi(Q, cfg, lambdas));
  if (want("characters")) out.push_back(characters(Q, cfg, lambdas));
  if (want("structural")) out.push_back(structural(Q, cfg));
  return out;
}

}  // namespace cqg
