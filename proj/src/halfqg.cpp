#include "cqg/halfqg.hpp"

#include <fstream>

#include <json.hpp>

#include "cqg/datum_io.hpp"

namespace cqg {

namespace {

RationalFn monomial_value(int pi_exp, int v_exp, Component c) {
  int s = (c == Component::Minus && pi_exp % 2 != 0) ? -1 : 1;
  return RationalFn(LaurentPoly(GaussianRational(s), v_exp));
}

}  // namespace

QuotientContext::QuotientContext(const Datum& datum, std::optional<std::filesystem::path> cache_dir)
    : D_(datum), cache_dir_(std::move(cache_dir)), hash_(datum_hash(datum)) {}

QuotientContext::Space& QuotientContext::space(const Weight& nu, Component c) {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(nu, static_cast<int>(c));
  auto it = spaces_.find(key);
  if (it != spaces_.end()) return it->second;
  Space sp;
  if (!nonnegative(nu)) {
    return spaces_.emplace(key, std::move(sp)).first->second;
  }
  if (height(nu) == 0) {
    sp.pivots = {Word{}};
    sp.coords[Word{}] = Vec{RationalFn(1)};
    return spaces_.emplace(key, std::move(sp)).first->second;
  }
  int n = rank();
  std::vector<Word> candidates;
  sp.offsets.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    sp.offsets[i] = sp.width;
    if (nu[i] == 0) continue;
    Weight lower = nu;
    --lower[i];
    Space& low = space(lower, c);
    sp.width += low.pivots.size();
    for (const auto& p : low.pivots) candidates.push_back(Word(1, static_cast<char>(i)) + p);
  }
  std::sort(candidates.begin(), candidates.end());
  sp.echelon = EchelonBasis(sp.width);
  // Insert before computing embeddings so that recursion sees the offsets.
  Space& ref = spaces_.emplace(key, std::move(sp)).first->second;
  for (const auto& w : candidates) {
    Vec e = embedding(w, nu, c);
    if (ref.echelon.add(e)) ref.pivots.push_back(w);
  }
  for (std::size_t k = 0; k < ref.pivots.size(); ++k) {
    Vec unit(ref.pivots.size());
    unit[k] = RationalFn(1);
    ref.coords[ref.pivots[k]] = std::move(unit);
  }
  return ref;
}

Vec QuotientContext::embedding(const Word& w, const Weight& nu, Component c) {
  Space& sp = spaces_.at({nu, static_cast<int>(c)});
  Vec out(sp.width);
  for (int i = 0; i < rank(); ++i) {
    if (nu[i] == 0) continue;
    for (const auto& t : e_prime_word(D_.cartan(), i, w)) {
      const Vec& low = coords(t.word, c);
      RationalFn f = monomial_value(t.pi_exp, t.v_exp, c);
      for (std::size_t k = 0; k < low.size(); ++k)
        if (!low[k].is_zero()) out[sp.offsets[i] + k] += f * low[k];
    }
  }
  return out;
}

const Vec& QuotientContext::coords(const Word& w, Component c) {
  std::lock_guard lock(mu_);
  Weight nu = weight_of(w, rank());
  Space& sp = space(nu, c);
  auto it = sp.coords.find(w);
  if (it != sp.coords.end()) return it->second;
  Vec e = embedding(w, nu, c);
  auto sol = sp.echelon.solve(e);
  if (!sol) throw ArithmeticError("word embedding lies outside the span of the pivot embeddings");
  return sp.coords.emplace(w, std::move(*sol)).first->second;
}

Vec QuotientContext::coords(const FreeElement& x, const Weight& nu, Component c) {
  std::lock_guard lock(mu_);
  Vec out(space(nu, c).pivots.size());
  for (const auto& [w, s] : x.terms()) {
    if (weight_of(w, rank()) != nu) throw ArithmeticError("element is not homogeneous of the requested weight");
    const RationalFn& f = s.component(c);
    if (f.is_zero()) continue;
    const Vec& v = coords(w, c);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) out[k] += f * v[k];
  }
  return out;
}

std::size_t QuotientContext::dim(const Weight& nu, Component c) { return space(nu, c).pivots.size(); }

const std::vector<Word>& QuotientContext::pivots(const Weight& nu, Component c) { return space(nu, c).pivots; }

FreeElement QuotientContext::from_coords(const Weight& nu, const Vec& plus, const Vec& minus) {
  std::map<Word, std::pair<RationalFn, RationalFn>> acc;
  const auto& pp = pivots(nu, Component::Plus);
  const auto& pm = pivots(nu, Component::Minus);
  for (std::size_t k = 0; k < plus.size(); ++k) acc[pp[k]].first = plus[k];
  for (std::size_t k = 0; k < minus.size(); ++k) acc[pm[k]].second = minus[k];
  FreeElement out;
  for (const auto& [w, pr] : acc) out.add(w, PiScalar(pr.first, pr.second));
  return out;
}

bool QuotientContext::is_zero(const FreeElement& x) {
  for (const auto& nu : x.weights(rank())) {
    FreeElement part = x.part(nu, rank());
    for (Component c : kComponents)
      if (!cqg::is_zero(coords(part, nu, c))) return false;
  }
  return true;
}

FreeElement QuotientContext::normal_form(const FreeElement& x) {
  FreeElement out;
  for (const auto& nu : x.weights(rank())) {
    FreeElement part = x.part(nu, rank());
    out += from_coords(nu, coords(part, nu, Component::Plus), coords(part, nu, Component::Minus));
  }
  return out;
}

// ---------------------------------------------------------------- Gram

std::optional<std::filesystem::path> QuotientContext::cache_file(const Weight& nu) const {
  if (!cache_dir_) return std::nullopt;
  std::string name = hash_;
  for (int x : nu) name += "_" + std::to_string(x);
  return *cache_dir_ / (name + ".json");
}

const PiMatrix& QuotientContext::gram(const Weight& nu) {
  std::lock_guard lock(mu_);
  auto it = grams_.find(nu);
  if (it != grams_.end()) return it->second.matrix;
  GramEntry g;
  g.words = words_of_weight(nu);
  std::size_t n = g.words.size();
  auto file = cache_file(nu);
  if (file && std::filesystem::exists(*file)) {
    try {
      std::ifstream in(*file);
      nlohmann::json j;
      in >> j;
      if (j.at("words").get<std::vector<std::string>>().size() == n) {
        PiMatrix m{Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n)};
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            m.plus(r, c) = parse_rational_fn(j.at("plus")[r][c].get<std::string>()).num();
            m.minus(r, c) = parse_rational_fn(j.at("minus")[r][c].get<std::string>()).num();
          }
        g.matrix = std::move(m);
        g.from_disk = true;
      }
    } catch (const std::exception&) {
      g.from_disk = false;  // unreadable cache entries are recomputed
    }
  }
  if (!g.from_disk) {
    g.matrix = gram_matrix_parallel(D_.cartan(), g.words);
    if (file) {
      nlohmann::json j;
      std::vector<std::string> ws;
      for (const auto& w : g.words) ws.push_back(render_word(w, D_.cartan().names()));
      j["words"] = ws;
      for (Component c : kComponents) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < n; ++r) {
          nlohmann::json row = nlohmann::json::array();
          for (std::size_t k = 0; k < n; ++k) row.push_back(render(g.matrix.component(c)(r, k)));
          rows.push_back(row);
        }
        j[c == Component::Plus ? "plus" : "minus"] = rows;
      }
      std::filesystem::create_directories(*cache_dir_);
      std::filesystem::path tmp = *file;
      tmp += ".tmp";
      {
        std::ofstream out(tmp);
        out << j.dump();
      }
      std::filesystem::rename(tmp, *file);
    }
  }
  return grams_.emplace(nu, std::move(g)).first->second.matrix;
}

bool QuotientContext::gram_cache_hit(const Weight& nu) const {
  auto it = grams_.find(nu);
  return it != grams_.end() && it->second.from_disk;
}

const std::vector<Word>& QuotientContext::gram_words(const Weight& nu) {
  gram(nu);
  std::lock_guard lock(mu_);
  return grams_.at(nu).words;
}

std::size_t QuotientContext::gram_rank(const Weight& nu, Component c) { return bareiss_rank(gram(nu).component(c)); }

std::vector<Vec> QuotientContext::radical(const Weight& nu, Component c) {
  const auto& g = gram(nu).component(c);
  FieldMatrix m(g.rows, g.cols);
  for (std::size_t k = 0; k < g.data.size(); ++k) m.data[k] = RationalFn(g.data[k]);
  return kernel_basis(std::move(m));
}

// ---------------------------------------------------------------- Serre

namespace {

int choose2(int k) { return k * (k - 1) / 2; }

FreeElement star_power(const Datum& D, int i, int m) {
  FreeElement r = FreeElement::one();
  for (int k = 0; k < m; ++k) r = star_mul(D, r, FreeElement::generator(i));
  return r;
}

}  // namespace

PiScalar serre_coefficient(const SuperCartanDatum& C, int i, int j, int k) {
  int b = C.b(i, j);
  int pexp = choose2(k) * C.parity(i) + k * C.parity(i) * C.parity(j);
  PiScalar s = PiScalar::monomial(pexp, 0) * qbinomial(b, k, C.d(i));
  return k % 2 ? -s : s;
}

FreeElement serre_element(const Datum& D, int i, int j) {
  if (i == j) throw std::invalid_argument("Serre element needs distinct indices");
  const auto& C = D.cartan();
  int b = C.b(i, j);
  FreeElement out;
  for (int k = 0; k <= b; ++k)
    out += serre_coefficient(C, i, j, k) * (theta_power(i, b - k) * FreeElement::generator(j) * theta_power(i, k));
  return out;
}

FreeElement twisted_serre(const Datum& D, int i, int j, bool mutate) {
  if (i == j) throw std::invalid_argument("Serre element needs distinct indices");
  const auto& C = D.cartan();
  int b = C.b(i, j);
  FreeElement out;
  for (int k = 0; k <= b; ++k) {
    FreeElement term =
        star_mul(D, star_mul(D, star_power(D, i, b - k), FreeElement::generator(j)), star_power(D, i, k));
    PiScalar c = twist(serre_coefficient(C, i, j, k));
    if (mutate && k == 0) c *= PiScalar::t();
    out += c * term;
  }
  return out;
}

bool verify_twistor_serre(QuotientContext& Q, int i, int j, bool mutate) {
  return Q.is_zero(twisted_serre(Q.datum(), i, j, mutate));
}

int rho_psi_sign(const SuperCartanDatum& C, const Weight& nu) {
  int e = stats_N(C, nu) / 2 + stats_p(C, nu);
  return (e % 2 == 0) ? 1 : -1;
}

bool verify_rho_psi(QuotientContext& Q, const FreeElement& x) {
  const Datum& D = Q.datum();
  auto ws = x.weights(D.rank());
  if (ws.size() > 1) throw std::invalid_argument("verify_rho_psi needs a homogeneous element");
  if (ws.empty()) return true;
  FreeElement lhs = twistor_free(D, rho(inverse_twistor(D, x)));
  FreeElement rhs = PiScalar(rho_psi_sign(D.cartan(), ws.front())) * rho(x);
  return Q.equal(lhs, rhs);
}

}  // namespace cqg
