#include "cqg/crystal.hpp"

#include <algorithm>
#include <set>

namespace cqg {

// ---------------------------------------------------------------- strings

namespace {

PiScalar empty_word_coeff(const FreeElement& x) { return x.coeff(Word{}); }

}  // namespace

StringDecomposition string_decompose(QuotientContext& Q, int i, const FreeElement& x) {
  const Datum& D = Q.datum();
  if (x.weights(D.rank()).size() > 1) throw std::invalid_argument("string decomposition needs a homogeneous element");
  StringDecomposition out;
  out.i = i;
  FreeElement rest = Q.normal_form(x);
  int last = INT_MAX;
  while (!rest.is_zero()) {
    FreeElement top = rest;
    int N = 0;
    while (true) {
      FreeElement next = Q.normal_form(e_prime(D, i, top));
      if (next.is_zero()) break;
      top = std::move(next);
      ++N;
    }
    if (N >= last) throw ArithmeticError("string decomposition did not descend");
    last = N;
    FreeElement theta = divided_power(D, i, N);
    FreeElement g = theta;
    for (int k = 0; k < N; ++k) g = e_prime(D, i, g);
    PiScalar gamma = empty_word_coeff(g);
    FreeElement part = gamma.inverse() * top;
    rest = Q.normal_form(rest - theta * part);
    out.parts.emplace_back(N, std::move(part));
  }
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

FreeElement reassemble(const Datum& D, const StringDecomposition& s) {
  FreeElement out;
  for (const auto& [n, xn] : s.parts) out += divided_power(D, s.i, n) * xn;
  return out;
}

FreeElement f_tilde(QuotientContext& Q, int i, const FreeElement& x) {
  FreeElement out;
  for (const auto& [n, xn] : string_decompose(Q, i, x).parts) out += divided_power(Q.datum(), i, n + 1) * xn;
  return Q.normal_form(out);
}

FreeElement e_tilde(QuotientContext& Q, int i, const FreeElement& x) {
  FreeElement out;
  for (const auto& [n, xn] : string_decompose(Q, i, x).parts)
    if (n > 0) out += divided_power(Q.datum(), i, n - 1) * xn;
  return Q.normal_form(out);
}

// ---------------------------------------------------------------- lattice

namespace {

// Hermite reduction over the valuation ring at v = 0. Returns the coordinates
// of every input row on an A-basis of their A-span.
std::vector<Vec> valuation_coordinates(const std::vector<Vec>& input, std::size_t width) {
  std::vector<Vec> rows = input;
  std::vector<bool> used(rows.size(), false);
  std::vector<Vec> basis;
  std::vector<std::size_t> cols;
  for (std::size_t col = 0; col < width; ++col) {
    std::size_t best = rows.size();
    int best_val = INT_MAX;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][col].is_zero()) continue;
      int v = rows[r][col].valuation();
      if (v < best_val) {
        best_val = v;
        best = r;
      }
    }
    if (best == rows.size()) continue;
    used[best] = true;
    const Vec& p = rows[best];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][col].is_zero()) continue;
      RationalFn f = rows[r][col] / p[col];
      for (std::size_t k = 0; k < width; ++k)
        if (!p[k].is_zero()) rows[r][k] -= f * p[k];
    }
    basis.push_back(p);
    cols.push_back(col);
  }
  if (basis.size() != width) throw ArithmeticError("crystal candidates do not span the weight space");
  std::vector<Vec> out;
  for (const auto& row : input) {
    Vec x = row;
    Vec a(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (x[cols[j]].is_zero()) continue;
      a[j] = x[cols[j]] / basis[j][cols[j]];
      for (std::size_t k = 0; k < width; ++k)
        if (!basis[j][k].is_zero()) x[k] -= a[j] * basis[j][k];
    }
    if (!is_zero(x)) throw ArithmeticError("triangular solve left a residual");
    for (const auto& c : a)
      if (!c.regular_at_zero()) throw ArithmeticError("lattice coordinate has a pole at v = 0");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<GaussianRational> at_zero(const Vec& a) {
  std::vector<GaussianRational> z;
  z.reserve(a.size());
  for (const auto& c : a) z.push_back(c.is_zero() ? GaussianRational() : c.at_zero());
  return z;
}

std::vector<GaussianRational> negated(std::vector<GaussianRational> z) {
  for (auto& c : z) c = -c;
  return z;
}

// Groups rows by equality up to sign; returns class id per row.
std::vector<std::size_t> sign_classes(const std::vector<std::vector<GaussianRational>>& images,
                                      std::vector<std::size_t>& class_rep) {
  std::vector<std::size_t> cls(images.size());
  class_rep.clear();
  for (std::size_t k = 0; k < images.size(); ++k) {
    bool all_zero = std::all_of(images[k].begin(), images[k].end(), [](const auto& c) { return c.is_zero(); });
    if (all_zero) throw ArithmeticError("crystal candidate lies in vL");
    std::size_t found = class_rep.size();
    for (std::size_t c = 0; c < class_rep.size(); ++c) {
      const auto& r = images[class_rep[c]];
      if (images[k] == r || images[k] == negated(r)) {
        found = c;
        break;
      }
    }
    if (found == class_rep.size()) class_rep.push_back(k);
    cls[k] = found;
  }
  return cls;
}

}  // namespace

Crystal::Crystal(QuotientContext& Q, int H) : Q_(Q), H_(H) {
  const Datum& D = Q.datum();
  int n = D.rank();
  Weight zero(static_cast<std::size_t>(n), 0);
  elements_.push_back({Word{}, zero, FreeElement::one()});
  {
    WeightData wd;
    wd.members = {0};
    for (Component c : kComponents) {
      wd.lattice[static_cast<int>(c)] = EchelonBasis(1);
      wd.lattice[static_cast<int>(c)].add(Vec{RationalFn(1)});
    }
    by_weight_.emplace(zero, std::move(wd));
  }
  std::vector<std::size_t> shell = {0};
  for (int h = 1; h <= H; ++h) {
    std::map<Weight, std::vector<std::pair<Word, FreeElement>>> cands;
    for (std::size_t b : shell)
      for (int i = 0; i < n; ++i) {
        Word label = Word(1, static_cast<char>(i)) + elements_[b].label;
        Weight nu = elements_[b].weight;
        ++nu[i];
        cands[nu].emplace_back(label, f_tilde(Q, i, elements_[b].rep));
      }
    std::vector<std::size_t> next;
    for (auto& [nu, list] : cands) {
      std::vector<std::size_t> class_rep[2];
      std::vector<std::size_t> cls[2];
      for (Component c : kComponents) {
        std::vector<Vec> rows;
        for (const auto& [label, x] : list) rows.push_back(Q.coords(x, nu, c));
        auto coords = valuation_coordinates(rows, Q.dim(nu, c));
        std::vector<std::vector<GaussianRational>> images;
        for (const auto& a : coords) images.push_back(at_zero(a));
        int ci = static_cast<int>(c);
        cls[ci] = sign_classes(images, class_rep[ci]);
        if (class_rep[ci].size() != Q.dim(nu, c))
          throw ArithmeticError("number of crystal classes differs from the dimension of the weight space");
      }
      if (cls[0] != cls[1]) throw ArithmeticError("crystal classes differ between the two specializations");
      WeightData wd;
      for (Component c : kComponents) wd.lattice[static_cast<int>(c)] = EchelonBasis(Q.dim(nu, c));
      for (std::size_t r : class_rep[0]) {
        std::size_t idx = elements_.size();
        elements_.push_back({list[r].first, nu, list[r].second});
        wd.members.push_back(idx);
        next.push_back(idx);
        for (Component c : kComponents)
          if (!wd.lattice[static_cast<int>(c)].add(Q.coords(list[r].second, nu, c)))
            throw ArithmeticError("crystal representatives are linearly dependent");
      }
      by_weight_.emplace(nu, std::move(wd));
    }
    std::sort(next.begin(), next.end());
    shell = std::move(next);
  }
}

std::vector<std::size_t> Crystal::at_weight(const Weight& nu) const {
  auto it = by_weight_.find(nu);
  return it == by_weight_.end() ? std::vector<std::size_t>{} : it->second.members;
}

std::vector<Weight> Crystal::weights() const {
  std::vector<Weight> out;
  for (const auto& [nu, wd] : by_weight_) out.push_back(nu);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a > b;
  });
  return out;
}

Vec Crystal::lattice_coords(const FreeElement& x, const Weight& nu, Component c) {
  auto it = by_weight_.find(nu);
  if (it == by_weight_.end()) throw std::out_of_range("weight outside the generated crystal");
  auto sol = it->second.lattice[static_cast<int>(c)].solve(Q_.coords(x, nu, c));
  if (!sol) throw ArithmeticError("element outside the span of the crystal representatives");
  return *sol;
}

namespace {

bool coords_min_valuation(const Vec& a, int bound) {
  for (const auto& c : a)
    if (!c.is_zero() && c.valuation() < bound) return false;
  return true;
}

}  // namespace

bool Crystal::in_lattice(const FreeElement& x) {
  for (const auto& nu : x.weights(Q_.rank())) {
    FreeElement part = x.part(nu, Q_.rank());
    for (Component c : kComponents)
      if (!coords_min_valuation(lattice_coords(part, nu, c), 0)) return false;
  }
  return true;
}

bool Crystal::in_v_lattice(const FreeElement& x) {
  for (const auto& nu : x.weights(Q_.rank())) {
    FreeElement part = x.part(nu, Q_.rank());
    for (Component c : kComponents)
      if (!coords_min_valuation(lattice_coords(part, nu, c), 1)) return false;
  }
  return true;
}

std::optional<CrystalMatch> Crystal::classify(const FreeElement& x) {
  auto ws = x.weights(Q_.rank());
  if (ws.size() != 1) return std::nullopt;
  const Weight& nu = ws.front();
  const auto& members = at_weight(nu);
  std::optional<std::size_t> where[2];
  GaussianRational value[2];
  for (Component c : kComponents) {
    Vec a = lattice_coords(x, nu, c);
    if (!coords_min_valuation(a, 0)) return std::nullopt;
    int ci = static_cast<int>(c);
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].is_zero() || a[k].valuation() > 0) continue;
      if (where[ci]) return std::nullopt;
      where[ci] = k;
      value[ci] = a[k].at_zero();
    }
    if (!where[ci]) return std::nullopt;
  }
  if (*where[0] != *where[1]) return std::nullopt;
  return CrystalMatch{members[*where[0]], value[0], value[1]};
}

Crystal::StringData Crystal::string_data(std::size_t b, int i) {
  auto key = std::make_pair(b, i);
  auto it = strings_.find(key);
  if (it != strings_.end()) return it->second;
  auto s = string_decompose(Q_, i, elements_[b].rep);
  std::optional<StringData> found;
  for (const auto& [n, xn] : s.parts) {
    if (in_v_lattice(xn)) continue;
    auto m = classify(xn);
    if (!m || found) throw ArithmeticError("string decomposition of a crystal element is not of the expected shape");
    found = StringData{n, m->element};
  }
  if (!found) throw ArithmeticError("crystal element lies in vL");
  return strings_.emplace(key, *found).first->second;
}

// ---------------------------------------------------------------- canonical basis

RationalFn bar_completion(const RationalFn& f, Component c) {
  if (f.is_zero()) return {};
  auto series = f.expansion(0);
  LaurentPoly out;
  for (const auto& [k, coef] : series) {
    out += LaurentPoly(coef, k);
    if (k < 0) {
      int m = -k;
      GaussianRational mirrored = (c == Component::Minus && m % 2 != 0) ? -coef : coef;
      out += LaurentPoly(mirrored, m);
    }
  }
  return RationalFn(out);
}

void Crystal::solve_canonical(const Weight& nu) {
  const auto& members = at_weight(nu);
  std::size_t m = members.size();
  const Datum& D = Q_.datum();
  int n = D.rank();
  if (height(nu) == 0) {
    canonical_.emplace(members[0], CanonicalBasisElement{members[0], FreeElement::one(), 0});
    return;
  }
  // Bar-invariant starting vectors theta_i^(eps) G(lower).
  std::vector<FreeElement> start(m);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t b = members[k];
    for (int i = 0; i < n; ++i) {
      if (nu[i] == 0) continue;
      auto sd = string_data(b, i);
      if (sd.eps == 0) continue;
      start[k] = Q_.normal_form(divided_power(D, i, sd.eps) * canonical(sd.lower).G);
      break;
    }
    if (start[k].is_zero()) throw ArithmeticError("no index lowers a crystal element of positive height");
  }
  std::vector<std::vector<Vec>> G(2, std::vector<Vec>(m));
  std::vector<std::vector<bool>> known(2, std::vector<bool>(m, false));
  for (Component c : kComponents) {
    int ci = static_cast<int>(c);
    std::size_t d = Q_.dim(nu, c);
    std::vector<Vec> reps(m);
    for (std::size_t k = 0; k < m; ++k) reps[k] = Q_.coords(elements_[members[k]].rep, nu, c);
    std::size_t solved = 0;
    for (std::size_t pass = 0; pass <= m && solved < m; ++pass) {
      bool progress = false;
      for (std::size_t k = 0; k < m; ++k) {
        if (known[ci][k]) continue;
        EchelonBasis basis(d);
        for (std::size_t j = 0; j < m; ++j) basis.add(known[ci][j] ? G[ci][j] : reps[j]);
        Vec y = Q_.coords(start[k], nu, c);
        auto a = basis.solve(y);
        if (!a) throw ArithmeticError("canonical basis solve left the weight space");
        Vec corr = y;
        bool ok = true;
        GaussianRational lead;
        for (std::size_t j = 0; j < m && ok; ++j) {
          const RationalFn& coef = (*a)[j];
          if (known[ci][j]) {
            RationalFn r = bar_completion(coef, c);
            if (!r.is_zero())
              for (std::size_t q = 0; q < d; ++q)
                if (!G[ci][j][q].is_zero()) corr[q] -= r * G[ci][j][q];
          } else if (j == k) {
            if (coef.is_zero() || coef.valuation() != 0) ok = false;
            else {
              lead = coef.at_zero();
              if (!(lead == GaussianRational(1) || lead == GaussianRational(-1))) ok = false;
            }
          } else if (!coef.is_zero() && coef.valuation() < 1) {
            ok = false;
          }
        }
        if (!ok) continue;
        if (lead == GaussianRational(-1))
          for (auto& e : corr) e = -e;
        G[ci][k] = std::move(corr);
        known[ci][k] = true;
        ++solved;
        progress = true;
      }
      if (!progress) break;
    }
    if (solved < m)
      throw ArithmeticError("canonical basis correction did not terminate at weight of height " +
                            std::to_string(height(nu)));
  }
  for (std::size_t k = 0; k < m; ++k) {
    FreeElement g = Q_.from_coords(nu, G[0][k], G[1][k]);
    auto ell = psi_eigen_exponent(Q_, g);
    canonical_.emplace(members[k], CanonicalBasisElement{members[k], g, ell ? *ell : -1});
  }
}

const CanonicalBasisElement& Crystal::canonical(std::size_t b) {
  auto it = canonical_.find(b);
  if (it != canonical_.end()) return it->second;
  solve_canonical(elements_[b].weight);
  return canonical_.at(b);
}

std::vector<CanonicalBasisElement> Crystal::canonical_basis(const Weight& nu) {
  std::vector<CanonicalBasisElement> out;
  for (std::size_t b : at_weight(nu)) out.push_back(canonical(b));
  return out;
}

std::optional<int> psi_eigen_exponent(QuotientContext& Q, const FreeElement& x) {
  FreeElement px = twistor_free(Q.datum(), x);
  for (int k = 0; k < 4; ++k)
    if (Q.equal(px, PiScalar::t_power(k) * x)) return k;
  return std::nullopt;
}

// ---------------------------------------------------------------- reports

bool LatticeReport::pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

LatticeReport verify_psi_lattice(Crystal& B) {
  LatticeReport rep;
  QuotientContext& Q = B.quotient();
  for (std::size_t b = 0; b < B.elements().size(); ++b) {
    FreeElement px = twistor_free(Q.datum(), B.element(b).rep);
    LatticeReport::Entry e{b, false, std::nullopt, ""};
    if (!B.in_lattice(px)) {
      e.detail = "image leaves the lattice";
    } else if (auto m = B.classify(px); !m || m->element != b) {
      e.detail = "image does not reduce to a multiple of the same crystal element";
    } else {
      for (int k = 0; k < 4; ++k) {
        GaussianRational tk = GaussianRational::t_power(k);
        if (m->plus == tk && m->minus == tk) e.ell_mod4 = k;
      }
      e.pass = e.ell_mod4.has_value();
      if (!e.pass) e.detail = "residue is not a power of t";
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

LatticeReport verify_psi_strings(Crystal& B) {
  LatticeReport rep;
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
        int e = D.phi(ni, el.weight) - n * n * D.cartan().d(i);
        expect += PiScalar::t_power(e) * (divided_power(D, i, n) * twistor_free(D, xn));
      }
      ok = Q.equal(twistor_free(D, el.rep), expect);
    }
    rep.entries.push_back({b, ok, std::nullopt, ok ? "" : "string exponent mismatch"});
  }
  return rep;
}

LatticeReport verify_rho_lattice(Crystal& B) {
  LatticeReport rep;
  for (std::size_t b = 0; b < B.elements().size(); ++b) {
    bool ok = B.in_lattice(rho(B.element(b).rep));
    rep.entries.push_back({b, ok, std::nullopt, ok ? "" : "rho image leaves the lattice"});
  }
  return rep;
}

LatticeReport verify_canonical(Crystal& B) {
  LatticeReport rep;
  QuotientContext& Q = B.quotient();
  for (std::size_t b = 0; b < B.elements().size(); ++b) {
    const auto& cb = B.canonical(b);
    LatticeReport::Entry e{b, true, std::nullopt, ""};
    if (!Q.equal(bar_free(cb.G), cb.G)) {
      e.pass = false;
      e.detail = "not bar-invariant";
    } else if (!B.in_v_lattice(cb.G - B.element(b).rep)) {
      e.pass = false;
      e.detail = "not congruent to the crystal element mod vL";
    } else if (cb.ell_mod4 < 0) {
      e.pass = false;
      e.detail = "not an eigenvector of the twistor";
    } else {
      e.ell_mod4 = cb.ell_mod4;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace cqg
