#include "cqg/freealg.hpp"

#include <algorithm>
#include <set>

namespace cqg {

Word make_word(std::initializer_list<int> letters) {
  Word w;
  for (int i : letters) w.push_back(static_cast<char>(i));
  return w;
}

Weight weight_of(const Word& w, int rank) {
  Weight nu(static_cast<std::size_t>(rank), 0);
  for (char c : w) ++nu[static_cast<std::size_t>(c)];
  return nu;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (char c : w) out += "θ[" + names[static_cast<std::size_t>(c)] + "]";
  return out;
}

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  if (text == "1" || text.empty()) return w;
  const std::string open = "θ[";
  if (text.rfind(open, 0) == 0) {
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text.compare(pos, open.size(), open) != 0) throw InputError("malformed word '" + text + "'");
      std::size_t close = text.find(']', pos);
      if (close == std::string::npos) throw InputError("malformed word '" + text + "'");
      std::string name = text.substr(pos + open.size(), close - pos - open.size());
      auto it = std::find(names.begin(), names.end(), name);
      if (it == names.end()) throw InputError("unknown index '" + name + "'");
      w.push_back(static_cast<char>(it - names.begin()));
      pos = close + 1;
    }
    return w;
  }
  for (char c : text) {
    auto it = std::find(names.begin(), names.end(), std::string(1, c));
    if (it == names.end()) throw InputError("unknown index '" + std::string(1, c) + "'");
    w.push_back(static_cast<char>(it - names.begin()));
  }
  return w;
}

// ---------------------------------------------------------------- FreeElement

FreeElement FreeElement::monomial(const Word& w, const PiScalar& c) {
  FreeElement x;
  x.add(w, c);
  return x;
}

PiScalar FreeElement::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? PiScalar() : it->second;
}

void FreeElement::add(const Word& w, const PiScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<Weight> FreeElement::weights(int rank) const {
  std::set<Weight> s;
  for (const auto& [w, c] : terms_) s.insert(weight_of(w, rank));
  return {s.begin(), s.end()};
}

FreeElement FreeElement::part(const Weight& nu, int rank) const {
  FreeElement out;
  for (const auto& [w, c] : terms_)
    if (weight_of(w, rank) == nu) out.terms_.emplace(w, c);
  return out;
}

FreeElement FreeElement::operator-() const {
  FreeElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const PiScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) it = terms_.erase(it);
    else ++it;
  }
  return *this;
}

FreeElement operator*(const FreeElement& x, const FreeElement& y) {
  FreeElement out;
  for (const auto& [w, c] : x.terms_)
    for (const auto& [u, d] : y.terms_) out.add(w + u, c * d);
  return out;
}

FreeElement theta_power(int i, int n) { return FreeElement::monomial(Word(static_cast<std::size_t>(n), static_cast<char>(i))); }

FreeElement star_mul(const Datum& D, const FreeElement& x, const FreeElement& y) {
  FreeElement out;
  int n = D.rank();
  for (const auto& [w, c] : x.terms())
    for (const auto& [u, d] : y.terms())
      out.add(w + u, PiScalar::t_power(D.phi(weight_of(w, n), weight_of(u, n))) * c * d);
  return out;
}

// ---------------------------------------------------------------- derivation

std::vector<DerivationTerm> e_prime_word(const SuperCartanDatum& C, int i, const Word& w) {
  std::vector<DerivationTerm> out;
  int pexp = 0, vexp = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int j = w[k];
    if (j == i) {
      Word rest = w.substr(0, k) + w.substr(k + 1);
      out.push_back({std::move(rest), pexp, vexp});
    }
    pexp += C.parity(i) * C.parity(j);
    vexp -= C.dot(i, j);
  }
  return out;
}

FreeElement e_prime(const Datum& D, int i, const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x.terms())
    for (const auto& t : e_prime_word(D.cartan(), i, w)) out.add(t.word, PiScalar::monomial(t.pi_exp, t.v_exp) * c);
  return out;
}

// Dynamic program over subsets of positions of u already consumed by the
// derivations e'_{w_1}, e'_{w_2}, ...; state value is a polynomial in pi and v.
PiScalar pairing_words(const SuperCartanDatum& C, const Word& w, const Word& u) {
  if (w.size() != u.size()) return PiScalar();
  {
    Word a = w, b = u;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return PiScalar();
  }
  std::size_t n = w.size();
  if (n == 0) return PiScalar(1);
  using Poly = std::map<std::pair<int, int>, long long>;  // (pi exp mod 2, v exp) -> count
  std::vector<Poly> dp(std::size_t(1) << n);
  dp[0][{0, 0}] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (k == n) continue;
    int i = w[k];
    int pexp = 0, vexp = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (mask & (std::size_t(1) << r)) continue;
      int j = u[r];
      if (j == i) {
        Poly& dst = dp[mask | (std::size_t(1) << r)];
        for (const auto& [key, cnt] : dp[mask]) dst[{(key.first + pexp) % 2, key.second + vexp}] += cnt;
      }
      pexp += C.parity(i) * C.parity(j);
      vexp -= C.dot(i, j);
    }
  }
  const Poly& fin = dp.back();
  std::map<int, long long> plus, minus;
  for (const auto& [key, cnt] : fin) {
    plus[key.second] += cnt;
    minus[key.second] += key.first ? -cnt : cnt;
  }
  auto to_poly = [](const std::map<int, long long>& m) {
    LaurentPoly p;
    for (const auto& [e, c] : m)
      if (c != 0) p += LaurentPoly(GaussianRational(c), e);
    return p;
  };
  return {RationalFn(to_poly(plus)), RationalFn(to_poly(minus))};
}

PiScalar pairing(const Datum& D, const FreeElement& x, const FreeElement& y) {
  PiScalar s;
  for (const auto& [w, c] : x.terms())
    for (const auto& [u, d] : y.terms()) {
      PiScalar p = pairing_words(D.cartan(), w, u);
      if (!p.is_zero()) s += c * d * p;
    }
  return s;
}

// ---------------------------------------------------------------- maps

FreeElement rho(const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x.terms()) out.add(Word(w.rbegin(), w.rend()), c);
  return out;
}

FreeElement bar_free(const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x.terms()) out.add(w, bar(c));
  return out;
}

int word_exponent(const Datum& D, const Word& w) {
  int e = 0;
  for (std::size_t r = 0; r < w.size(); ++r)
    for (std::size_t s = r + 1; s < w.size(); ++s) e += D.phi(w[r], w[s]);
  return e;
}

FreeElement twistor_free(const Datum& D, const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x.terms()) out.add(w, PiScalar::t_power(word_exponent(D, w)) * twist(c));
  return out;
}

FreeElement inverse_twistor(const Datum& D, const FreeElement& x) {
  FreeElement out;
  for (const auto& [w, c] : x.terms()) out.add(w, PiScalar::t_power(-word_exponent(D, w)) * twist_inverse(c));
  return out;
}

FreeElement divided_power(const Datum& D, int i, int n) {
  if (n < 0) throw std::invalid_argument("divided power of negative order");
  PiScalar f = qfactorial(n, D.cartan().d(i));
  if (f.plus().is_zero() || f.minus().is_zero()) throw ArithmeticError("quantum factorial has a zero component");
  return f.inverse() * theta_power(i, n);
}

// ---------------------------------------------------------------- rendering

std::string render_scalar(const PiScalar& s) {
  RationalFn half(GaussianRational(mpq_class(1, 2)));
  RationalFn a = (s.plus() + s.minus()) * half;
  RationalFn b = (s.plus() - s.minus()) * half;
  if (b.is_zero()) return render(a);
  std::string bs = b.is_one() ? "pi" : (-b).is_one() ? "-pi" : "(" + render(b) + ")*pi";
  if (a.is_zero()) return bs;
  if (bs[0] == '-') return render(a) + " - " + bs.substr(1);
  return render(a) + " + " + bs;
}

std::string render(const FreeElement& x, const std::vector<std::string>& names) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    std::string cs = render_scalar(c);
    std::string term;
    bool neg = false;
    if (cs == "1") term = render_word(w, names);
    else if (cs == "-1") {
      neg = true;
      term = render_word(w, names);
    } else {
      term = "(" + cs + ")*" + render_word(w, names);
    }
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += term;
    first = false;
  }
  return out;
}

}  // namespace cqg
