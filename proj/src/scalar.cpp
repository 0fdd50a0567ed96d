#include "cqg/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cqg {

// ---------------------------------------------------------------- Gaussian

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::t_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianRational GaussianRational::operator-() const { return {-re_, -im_}; }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero Gaussian rational");
  if (sgn(im_) == 0) return {1 / re_, 0};
  mpq_class n = re_ * re_ + im_ * im_;
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

// ---------------------------------------------------------------- Laurent

LaurentPoly::LaurentPoly(const GaussianRational& c, int exponent) {
  if (!c.is_zero()) {
    low_ = exponent;
    c_.push_back(c);
  }
}

LaurentPoly::LaurentPoly(int low, std::vector<GaussianRational> coeffs) : low_(low), c_(std::move(coeffs)) {
  trim();
}

void LaurentPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (c_.empty()) low_ = 0;
}

GaussianRational LaurentPoly::coeff(int k) const {
  if (c_.empty() || k < low_ || k > degree()) return {};
  return c_[static_cast<std::size_t>(k - low_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), GaussianRational());
    low_ = lo;
  }
  c_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[static_cast<std::size_t>(o.low_ - lo) + k] += o.c_[k];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  return {a.low_ + b.low_, std::move(out)};
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) return *this = LaurentPoly();
  for (auto& x : c_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_scale(const GaussianRational& a) const {
  if (c_.empty()) return {};
  LaurentPoly r = *this;
  GaussianRational base = low_ >= 0 ? a : a.inverse();
  GaussianRational pw(1);
  for (int i = 0; i < std::abs(low_); ++i) pw *= base;
  for (auto& x : r.c_) {
    x *= pw;
    pw *= a;
  }
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  if (c_.empty()) return {};
  std::vector<GaussianRational> rev(c_.rbegin(), c_.rend());
  return {-degree(), std::move(rev)};
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
  if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
  if (a.valuation() < 0 && !a.is_zero()) throw ArithmeticError("poly_divmod on Laurent input");
  std::vector<GaussianRational> rem(static_cast<std::size_t>(std::max(a.degree() + 1, 0)));
  for (int k = 0; k <= a.degree(); ++k) rem[static_cast<std::size_t>(k)] = a.coeff(k);
  int db = b.degree();
  std::vector<GaussianRational> bd(static_cast<std::size_t>(db + 1));
  for (int k = 0; k <= db; ++k) bd[static_cast<std::size_t>(k)] = b.coeff(k);
  GaussianRational lead_inv = bd.back().inverse();
  int da = a.degree();
  std::vector<GaussianRational> quo(static_cast<std::size_t>(std::max(da - db + 1, 0)));
  for (int k = da; k >= db; --k) {
    const GaussianRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    GaussianRational f = top * lead_inv;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= f * bd[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(k - db)] = std::move(f);
  }
  q = LaurentPoly(0, std::move(quo));
  rem.resize(static_cast<std::size_t>(std::max(std::min(db, da + 1), 0)));
  r = LaurentPoly(0, std::move(rem));
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
  // Monic remainder sequence keeps coefficient growth in check.
  auto monic = [](const LaurentPoly& p) { return p.is_zero() ? p : p * p.leading().inverse(); };
  if (a.degree() < b.degree()) std::swap(a, b);
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return LaurentPoly(1);
    LaurentPoly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = monic(r);
  }
  return a;
}

LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly q, r;
  poly_divmod(a, b, q, r);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
  return q;
}

// ---------------------------------------------------------------- RationalFn

namespace {

// Exact quotient of a Laurent polynomial by a polynomial with nonzero constant term.
LaurentPoly laurent_div(const LaurentPoly& a, const LaurentPoly& b) {
  int va = a.valuation();
  return poly_exact_div(a.shifted(-va), b).shifted(va);
}

}  // namespace

RationalFn::RationalFn(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ArithmeticError("zero denominator");
  normalize();
}

void RationalFn::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  int s = den_.valuation();
  if (s != 0) {
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (den_.degree() == 0) {
    if (!den_.leading().is_one()) num_ *= den_.leading().inverse();
    den_ = LaurentPoly(1);
    return;
  }
  int nv = num_.valuation();
  LaurentPoly np = num_.shifted(-nv);
  LaurentPoly g = poly_gcd(np, den_);
  if (g.degree() > 0) {
    np = poly_exact_div(np, g);
    den_ = poly_exact_div(den_, g);
  }
  GaussianRational lead_inv = den_.leading().inverse();
  num_ = np.shifted(nv) * lead_inv;
  den_ = den_ * lead_inv;
  if (den_.degree() == 0) den_ = LaurentPoly(1);
}

GaussianRational RationalFn::at_zero() const {
  if (num_.valuation() < 0) throw ArithmeticError("evaluation at a pole");
  return num_.coeff(0) / den_.coeff(0);
}

std::map<int, GaussianRational> RationalFn::expansion(int upto) const {
  std::map<int, GaussianRational> out;
  if (num_.is_zero()) return out;
  int lo = num_.valuation();
  if (upto < lo) return out;
  int len = upto - lo + 1;
  // inverse series of den up to len terms
  std::vector<GaussianRational> inv(static_cast<std::size_t>(len));
  GaussianRational d0inv = den_.coeff(0).inverse();
  for (int k = 0; k < len; ++k) {
    GaussianRational acc = k == 0 ? GaussianRational(1) : GaussianRational();
    for (int j = 1; j <= std::min(k, den_.degree()); ++j) acc -= den_.coeff(j) * inv[static_cast<std::size_t>(k - j)];
    inv[static_cast<std::size_t>(k)] = acc * d0inv;
  }
  for (int k = 0; k < len; ++k) {
    GaussianRational acc;
    for (int j = 0; j <= k; ++j) {
      GaussianRational nc = num_.coeff(lo + j);
      if (!nc.is_zero()) acc += nc * inv[static_cast<std::size_t>(k - j)];
    }
    if (!acc.is_zero()) out.emplace(lo + k, std::move(acc));
  }
  return out;
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

namespace {

// Polynomial part of a Laurent polynomial and the power of v pulled out.
LaurentPoly poly_part(const LaurentPoly& p) { return p.shifted(-p.valuation()); }

}  // namespace

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return *this;
    }
    LaurentPoly g = poly_gcd(poly_part(num_), den_);
    if (g.degree() > 0) {
      num_ = laurent_div(num_, g);
      den_ = poly_exact_div(den_, g);
    }
    return *this;
  }
  LaurentPoly g = (den_.is_one() || o.den_.is_one()) ? LaurentPoly(1) : poly_gcd(den_, o.den_);
  LaurentPoly d1 = g.degree() > 0 ? poly_exact_div(den_, g) : den_;
  LaurentPoly d2 = g.degree() > 0 ? poly_exact_div(o.den_, g) : o.den_;
  num_ = num_ * d2 + o.num_ * d1;
  den_ = den_ * d2;
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return *this;
  }
  if (g.degree() > 0) {
    LaurentPoly h = poly_gcd(poly_part(num_), g);
    if (h.degree() > 0) {
      num_ = laurent_div(num_, h);
      den_ = poly_exact_div(den_, h);
    }
  }
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFn();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  LaurentPoly n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
  if (!d2.is_one()) {
    LaurentPoly g = poly_gcd(poly_part(n1), d2);
    if (g.degree() > 0) {
      n1 = laurent_div(n1, g);
      d2 = poly_exact_div(d2, g);
    }
  }
  if (!d1.is_one()) {
    LaurentPoly g = poly_gcd(poly_part(n2), d1);
    if (g.degree() > 0) {
      n2 = laurent_div(n2, g);
      d1 = poly_exact_div(d1, g);
    }
  }
  num_ = n1 * n2;
  den_ = d1 * d2;
  return *this;
}

RationalFn RationalFn::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero rational function");
  return {den_, num_};
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::substitute_scale(const GaussianRational& a) const {
  if (den_.is_one()) return RationalFn(num_.substitute_scale(a));
  return {num_.substitute_scale(a), den_.substitute_scale(a)};
}

RationalFn RationalFn::reflected() const {
  if (den_.is_one()) return RationalFn(num_.reflected());
  return {num_.reflected(), den_.reflected()};
}

// ---------------------------------------------------------------- PiScalar

PiScalar PiScalar::monomial(int pi_exp, int v_exp) {
  GaussianRational one(1);
  GaussianRational sgn_minus((pi_exp % 2 == 0) ? 1 : -1);
  return {RationalFn(LaurentPoly(one, v_exp)), RationalFn(LaurentPoly(sgn_minus, v_exp))};
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
  plus_ += o.plus_;
  minus_ += o.minus_;
  return *this;
}
PiScalar& PiScalar::operator-=(const PiScalar& o) {
  plus_ -= o.plus_;
  minus_ -= o.minus_;
  return *this;
}
PiScalar& PiScalar::operator*=(const PiScalar& o) {
  plus_ *= o.plus_;
  minus_ *= o.minus_;
  return *this;
}
PiScalar PiScalar::inverse() const { return {plus_.inverse(), minus_.inverse()}; }
PiScalar& PiScalar::operator/=(const PiScalar& o) { return *this *= o.inverse(); }

PiScalar power(const PiScalar& s, int n) {
  PiScalar base = n >= 0 ? s : s.inverse();
  PiScalar r(1);
  for (int k = 0; k < std::abs(n); ++k) r *= base;
  return r;
}

PiScalar qinteger(int k, int d) {
  if (k < 0 || d < 1) throw std::invalid_argument("qinteger requires k >= 0, d >= 1");
  PiScalar s;
  for (int l = 0; l < k; ++l) s += PiScalar::monomial(d * (k - 1 - l), d * (k - 1 - l) - d * l);
  return s;
}

PiScalar qinteger_signed(int n, int d) {
  if (n >= 0) return qinteger(n, d);
  return -(PiScalar::monomial(d * (-n), 0) * qinteger(-n, d));
}

PiScalar qfactorial(int k, int d) {
  PiScalar r(1);
  for (int l = 1; l <= k; ++l) r *= qinteger(l, d);
  return r;
}

PiScalar qbinomial(int n, int k, int d) {
  if (k < 0) throw std::invalid_argument("qbinomial requires k >= 0");
  // (pi v)^l - v^{-l} with v -> v^d, pi -> pi^d
  auto factor = [d](int l) { return PiScalar::monomial(d * l, d * l) - PiScalar::monomial(0, -d * l); };
  PiScalar num(1), den(1);
  for (int l = n - k + 1; l <= n; ++l) num *= factor(l);
  if (num.is_zero()) return PiScalar();
  for (int l = 1; l <= k; ++l) den *= factor(l);
  PiScalar r = num / den;
  if (!r.is_laurent()) throw ArithmeticError("quantum binomial is not a Laurent polynomial");
  return r;
}

PiScalar bar(const PiScalar& s) {
  return {s.plus().reflected(), s.minus().reflected().substitute_scale(GaussianRational(-1))};
}

PiScalar twist(const PiScalar& s) {
  GaussianRational tinv = GaussianRational::t_power(-1);
  return {s.minus().substitute_scale(tinv), s.plus().substitute_scale(tinv)};
}

PiScalar twist_inverse(const PiScalar& s) {
  GaussianRational tt = GaussianRational::t_power(1);
  return {s.minus().substitute_scale(tt), s.plus().substitute_scale(tt)};
}

std::pair<int, int> valuation(const PiScalar& s) { return {s.plus().valuation(), s.minus().valuation()}; }

bool in_lattice(const PiScalar& s) { return s.plus().regular_at_zero() && s.minus().regular_at_zero(); }

// ---------------------------------------------------------------- rendering

namespace {

std::string render_q(const mpq_class& q) { return q.get_str(); }

bool is_int(const mpq_class& q) { return q.get_den() == 1; }

// Renders |c| and returns the sign to place in front; with_factor means a
// "*v^k" follows.
std::pair<int, std::string> split_term(const GaussianRational& c, bool with_factor) {
  const mpq_class& re = c.re();
  const mpq_class& im = c.im();
  if (sgn(im) == 0) {
    mpq_class a = abs(re);
    int s = sgn(re);
    if (a == 1) return {s, with_factor ? "" : "1"};
    if (is_int(a)) return {s, render_q(a) + (with_factor ? "*" : "")};
    return {s, with_factor ? "(" + render_q(a) + ")*" : render_q(a)};
  }
  if (sgn(re) == 0) {
    mpq_class a = abs(im);
    int s = sgn(im);
    std::string body;
    if (a == 1) body = "t";
    else if (is_int(a)) body = render_q(a) + "*t";
    else body = "(" + render_q(a) + ")*t";
    return {s, body + (with_factor ? "*" : "")};
  }
  std::string im_part;
  mpq_class a = abs(im);
  im_part = (a == 1) ? "t" : render_q(a) + "*t";
  std::string body = "(" + render_q(re) + (sgn(im) > 0 ? " + " : " - ") + im_part + ")";
  return {1, body + (with_factor ? "*" : "")};
}

}  // namespace

std::string render(const GaussianRational& c) {
  auto [s, body] = split_term(c, false);
  return (s < 0 ? "-" : "") + body;
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.valuation(); k <= p.degree(); ++k) {
    GaussianRational c = p.coeff(k);
    if (c.is_zero()) continue;
    auto [s, body] = split_term(c, k != 0);
    std::string factor;
    if (k == 1) factor = "v";
    else if (k != 0) factor = "v^" + std::to_string(k);
    if (first) out += (s < 0 ? "-" : "");
    else out += (s < 0 ? " - " : " + ");
    out += body + factor;
    first = false;
  }
  return out;
}

std::string render(const RationalFn& f) {
  if (f.is_laurent()) return render(f.num());
  return "(" + render(f.num()) + ")/(" + render(f.den()) + ")";
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  RationalFn parse() {
    RationalFn r = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cannot parse scalar '" + s_ + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RationalFn expr() {
    RationalFn r = term();
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }
  RationalFn term() {
    RationalFn r = unary();
    while (true) {
      if (eat('*')) r *= unary();
      else if (eat('/')) r /= unary();
      else return r;
    }
  }
  RationalFn unary() {
    if (eat('-')) return -unary();
    return power();
  }
  long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    long v = std::stol(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }
  RationalFn power() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    RationalFn base;
    bool is_v = false;
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (c == 't') {
      ++pos_;
      base = RationalFn(GaussianRational(0, 1));
    } else if (c == 'v') {
      ++pos_;
      is_v = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      base = RationalFn(GaussianRational(mpq_class(mpz_class(s_.substr(start, pos_ - start)))));
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    int e = 1;
    if (eat('^')) e = static_cast<int>(integer());
    if (is_v) return RationalFn(LaurentPoly(GaussianRational(1), e));
    if (e == 1) return base;
    RationalFn b = e >= 0 ? base : base.inverse();
    RationalFn r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFn parse_rational_fn(const std::string& text) { return Parser(text).parse(); }

}  // namespace cqg
