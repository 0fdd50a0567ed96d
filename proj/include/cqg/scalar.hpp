// Exact scalars: Gaussian rationals, Laurent polynomials, rational functions in v,
// and the pi-split ring Q(t)(v)[pi]/(pi^2-1) stored as a pair of components.
#pragma once

#include <gmpxx.h>

#include <climits>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqg {

// Raised when an exact computation hits a state that valid input cannot produce.
struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// re + im*t with t^2 = -1.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long n) : re_(n) {}  // NOLINT(implicit)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational t_power(int k);  // t^k

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational operator-() const;
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);
  GaussianRational inverse() const;

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Finite sum of c_k v^k, dense between the lowest and highest nonzero exponents.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const GaussianRational& c, int exponent = 0);  // NOLINT(implicit)
  LaurentPoly(long n) : LaurentPoly(GaussianRational(n)) {}  // NOLINT(implicit)
  LaurentPoly(int low, std::vector<GaussianRational> coeffs);

  static LaurentPoly monomial(const GaussianRational& c, int exponent) { return {c, exponent}; }
  static LaurentPoly v() { return {GaussianRational(1), 1}; }

  bool is_zero() const { return c_.empty(); }
  // Lowest exponent; INT_MAX for zero.
  int valuation() const { return c_.empty() ? INT_MAX : low_; }
  // Highest exponent; INT_MIN for zero.
  int degree() const { return c_.empty() ? INT_MIN : low_ + static_cast<int>(c_.size()) - 1; }
  GaussianRational coeff(int k) const;
  const GaussianRational& leading() const { return c_.back(); }
  const GaussianRational& trailing() const { return c_.front(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0].is_one(); }
  const std::vector<GaussianRational>& dense() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const GaussianRational& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }

  LaurentPoly shifted(int k) const;             // times v^k
  LaurentPoly substitute_scale(const GaussianRational& a) const;  // p(a v)
  LaurentPoly reflected() const;                 // p(v^-1)

 private:
  void trim();
  int low_ = 0;
  std::vector<GaussianRational> c_;
};

// Polynomial helpers on LaurentPolys with valuation >= 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);  // monic, or zero
// Exact quotient a / b for polynomials; throws if the remainder is nonzero.
LaurentPoly poly_exact_div(const LaurentPoly& a, const LaurentPoly& b);
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r);

// num/den with den a monic polynomial, den(0) != 0, gcd(num, den) = 1.
class RationalFn {
 public:
  RationalFn() = default;
  RationalFn(long n) : num_(n) {}  // NOLINT(implicit)
  RationalFn(const GaussianRational& c) : num_(c) {}  // NOLINT(implicit)
  RationalFn(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(implicit)
  RationalFn(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  int valuation() const { return num_.valuation(); }
  bool regular_at_zero() const { return num_.valuation() >= 0; }
  // Value at v = 0; requires valuation >= 0.
  GaussianRational at_zero() const;
  // Laurent expansion at v = 0, coefficients for exponents valuation()..upto.
  std::map<int, GaussianRational> expansion(int upto) const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  RationalFn inverse() const;
  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFn substitute_scale(const GaussianRational& a) const;
  RationalFn reflected() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_{1};
};

enum class Component { Plus = 0, Minus = 1 };
inline constexpr Component kComponents[2] = {Component::Plus, Component::Minus};
inline int pi_sign(Component c) { return c == Component::Plus ? 1 : -1; }

// Element of Q(t)(v)[pi]/(pi^2-1) as (value at pi=+1, value at pi=-1).
class PiScalar {
 public:
  PiScalar() = default;
  PiScalar(long n) : plus_(n), minus_(n) {}  // NOLINT(implicit)
  PiScalar(const GaussianRational& c) : plus_(c), minus_(c) {}  // NOLINT(implicit)
  PiScalar(RationalFn plus, RationalFn minus) : plus_(std::move(plus)), minus_(std::move(minus)) {}

  static PiScalar v() { return {LaurentPoly::v(), LaurentPoly::v()}; }
  static PiScalar pi() { return {1, -1}; }
  static PiScalar t() { return GaussianRational(0, 1); }
  static PiScalar t_power(int k) { return GaussianRational::t_power(k); }
  // pi^a v^b
  static PiScalar monomial(int pi_exp, int v_exp);

  const RationalFn& plus() const { return plus_; }
  const RationalFn& minus() const { return minus_; }
  const RationalFn& component(Component c) const { return c == Component::Plus ? plus_ : minus_; }
  RationalFn& component(Component c) { return c == Component::Plus ? plus_ : minus_; }
  const RationalFn& specialize(int sign) const { return sign > 0 ? plus_ : minus_; }

  bool is_zero() const { return plus_.is_zero() && minus_.is_zero(); }
  bool is_one() const { return plus_.is_one() && minus_.is_one(); }
  bool is_laurent() const { return plus_.is_laurent() && minus_.is_laurent(); }

  PiScalar operator-() const { return {-plus_, -minus_}; }
  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);
  PiScalar& operator*=(const PiScalar& o);
  PiScalar& operator/=(const PiScalar& o);
  PiScalar inverse() const;
  friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
  friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
  friend PiScalar operator*(PiScalar a, const PiScalar& b) { return a *= b; }
  friend PiScalar operator/(PiScalar a, const PiScalar& b) { return a /= b; }
  friend bool operator==(const PiScalar& a, const PiScalar& b) {
    return a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }

 private:
  RationalFn plus_;
  RationalFn minus_;
};

PiScalar power(const PiScalar& s, int n);

// Quantum integers with v -> v^d, pi -> pi^d.
PiScalar qinteger(int k, int d);
// Signed variant: [-k] = -pi^{dk} [k].
PiScalar qinteger_signed(int n, int d);
PiScalar qfactorial(int k, int d);
PiScalar qbinomial(int n, int k, int d);

// v -> pi v^{-1}; t fixed.
PiScalar bar(const PiScalar& s);
// v -> t^{-1} v, pi -> -pi; t fixed.
PiScalar twist(const PiScalar& s);
PiScalar twist_inverse(const PiScalar& s);

// Order of vanishing at v = 0 per component; INT_MAX encodes +infinity.
std::pair<int, int> valuation(const PiScalar& s);
bool in_lattice(const PiScalar& s);

// Text format, e.g. "(3/2)*t*v^-2 + 1".
std::string render(const GaussianRational& c);
std::string render(const LaurentPoly& p);
std::string render(const RationalFn& f);
RationalFn parse_rational_fn(const std::string& text);

}  // namespace cqg
