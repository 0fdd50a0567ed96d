// The free algebra on generators theta_i with coefficients in PiScalar (t included).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cqg/cartan.hpp"
#include "cqg/scalar.hpp"

namespace cqg {

// A word is a string whose characters are index positions 0..n-1. Comparison is
// lexicographic in the index order.
using Word = std::string;

Word make_word(std::initializer_list<int> letters);
Weight weight_of(const Word& w, int rank);
std::string render_word(const Word& w, const std::vector<std::string>& names);
// Inverse of render_word; accepts "θ[1]θ[2]" or a plain run of index names.
Word parse_word(const std::string& text, const std::vector<std::string>& names);

class FreeElement {
 public:
  FreeElement() = default;
  static FreeElement one() { return monomial(Word{}); }
  static FreeElement generator(int i) { return monomial(Word(1, static_cast<char>(i))); }
  static FreeElement monomial(const Word& w, const PiScalar& c = PiScalar(1));

  const std::map<Word, PiScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  PiScalar coeff(const Word& w) const;
  void add(const Word& w, const PiScalar& c);

  // Distinct weights of the stored words, sorted.
  std::vector<Weight> weights(int rank) const;
  FreeElement part(const Weight& nu, int rank) const;
  bool homogeneous(int rank) const { return weights(rank).size() <= 1; }

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& o);
  FreeElement& operator-=(const FreeElement& o);
  FreeElement& operator*=(const PiScalar& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(const PiScalar& c, FreeElement x) { return x *= c; }
  friend FreeElement operator*(const FreeElement& x, const FreeElement& y);
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Word, PiScalar> terms_;
};

inline FreeElement mul(const FreeElement& x, const FreeElement& y) { return x * y; }
FreeElement theta_power(int i, int n);

// x * y = t^{phi(|x|,|y|)} xy, extended bilinearly over homogeneous parts.
FreeElement star_mul(const Datum& D, const FreeElement& x, const FreeElement& y);

// Terms of e'_i applied to a single word: (remaining word, pi exponent, v exponent).
struct DerivationTerm {
  Word word;
  int pi_exp;
  int v_exp;
};
std::vector<DerivationTerm> e_prime_word(const SuperCartanDatum& C, int i, const Word& w);
FreeElement e_prime(const Datum& D, int i, const FreeElement& x);

// (w, u) on words, and its bilinear extension.
PiScalar pairing_words(const SuperCartanDatum& C, const Word& w, const Word& u);
PiScalar pairing(const Datum& D, const FreeElement& x, const FreeElement& y);

FreeElement rho(const FreeElement& x);
FreeElement bar_free(const FreeElement& x);

// e(w) = sum_{r<s} phi(w_r, w_s)
int word_exponent(const Datum& D, const Word& w);
FreeElement twistor_free(const Datum& D, const FreeElement& x);
FreeElement inverse_twistor(const Datum& D, const FreeElement& x);

FreeElement divided_power(const Datum& D, int i, int n);

// a + b*pi form of a scalar, used inside element renderings.
std::string render_scalar(const PiScalar& s);
std::string render(const FreeElement& x, const std::vector<std::string>& names);

}  // namespace cqg
