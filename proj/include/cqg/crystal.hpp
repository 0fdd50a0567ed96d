// String decompositions, Kashiwara operators, the crystal lattice and its basis,
// and the canonical basis of f.
#pragma once

#include <map>
#include <optional>

#include "cqg/halfqg.hpp"

namespace cqg {

struct StringDecomposition {
  int i = 0;
  // (n, x_n) with n ascending; every x_n is killed by e'_i in f.
  std::vector<std::pair<int, FreeElement>> parts;
};

StringDecomposition string_decompose(QuotientContext& Q, int i, const FreeElement& x);
FreeElement reassemble(const Datum& D, const StringDecomposition& s);
FreeElement f_tilde(QuotientContext& Q, int i, const FreeElement& x);
FreeElement e_tilde(QuotientContext& Q, int i, const FreeElement& x);

struct CrystalElement {
  Word label;  // f~-word, leftmost operator applied last
  Weight weight;
  FreeElement rep;
};

// x = sign * rep(b) mod vL in each component.
struct CrystalMatch {
  std::size_t element;
  GaussianRational plus;   // value at v = 0 of the plus coordinate
  GaussianRational minus;
};

struct CanonicalBasisElement {
  std::size_t element;
  FreeElement G;
  int ell_mod4;
};

class Crystal {
 public:
  // Breadth-first closure of {1} under all f~_i up to height H.
  Crystal(QuotientContext& Q, int H);

  QuotientContext& quotient() { return Q_; }
  int height_bound() const { return H_; }
  const std::vector<CrystalElement>& elements() const { return elements_; }
  const CrystalElement& element(std::size_t k) const { return elements_[k]; }
  std::vector<std::size_t> at_weight(const Weight& nu) const;
  std::vector<Weight> weights() const;

  // Coordinates of x on the reps of its weight; x must be homogeneous.
  Vec lattice_coords(const FreeElement& x, const Weight& nu, Component c);
  bool in_lattice(const FreeElement& x);
  bool in_v_lattice(const FreeElement& x);
  // Which crystal element x reduces to mod vL, with the residual scalars.
  std::optional<CrystalMatch> classify(const FreeElement& x);

  // Exponent of i in b and the element its top string part reduces to.
  struct StringData {
    int eps;
    std::size_t lower;
  };
  StringData string_data(std::size_t b, int i);

  const CanonicalBasisElement& canonical(std::size_t b);
  std::vector<CanonicalBasisElement> canonical_basis(const Weight& nu);

 private:
  struct WeightData {
    std::vector<std::size_t> members;
    EchelonBasis lattice[2];
  };
  void solve_canonical(const Weight& nu);

  QuotientContext& Q_;
  int H_;
  std::vector<CrystalElement> elements_;
  std::map<Weight, WeightData> by_weight_;
  std::map<std::pair<std::size_t, int>, StringData> strings_;
  std::map<std::size_t, CanonicalBasisElement> canonical_;
};

// Bar-invariant Laurent polynomial agreeing with f in all exponents <= 0.
RationalFn bar_completion(const RationalFn& f, Component c);

// Exponent k in 0..3 with Psi(x) = t^k x in f, if any.
std::optional<int> psi_eigen_exponent(QuotientContext& Q, const FreeElement& x);

struct LatticeReport {
  struct Entry {
    std::size_t element;
    bool pass;
    std::optional<int> ell_mod4;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool pass() const;
};

// Psi maps every lattice basis vector into L[t] and reduces to t^l times itself.
LatticeReport verify_psi_lattice(Crystal& B);
// String parts of Psi(x) carry t^{phi(ni,nu) - n^2 d_i}.
LatticeReport verify_psi_strings(Crystal& B);
LatticeReport verify_rho_lattice(Crystal& B);
LatticeReport verify_canonical(Crystal& B);

}  // namespace cqg
