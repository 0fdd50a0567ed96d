// Highest weight modules of the covering quantum group U, truncated by height,
// and operator-level checks of the modified and extended twistors.
#pragma once

#include <functional>
#include <map>

#include "cqg/halfqg.hpp"

namespace cqg {

// Simple quotient of the Verma module M(lambda) at one pi-specialization.
// The block of depth nu is the (lambda - nu') weight space.
class WeightModule {
 public:
  WeightModule(QuotientContext& Q, LatticeVec lambda, int H, Component c);

  const Datum& datum() const { return Q_.datum(); }
  const LatticeVec& lambda() const { return lambda_; }
  int height_bound() const { return H_; }
  Component component() const { return c_; }
  // All depths of height <= H, by height and then lexicographically.
  const std::vector<Weight>& depths() const { return depths_; }
  bool in_range(const Weight& nu) const { return nonnegative(nu) && height(nu) <= H_; }

  std::size_t dim(const Weight& nu) const;
  std::size_t verma_dim(const Weight& nu) const;
  LatticeVec weight(const Weight& nu) const;  // lambda - nu'
  // <mu, weight(nu)> for mu in Y
  long long pair_y(const LatticeVec& mu, const Weight& nu) const;

  // F_i from depth nu to nu + i (needs height(nu) < H); E_i from nu to nu - i.
  // Out-of-range targets give matrices with zero rows.
  const FieldMatrix& F(int i, const Weight& nu) const;
  const FieldMatrix& E(int i, const Weight& nu) const;

  RationalFn scalar(const PiScalar& s) const { return s.component(c_); }

 private:
  struct Block {
    std::vector<FieldMatrix> F, E;  // per index
    std::size_t dim = 0;
  };
  void build();

  QuotientContext& Q_;
  LatticeVec lambda_;
  int H_;
  Component c_;
  std::vector<Weight> depths_;
  std::map<Weight, Block> blocks_;
  std::map<Weight, std::size_t> verma_dims_;
  FieldMatrix empty_;
};

// Weight space dimensions of the module: module weight -> dim.
std::map<LatticeVec, std::size_t> character(const WeightModule& V);

struct RelationCheck {
  std::string relation;
  std::vector<int> indices;
  Weight depth;
  bool pass;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  std::size_t boundary_skipped = 0;
  bool pass() const;
  std::size_t failures() const;
};

// Realization of generators on a module: E_i, F_i rescaled blockwise by t-powers,
// scalars mapped through a ring map, and the Cartan part as diagonal scalars.
struct OperatorFamily {
  std::string name;
  // Scalar factor of E_i and F_i leaving depth nu.
  std::function<RationalFn(int i, const Weight& nu)> e_factor;
  std::function<RationalFn(int i, const Weight& nu)> f_factor;
  // Image of a coefficient of the defining relations.
  std::function<RationalFn(const PiScalar& s)> coefficient;
  // Value of (E_i F_i - pi_i F_i E_i) on depth nu demanded by the relations.
  std::function<RationalFn(int i, const Weight& nu)> commutator_value;
};

// U-relations as stated, realized by the module itself.
OperatorFamily untwisted_family(const WeightModule& V);
// Generators E_i 1_mu, F_i 1_mu multiplied by the exponents of the modified
// twistor; mutate shifts the F-exponent of the first index by one.
OperatorFamily modified_twistor_family(const WeightModule& V, bool mutate = false);

enum class UpsilonSign { Minus = -1, Plus = 1 };
// Images of E_i, F_i under the extended twistor with T and Upsilon realized
// diagonally: T_mu by t^{<mu,wt>}, Upsilon_nu by t^{sign phi_dot(nu,wt)}.
OperatorFamily hat_twistor_family(const WeightModule& V, UpsilonSign sign = UpsilonSign::Minus, bool mutate = false);

// t-exponents of the modified twistor on E_i 1_mu and F_i 1_mu.
int modified_e_exponent(const Datum& D, int i, const LatticeVec& mu);
int modified_f_exponent(const Datum& D, int i, const LatticeVec& mu);

// Commutator and both Serre relations on every block where they fit.
RelationReport check_relations(const WeightModule& V, const OperatorFamily& fam);

RelationReport verify_modified_twistor(const WeightModule& V, bool mutate = false);
RelationReport verify_hat_twistor(const WeightModule& V, UpsilonSign sign = UpsilonSign::Minus, bool mutate = false);

// The t-exponent bookkeeping of the Serre step: clubsuit against
// 2C(k,2)d_i + 2k p(i)p(j) + c(i,j) mod 4.
int clubsuit(const Datum& D, int i, int j, int k);
// c(i,j); literal selects -d_i C(a_ij,2) for i > j instead of -d_i a_ij(a_ij-1).
int clubsuit_correction(const Datum& D, int i, int j, bool literal = false);
bool clubsuit_congruence(const Datum& D, int i, int j, int k, bool literal = false);

// chi(Psi(x)) = Psi^(x^-) as operators, for x = theta_w, on every block where w fits.
bool verify_chi_diagram(const WeightModule& V, const Word& w, UpsilonSign sign = UpsilonSign::Minus);

}  // namespace cqg
