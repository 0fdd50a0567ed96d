// Super Cartan data, root data, the order-dependent form phi and its extension
// to the weight lattice through a fixed coset transversal.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cqg {

// Element of Z[I], coefficients in index order.
using Weight = std::vector<int>;
// Coordinates in the lattices X or Y.
using LatticeVec = std::vector<long long>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Finding {
  std::string condition;
  std::vector<int> indices;
  std::string message;
};

class SuperCartanDatum {
 public:
  SuperCartanDatum(std::vector<std::string> names, std::vector<std::vector<int>> dot, std::vector<int> parity);

  int rank() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int dot(int i, int j) const { return dot_[i][j]; }
  const std::vector<std::vector<int>>& dot_matrix() const { return dot_; }
  int parity(int i) const { return parity_[i]; }
  const std::vector<int>& parities() const { return parity_; }
  int d(int i) const { return dot_[i][i] / 2; }
  // 2 i.j / i.i (assumes validity)
  int a(int i, int j) const { return 2 * dot_[i][j] / dot_[i][i]; }
  int b(int i, int j) const { return 1 - a(i, j); }

  int dot(const Weight& x, const Weight& y) const;
  int parity(const Weight& x) const;
  int index_of(const std::string& name) const;  // -1 if absent

  Weight unit(int i) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> dot_;
  std::vector<int> parity_;
};

// Violated conditions; empty means valid.
std::vector<Finding> validate(const SuperCartanDatum& datum);
// Informational remarks that do not invalidate the datum.
std::vector<Finding> remarks(const SuperCartanDatum& datum);

struct RootDatum {
  int rank_x = 0;
  int rank_y = 0;
  std::vector<std::vector<long long>> pairing;  // rank_y x rank_x
  std::vector<LatticeVec> emb_x;                // i -> i'
  std::vector<LatticeVec> emb_y;                // i -> i

  long long pair(const LatticeVec& y, const LatticeVec& x) const;
  LatticeVec to_x(const Weight& nu) const;
};

// Y = Z^I plus extra unit vectors as needed for X-regularity, X dual, i' given by
// the columns of the Cartan matrix.
RootDatum default_root_datum(const SuperCartanDatum& datum);
std::vector<Finding> validate_root(const SuperCartanDatum& datum, const RootDatum& root);

// Coset representatives for X / Z[I]' computed from a column Hermite form of the
// embedding, or a user-supplied list.
class Transversal {
 public:
  Transversal() = default;
  Transversal(const RootDatum& root, std::vector<LatticeVec> user = {});

  struct Split {
    Weight mu;
    LatticeVec c;
  };
  // lambda = mu' + c
  Split decompose(const LatticeVec& lambda) const;
  // Canonical representative of the coset of x.
  LatticeVec reduce(const LatticeVec& x) const;

  bool user_supplied() const { return !user_.empty(); }
  const std::vector<LatticeVec>& user() const { return user_; }
  const std::vector<int>& pivot_rows() const { return pivot_rows_; }
  const std::vector<LatticeVec>& hermite_columns() const { return h_; }
  // All canonical representatives when the quotient is finite.
  std::optional<std::vector<LatticeVec>> representatives() const;

 private:
  // x = rem + H q; returns q.
  std::vector<long long> reduce_with(LatticeVec& x) const;
  int rank_x_ = 0;
  int n_ = 0;
  std::vector<LatticeVec> h_;                 // Hermite columns
  std::vector<std::vector<long long>> v_;     // H = M V, stored column-wise
  std::vector<int> pivot_rows_;
  std::vector<LatticeVec> user_;
};

class Datum {
 public:
  explicit Datum(SuperCartanDatum cartan, std::optional<RootDatum> root = std::nullopt,
                 std::vector<LatticeVec> transversal = {});

  const SuperCartanDatum& cartan() const { return cartan_; }
  const RootDatum& root() const { return root_; }
  const Transversal& transversal() const { return transversal_; }
  int rank() const { return cartan_.rank(); }

  int phi(int i, int j) const { return phi_[i][j]; }
  int phi(const Weight& nu, const Weight& mu) const;
  int phi_dot(const Weight& nu, const LatticeVec& lambda) const;
  // <i, lambda>
  long long pair(int i, const LatticeVec& lambda) const;
  long long pair(const Weight& nu, const LatticeVec& lambda) const;
  LatticeVec to_x(const Weight& nu) const { return root_.to_x(nu); }
  bool dominant(const LatticeVec& lambda) const;

 private:
  SuperCartanDatum cartan_;
  RootDatum root_;
  Transversal transversal_;
  std::vector<std::vector<int>> phi_;
};

int height(const Weight& nu);
// Pairwise statistics over the multiset of letters.
int stats_N(const SuperCartanDatum& datum, const Weight& nu);
int stats_p(const SuperCartanDatum& datum, const Weight& nu);
int stats_N_letters(const SuperCartanDatum& datum, const std::vector<int>& letters);
int stats_p_letters(const SuperCartanDatum& datum, const std::vector<int>& letters);

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
bool nonnegative(const Weight& nu);
// All nu >= 0 with height(nu) == h, in lexicographic order.
std::vector<Weight> weights_of_height(int rank, int h);

}  // namespace cqg
