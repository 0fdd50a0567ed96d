// The half algebra f: free algebra modulo the radical of the pairing.
//
// Equality in f is decided through derivation coordinates: an element of weight
// nu vanishes in f exactly when every e'_i of it vanishes, so each weight space
// is embedded into the direct sum of the spaces one step lower. Pivot words give
// a basis. The Gram matrices of the pairing are also available and serve as an
// independent check of the same quotient.
#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>

#include "cqg/freealg.hpp"
#include "cqg/kernels.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

class QuotientContext {
 public:
  explicit QuotientContext(const Datum& datum, std::optional<std::filesystem::path> cache_dir = std::nullopt);

  const Datum& datum() const { return D_; }
  int rank() const { return D_.rank(); }

  std::size_t dim(const Weight& nu, Component c);
  const std::vector<Word>& pivots(const Weight& nu, Component c);
  // Coordinates of a word on the pivot basis of its weight.
  const Vec& coords(const Word& w, Component c);
  // Coordinates of a homogeneous element of weight nu.
  Vec coords(const FreeElement& x, const Weight& nu, Component c);
  // Element with the given coordinates on the pivot words.
  FreeElement from_coords(const Weight& nu, const Vec& plus, const Vec& minus);

  bool is_zero(const FreeElement& x);
  bool equal(const FreeElement& x, const FreeElement& y) { return is_zero(x - y); }
  // Representative on pivot words; coordinates depend on the pivot choice.
  FreeElement normal_form(const FreeElement& x);

  // Gram matrix over all words of weight nu and derived data.
  const PiMatrix& gram(const Weight& nu);
  const std::vector<Word>& gram_words(const Weight& nu);
  std::size_t gram_rank(const Weight& nu, Component c);
  std::vector<Vec> radical(const Weight& nu, Component c);
  bool gram_cache_hit(const Weight& nu) const;

 private:
  struct Space {
    std::vector<Word> pivots;
    EchelonBasis echelon;
    std::vector<std::size_t> offsets;  // per index, start of its block in the embedding
    std::size_t width = 0;
    std::map<Word, Vec> coords;
  };
  struct GramEntry {
    std::vector<Word> words;
    PiMatrix matrix;
    bool from_disk = false;
  };

  Space& space(const Weight& nu, Component c);
  Vec embedding(const Word& w, const Weight& nu, Component c);
  std::optional<std::filesystem::path> cache_file(const Weight& nu) const;

  const Datum& D_;
  std::optional<std::filesystem::path> cache_dir_;
  std::string hash_;
  std::recursive_mutex mu_;
  std::map<std::pair<Weight, int>, Space> spaces_;
  std::map<Weight, GramEntry> grams_;
};

// (-1)^k pi^{C(k,2)p(i)+k p(i)p(j)} [b_ij choose k]_{v_i,pi_i}
PiScalar serre_coefficient(const SuperCartanDatum& C, int i, int j, int k);
FreeElement serre_element(const Datum& D, int i, int j);

// S_ij of the twisted Serre relation under *; mutate adds one to the t-exponent
// of the first term, as a negative control.
FreeElement twisted_serre(const Datum& D, int i, int j, bool mutate = false);
bool verify_twistor_serre(QuotientContext& Q, int i, int j, bool mutate = false);

// Psi rho Psi^{-1}(x) = (-1)^{N/2 + p} rho(x) in f, for homogeneous x.
bool verify_rho_psi(QuotientContext& Q, const FreeElement& x);
int rho_psi_sign(const SuperCartanDatum& C, const Weight& nu);

}  // namespace cqg
