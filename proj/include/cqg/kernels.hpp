// Hot loops with a serial reference and an OpenMP version of each.
#pragma once

#include <vector>

#include "cqg/freealg.hpp"
#include "cqg/linalg.hpp"

namespace cqg {

struct PiMatrix {
  Matrix<LaurentPoly> plus;
  Matrix<LaurentPoly> minus;
  const Matrix<LaurentPoly>& component(Component c) const { return c == Component::Plus ? plus : minus; }
  friend bool operator==(const PiMatrix& a, const PiMatrix& b) { return a.plus == b.plus && a.minus == b.minus; }
};

// All words of weight nu in lexicographic order.
std::vector<Word> words_of_weight(const Weight& nu);

// Matrix of pairings between words.
PiMatrix gram_matrix_serial(const SuperCartanDatum& C, const std::vector<Word>& words);
PiMatrix gram_matrix_parallel(const SuperCartanDatum& C, const std::vector<Word>& words);

FieldMatrix matmul_serial(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix matmul_parallel(const FieldMatrix& a, const FieldMatrix& b);
// Picks the parallel version for large products.
FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace cqg
