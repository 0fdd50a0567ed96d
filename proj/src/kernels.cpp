#include "cqg/kernels.hpp"

#include <algorithm>

namespace cqg {

std::vector<Word> words_of_weight(const Weight& nu) {
  Word w;
  for (std::size_t i = 0; i < nu.size(); ++i) w.append(static_cast<std::size_t>(std::max(nu[i], 0)), static_cast<char>(i));
  std::vector<Word> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

namespace {

void fill_row(const SuperCartanDatum& C, const std::vector<Word>& words, std::size_t r, PiMatrix& g) {
  for (std::size_t c = r; c < words.size(); ++c) {
    PiScalar p = pairing_words(C, words[r], words[c]);
    g.plus(r, c) = p.plus().num();
    g.minus(r, c) = p.minus().num();
  }
}

void mirror(PiMatrix& g) {
  for (std::size_t r = 0; r < g.plus.rows; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      g.plus(r, c) = g.plus(c, r);
      g.minus(r, c) = g.minus(c, r);
    }
}

}  // namespace

PiMatrix gram_matrix_serial(const SuperCartanDatum& C, const std::vector<Word>& words) {
  std::size_t n = words.size();
  PiMatrix g{Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n)};
  for (std::size_t r = 0; r < n; ++r) fill_row(C, words, r, g);
  mirror(g);
  return g;
}

PiMatrix gram_matrix_parallel(const SuperCartanDatum& C, const std::vector<Word>& words) {
  std::size_t n = words.size();
  PiMatrix g{Matrix<LaurentPoly>(n, n), Matrix<LaurentPoly>(n, n)};
  const long long rows = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long r = 0; r < rows; ++r) fill_row(C, words, static_cast<std::size_t>(r), g);
  mirror(g);
  return g;
}

namespace {

void product_row(const FieldMatrix& a, const FieldMatrix& b, std::size_t r, FieldMatrix& out) {
  for (std::size_t k = 0; k < a.cols; ++k) {
    const RationalFn& x = a(r, k);
    if (x.is_zero()) continue;
    for (std::size_t c = 0; c < b.cols; ++c) {
      const RationalFn& y = b(k, c);
      if (!y.is_zero()) out(r, c) += x * y;
    }
  }
}

}  // namespace

FieldMatrix matmul_serial(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw ArithmeticError("matrix shapes do not compose");
  FieldMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) product_row(a, b, r, out);
  return out;
}

FieldMatrix matmul_parallel(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols != b.rows) throw ArithmeticError("matrix shapes do not compose");
  FieldMatrix out(a.rows, b.cols);
  const long long rows = static_cast<long long>(a.rows);
#pragma omp parallel for schedule(dynamic)
  for (long long r = 0; r < rows; ++r) product_row(a, b, static_cast<std::size_t>(r), out);
  return out;
}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.rows * a.cols * b.cols >= 4096) return matmul_parallel(a, b);
  return matmul_serial(a, b);
}

}  // namespace cqg
