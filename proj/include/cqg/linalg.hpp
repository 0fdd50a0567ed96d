// Dense exact linear algebra over the component fields Q(t)(v).
#pragma once

#include <optional>
#include <vector>

#include "cqg/scalar.hpp"

namespace cqg {

template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

using Vec = std::vector<RationalFn>;
using FieldMatrix = Matrix<RationalFn>;

FieldMatrix identity_matrix(std::size_t n);
FieldMatrix scaled(const FieldMatrix& m, const RationalFn& c);
FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b);
bool is_zero(const FieldMatrix& m);
bool is_zero(const Vec& v);

// Incremental row echelon form that remembers how each stored row combines the
// rows that were accepted, so that solve() returns coordinates in that basis.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width = 0) : width_(width) {}
  std::size_t width() const { return width_; }
  std::size_t size() const { return rows_.size(); }
  // Adds row if independent of the current span; returns whether it was added.
  bool add(const Vec& row);
  bool independent(const Vec& row) const;
  // Coefficients on the accepted rows, or nullopt when row is outside the span.
  std::optional<Vec> solve(const Vec& row) const;

 private:
  // Reduces x in place, accumulating the combination used into coef.
  void reduce(Vec& x, Vec* coef) const;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<Vec> combos_;
  std::vector<std::size_t> pivots_;
};

// Rank of a matrix with Laurent polynomial entries by fraction-free elimination.
std::size_t bareiss_rank(Matrix<LaurentPoly> m);
// Exact quotient in the Laurent polynomial ring.
LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Basis of the right kernel {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_basis(FieldMatrix m);
std::size_t rank(FieldMatrix m);
// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(FieldMatrix& m);
FieldMatrix inverse(const FieldMatrix& m);

}  // namespace cqg
