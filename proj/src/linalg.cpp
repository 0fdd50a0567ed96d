#include "cqg/linalg.hpp"

namespace cqg {

FieldMatrix identity_matrix(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = RationalFn(1);
  return m;
}

FieldMatrix scaled(const FieldMatrix& m, const RationalFn& c) {
  FieldMatrix r = m;
  for (auto& x : r.data)
    if (!x.is_zero()) x *= c;
  return r;
}

FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix r = a;
  for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] += b.data[k];
  return r;
}

FieldMatrix operator-(const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix r = a;
  for (std::size_t k = 0; k < r.data.size(); ++k) r.data[k] -= b.data[k];
  return r;
}

bool is_zero(const FieldMatrix& m) {
  for (const auto& x : m.data)
    if (!x.is_zero()) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- echelon

void EchelonBasis::reduce(Vec& x, Vec* coef) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const RationalFn& lead = x[pivots_[k]];
    if (lead.is_zero()) continue;
    RationalFn f = lead / rows_[k][pivots_[k]];
    for (std::size_t c = 0; c < width_; ++c)
      if (!rows_[k][c].is_zero()) x[c] -= f * rows_[k][c];
    if (coef) {
      for (std::size_t j = 0; j < combos_[k].size(); ++j)
        if (!combos_[k][j].is_zero()) (*coef)[j] += f * combos_[k][j];
    }
  }
}

bool EchelonBasis::independent(const Vec& row) const {
  Vec x = row;
  reduce(x, nullptr);
  return !is_zero(x);
}

bool EchelonBasis::add(const Vec& row) {
  if (row.size() != width_) throw ArithmeticError("echelon row has the wrong width");
  Vec x = row;
  std::size_t m = rows_.size();
  Vec coef(m);
  reduce(x, &coef);
  std::size_t piv = 0;
  while (piv < width_ && x[piv].is_zero()) ++piv;
  if (piv == width_) return false;
  // x = row - sum coef_j accepted_j
  Vec combo(m + 1);
  for (std::size_t j = 0; j < m; ++j) combo[j] = -coef[j];
  combo[m] = RationalFn(1);
  for (auto& c : combos_) c.emplace_back();
  rows_.push_back(std::move(x));
  combos_.push_back(std::move(combo));
  pivots_.push_back(piv);
  return true;
}

std::optional<Vec> EchelonBasis::solve(const Vec& row) const {
  if (row.size() != width_) throw ArithmeticError("echelon row has the wrong width");
  Vec x = row;
  Vec coef(rows_.size());
  reduce(x, &coef);
  if (!is_zero(x)) return std::nullopt;
  return coef;
}

// ---------------------------------------------------------------- Bareiss

LaurentPoly laurent_exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return {};
  int va = a.valuation(), vb = b.valuation();
  return poly_exact_div(a.shifted(-va), b.shifted(-vb)).shifted(va - vb);
}

std::size_t bareiss_rank(Matrix<LaurentPoly> m) {
  std::size_t r = 0;
  LaurentPoly prev(1);
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(p, k), m(r, k));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t k = c + 1; k < m.cols; ++k) {
        LaurentPoly num = m(r, c) * m(i, k) - m(i, c) * m(r, k);
        m(i, k) = laurent_exact_div(num, prev);
      }
      m(i, c) = LaurentPoly();
    }
    // columns left of c in rows below are already zero
    prev = m(r, c);
    ++r;
  }
  return r;
}

// ---------------------------------------------------------------- kernel

std::vector<std::size_t> rref(FieldMatrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(m(p, k), m(r, k));
    RationalFn inv = m(r, c).inverse();
    for (std::size_t k = c; k < m.cols; ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      RationalFn f = m(i, c);
      for (std::size_t k = c; k < m.cols; ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

std::vector<Vec> kernel_basis(FieldMatrix m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec x(m.cols);
    x[f] = RationalFn(1);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = -m(r, f);
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(FieldMatrix m) { return rref(m).size(); }

FieldMatrix inverse(const FieldMatrix& m) {
  if (m.rows != m.cols) throw ArithmeticError("inverse of a non-square matrix");
  std::size_t n = m.rows;
  FieldMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = RationalFn(1);
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] >= n) throw ArithmeticError("singular matrix");
  FieldMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

}  // namespace cqg
