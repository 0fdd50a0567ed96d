#include "cqg/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace cqg {

SuperCartanDatum::SuperCartanDatum(std::vector<std::string> names, std::vector<std::vector<int>> dot,
                                   std::vector<int> parity)
    : names_(std::move(names)), dot_(std::move(dot)), parity_(std::move(parity)) {
  std::size_t n = names_.size();
  if (n == 0) throw InputError("datum has no indices");
  if (dot_.size() != n) throw InputError("dot matrix row count does not match index count");
  for (const auto& row : dot_)
    if (row.size() != n) throw InputError("dot matrix is not square");
  if (parity_.size() != n) throw InputError("parity list length does not match index count");
  for (int p : parity_)
    if (p != 0 && p != 1) throw InputError("parity entries must be 0 or 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate index name '" + names_[i] + "'");
}

int SuperCartanDatum::dot(const Weight& x, const Weight& y) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += x[i] * y[j] * dot_[i][j];
  return s;
}

int SuperCartanDatum::parity(const Weight& x) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) s += x[i] * parity_[i];
  return ((s % 2) + 2) % 2;
}

int SuperCartanDatum::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

Weight SuperCartanDatum::unit(int i) const {
  Weight w(static_cast<std::size_t>(rank()), 0);
  w[i] = 1;
  return w;
}

std::vector<Finding> validate(const SuperCartanDatum& D) {
  std::vector<Finding> out;
  int n = D.rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (D.dot(i, j) != D.dot(j, i))
        out.push_back({"symmetric", {i, j}, "dot matrix is not symmetric"});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (D.dot(i, j) % 2 != 0) out.push_back({"even", {i, j}, "i.j must be even"});
  std::vector<bool> diag_ok(static_cast<std::size_t>(n), true);
  for (int i = 0; i < n; ++i) {
    int ii = D.dot(i, i);
    if (ii <= 0 || ii % 2 != 0) {
      out.push_back({"(a)", {i}, "i.i/2 must be a positive integer"});
      diag_ok[static_cast<std::size_t>(i)] = false;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!diag_ok[static_cast<std::size_t>(i)]) continue;
    int ii = D.dot(i, i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int num = 2 * D.dot(i, j);
      if (num % ii != 0 || num > 0) {
        out.push_back({"(b)", {i, j}, "2 i.j / i.i must be a nonpositive integer"});
        continue;
      }
      if (D.parity(i) == 1 && (num / ii) % 2 != 0)
        out.push_back({"(c)", {i, j}, "odd index requires an even Cartan integer"});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!diag_ok[static_cast<std::size_t>(i)]) continue;
    if (D.d(i) % 2 != D.parity(i))
      out.push_back({"(d)", {i},
                     "not bar-consistent: d_i must have the parity of p(i); the datum A^(4)(0,2n) is the "
                     "known anisotropic exception and is not supported"});
  }
  return out;
}

std::vector<Finding> remarks(const SuperCartanDatum& D) {
  std::vector<Finding> out;
  if (std::all_of(D.parities().begin(), D.parities().end(), [](int p) { return p == 0; }))
    out.push_back({"no-odd-index", {}, "all indices are even; this is an ordinary Cartan datum"});
  return out;
}

// ---------------------------------------------------------------- root datum

long long RootDatum::pair(const LatticeVec& y, const LatticeVec& x) const {
  long long s = 0;
  for (int r = 0; r < rank_y; ++r)
    for (int c = 0; c < rank_x; ++c) s += y[r] * pairing[r][c] * x[c];
  return s;
}

LatticeVec RootDatum::to_x(const Weight& nu) const {
  LatticeVec out(static_cast<std::size_t>(rank_x), 0);
  for (std::size_t i = 0; i < nu.size(); ++i)
    for (int c = 0; c < rank_x; ++c) out[c] += nu[i] * emb_x[i][c];
  return out;
}

namespace {

// Rank over Q of an integer matrix given by rows.
int integer_rank(std::vector<std::vector<long long>> m) {
  int rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& p = m[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      long long a = p[c], b = m[r][c];
      long long g = std::gcd(a, b);
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] * (a / g) - p[k] * (b / g);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

RootDatum default_root_datum(const SuperCartanDatum& D) {
  int n = D.rank();
  // rows of the X-coordinate matrix: row k holds <y_k, j'> for all j
  std::vector<std::vector<long long>> rows;
  for (int k = 0; k < n; ++k) {
    std::vector<long long> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[j] = D.a(k, j);
    rows.push_back(row);
  }
  int have = integer_rank(rows);
  for (int m = 0; m < n && have < n; ++m) {
    std::vector<long long> row(static_cast<std::size_t>(n), 0);
    row[m] = 1;
    auto trial = rows;
    trial.push_back(row);
    int r = integer_rank(trial);
    if (r > have) {
      rows = std::move(trial);
      have = r;
    }
  }
  RootDatum R;
  R.rank_x = R.rank_y = static_cast<int>(rows.size());
  R.pairing.assign(rows.size(), std::vector<long long>(rows.size(), 0));
  for (std::size_t k = 0; k < rows.size(); ++k) R.pairing[k][k] = 1;
  for (int j = 0; j < n; ++j) {
    LatticeVec x(rows.size()), y(rows.size(), 0);
    for (std::size_t k = 0; k < rows.size(); ++k) x[k] = rows[k][j];
    y[j] = 1;
    R.emb_x.push_back(x);
    R.emb_y.push_back(y);
  }
  return R;
}

std::vector<Finding> validate_root(const SuperCartanDatum& D, const RootDatum& R) {
  std::vector<Finding> out;
  int n = D.rank();
  if (R.rank_x != R.rank_y || static_cast<int>(R.pairing.size()) != R.rank_y) {
    out.push_back({"root-shape", {}, "pairing must be a square matrix"});
    return out;
  }
  for (const auto& row : R.pairing)
    if (static_cast<int>(row.size()) != R.rank_x) {
      out.push_back({"root-shape", {}, "pairing must be a square matrix"});
      return out;
    }
  if (static_cast<int>(R.emb_x.size()) != n || static_cast<int>(R.emb_y.size()) != n) {
    out.push_back({"root-shape", {}, "embeddings must list one vector per index"});
    return out;
  }
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(R.emb_x[i].size()) != R.rank_x || static_cast<int>(R.emb_y[i].size()) != R.rank_y) {
      out.push_back({"root-shape", {i}, "embedding vector has the wrong length"});
      return out;
    }
  // unimodular pairing: integer determinant +-1 via fraction-free elimination
  {
    auto m = R.pairing;
    std::size_t k = m.size();
    long long prev = 1;
    long long sign = 1;
    bool singular = false;
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && m[p][c] == 0) ++p;
      if (p == k) {
        singular = true;
        break;
      }
      if (p != c) {
        std::swap(m[p], m[c]);
        sign = -sign;
      }
      for (std::size_t r = c + 1; r < k; ++r) {
        for (std::size_t q = c + 1; q < k; ++q) m[r][q] = (m[c][c] * m[r][q] - m[r][c] * m[c][q]) / prev;
        m[r][c] = 0;
      }
      prev = m[c][c];
    }
    long long det = singular ? 0 : sign * m[k - 1][k - 1];
    if (det != 1 && det != -1) out.push_back({"root-perfect", {}, "pairing is not unimodular"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (D.dot(i, i) > 0 && R.pair(R.emb_y[i], R.emb_x[j]) != 2LL * D.dot(i, j) / D.dot(i, i))
        out.push_back({"root-cartan", {i, j}, "<i, j'> differs from 2 i.j / i.i"});
  if (integer_rank(std::vector<std::vector<long long>>(R.emb_x.begin(), R.emb_x.end())) < n)
    out.push_back({"root-x-regular", {}, "images of I in X are linearly dependent"});
  if (integer_rank(std::vector<std::vector<long long>>(R.emb_y.begin(), R.emb_y.end())) < n)
    out.push_back({"root-y-regular", {}, "images of I in Y are linearly dependent"});
  return out;
}

// ---------------------------------------------------------------- transversal

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Transversal::Transversal(const RootDatum& R, std::vector<LatticeVec> user)
    : rank_x_(R.rank_x), n_(static_cast<int>(R.emb_x.size())), user_(std::move(user)) {
  h_ = R.emb_x;
  v_.assign(static_cast<std::size_t>(n_), std::vector<long long>(static_cast<std::size_t>(n_), 0));
  for (int k = 0; k < n_; ++k) v_[k][k] = 1;
  auto col_sub = [&](int dst, int src, long long q) {  // col dst -= q col src
    for (int r = 0; r < rank_x_; ++r) h_[dst][r] -= q * h_[src][r];
    for (int r = 0; r < n_; ++r) v_[dst][r] -= q * v_[src][r];
  };
  int k = 0;
  for (int row = 0; row < rank_x_ && k < n_; ++row) {
    // gcd-eliminate row among columns k..n-1
    while (true) {
      int best = -1;
      for (int c = k; c < n_; ++c)
        if (h_[c][row] != 0 && (best < 0 || std::llabs(h_[c][row]) < std::llabs(h_[best][row]))) best = c;
      if (best < 0) break;
      std::swap(h_[k], h_[best]);
      std::swap(v_[k], v_[best]);
      bool done = true;
      for (int c = k + 1; c < n_; ++c) {
        if (h_[c][row] == 0) continue;
        col_sub(c, k, h_[c][row] / h_[k][row]);
        if (h_[c][row] != 0) done = false;
      }
      if (done) break;
    }
    if (h_[k][row] == 0) continue;
    if (h_[k][row] < 0) {
      for (auto& x : h_[k]) x = -x;
      for (auto& x : v_[k]) x = -x;
    }
    pivot_rows_.push_back(row);
    ++k;
  }
  if (k < n_) throw InputError("images of I in X are linearly dependent");
  for (const auto& c : user_)
    if (static_cast<int>(c.size()) != rank_x_) throw InputError("transversal vector has the wrong length");
  for (std::size_t a = 0; a < user_.size(); ++a)
    for (std::size_t b = a + 1; b < user_.size(); ++b)
      if (reduce(user_[a]) == reduce(user_[b])) throw InputError("transversal lists two vectors of one coset");
}

std::vector<long long> Transversal::reduce_with(LatticeVec& x) const {
  std::vector<long long> q(static_cast<std::size_t>(n_), 0);
  for (int k = 0; k < n_; ++k) {
    int r = pivot_rows_[k];
    long long f = floor_div(x[r], h_[k][r]);
    if (f == 0) continue;
    for (int s = 0; s < rank_x_; ++s) x[s] -= f * h_[k][s];
    q[k] = f;
  }
  return q;
}

LatticeVec Transversal::reduce(const LatticeVec& x) const {
  LatticeVec y = x;
  reduce_with(y);
  return y;
}

Transversal::Split Transversal::decompose(const LatticeVec& lambda) const {
  if (static_cast<int>(lambda.size()) != rank_x_) throw InputError("weight has the wrong number of coordinates");
  auto solve = [&](const LatticeVec& c) -> std::optional<Split> {
    LatticeVec y(lambda.size());
    for (std::size_t s = 0; s < y.size(); ++s) y[s] = lambda[s] - c[s];
    auto q = reduce_with(y);
    if (std::any_of(y.begin(), y.end(), [](long long z) { return z != 0; })) return std::nullopt;
    Split out;
    out.mu.assign(static_cast<std::size_t>(n_), 0);
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < n_; ++j) out.mu[j] += static_cast<int>(q[k] * v_[k][j]);
    out.c = c;
    return out;
  };
  if (user_.empty()) {
    auto s = solve(reduce(lambda));
    return *s;
  }
  for (const auto& c : user_)
    if (auto s = solve(c)) return *s;
  throw InputError("weight lies in no coset of the supplied transversal");
}

std::optional<std::vector<LatticeVec>> Transversal::representatives() const {
  if (!user_.empty()) return user_;
  if (n_ != rank_x_) return std::nullopt;
  std::vector<LatticeVec> out{LatticeVec(static_cast<std::size_t>(rank_x_), 0)};
  for (int k = 0; k < n_; ++k) {
    std::vector<LatticeVec> next;
    int r = pivot_rows_[k];
    for (const auto& base : out)
      for (long long m = 0; m < h_[k][r]; ++m) {
        LatticeVec c = base;
        c[r] = m;
        next.push_back(c);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- Datum

Datum::Datum(SuperCartanDatum cartan, std::optional<RootDatum> root, std::vector<LatticeVec> transversal)
    : cartan_(std::move(cartan)) {
  root_ = root ? *root : default_root_datum(cartan_);
  transversal_ = Transversal(root_, std::move(transversal));
  int n = cartan_.rank();
  phi_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j < i) phi_[i][j] = cartan_.d(i) * cartan_.a(i, j);
      else if (j == i) phi_[i][j] = cartan_.d(i);
      else phi_[i][j] = -2 * cartan_.parity(i) * cartan_.parity(j);
    }
}

int Datum::phi(const Weight& nu, const Weight& mu) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (nu[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += nu[i] * mu[j] * phi_[i][j];
  }
  return s;
}

int Datum::phi_dot(const Weight& nu, const LatticeVec& lambda) const {
  return phi(nu, transversal_.decompose(lambda).mu);
}

long long Datum::pair(int i, const LatticeVec& lambda) const { return root_.pair(root_.emb_y[i], lambda); }

long long Datum::pair(const Weight& nu, const LatticeVec& lambda) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) s += nu[i] * pair(i, lambda);
  return s;
}

bool Datum::dominant(const LatticeVec& lambda) const {
  for (int i = 0; i < rank(); ++i)
    if (pair(i, lambda) < 0) return false;
  return true;
}

// ---------------------------------------------------------------- weights

int height(const Weight& nu) { return std::accumulate(nu.begin(), nu.end(), 0); }

int stats_N(const SuperCartanDatum& D, const Weight& nu) {
  int diag = 0;
  for (int i = 0; i < D.rank(); ++i) diag += nu[i] * D.dot(i, i);
  return (D.dot(nu, nu) - diag) / 2;
}

int stats_p(const SuperCartanDatum& D, const Weight& nu) {
  int odd = 0;
  for (int i = 0; i < D.rank(); ++i) odd += nu[i] * D.parity(i);
  return odd * (odd - 1) / 2;
}

int stats_N_letters(const SuperCartanDatum& D, const std::vector<int>& letters) {
  int s = 0;
  for (std::size_t r = 0; r < letters.size(); ++r)
    for (std::size_t t = r + 1; t < letters.size(); ++t) s += D.dot(letters[r], letters[t]);
  return s;
}

int stats_p_letters(const SuperCartanDatum& D, const std::vector<int>& letters) {
  int s = 0;
  for (std::size_t r = 0; r < letters.size(); ++r)
    for (std::size_t t = r + 1; t < letters.size(); ++t) s += D.parity(letters[r]) * D.parity(letters[t]);
  return s;
}

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

bool nonnegative(const Weight& nu) {
  return std::all_of(nu.begin(), nu.end(), [](int x) { return x >= 0; });
}

std::vector<Weight> weights_of_height(int rank, int h) {
  std::vector<Weight> out;
  Weight cur(static_cast<std::size_t>(rank), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  if (rank > 0) rec(rec, 0, h);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cqg
