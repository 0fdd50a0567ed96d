#include "cqg/umod.hpp"

#include <algorithm>

namespace cqg {

namespace {

Weight shifted(Weight nu, int i, int by) {
  nu[static_cast<std::size_t>(i)] += by;
  return nu;
}

RationalFn t_pow(long long k) { return RationalFn(GaussianRational::t_power(static_cast<int>(((k % 4) + 4) % 4))); }


Vec mat_vec(const FieldMatrix& m, const Vec& v) {
  Vec out(m.rows);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
  return out;
}

}  // namespace

// ---------------------------------------------------------------- module

WeightModule::WeightModule(QuotientContext& Q, LatticeVec lambda, int H, Component c)
    : Q_(Q), lambda_(std::move(lambda)), H_(H), c_(c) {
  if (static_cast<int>(lambda_.size()) != datum().root().rank_x)
    throw InputError("weight has " + std::to_string(lambda_.size()) + " coordinates, X has rank " +
                     std::to_string(datum().root().rank_x));
  if (H < 0) throw InputError("negative height bound");
  for (int h = 0; h <= H_; ++h)
    for (auto& nu : weights_of_height(datum().rank(), h)) depths_.push_back(nu);
  build();
}

LatticeVec WeightModule::weight(const Weight& nu) const {
  LatticeVec w = lambda_;
  LatticeVec sub = datum().to_x(nu);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] -= sub[k];
  return w;
}

long long WeightModule::pair_y(const LatticeVec& mu, const Weight& nu) const {
  return datum().root().pair(mu, weight(nu));
}

std::size_t WeightModule::dim(const Weight& nu) const {
  auto it = blocks_.find(nu);
  return it == blocks_.end() ? 0 : it->second.dim;
}

std::size_t WeightModule::verma_dim(const Weight& nu) const {
  auto it = verma_dims_.find(nu);
  return it == verma_dims_.end() ? 0 : it->second;
}

const FieldMatrix& WeightModule::F(int i, const Weight& nu) const {
  auto it = blocks_.find(nu);
  if (it == blocks_.end()) return empty_;
  return it->second.F[static_cast<std::size_t>(i)];
}

const FieldMatrix& WeightModule::E(int i, const Weight& nu) const {
  auto it = blocks_.find(nu);
  if (it == blocks_.end()) return empty_;
  return it->second.E[static_cast<std::size_t>(i)];
}

// The Verma module is f acting on a highest weight vector: F_i is left
// multiplication and E_i follows from E_i F_j = pi^{p(i)p(j)} F_j E_i + delta_ij [<i,wt>].
// The simple quotient is cut out by the maps to the top along all E-words.
void WeightModule::build() {
  const Datum& D = datum();
  const auto& C = D.cartan();
  const int n = D.rank();
  const int sign = pi_sign(c_);
  auto pi_pow = [&](int e) { return RationalFn((e % 2 != 0 && sign < 0) ? -1 : 1); };

  std::map<Weight, std::vector<FieldMatrix>> Fv, Ev;
  std::map<Weight, FieldMatrix> P, R;

  auto bracket = [&](int i, const Weight& nu) {
    return qinteger_signed(static_cast<int>(D.pair(i, weight(nu))), C.d(i)).component(c_);
  };

  for (const auto& nu : depths_) {
    const auto& piv = Q_.pivots(nu, c_);
    std::size_t m = piv.size();
    verma_dims_[nu] = m;
    auto& fv = Fv[nu];
    auto& ev = Ev[nu];
    fv.resize(static_cast<std::size_t>(n));
    ev.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (height(nu) < H_) {
        Weight up = shifted(nu, i, 1);
        fv[i] = FieldMatrix(Q_.dim(up, c_), m);
        for (std::size_t k = 0; k < m; ++k) {
          const Vec& col = Q_.coords(Word(1, static_cast<char>(i)) + piv[k], c_);
          for (std::size_t r = 0; r < col.size(); ++r) fv[i](r, k) = col[r];
        }
      }
    }
    // E on words j.q of weight nu, from E on q.
    auto e_word = [&](int i, const Word& w) {
      Weight down = shifted(nu, i, -1);
      Vec out(Q_.dim(down, c_));
      int j = w[0];
      Word q = w.substr(1);
      Weight lower = shifted(nu, j, -1);
      const Vec& u = Q_.coords(q, c_);
      if (lower[i] > 0) {
        Vec a = mat_vec(Ev[lower][i], u);
        Vec b = mat_vec(Fv[shifted(lower, i, -1)][j], a);
        RationalFn s = pi_pow(C.parity(i) * C.parity(j));
        for (std::size_t r = 0; r < out.size(); ++r)
          if (!b[r].is_zero()) out[r] += s * b[r];
      }
      if (i == j) {
        RationalFn s = bracket(i, lower);
        for (std::size_t r = 0; r < out.size(); ++r)
          if (!u[r].is_zero()) out[r] += s * u[r];
      }
      return out;
    };
    for (int i = 0; i < n; ++i) {
      if (nu[i] == 0) {
        ev[i] = FieldMatrix(0, m);
        continue;
      }
      ev[i] = FieldMatrix(Q_.dim(shifted(nu, i, -1), c_), m);
      for (std::size_t k = 0; k < m; ++k) {
        Vec col = e_word(i, piv[k]);
        for (std::size_t r = 0; r < col.size(); ++r) ev[i](r, k) = col[r];
      }
      // Every word j.q with q a pivot must give the same answer through its coordinates.
      for (int j = 0; j < n; ++j) {
        if (nu[j] == 0) continue;
        for (const auto& q : Q_.pivots(shifted(nu, j, -1), c_)) {
          Word w = Word(1, static_cast<char>(j)) + q;
          if (!(mat_vec(ev[i], Q_.coords(w, c_)) == e_word(i, w)))
            throw ArithmeticError("E-action is inconsistent on the quotient of the free algebra");
        }
      }
    }

    // Rows of P span the functionals m -> (E-word to the top)(m).
    FieldMatrix p;
    if (height(nu) == 0) {
      p = identity_matrix(m);
    } else {
      EchelonBasis eb(m);
      std::vector<Vec> rows;
      for (int i = 0; i < n; ++i) {
        if (nu[i] == 0) continue;
        FieldMatrix prod = matmul(P[shifted(nu, i, -1)], ev[i]);
        for (std::size_t r = 0; r < prod.rows; ++r) {
          Vec row(prod.data.begin() + static_cast<std::ptrdiff_t>(r * m),
                  prod.data.begin() + static_cast<std::ptrdiff_t>((r + 1) * m));
          if (eb.add(row)) rows.push_back(std::move(row));
        }
      }
      p = FieldMatrix(rows.size(), m);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t k = 0; k < m; ++k) p(r, k) = rows[r][k];
    }
    // Right inverse through an invertible column selection.
    FieldMatrix red = p;
    auto cols = rref(red);
    FieldMatrix sel(p.rows, p.rows);
    for (std::size_t r = 0; r < p.rows; ++r)
      for (std::size_t k = 0; k < cols.size(); ++k) sel(r, k) = p(r, cols[k]);
    FieldMatrix r(m, p.rows);
    if (p.rows > 0) {
      FieldMatrix inv = inverse(sel);
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t c = 0; c < p.rows; ++c) r(cols[k], c) = inv(k, c);
    }
    P[nu] = std::move(p);
    R[nu] = std::move(r);
  }

  for (const auto& nu : depths_) {
    Block b;
    b.dim = P[nu].rows;
    b.F.resize(static_cast<std::size_t>(n));
    b.E.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (height(nu) < H_) b.F[i] = matmul(matmul(P[shifted(nu, i, 1)], Fv[nu][i]), R[nu]);
      else b.F[i] = FieldMatrix(0, b.dim);
      if (nu[i] > 0) b.E[i] = matmul(matmul(P[shifted(nu, i, -1)], Ev[nu][i]), R[nu]);
      else b.E[i] = FieldMatrix(0, b.dim);
    }
    blocks_.emplace(nu, std::move(b));
  }
}

std::map<LatticeVec, std::size_t> character(const WeightModule& V) {
  std::map<LatticeVec, std::size_t> out;
  for (const auto& nu : V.depths())
    if (V.dim(nu) > 0) out[V.weight(nu)] = V.dim(nu);
  return out;
}

// ---------------------------------------------------------------- families

int modified_e_exponent(const Datum& D, int i, const LatticeVec& mu) {
  return static_cast<int>(D.cartan().d(i) * D.pair(i, mu)) - D.phi_dot(D.cartan().unit(i), mu);
}

int modified_f_exponent(const Datum& D, int i, const LatticeVec& mu) { return D.phi_dot(D.cartan().unit(i), mu); }

OperatorFamily untwisted_family(const WeightModule& V) {
  OperatorFamily f;
  f.name = "untwisted";
  f.e_factor = [](int, const Weight&) { return RationalFn(1); };
  f.f_factor = f.e_factor;
  f.coefficient = [&V](const PiScalar& s) { return V.scalar(s); };
  f.commutator_value = [&V](int i, const Weight& nu) {
    const Datum& D = V.datum();
    return V.scalar(qinteger_signed(static_cast<int>(D.pair(i, V.weight(nu))), D.cartan().d(i)));
  };
  return f;
}

OperatorFamily modified_twistor_family(const WeightModule& V, bool mutate) {
  OperatorFamily f;
  f.name = mutate ? "modified-twistor-mutated" : "modified-twistor";
  f.e_factor = [&V](int i, const Weight& nu) { return t_pow(modified_e_exponent(V.datum(), i, V.weight(nu))); };
  f.f_factor = [&V, mutate](int i, const Weight& nu) {
    return t_pow(modified_f_exponent(V.datum(), i, V.weight(nu)) + ((mutate && i == 0) ? 1 : 0));
  };
  f.coefficient = [&V](const PiScalar& s) { return V.scalar(twist(s)); };
  f.commutator_value = [&V](int i, const Weight& nu) {
    const Datum& D = V.datum();
    return V.scalar(twist(qinteger_signed(static_cast<int>(D.pair(i, V.weight(nu))), D.cartan().d(i))));
  };
  return f;
}

namespace {

long long upsilon_exponent(const WeightModule& V, UpsilonSign sign, const Weight& mu, const Weight& nu) {
  return static_cast<int>(sign) * static_cast<long long>(V.datum().phi_dot(mu, V.weight(nu)));
}

LatticeVec y_of(const Datum& D, int i, long long scale) {
  LatticeVec y = D.root().emb_y[static_cast<std::size_t>(i)];
  for (auto& x : y) x *= scale;
  return y;
}

}  // namespace

OperatorFamily hat_twistor_family(const WeightModule& V, UpsilonSign sign, bool mutate) {
  OperatorFamily f;
  f.name = std::string(mutate ? "hat-twistor-mutated" : "hat-twistor") + (sign == UpsilonSign::Minus ? "" : "-plus");
  // t_i^{-1} Upsilon_i^{-1} T_{d_i i} E_i, the diagonals read at the target block.
  f.e_factor = [&V, sign](int i, const Weight& nu) {
    const Datum& D = V.datum();
    int d = D.cartan().d(i);
    Weight target = shifted(nu, i, -1);
    Weight ui = D.cartan().unit(i);
    return t_pow(-d - upsilon_exponent(V, sign, ui, target) + V.pair_y(y_of(D, i, d), target));
  };
  f.f_factor = [&V, sign, mutate](int i, const Weight& nu) {
    return t_pow(upsilon_exponent(V, sign, V.datum().cartan().unit(i), nu) + ((mutate && i == 0) ? 1 : 0));
  };
  f.coefficient = [&V](const PiScalar& s) { return V.scalar(twist(s)); };
  // (J^_{d_i i} K^_{d_i i} - K^_{-d_i i}) / twist(pi_i v_i - v_i^{-1})
  f.commutator_value = [&V](int i, const Weight& nu) {
    const Datum& D = V.datum();
    int d = D.cartan().d(i);
    long long n = D.pair(i, V.weight(nu)) * d;
    int e = static_cast<int>(n);
    RationalFn pi_part((pi_sign(V.component()) < 0 && e % 2 != 0) ? -1 : 1);
    RationalFn num = t_pow(2 * n) * pi_part * t_pow(-n) * RationalFn(LaurentPoly::monomial(1, e)) -
                     t_pow(n) * RationalFn(LaurentPoly::monomial(1, -e));
    RationalFn den = V.scalar(twist(PiScalar::monomial(d, d) - PiScalar::monomial(0, -d)));
    return num / den;
  };
  return f;
}

// ---------------------------------------------------------------- relations

bool RelationReport::pass() const { return failures() == 0; }

std::size_t RelationReport::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

namespace {

struct Step {
  bool raise;  // E
  int i;
};

// Product of rescaled generators, steps applied in order, from depth start.
// Rows index the final depth; an out-of-range final depth has no rows.
FieldMatrix chain(const WeightModule& V, const OperatorFamily& fam, const std::vector<Step>& steps, const Weight& start) {
  Weight cur = start;
  FieldMatrix m = identity_matrix(V.dim(start));
  bool alive = true;
  for (const auto& s : steps) {
    Weight next = shifted(cur, s.i, s.raise ? -1 : 1);
    if (!alive || !V.in_range(next)) {
      alive = false;
      cur = next;
      continue;
    }
    const FieldMatrix& op = s.raise ? V.E(s.i, cur) : V.F(s.i, cur);
    RationalFn f = s.raise ? fam.e_factor(s.i, cur) : fam.f_factor(s.i, cur);
    m = matmul(scaled(op, f), m);
    cur = next;
  }
  if (!alive) return FieldMatrix(V.in_range(cur) ? V.dim(cur) : 0, V.dim(start));
  return m;
}

std::vector<Step> serre_steps(bool raise, int i, int j, int b, int k) {
  std::vector<Step> s;
  for (int r = 0; r < k; ++r) s.push_back({raise, i});
  s.push_back({raise, j});
  for (int r = 0; r < b - k; ++r) s.push_back({raise, i});
  return s;
}

}  // namespace

RelationReport check_relations(const WeightModule& V, const OperatorFamily& fam) {
  RelationReport rep;
  const Datum& D = V.datum();
  const auto& C = D.cartan();
  const int n = D.rank();
  const int H = V.height_bound();
  for (const auto& nu : V.depths()) {
    if (V.dim(nu) == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (height(nu) + 1 > H) {
          ++rep.boundary_skipped;
          continue;
        }
        FieldMatrix lhs = chain(V, fam, {{false, j}, {true, i}}, nu);
        FieldMatrix other = chain(V, fam, {{true, i}, {false, j}}, nu);
        RationalFn s = fam.coefficient(PiScalar::monomial(C.parity(i) * C.parity(j), 0));
        lhs = lhs - scaled(other, s);
        if (i == j) lhs = lhs - scaled(identity_matrix(V.dim(nu)), fam.commutator_value(i, nu));
        rep.checks.push_back({"commutator", {i, j}, nu, is_zero(lhs), ""});
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        int b = C.b(i, j);
        Weight shift = C.unit(j);
        shift[static_cast<std::size_t>(i)] += b;
        // E-Serre lands at nu - (b i + j); skip when that block is absent.
        Weight low = nu - shift;
        if (nonnegative(low) && V.dim(low) > 0) {
          FieldMatrix acc(V.dim(low), V.dim(nu));
          for (int k = 0; k <= b; ++k)
            acc = acc + scaled(chain(V, fam, serre_steps(true, i, j, b, k), nu), fam.coefficient(serre_coefficient(C, i, j, k)));
          rep.checks.push_back({"serre-E", {i, j}, nu, is_zero(acc), ""});
        }
        if (height(nu) + b + 1 > H) {
          ++rep.boundary_skipped;
          continue;
        }
        Weight high = nu + shift;
        if (V.dim(high) == 0) continue;
        FieldMatrix acc(V.dim(high), V.dim(nu));
        for (int k = 0; k <= b; ++k)
          acc = acc + scaled(chain(V, fam, serre_steps(false, i, j, b, k), nu), fam.coefficient(serre_coefficient(C, i, j, k)));
        rep.checks.push_back({"serre-F", {i, j}, nu, is_zero(acc), ""});
      }
  }
  return rep;
}

RelationReport verify_modified_twistor(const WeightModule& V, bool mutate) {
  OperatorFamily fam = modified_twistor_family(V, mutate);
  RelationReport rep = check_relations(V, fam);
  const Datum& D = V.datum();
  const auto& C = D.cartan();
  const int n = D.rank();
  const int H = V.height_bound();
  const RationalFn one(1);

  // Four applications of the twistor fix every generator and every scalar.
  for (int i = 0; i < n; ++i) {
    bool ok = true;
    for (const auto& nu : V.depths()) {
      RationalFn e = fam.e_factor(i, nu), f = fam.f_factor(i, nu);
      ok = ok && e * e * e * e == one && f * f * f * f == one;
    }
    for (int k = -4; k <= 4; ++k) {
      PiScalar s = qinteger_signed(k, C.d(i)) + PiScalar::monomial(k, k);
      ok = ok && twist(twist(twist(twist(s)))) == s;
    }
    rep.checks.push_back({"order-4", {i}, Weight(static_cast<std::size_t>(n), 0), ok, ""});
  }

  // Divided powers go to t-power multiples of themselves.
  for (int i = 0; i < n; ++i)
    for (int m = 2; m <= 4; ++m)
      for (const auto& nu : V.depths()) {
        if (V.dim(nu) == 0) continue;
        for (bool raise : {true, false}) {
          if (!raise && height(nu) + m > H) continue;
          std::vector<Step> steps(static_cast<std::size_t>(m), Step{raise, i});
          Weight end = shifted(nu, i, raise ? -m : m);
          if (!V.in_range(end) || V.dim(end) == 0) continue;
          PiScalar fact = qfactorial(m, C.d(i));
          FieldMatrix twisted = scaled(chain(V, fam, steps, nu), V.scalar(twist(fact)).inverse());
          FieldMatrix plain = scaled(chain(V, untwisted_family(V), steps, nu), V.scalar(fact).inverse());
          bool ok = false;
          std::string found;
          for (int e = 0; e < 4 && !ok; ++e)
            if (twisted == scaled(plain, t_pow(e))) {
              ok = true;
              found = "t^" + std::to_string(e);
            }
          rep.checks.push_back({raise ? "divided-power-E" : "divided-power-F", {i, m}, nu, ok, found});
        }
      }
  return rep;
}

RelationReport verify_hat_twistor(const WeightModule& V, UpsilonSign sign, bool mutate) {
  OperatorFamily fam = hat_twistor_family(V, sign, mutate);
  RelationReport rep = check_relations(V, fam);
  const Datum& D = V.datum();
  const auto& root = D.root();
  const int n = D.rank();
  const int sgn = pi_sign(V.component());
  auto pi_pow = [&](long long e) { return RationalFn((e % 2 != 0 && sgn < 0) ? -1 : 1); };
  auto unit_y = [&](int k) {
    LatticeVec y(static_cast<std::size_t>(root.rank_y), 0);
    y[static_cast<std::size_t>(k)] = 1;
    return y;
  };
  // Diagonal images: K^_y = T_{-y} K_y, J^_y = T_y^2 J_y.
  auto k_hat = [&](const LatticeVec& y, const Weight& nu) {
    long long a = V.pair_y(y, nu);
    return t_pow(-a) * RationalFn(LaurentPoly::monomial(1, static_cast<int>(a)));
  };
  auto j_hat = [&](const LatticeVec& y, const Weight& nu) {
    long long a = V.pair_y(y, nu);
    return t_pow(2 * a) * pi_pow(a);
  };
  for (const auto& nu : V.depths()) {
    if (V.dim(nu) == 0) continue;
    bool jk = true, tr = true;
    for (int a = 0; a < root.rank_y; ++a) {
      LatticeVec ya = unit_y(a);
      jk = jk && j_hat(ya, nu) * j_hat(ya, nu) == RationalFn(1);
      for (int b = 0; b < root.rank_y; ++b) {
        LatticeVec yb = unit_y(b), yab = ya;
        for (std::size_t k = 0; k < yab.size(); ++k) yab[k] += yb[k];
        jk = jk && k_hat(ya, nu) * k_hat(yb, nu) == k_hat(yab, nu) && j_hat(ya, nu) * j_hat(yb, nu) == j_hat(yab, nu);
        tr = tr && t_pow(V.pair_y(ya, nu)) * t_pow(V.pair_y(yb, nu)) == t_pow(V.pair_y(yab, nu));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Weight ij = D.cartan().unit(i) + D.cartan().unit(j);
        tr = tr && t_pow(upsilon_exponent(V, sign, D.cartan().unit(i), nu) + upsilon_exponent(V, sign, D.cartan().unit(j), nu)) ==
                       t_pow(upsilon_exponent(V, sign, ij, nu));
      }
    rep.checks.push_back({"JK", {}, nu, jk, ""});
    rep.checks.push_back({"T-relations", {}, nu, tr, ""});
    // Weight relations: X^_y E^_i = c(y,i) E^_i X^_y with twisted c.
    for (int a = 0; a < root.rank_y; ++a) {
      LatticeVec y = unit_y(a);
      for (int i = 0; i < n; ++i) {
        long long yi = root.pair(y, root.emb_x[static_cast<std::size_t>(i)]);
        int e = static_cast<int>(yi);
        bool jw = true, kw = true;
        if (V.in_range(shifted(nu, i, -1))) {
          Weight up = shifted(nu, i, -1);
          jw = jw && j_hat(y, up) == fam.coefficient(PiScalar::monomial(e, 0)) * j_hat(y, nu);
          kw = kw && k_hat(y, up) == fam.coefficient(PiScalar::monomial(0, e)) * k_hat(y, nu);
        }
        if (V.in_range(shifted(nu, i, 1))) {
          Weight dn = shifted(nu, i, 1);
          jw = jw && j_hat(y, dn) == fam.coefficient(PiScalar::monomial(-e, 0)) * j_hat(y, nu);
          kw = kw && k_hat(y, dn) == fam.coefficient(PiScalar::monomial(0, -e)) * k_hat(y, nu);
        }
        rep.checks.push_back({"J-weight", {a, i}, nu, jw, ""});
        rep.checks.push_back({"K-weight", {a, i}, nu, kw, ""});
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------- clubsuit

int clubsuit(const Datum& D, int i, int j, int k) {
  int b = D.cartan().b(i, j);
  return k * (b - k) * D.cartan().d(i) + (b - k) * D.phi(i, j) + k * D.phi(j, i);
}

int clubsuit_correction(const Datum& D, int i, int j, bool literal) {
  const auto& C = D.cartan();
  if (i < j) return 2 * C.b(i, j) * C.parity(i) * C.parity(j);
  int a = C.a(i, j);
  int choose = a * (a - 1) / 2;
  return literal ? -C.d(i) * choose : -C.d(i) * 2 * choose;
}

bool clubsuit_congruence(const Datum& D, int i, int j, int k, bool literal) {
  const auto& C = D.cartan();
  int rhs = k * (k - 1) * C.d(i) + 2 * k * C.parity(i) * C.parity(j) + clubsuit_correction(D, i, j, literal);
  int diff = clubsuit(D, i, j, k) - rhs;
  return ((diff % 4) + 4) % 4 == 0;
}

// ---------------------------------------------------------------- chi

bool verify_chi_diagram(const WeightModule& V, const Word& w, UpsilonSign sign) {
  const Datum& D = V.datum();
  const int n = D.rank();
  Weight nu = weight_of(w, n);
  FreeElement image = twistor_free(D, FreeElement::monomial(w));
  OperatorFamily plain = untwisted_family(V);
  std::vector<Step> word_steps;
  for (auto it = w.rbegin(); it != w.rend(); ++it) word_steps.push_back({false, *it});
  for (const auto& beta : V.depths()) {
    if (V.dim(beta) == 0 || height(beta) + height(nu) > V.height_bound()) continue;
    // chi(Psi(theta_w)) = sum_u c_u F_u Upsilon_nu
    Weight end = beta + nu;
    FieldMatrix lhs(V.dim(end), V.dim(beta));
    RationalFn ups = t_pow(upsilon_exponent(V, sign, nu, beta));
    for (const auto& [u, c] : image.terms()) {
      std::vector<Step> steps;
      for (auto it = u.rbegin(); it != u.rend(); ++it) steps.push_back({false, *it});
      lhs = lhs + scaled(chain(V, plain, steps, beta), V.scalar(c) * ups);
    }
    // Psi^(F_{w_1} ... F_{w_n}) = (F_{w_1} Upsilon_{w_1}) ... (F_{w_n} Upsilon_{w_n})
    Weight cur = beta;
    FieldMatrix rhs = identity_matrix(V.dim(beta));
    for (const auto& s : word_steps) {
      RationalFn f = t_pow(upsilon_exponent(V, sign, D.cartan().unit(s.i), cur));
      rhs = matmul(scaled(V.F(s.i, cur), f), rhs);
      cur = shifted(cur, s.i, 1);
    }
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace cqg
