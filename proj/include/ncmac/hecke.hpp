#pragma once

// Generic Hecke algebra H_n(q) in the T-basis, (T_i - q)(T_i + 1) = 0:
// equivariant traces, Bruhat interval sums and their Lascoux factorization,
// Yang-Baxter elements, the Abreu-Nigro formula and Lee's relations.

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncmac/chromatic.hpp"
#include "ncmac/coeff.hpp"
#include "ncmac/combinat.hpp"
#include "ncmac/macdonald.hpp"
#include "ncmac/modp.hpp"
#include "ncmac/sym.hpp"

namespace ncmac {

struct ReductionDiverged : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotNonsingular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct Not312Avoiding : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotAdmissible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotRectangle : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct ZeroLeadingCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- permutation tables ----

// Permutations of S_n ranked in lexicographic order (= Lehmer code order).
struct PermTable {
  int n = 0;
  std::vector<Perm> perms;
  std::vector<int> len;
  std::vector<int> rmul_, lmul_;  // rank of w s_i and s_i w, index r*(n-1)+(i-1)

  int rank(const Perm& w) const {
    auto c = lehmer_code(w);
    long long r = 0;
    for (int i = 0; i < n; ++i) r = r * (n - i) + c[i];
    return static_cast<int>(r);
  }
  int size() const { return static_cast<int>(perms.size()); }
  int rmul(int r, int i) const { return rmul_[static_cast<std::size_t>(r) * (n - 1) + (i - 1)]; }
  int lmul(int r, int i) const { return lmul_[static_cast<std::size_t>(r) * (n - 1) + (i - 1)]; }
  // w s_i > w, i.e. w(i) < w(i+1).
  bool right_ascent(int r, int i) const { return perms[r][i - 1] < perms[r][i]; }
  // s_i w > w, i.e. i appears before i+1 in w.
  bool left_ascent(int r, int i) const { return len[lmul(r, i)] > len[r]; }
};

inline const PermTable& perm_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PermTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto t = std::make_unique<PermTable>();
    t->n = n;
    t->perms = all_perms(n);
    for (const auto& w : t->perms) t->len.push_back(length(w));
    if (n > 1) {
      t->rmul_.resize(t->perms.size() * (n - 1));
      t->lmul_.resize(t->perms.size() * (n - 1));
      for (int r = 0; r < t->size(); ++r)
        for (int i = 1; i < n; ++i) {
          t->rmul_[static_cast<std::size_t>(r) * (n - 1) + i - 1] = t->rank(rmul_s(t->perms[r], i));
          t->lmul_[static_cast<std::size_t>(r) * (n - 1) + i - 1] = t->rank(lmul_s(t->perms[r], i));
        }
    }
    slot = std::move(t);
  }
  return *slot;
}

// ---- Hecke elements ----

template <class C>
class HeckeElemT {
 public:
  HeckeElemT(int n, C q) : tab_(&perm_table(n)), q_(q), c_(tab_->size(), C{}) {}
  static HeckeElemT unit(int n, C q) {
    HeckeElemT x(n, q);
    x.c_[0] = C(1);
    return x;
  }
  static HeckeElemT basis(const Perm& w, C q) {
    HeckeElemT x(static_cast<int>(w.size()), q);
    x.c_[x.tab_->rank(w)] = C(1);
    return x;
  }

  int n() const { return tab_->n; }
  const C& q() const { return q_; }
  const PermTable& table() const { return *tab_; }
  const std::vector<C>& dense() const { return c_; }
  C coeff(const Perm& w) const { return c_[tab_->rank(w)]; }
  void add_term(const Perm& w, const C& c) {
    auto& x = c_[tab_->rank(w)];
    x = x + c;
  }
  void add_rank(int r, const C& c) { c_[r] = c_[r] + c; }
  std::vector<std::pair<Perm, C>> terms() const {
    std::vector<std::pair<Perm, C>> out;
    for (int r = 0; r < tab_->size(); ++r)
      if (!Coeff<C>::is_zero(c_[r])) out.emplace_back(tab_->perms[r], c_[r]);
    return out;
  }
  std::size_t size() const {
    std::size_t k = 0;
    for (const auto& x : c_) k += !Coeff<C>::is_zero(x);
    return k;
  }

  HeckeElemT& operator+=(const HeckeElemT& o) {
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] = c_[r] + o.c_[r];
    return *this;
  }
  HeckeElemT& operator-=(const HeckeElemT& o) {
    for (std::size_t r = 0; r < c_.size(); ++r) c_[r] = c_[r] - o.c_[r];
    return *this;
  }
  friend HeckeElemT operator+(HeckeElemT a, const HeckeElemT& b) { return a += b; }
  friend HeckeElemT operator-(HeckeElemT a, const HeckeElemT& b) { return a -= b; }
  friend HeckeElemT operator*(const C& k, HeckeElemT x) {
    for (auto& v : x.c_)
      if (!Coeff<C>::is_zero(v)) v = k * v;
    return x;
  }
  friend bool operator==(const HeckeElemT& a, const HeckeElemT& b) {
    if (a.n() != b.n()) return false;
    for (std::size_t r = 0; r < a.c_.size(); ++r)
      if (!Coeff<C>::is_zero(a.c_[r] - b.c_[r])) return false;
    return true;
  }

  // x (a T_i + b)
  HeckeElemT rmul_factor(int i, const C& a, const C& b) const {
    HeckeElemT r(n(), q_);
    const C one(1);
    for (int w = 0; w < tab_->size(); ++w) {
      const C& c = c_[w];
      if (Coeff<C>::is_zero(c)) continue;
      int ws = tab_->rmul(w, i);
      if (!Coeff<C>::is_zero(b)) r.c_[w] = r.c_[w] + b * c;
      if (Coeff<C>::is_zero(a)) continue;
      C ac = a * c;
      if (tab_->right_ascent(w, i)) {
        r.c_[ws] = r.c_[ws] + ac;
      } else {
        r.c_[w] = r.c_[w] + (q_ - one) * ac;
        r.c_[ws] = r.c_[ws] + q_ * ac;
      }
    }
    return r;
  }
  // (a T_i + b) x
  HeckeElemT lmul_factor(int i, const C& a, const C& b) const {
    HeckeElemT r(n(), q_);
    const C one(1);
    for (int w = 0; w < tab_->size(); ++w) {
      const C& c = c_[w];
      if (Coeff<C>::is_zero(c)) continue;
      int sw = tab_->lmul(w, i);
      if (!Coeff<C>::is_zero(b)) r.c_[w] = r.c_[w] + b * c;
      if (Coeff<C>::is_zero(a)) continue;
      C ac = a * c;
      if (tab_->left_ascent(w, i)) {
        r.c_[sw] = r.c_[sw] + ac;
      } else {
        r.c_[w] = r.c_[w] + (q_ - one) * ac;
        r.c_[sw] = r.c_[sw] + q_ * ac;
      }
    }
    return r;
  }
  HeckeElemT rmul_T(int i) const { return rmul_factor(i, C(1), C{}); }

 private:
  const PermTable* tab_;
  C q_;
  std::vector<C> c_;
};

using HeckeElem = HeckeElemT<LaurentPoly>;

inline HeckeElem T_elem(const Perm& w) { return HeckeElem::basis(w, LaurentPoly::q()); }

template <class C>
HeckeElemT<C> hecke_mul(const HeckeElemT<C>& a, const HeckeElemT<C>& b) {
  if (a.n() != b.n()) throw std::invalid_argument("hecke_mul: different n");
  HeckeElemT<C> r(a.n(), a.q());
  // a * T_v for each term of b, along a reduced word of v.
  for (const auto& [v, c] : b.terms()) {
    HeckeElemT<C> x = a;
    for (int i : reduced_word(v)) x = x.rmul_T(i);
    r += c * x;
  }
  return r;
}

// ---- equivariant traces ----

// Traces of all T_w by cyclic-shift reduction: within a class of elements
// connected by length-preserving conjugations by simple reflections the
// trace is constant; minimal-length elements give theta_{cycle type}, and
// otherwise tr T_x = (q-1) tr T_{sx} + q tr T_{sxs} when l(sxs) = l(x) - 2.
template <class C>
struct TraceTable {
  int n;
  C q;
  std::vector<Partition> parts;
  std::map<Partition, int> part_index;
  std::vector<int> cls;               // class id per rank
  std::vector<std::vector<C>> coord;  // theta coordinates per class

  TraceTable(int n_, C q_) : n(n_), q(q_), parts(partitions(n_)) {
    for (std::size_t i = 0; i < parts.size(); ++i) part_index[parts[i]] = static_cast<int>(i);
    const PermTable& T = perm_table(n);
    int N = T.size();
    cls.assign(N, -1);
    std::vector<int> order(N);
    for (int r = 0; r < N; ++r) order[r] = r;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return T.len[a] < T.len[b]; });
    for (int w : order) {
      if (cls[w] >= 0) continue;
      int L = T.len[w];
      std::vector<int> members{w};
      std::vector<char> seen(N, 0);
      seen[w] = 1;
      std::optional<std::pair<int, int>> down;
      for (std::size_t k = 0; k < members.size(); ++k) {
        int x = members[k];
        for (int i = 1; i < n; ++i) {
          int y = T.lmul(T.rmul(x, i), i);
          if (T.len[y] < L && !down) down = {x, i};
          if (T.len[y] == L && !seen[y]) {
            seen[y] = 1;
            members.push_back(y);
          }
        }
      }
      std::vector<C> v(parts.size(), C{});
      Partition ct = cycle_type(T.perms[w]);
      if (L == n - static_cast<int>(ct.size())) {
        v[part_index.at(ct)] = C(1);
      } else {
        if (!down) throw ReductionDiverged("no length-decreasing conjugation for " + seq_str(T.perms[w]));
        auto [x, i] = *down;
        int sx = T.lmul(x, i), sxs = T.rmul(sx, i);
        if (T.len[sxs] != L - 2 || cls[sx] < 0 || cls[sxs] < 0) throw ReductionDiverged("reduction order violated");
        const auto &a = coord[cls[sx]], &b = coord[cls[sxs]];
        const C one(1);
        for (std::size_t j = 0; j < parts.size(); ++j) v[j] = (q - one) * a[j] + q * b[j];
      }
      int id = static_cast<int>(coord.size());
      coord.push_back(std::move(v));
      for (int m : members) cls[m] = id;
    }
  }

  // Theta coordinates of the trace of an element.
  std::vector<C> trace(const HeckeElemT<C>& x) const {
    std::vector<C> per_class(coord.size(), C{});
    const auto& d = x.dense();
    for (std::size_t r = 0; r < d.size(); ++r)
      if (!Coeff<C>::is_zero(d[r])) per_class[cls[r]] = per_class[cls[r]] + d[r];
    std::vector<C> out(parts.size(), C{});
    for (std::size_t k = 0; k < coord.size(); ++k) {
      if (Coeff<C>::is_zero(per_class[k])) continue;
      for (std::size_t j = 0; j < parts.size(); ++j)
        if (!Coeff<C>::is_zero(coord[k][j])) out[j] = out[j] + per_class[k] * coord[k][j];
    }
    return out;
  }
};

inline const TraceTable<LaurentPoly>& trace_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<TraceTable<LaurentPoly>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<TraceTable<LaurentPoly>>(n, LaurentPoly::q());
  return *slot;
}

inline ThetaExpr<LaurentPoly> to_theta_expr(const std::vector<LaurentPoly>& v, const std::vector<Partition>& parts) {
  ThetaExpr<LaurentPoly> e;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero()) e[parts[j]] = v[j];
  return e;
}

inline ThetaExpr<LaurentPoly> trace_T(const Perm& w) {
  const auto& tt = trace_table(static_cast<int>(w.size()));
  return to_theta_expr(tt.coord[tt.cls[perm_table(tt.n).rank(w)]], tt.parts);
}

inline ThetaExpr<LaurentPoly> trace_word(int n, const std::vector<int>& word) {
  HeckeElem x = HeckeElem::unit(n, LaurentPoly::q());
  for (int i : word) x = x.rmul_T(i);
  return to_theta_expr(trace_table(n).trace(x), trace_table(n).parts);
}

inline ThetaExpr<LaurentPoly> trace_theta(const HeckeElem& x) { return to_theta_expr(trace_table(x.n()).trace(x), trace_table(x.n()).parts); }

inline Sym trace_elem(const HeckeElem& x, Basis target = Basis::s) { return theta_to_sym(trace_theta(x), target); }

// ---- Bruhat intervals and Lascoux factorization ----

inline HeckeElem interval_sum(const Perm& w) {
  HeckeElem x(static_cast<int>(w.size()), LaurentPoly::q());
  for (const auto& v : bruhat_interval(w)) x.add_term(v, LaurentPoly(1));
  return x;
}

// T_i + 1/[m]
struct LFactor {
  int i, m;
  friend bool operator==(const LFactor&, const LFactor&) = default;
};

inline Perm remove_max(const Perm& w) {
  Perm r;
  for (int x : w)
    if (x != static_cast<int>(w.size())) r.push_back(x);
  return r;
}

// k with w(k) = n > w(k+1) > ... > w(n), if any.
inline std::optional<int> max_descending_tail(const Perm& w) {
  int n = static_cast<int>(w.size());
  int k = static_cast<int>(std::find(w.begin(), w.end(), n) - w.begin()) + 1;
  for (int p = k; p < n; ++p)
    if (w[p - 1] < w[p]) return std::nullopt;
  return k;
}

inline std::vector<LFactor> lascoux_factorization(const Perm& w) {
  int n = static_cast<int>(w.size());
  if (n <= 1) return {};
  if (auto k = max_descending_tail(w)) {
    auto f = lascoux_factorization(remove_max(w));
    for (int j = n - 1; j >= *k; --j) f.push_back({j, j - *k + 1});
    return f;
  }
  Perm wi = inverse(w);
  if (auto k = max_descending_tail(wi)) {
    std::vector<LFactor> f;
    for (int j = *k; j <= n - 1; ++j) f.push_back({j, j - *k + 1});
    auto rest = lascoux_factorization(inverse(remove_max(wi)));
    f.insert(f.end(), rest.begin(), rest.end());
    return f;
  }
  throw NotNonsingular(seq_str(w) + " is singular");
}

inline bool is_nonsingular(const Perm& w) {
  try {
    lascoux_factorization(w);
    return true;
  } catch (const NotNonsingular&) {
    return false;
  }
}

// prod ([m] T_i + 1) = (prod [m]) * prod (T_i + 1/[m]); returns the product and the scalar.
inline std::pair<HeckeElem, LaurentPoly> expand_scaled(int n, const std::vector<LFactor>& fs) {
  HeckeElem x = HeckeElem::unit(n, LaurentPoly::q());
  LaurentPoly D(1);
  for (const auto& f : fs) {
    x = x.rmul_factor(f.i, q_integer(f.m), LaurentPoly(1));
    D *= q_integer(f.m);
  }
  return {x, D};
}

inline std::vector<LFactor> upsilon_factors(int n) {
  std::vector<LFactor> f;
  for (int i = 1; i < n; ++i) f.push_back({i, i});
  return f;
}

inline HeckeElemT<RatFunc> upsilon(int n) {
  HeckeElemT<RatFunc> x = HeckeElemT<RatFunc>::unit(n, RatFunc(LaurentPoly::q()));
  for (const auto& f : upsilon_factors(n)) x = x.rmul_factor(f.i, RatFunc(1), RatFunc(LaurentPoly(1), q_integer(f.m)));
  return x;
}

// ---- Yang-Baxter elements ----

using SpectralVector = std::vector<LaurentPoly>;

// Reduced word of w from its first or last right descent at each step.
inline std::vector<int> reduced_word_by(Perm w, bool last) {
  std::vector<int> word;
  while (true) {
    auto d = descents(w);
    if (d.empty()) break;
    int i = last ? d.back() : d.front();
    word.push_back(i);
    w = rmul_s(w, i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline HeckeElem yb_element(const Perm& sigma, const SpectralVector& u, const std::vector<int>& word) {
  int n = static_cast<int>(sigma.size());
  if (static_cast<int>(u.size()) != n) throw std::invalid_argument("spectral vector length");
  for (const auto& x : u)
    if (!x.is_monomial()) throw std::invalid_argument("spectral parameters must be monomials");
  const LaurentPoly q = LaurentPoly::q(), one(1);
  HeckeElem y = HeckeElem::unit(n, q);
  Perm cur = identity_perm(n);
  for (int i : word) {
    if (cur[i - 1] > cur[i]) throw std::invalid_argument("word is not reduced");
    const LaurentPoly &x = u[cur[i - 1] - 1], &z = u[cur[i] - 1];
    y = y.rmul_factor(i, z * x.pow(-1) - one, q - one);
    cur = rmul_s(cur, i);
  }
  if (cur != sigma) throw std::invalid_argument("word does not spell the permutation");
  return y;
}

inline HeckeElem yb_element(const Perm& sigma, const SpectralVector& u) { return yb_element(sigma, u, reduced_word(sigma)); }

// From theta coordinates a of a trace to sum a_lambda (q-1)^{n-l(lambda)} e_lambda,
// the inverse (1-q)-transform up to the scalar (-1)^n (q-1)^n.
inline Sym theta_to_inverse_transform(const std::vector<LaurentPoly>& a, const std::vector<Partition>& parts, int n) {
  Sym r(Basis::e);
  const LaurentPoly qm1 = LaurentPoly::q() - LaurentPoly(1);
  for (std::size_t j = 0; j < parts.size(); ++j)
    if (!a[j].is_zero()) r.add_term(parts[j], a[j] * qm1.pow(n - static_cast<int>(parts[j].size())));
  return convert(r, Basis::s);
}

inline Sym normalize_by_sn(const Sym& f, int n) {
  LaurentPoly c = f.coeff({n});
  if (c.is_zero()) throw ZeroLeadingCoefficient("coefficient of s_n vanishes");
  Sym r(Basis::s);
  for (const auto& [lam, k] : f.terms()) {
    try {
      r.add_term(lam, exact_div(k, c));
    } catch (const NonExactDivision&) {
      throw NonPolynomialResult("normalized coefficient of s_" + seq_str(lam) + " is not a Laurent polynomial");
    }
  }
  return r;
}

// Inverse (1-q)-transform of tr x, normalized so that s_n has coefficient 1.
inline Sym normalized_transform(const HeckeElem& x) {
  int n = x.n();
  const auto& tt = trace_table(n);
  return normalize_by_sn(theta_to_inverse_transform(tt.trace(x), tt.parts, n), n);
}

inline Sym yb_macdonald(const Perm& sigma, const SpectralVector& u) {
  check_size(static_cast<int>(sigma.size()));
  return normalized_transform(yb_element(sigma, u));
}

// ---- sigma_mu and spectral vectors ----

enum class SpectralMode { SingleT, Ratio, Direct };

// Cells labelled 1..n bottom row first, left to right.
inline std::vector<Cell> filling_cells(const Partition& mu) {
  std::vector<Cell> cs;
  for (int r = 1; r <= static_cast<int>(mu.size()); ++r)
    for (int c = 1; c <= mu[r - 1]; ++c) cs.push_back({r, c});
  return cs;
}

inline Perm sigma_mu(const Partition& mu) {
  auto cs = filling_cells(mu);
  int r = static_cast<int>(mu.size());
  auto label = [&](int row, int col) {
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (cs[k].row == row && cs[k].col == col) return static_cast<int>(k) + 1;
    return 0;
  };
  auto above = [&](int row, int col) { return row < r && mu[row] >= col; };
  Perm s;
  for (int row = r; row >= 1; --row)
    for (int col = mu[row - 1]; col >= 1; --col)
      if (!above(row, col)) s.push_back(label(row, col));
  for (int row = 1; row <= r; ++row)
    for (int col = mu[row - 1]; col >= 1; --col)
      if (above(row, col)) s.push_back(label(row, col));
  return s;
}

// Row factor of the spectral parameter of a cell in row j of an r-row diagram.
inline LaurentPoly row_parameter(int j, int r, SpectralMode mode) {
  switch (mode) {
    case SpectralMode::SingleT:
      return LaurentPoly::t(j - 1);
    case SpectralMode::Direct:
      return t_param(j - 1, true);
    case SpectralMode::Ratio:
      return t_param(r - 1, true) * t_param(r - j, true).pow(-1);
  }
  return LaurentPoly(1);
}

inline SpectralVector v_mu(const Partition& mu, SpectralMode mode = SpectralMode::SingleT) {
  SpectralVector v;
  int r = static_cast<int>(mu.size());
  for (const auto& c : filling_cells(mu)) v.push_back(LaurentPoly::q(c.col - 1) * row_parameter(c.row, r, mode));
  return v;
}

inline bool is_rectangle(const Partition& mu) { return !mu.empty() && std::all_of(mu.begin(), mu.end(), [&](int x) { return x == mu[0]; }); }

inline std::pair<Perm, SpectralVector> sigma_v_mu(const Partition& mu, bool rectangle_multi_t = false) {
  if (rectangle_multi_t && !is_rectangle(mu)) throw NotRectangle(seq_str(mu) + " is not a rectangle");
  return {sigma_mu(mu), v_mu(mu, rectangle_multi_t ? SpectralMode::Ratio : SpectralMode::SingleT)};
}

// Scalar s with f = s g, if one exists.
inline std::optional<RatFunc> proportionality(const Sym& f, const Sym& g) {
  Sym fs = convert(f, Basis::s), gs = convert(g, Basis::s);
  if (gs.is_zero()) return std::nullopt;
  const auto& [lam0, g0] = *gs.terms().begin();
  RatFunc s(fs.coeff(lam0), g0);
  for (const auto& [lam, c] : gs.terms())
    if (!(RatFunc(fs.coeff(lam)) == s * RatFunc(c))) return std::nullopt;
  for (const auto& [lam, c] : fs.terms())
    if (gs.coeff(lam).is_zero()) return std::nullopt;
  return s;
}

// ---- Abreu-Nigro ----

inline Perm forget_cycles(const Perm& v) {
  int n = static_cast<int>(v.size());
  std::vector<char> seen(n + 1, 0);
  Perm out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int x = s;
    while (!seen[x]) {
      seen[x] = 1;
      out.push_back(x);
      x = v[x - 1];
    }
  }
  return out;
}

inline int h_inversions(const Perm& vp, const std::vector<int>& h) {
  int k = 0, n = static_cast<int>(vp.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vp[j] < vp[i] && vp[i] <= h[vp[j] - 1]) ++k;
  return k;
}

inline ThetaExpr<LaurentPoly> abreu_nigro(const Perm& w) {
  if (!avoids(w, {3, 1, 2})) throw Not312Avoiding(seq_str(w) + " contains 312");
  auto c = lehmer_code(w);
  int n = static_cast<int>(w.size());
  std::vector<int> h(n);
  for (int i = 0; i < n; ++i) h[i] = c[i] + i + 1;
  ThetaExpr<LaurentPoly> e;
  for (const auto& v : all_perms(n)) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = v[i] <= h[i];
    if (!ok) continue;
    auto lam = cycle_type(v);
    e[lam] = e[lam] + LaurentPoly::q(h_inversions(forget_cycles(v), h));
    if (e[lam].is_zero()) e.erase(lam);
  }
  return e;
}

inline DyckGraph graph_of_312_avoider(const Perm& w) { return DyckGraph::from_code(lehmer_code(w)); }

// ---- Lee's relations ----

inline bool admissible(const std::vector<int>& a, int i, int j) {
  int k = static_cast<int>(a.size());
  if (i < 1 || j > k || i >= j) return false;
  auto A = [&](int x) { return a[x - 1]; };
  return j == i + A(i) && (i == 1 || A(i - 1) <= A(i) - 1) && A(i) >= 2 && A(j - 1) == 1 + A(j);
}

struct LeeTriple {
  Perm sigma, sigma1, sigma2;  // sigma, sigma', sigma''
  bool codes_ok = false, avoid_ok = false, identity_ok = false;
};

inline LeeTriple lee_triple(const std::vector<int>& a, int i, int j) {
  if (!admissible(a, i, j)) throw NotAdmissible("edge (" + std::to_string(i) + "," + std::to_string(j) + ") for code " + seq_str(a));
  LeeTriple L;
  L.sigma = code_to_perm(a);
  L.sigma1 = lmul_s(L.sigma, j - 1);
  L.sigma2 = L.sigma1;
  auto pos = std::find(L.sigma2.begin(), L.sigma2.end(), j - 1);
  auto it = std::find_if(pos + 1, L.sigma2.end(), [&](int x) { return x < j - 1; });
  if (it == L.sigma2.end()) throw std::logic_error("no smaller value to the right of j-1");
  std::iter_swap(pos, it);
  auto a1 = a, a2 = a;
  a1[i - 1] -= 1;
  a2[i - 1] -= 2;
  L.codes_ok = lehmer_code(L.sigma1) == a1 && lehmer_code(L.sigma2) == a2;
  L.avoid_ok = avoids(L.sigma, {3, 1, 2}) && avoids(L.sigma1, {3, 1, 2}) && avoids(L.sigma2, {3, 1, 2});
  int n = static_cast<int>(a.size());
  HeckeElem cs = interval_sum(lmul_s(identity_perm(n), j - 1));
  HeckeElem lhs = hecke_mul(cs, interval_sum(L.sigma1));
  HeckeElem rhs = interval_sum(L.sigma) + LaurentPoly::q() * interval_sum(L.sigma2);
  L.identity_ok = lhs == rhs;
  return L;
}

inline std::vector<std::pair<int, int>> admissible_edges(const std::vector<int>& a) {
  std::vector<std::pair<int, int>> out;
  int k = static_cast<int>(a.size());
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      if (admissible(a, i, j)) out.push_back({i, j});
  return out;
}

inline std::vector<Perm> avoiders_312(int n) {
  std::vector<Perm> out;
  for (const auto& w : all_perms(n))
    if (avoids(w, {3, 1, 2})) out.push_back(w);
  return out;
}

// Relations (q+1) F(sigma') = F(sigma) + q F(sigma'') applicable at the graph of
// lam: the first local move from admissible edges of its code, the second from
// admissible edges of the reversed graph, mapped back. Each is checked on
// omega X_G and on traces of interval sums.
struct ModularLine {
  Perm sigma, sigma1, sigma2;
  bool mirror = false;
  bool chromatic_ok = false, trace_ok = false;
};

inline Perm perm_of_graph(const DyckGraph& g) { return code_to_perm(g.code()); }

inline std::vector<ModularLine> modular_law_check(const Partition& lam, int n) {
  std::vector<ModularLine> out;
  const LaurentPoly q = LaurentPoly::q(), one(1);
  auto chrom = [&](const Perm& w) { return omega(X_commutative(graph_of_312_avoider(w), q)); };
  auto tr = [&](const Perm& w) { return trace_elem(interval_sum(w)); };
  DyckGraph g = dyck_from_partition(lam, n);
  for (bool mirror : {false, true}) {
    DyckGraph base = mirror ? g.reversed() : g;
    auto a = base.code();
    for (auto [i, j] : admissible_edges(a)) {
      LeeTriple L = lee_triple(a, i, j);
      ModularLine m{L.sigma, L.sigma1, L.sigma2, mirror};
      if (mirror)
        for (Perm* p : {&m.sigma, &m.sigma1, &m.sigma2}) *p = perm_of_graph(graph_of_312_avoider(*p).reversed());
      m.chromatic_ok = (q + one) * chrom(m.sigma1) == chrom(m.sigma) + q * chrom(m.sigma2);
      m.trace_ok = (q + one) * tr(m.sigma1) == tr(m.sigma) + q * tr(m.sigma2);
      out.push_back(m);
    }
  }
  return out;
}

// Every Dyck graph on n vertices, as partitions in the staircase.
inline std::vector<ModularLine> modular_law_check(int n) {
  std::vector<ModularLine> out;
  for (const auto& g : all_dyck_graphs(n)) {
    auto part = modular_law_check(partition_of_dyck(g), n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// Proportionality of tr Y_{sigma_mu}(v_mu) for a rectangle to the (1-q)-transform
// of the multi-t tilde H, with and without omega.
struct RectangleReport {
  Partition mu;
  std::optional<RatFunc> plain, with_omega;
};

inline RectangleReport rectangle_report(const Partition& mu) {
  auto [s, v] = sigma_v_mu(mu, true);
  Sym tr = trace_elem(yb_element(s, v));
  Sym f = convert(plethysm_forward(tildeH_sym(mu, true), Pleth::OneMinusQ), Basis::s);
  return {mu, proportionality(tr, f), proportionality(tr, omega(f))};
}

// ---- Yang-Baxter census (mod p filter, exact confirmation) ----

inline Fp eval_monomial(const LaurentPoly& m, const FpPoint& pt) { return eval(m, pt); }

// Theta-coordinate target b_lambda = (q-1)^{l(lambda)} [e_lambda] f at a point.
inline std::vector<Fp> theta_target(const Sym& f, const std::vector<Partition>& parts, const FpPoint& pt) {
  Sym e = convert(f, Basis::e);
  std::vector<Fp> b(parts.size());
  Fp qm1 = pt[kSlotQ] - Fp(1);
  for (std::size_t j = 0; j < parts.size(); ++j) b[j] = eval(e.coeff(parts[j]), pt) * qm1.pow(static_cast<long long>(parts[j].size()));
  return b;
}

inline bool proportional_fp(const std::vector<Fp>& a, const std::vector<Fp>& b) {
  std::size_t ref = b.size();
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!(b[j] == Fp(0))) {
      ref = j;
      break;
    }
  if (ref == b.size() || a[ref] == Fp(0)) return false;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!(a[j] * b[ref] == a[ref] * b[j])) return false;
  return true;
}

// Depth-first walk of S_n with parent(tau) = tau s_d, d the last descent of tau,
// maintaining Y_tau(u) mod p; calls visit(tau, theta coordinates).
template <class Visit>
void yb_walk_fp(int n, const SpectralVector& u, const FpPoint& pt, const TraceTable<Fp>& tt, Visit&& visit) {
  const PermTable& T = perm_table(n);
  std::vector<Fp> uv;
  for (const auto& x : u) uv.push_back(eval_monomial(x, pt));
  const Fp qv = pt[kSlotQ], one(1);
  std::function<void(int, const HeckeElemT<Fp>&)> rec = [&](int r, const HeckeElemT<Fp>& y) {
    visit(T.perms[r], tt.trace(y));
    const Perm& p = T.perms[r];
    for (int i = 1; i < n; ++i) {
      if (p[i - 1] > p[i]) continue;
      Perm tau = rmul_s(p, i);
      auto d = descents(tau);
      if (d.back() != i) continue;
      Fp a = uv[p[i] - 1] / uv[p[i - 1] - 1] - one;
      rec(T.rmul(r, i), y.rmul_factor(i, a, qv - one));
    }
  };
  rec(0, HeckeElemT<Fp>::unit(n, qv));
}

// Y_sigma(u) evaluated mod p along a reduced word.
inline HeckeElemT<Fp> yb_element_fp(const Perm& sigma, const SpectralVector& u, const FpPoint& pt) {
  int n = static_cast<int>(sigma.size());
  const Fp qv = pt[kSlotQ], one(1);
  HeckeElemT<Fp> y = HeckeElemT<Fp>::unit(n, qv);
  Perm cur = identity_perm(n);
  for (int i : reduced_word(sigma)) {
    y = y.rmul_factor(i, eval(u[cur[i] - 1], pt) / eval(u[cur[i - 1] - 1], pt) - one, qv - one);
    cur = rmul_s(cur, i);
  }
  return y;
}

// How filter hits are confirmed: exactly, or at a second independent point.
enum class Confirm { Exact, SecondPoint };

struct CensusOptions {
  std::uint64_t seed = 20240611;
  Confirm confirm = Confirm::Exact;
};

struct CensusResult {
  Partition mu;
  SpectralVector u;
  std::vector<Perm> matches;   // confirmed
  std::vector<Perm> rejected;  // passed the filter, failed confirmation
};

inline CensusResult yb_census(const Partition& mu, const SpectralVector& u, bool multi, const CensusOptions& opt = {}) {
  int n = size_of(mu);
  check_size(n);
  Sym target = tildeH_sym(mu, multi);
  FpPoint pt = random_point(opt.seed);
  TraceTable<Fp> tt(n, pt[kSlotQ]);
  std::vector<Fp> b = theta_target(target, tt.parts, pt);
  CensusResult res{mu, u, {}, {}};
  std::vector<Perm> cand;
  yb_walk_fp(n, u, pt, tt, [&](const Perm& tau, const std::vector<Fp>& a) {
    if (proportional_fp(a, b)) cand.push_back(tau);
  });
  std::sort(cand.begin(), cand.end());
  std::optional<TraceTable<Fp>> tt2;
  FpPoint pt2 = random_point(opt.seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<Fp> b2;
  if (opt.confirm == Confirm::SecondPoint && !cand.empty()) {
    tt2.emplace(n, pt2[kSlotQ]);
    b2 = theta_target(target, tt2->parts, pt2);
  }
  for (const auto& tau : cand) {
    bool ok = false;
    if (opt.confirm == Confirm::Exact) {
      try {
        ok = yb_macdonald(tau, u) == target;
      } catch (const std::exception&) {
        ok = false;
      }
    } else {
      ok = proportional_fp(tt2->trace(yb_element_fp(tau, u, pt2)), b2);
    }
    (ok ? res.matches : res.rejected).push_back(tau);
  }
  return res;
}

inline CensusResult yb_census(const Partition& mu, SpectralMode mode, const CensusOptions& opt = {}) {
  return yb_census(mu, v_mu(mu, mode), mode != SpectralMode::SingleT, opt);
}

}  // namespace ncmac
