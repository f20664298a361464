#ifndef NCMAC_SYM_HPP
#define NCMAC_SYM_HPP

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "coeff.hpp"
#include "combinat.hpp"

namespace ncmac {

enum class Basis { m, h, e, p, s };

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::h: return "h";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
  }
  return "?";
}

inline Basis parse_basis(const std::string& s) {
  if (s == "m") return Basis::m;
  if (s == "h") return Basis::h;
  if (s == "e") return Basis::e;
  if (s == "p") return Basis::p;
  if (s == "s" || s == "schur") return Basis::s;
  throw std::invalid_argument("unknown basis: " + s);
}

using RatMatrix = std::vector<std::vector<Rational>>;

inline RatMatrix mat_inverse(RatMatrix a) {
  std::size_t n = a.size();
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("singular transition matrix");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rational f = Rational(1) / a[c][c];
    for (std::size_t j = 0; j < n; ++j) a[c][j] *= f, inv[c][j] *= f;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      Rational g = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[c][j].is_zero()) a[r][j] -= g * a[c][j];
        if (!inv[c][j].is_zero()) inv[r][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  std::size_t n = a.size();
  RatMatrix r(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (!a[i][k].is_zero())
        for (std::size_t j = 0; j < n; ++j)
          if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
  return r;
}

// Number of ways to distribute the parts of rho into blocks with sums mu
// (the coefficient of m_mu in p_rho).
inline long long power_to_monomial(const Partition& rho, const Partition& mu) {
  std::vector<int> cap(mu.begin(), mu.end());
  std::function<long long(std::size_t)> rec = [&](std::size_t i) -> long long {
    if (i == rho.size()) return 1;
    long long tot = 0;
    for (auto& c : cap)
      if (c >= rho[i]) {
        c -= rho[i];
        tot += rec(i + 1);
        c += rho[i];
      }
    return tot;
  };
  return rec(0);
}

// Per-degree transition data. Row index = source partition, column = Schur index.
struct SymTables {
  int n = 0;
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<std::vector<long long>> kostka;  // kostka[lambda][mu]
  std::map<Basis, RatMatrix> to_s, from_s;
  std::vector<int> conj;  // index of conjugate partition
};

inline const SymTables& sym_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<SymTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (slot) return *slot;
  auto T = std::make_unique<SymTables>();
  T->n = n;
  T->parts = partitions(n);
  std::size_t N = T->parts.size();
  for (std::size_t i = 0; i < N; ++i) T->index[T->parts[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < N; ++i) T->conj.push_back(T->index.at(conjugate(T->parts[i])));
  T->kostka.assign(N, std::vector<long long>(N, 0));
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) T->kostka[a][b] = kostka(T->parts[a], T->parts[b]);
  RatMatrix K(N, std::vector<Rational>(N)), Kt(N, std::vector<Rational>(N)), Ke(N, std::vector<Rational>(N)),
      R(N, std::vector<Rational>(N)), I(N, std::vector<Rational>(N, Rational(0)));
  for (std::size_t a = 0; a < N; ++a) {
    I[a][a] = 1;
    for (std::size_t b = 0; b < N; ++b) {
      K[a][b] = T->kostka[a][b];
      Kt[b][a] = T->kostka[a][b];
      Ke[b][a] = T->kostka[T->conj[a]][b];
      R[a][b] = power_to_monomial(T->parts[a], T->parts[b]);
    }
  }
  RatMatrix Kinv = mat_inverse(K);
  T->to_s[Basis::s] = I;
  T->to_s[Basis::h] = Kt;
  T->to_s[Basis::e] = Ke;
  T->to_s[Basis::m] = Kinv;
  T->to_s[Basis::p] = mat_mul(R, Kinv);
  T->from_s[Basis::s] = I;
  T->from_s[Basis::m] = K;
  for (Basis b : {Basis::h, Basis::e, Basis::p}) T->from_s[b] = mat_inverse(T->to_s[b]);
  slot = std::move(T);
  return *slot;
}

template <class C>
class SymFunc {
 public:
  SymFunc() = default;
  explicit SymFunc(Basis b) : basis_(b) {}
  SymFunc(Basis b, const Partition& lam, const C& c) : basis_(b) { add_term(lam, c); }

  Basis basis() const { return basis_; }
  const std::map<Partition, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coeff(const Partition& lam) const {
    auto it = terms_.find(lam);
    return it == terms_.end() ? C{} : it->second;
  }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& [lam, c] : terms_) {
      int n = size_of(lam);
      if (std::find(d.begin(), d.end(), n) == d.end()) d.push_back(n);
    }
    std::sort(d.begin(), d.end());
    return d;
  }

  void add_term(const Partition& lam, const C& c) {
    if (Coeff<C>::is_zero(c)) return;
    auto it = terms_.find(lam);
    if (it == terms_.end()) {
      terms_.emplace(lam, c);
    } else {
      it->second = it->second + c;
      if (Coeff<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  SymFunc& operator+=(const SymFunc& o) {
    check_basis(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, c);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    check_basis(o);
    for (const auto& [lam, c] : o.terms_) add_term(lam, -c);
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const C& k, const SymFunc& f) {
    SymFunc r(f.basis_);
    for (const auto& [lam, c] : f.terms_) r.add_term(lam, k * c);
    return r;
  }
  template <class F>
  auto map_coeffs(F&& fn) const {
    SymFunc<std::decay_t<std::invoke_result_t<F, const C&>>> r(basis_);
    for (const auto& [lam, c] : terms_) r.add_term(lam, fn(c));
    return r;
  }

  friend bool operator==(const SymFunc& a, const SymFunc& b) {
    if (a.basis_ != b.basis_) throw std::logic_error("comparing SymFunc in different bases");
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const SymFunc& f) { return os << f.str(); }
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [lam, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")" + basis_name(basis_) + "_" + seq_str(lam);
    }
    return s;
  }

 private:
  void check_basis(const SymFunc& o) const {
    if (o.basis_ != basis_) throw std::logic_error("SymFunc basis mismatch");
  }
  Basis basis_ = Basis::s;
  std::map<Partition, C> terms_;
};

using Sym = SymFunc<LaurentPoly>;

template <class C>
SymFunc<C> convert(const SymFunc<C>& f, Basis target) {
  if (f.basis() == target) return f;
  std::map<int, std::vector<C>> by_deg;
  for (const auto& [lam, c] : f.terms()) {
    int n = size_of(lam);
    const auto& T = sym_tables(n);
    auto& v = by_deg[n];
    if (v.empty()) v.assign(T.parts.size(), C{});
    const auto& A = T.to_s.at(f.basis());
    int i = T.index.at(lam);
    for (std::size_t j = 0; j < T.parts.size(); ++j)
      if (!A[i][j].is_zero()) v[j] = v[j] + c * Coeff<C>::from(A[i][j]);
  }
  SymFunc<C> out(target);
  for (auto& [n, v] : by_deg) {
    const auto& T = sym_tables(n);
    const auto& B = T.from_s.at(target);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (Coeff<C>::is_zero(v[i])) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!B[i][j].is_zero()) out.add_term(T.parts[j], v[i] * Coeff<C>::from(B[i][j]));
    }
  }
  return out;
}

template <class C>
SymFunc<C> omega(const SymFunc<C>& f) {
  SymFunc<C> s = convert(f, Basis::s), r(Basis::s);
  for (const auto& [lam, c] : s.terms()) r.add_term(conjugate(lam), c);
  return convert(r, f.basis());
}

// Product computed on power sums.
template <class C>
SymFunc<C> multiply(const SymFunc<C>& a, const SymFunc<C>& b) {
  SymFunc<C> pa = convert(a, Basis::p), pb = convert(b, Basis::p), r(Basis::p);
  for (const auto& [x, c] : pa.terms())
    for (const auto& [y, d] : pb.terms()) {
      Partition z = x;
      z.insert(z.end(), y.begin(), y.end());
      r.add_term(sorted_partition(z), c * d);
    }
  return r;
}

template <class C>
SymFunc<C> unit_term(Basis b, const Partition& lam) {
  return SymFunc<C>(b, lam, Coeff<C>::from(Rational(1)));
}

inline Sym sym_term(Basis b, const Partition& lam, const LaurentPoly& c = LaurentPoly(1)) { return Sym(b, lam, c); }

// ---- virtual alphabets ----

struct SpecializationPole : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// T = (a - b)/(c - d) with a, b, c, d zero or monomials; p_k(T) = (a^k - b^k)/(c^k - d^k).
struct Alphabet {
  LaurentPoly a, b, c, d;
  static Alphabet one() { return {1, 0, 1, 0}; }
  static Alphabet minus_one() { return {0, 1, 1, 0}; }
  static Alphabet ratio(LaurentPoly a, LaurentPoly b, LaurentPoly c, LaurentPoly d) { return {a, b, c, d}; }
  LaurentPoly pnum(int k) const { return a.pow(k) - b.pow(k); }
  LaurentPoly pden(int k) const { return c.pow(k) - d.pow(k); }
};

// Evaluate on p-basis with the common denominator prod_k (c^k - d^k)^{floor(n/k)}.
inline RatFunc scalar_eval(const Sym& f, const Alphabet& T) {
  Sym p = convert(f, Basis::p);
  RatFunc total(0);
  for (int n : p.degrees()) {
    for (int k = 1; k <= n; ++k)
      if (T.pden(k).is_zero()) throw SpecializationPole("alphabet denominator vanishes at power " + std::to_string(k));
    LaurentPoly D(1), N;
    for (int k = 1; k <= n; ++k) D *= T.pden(k).pow(n / k);
    for (const auto& [rho, c] : p.terms()) {
      if (size_of(rho) != n) continue;
      std::map<int, int> mult;
      LaurentPoly term = c;
      for (int r : rho) ++mult[r], term *= T.pnum(r);
      for (int k = 1; k <= n; ++k) term *= T.pden(k).pow(n / k - (mult.count(k) ? mult[k] : 0));
      N += term;
    }
    total += RatFunc(N, D);
  }
  return total;
}

// ---- (q-1) plethysms ----

enum class Pleth { QMinus1, OneMinusQ, InvOneMinusQ, InvQMinus1 };

inline LaurentPoly pleth_factor(Pleth f, int k) {
  LaurentPoly g = LaurentPoly::q(k) - LaurentPoly(1);
  return (f == Pleth::OneMinusQ || f == Pleth::InvOneMinusQ) ? -g : g;
}

inline Sym plethysm_forward(const Sym& f, Pleth fac) {
  Sym p = convert(f, Basis::p), r(Basis::p);
  for (const auto& [rho, c] : p.terms()) {
    LaurentPoly x = c;
    for (int k : rho) x *= pleth_factor(fac, k);
    r.add_term(rho, x);
  }
  return convert(r, f.basis());
}

// Inverse transform with the common denominator D_n = prod_{k<=n} g(k);
// returns numerators in f's basis together with D_n per degree.
struct ScaledSym {
  Sym numer;
  std::map<int, LaurentPoly> denom;
};

inline ScaledSym plethysm_inverse_scaled(const Sym& f, Pleth fac) {
  Sym p = convert(f, Basis::p), r(Basis::p);
  ScaledSym out;
  for (int n : p.degrees()) {
    LaurentPoly D(1);
    for (int k = 1; k <= n; ++k) D *= pleth_factor(fac, k);
    out.denom[n] = D;
  }
  for (const auto& [rho, c] : p.terms()) {
    LaurentPoly den(1);
    for (int k : rho) den *= pleth_factor(fac, k);
    r.add_term(rho, c * exact_div(out.denom.at(size_of(rho)), den));
  }
  out.numer = convert(r, f.basis());
  return out;
}

inline SymFunc<RatFunc> plethysm_scale(const Sym& f, Pleth fac) {
  if (fac == Pleth::QMinus1 || fac == Pleth::OneMinusQ)
    return plethysm_forward(f, fac).map_coeffs([](const LaurentPoly& c) { return RatFunc(c); });
  ScaledSym s = plethysm_inverse_scaled(f, fac);
  SymFunc<RatFunc> r(f.basis());
  for (const auto& [lam, c] : s.numer.terms()) r.add_term(lam, RatFunc(c, s.denom.at(size_of(lam))));
  return r;
}

inline Sym demote(const SymFunc<RatFunc>& f) {
  Sym r(f.basis());
  for (const auto& [lam, c] : f.terms()) r.add_term(lam, c.demote());
  return r;
}

// ---- theta substitution ----

template <class C>
using ThetaExpr = std::map<Partition, C>;

// theta_lambda in the Schur basis, theta_k = h_k((q-1)X)/(q-1).
inline const Sym& theta_schur(const Partition& lam) {
  static std::mutex mu;
  static std::map<Partition, std::unique_ptr<Sym>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(lam); it != cache.end()) return *it->second;
  }
  Sym prod(Basis::p, {}, LaurentPoly(1));
  for (int k : lam) {
    Sym th(Basis::p);
    for (const auto& rho : partitions(k)) {
      LaurentPoly c(Rational(1, z_lambda(rho)));
      for (int r : rho) c *= LaurentPoly::q(r) - LaurentPoly(1);
      th.add_term(rho, exact_div(c, LaurentPoly::q() - LaurentPoly(1)));
    }
    prod = multiply(prod, th);
  }
  Sym s = convert(prod, Basis::s);
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[lam];
  if (!slot) slot = std::make_unique<Sym>(std::move(s));
  return *slot;
}

inline Sym theta_to_sym(const ThetaExpr<LaurentPoly>& e, Basis target = Basis::s) {
  Sym r(Basis::s);
  for (const auto& [lam, c] : e) r += c * theta_schur(lam);
  return convert(r, target);
}

// Ribbon Schur function r_I = sum over coarsenings J of (-1)^{l(I)-l(J)} h_J.
inline Sym ribbon_image(const Composition& I) {
  Sym r(Basis::h);
  for (const auto& J : coarsenings(I)) r.add_term(sorted_partition(J), LaurentPoly((I.size() - J.size()) % 2 ? -1 : 1));
  return r;
}

}  // namespace ncmac

#endif
