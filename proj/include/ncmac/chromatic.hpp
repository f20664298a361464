#ifndef NCMAC_CHROMATIC_HPP
#define NCMAC_CHROMATIC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sym.hpp"
#include "wqsym.hpp"

namespace ncmac {

struct NotInStaircase : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidGraph : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct SizeBound : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchBug : std::logic_error {
  using std::logic_error::logic_error;
};

inline int default_max_n() {
  if (const char* e = std::getenv("NCMAC_MAX_N")) return std::atoi(e);
  return 8;
}

// Unit interval graph on 1..n; edges (i, j) with i < j <= h(i).
class DyckGraph {
 public:
  DyckGraph() = default;
  static DyckGraph from_hessenberg(std::vector<int> h) {
    DyckGraph g;
    g.h_ = std::move(h);
    g.validate();
    return g;
  }
  static DyckGraph from_code(const std::vector<int>& c) {
    std::vector<int> h(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) h[i] = c[i] + static_cast<int>(i) + 1;
    return from_hessenberg(h);
  }
  static DyckGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> h(n);
    for (int i = 1; i <= n; ++i) h[i - 1] = i;
    for (auto [a, b] : edges) {
      int i = std::min(a, b), j = std::max(a, b);
      h[i - 1] = std::max(h[i - 1], j);
    }
    DyckGraph g = from_hessenberg(h);
    if (g.edges().size() != edges.size()) throw InvalidGraph("edge set is not a unit interval graph in this labelling");
    return g;
  }
  static DyckGraph edgeless(int n) { return from_code(std::vector<int>(n, 0)); }
  static DyckGraph complete(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = n - 1 - i;
    return from_code(c);
  }

  int n() const { return static_cast<int>(h_.size()); }
  const std::vector<int>& hessenberg() const { return h_; }
  int h(int i) const { return h_[i - 1]; }
  std::vector<int> code() const {
    std::vector<int> c(h_.size());
    for (std::size_t i = 0; i < h_.size(); ++i) c[i] = h_[i] - static_cast<int>(i) - 1;
    return c;
  }
  bool has_edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    return i < j && j <= h_[i - 1];
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n(); ++i)
      for (int j = i + 1; j <= h(i); ++j) e.emplace_back(i, j);
    return e;
  }
  // a_j = number of edges (i, j) with i < j
  std::vector<int> left_degrees() const {
    std::vector<int> a(n(), 0);
    for (auto [i, j] : edges()) ++a[j - 1];
    return a;
  }
  DyckGraph induced(const std::vector<int>& vertices) const {
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (has_edge(vertices[a], vertices[b])) e.emplace_back(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    return from_edges(static_cast<int>(vertices.size()), e);
  }
  DyckGraph reversed() const {
    std::vector<std::pair<int, int>> e;
    for (auto [i, j] : edges()) e.emplace_back(n() + 1 - j, n() + 1 - i);
    return from_edges(n(), e);
  }
  friend bool operator==(const DyckGraph&, const DyckGraph&) = default;
  std::string str() const { return "h=" + seq_str(h_); }

 private:
  void validate() const {
    int n = static_cast<int>(h_.size());
    for (int i = 1; i <= n; ++i) {
      if (h_[i - 1] < i || h_[i - 1] > n) throw InvalidGraph("Hessenberg value out of range at " + std::to_string(i));
      if (i > 1 && h_[i - 1] < h_[i - 2]) throw InvalidGraph("Hessenberg function not nondecreasing");
    }
  }
  std::vector<int> h_;
};

// lambda inside the staircase (n-1, ..., 1); edges are the empty cells above the diagonal.
inline DyckGraph dyck_from_partition(const Partition& lam, int n) {
  for (std::size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > n - 1 - static_cast<int>(i)) throw NotInStaircase("partition " + seq_str(lam) + " not inside the staircase of size " + std::to_string(n));
  Partition lc = conjugate(lam);
  std::vector<int> h(n);
  for (int c = 1; c <= n; ++c) h[c - 1] = n - (c <= static_cast<int>(lc.size()) ? lc[c - 1] : 0);
  return DyckGraph::from_hessenberg(h);
}

inline Partition partition_of_dyck(const DyckGraph& g) {
  Partition lc;
  for (int c = 1; c <= g.n(); ++c)
    if (g.n() - g.h(c) > 0) lc.push_back(g.n() - g.h(c));
  return conjugate(lc);
}

struct ColoredStat {
  int asc = 0, des = 0, wasc = 0;
};

inline ColoredStat stats(const DyckGraph& g, const Word& w) {
  ColoredStat s;
  for (auto [i, j] : g.edges()) {
    if (w[i - 1] < w[j - 1]) ++s.asc;
    if (w[i - 1] > w[j - 1]) ++s.des;
    if (w[i - 1] <= w[j - 1]) ++s.wasc;
  }
  return s;
}

inline bool is_proper(const DyckGraph& g, const Word& w) {
  for (auto [i, j] : g.edges())
    if (w[i - 1] == w[j - 1]) return false;
  return true;
}

inline void check_size(int n) {
  if (n > default_max_n()) throw SizeBound("n=" + std::to_string(n) + " exceeds the size bound " + std::to_string(default_max_n()));
}

// Sum over proper packed colorings of param^{asc} M_u.
inline WQSymElem ncX(const DyckGraph& g, const LaurentPoly& param = LaurentPoly::t()) {
  check_size(g.n());
  WQSymElem r(WBasis::M);
  for (const auto& u : packed_words(g.n()))
    if (is_proper(g, u)) r.add_term(u, param.pow(stats(g, u).asc));
  return r;
}

inline Sym X_commutative(const DyckGraph& g, const LaurentPoly& param = LaurentPoly::t()) {
  return qsym_to_sym(commutative_image(ncX(g, param)));
}

// Induced subgraph on the positions colored i, in increasing order.
inline DyckGraph color_class(const DyckGraph& g, const Word& v, int i) {
  std::vector<int> verts;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] == i) verts.push_back(static_cast<int>(k) + 1);
  return g.induced(verts);
}

// Coefficient of M_v in X_G(AT).
inline RatFunc transformed_coeff(const DyckGraph& g, const Word& v, const Alphabet& T, const LaurentPoly& param = LaurentPoly::t()) {
  RatFunc r(param.pow(stats(g, v).asc));
  for (int i = 1; i <= max_letter(v); ++i) r *= scalar_eval(X_commutative(color_class(g, v, i), param), T);
  return r;
}

// <omega X_G, N_u> = (-1)^n X_G(-A) coefficient.
inline LaurentPoly omega_ncX_coeff(const DyckGraph& g, const Word& u, const LaurentPoly& param = LaurentPoly::t()) {
  LaurentPoly c = transformed_coeff(g, u, Alphabet::minus_one(), param).demote();
  return g.n() % 2 ? -c : c;
}

inline WQSymElem omega_ncX(const DyckGraph& g, const LaurentPoly& param = LaurentPoly::t()) {
  check_size(g.n());
  WQSymElem r(WBasis::M);
  for (const auto& u : packed_words(g.n())) r.add_term(u, omega_ncX_coeff(g, u, param));
  return r;
}

// Sum over acyclic orientations without u-descent of param^{#arcs i->j with i<j}.
inline LaurentPoly omega_ncX_orientations(const DyckGraph& g, const Word& u, const LaurentPoly& param = LaurentPoly::t()) {
  auto E = g.edges();
  int n = g.n();
  LaurentPoly total;
  for (long mask = 0; mask < (1L << E.size()); ++mask) {
    std::vector<std::vector<int>> out(n + 1);
    int up = 0;
    bool ok = true;
    for (std::size_t k = 0; k < E.size() && ok; ++k) {
      auto [i, j] = E[k];
      int a = i, b = j;
      if (mask >> k & 1) std::swap(a, b);
      if (u[a - 1] > u[b - 1]) ok = false;
      out[a].push_back(b);
      up += a < b;
    }
    if (!ok) continue;
    std::vector<int> state(n + 1, 0);
    std::function<bool(int)> cyc = [&](int x) {
      state[x] = 1;
      for (int y : out[x])
        if (state[y] == 1 || (state[y] == 0 && cyc(y))) return true;
      state[x] = 2;
      return false;
    };
    bool acyclic = true;
    for (int x = 1; x <= n && acyclic; ++x)
      if (!state[x] && cyc(x)) acyclic = false;
    if (acyclic) total += param.pow(up);
  }
  return total;
}

// (t-1)^n X_G((q-1)/(t-1)) checked against prod_j (q - t^{a_j}).
inline LaurentPoly cm_product(const DyckGraph& g) {
  const LaurentPoly q = LaurentPoly::q(), t = LaurentPoly::t(), one(1);
  RatFunc ev = scalar_eval(X_commutative(g), Alphabet::ratio(q, one, t, one));
  LaurentPoly lhs = (RatFunc((t - one).pow(g.n())) * ev).demote();
  LaurentPoly rhs(1);
  for (int a : g.left_degrees()) rhs *= q - t.pow(a);
  if (!(lhs == rhs)) throw MismatchBug("cm_product paths disagree for " + g.str() + ": " + lhs.str() + " vs " + rhs.str());
  return rhs;
}

// Phi-form: sum_sigma q^{des_G(sigma)} Phi_{min sigma}; M-form: sum_u q^{des_G(u)} M_u.
inline WQSymElem omega_llt_tilde(const DyckGraph& g, WBasis basis, const LaurentPoly& param = LaurentPoly::q()) {
  check_size(g.n());
  WQSymElem r(basis);
  if (basis == WBasis::Phi) {
    for (const auto& s : all_perms(g.n())) r.add_term(min_destd(s), param.pow(stats(g, s).des));
  } else {
    for (const auto& u : packed_words(g.n())) r.add_term(u, param.pow(stats(g, u).des));
  }
  return r;
}

// omega LLT_G(A; t) = sum_u t^{wasc_G(u)} M_u.
inline WQSymElem omega_llt_M(const DyckGraph& g, const LaurentPoly& param = LaurentPoly::t()) {
  check_size(g.n());
  WQSymElem r(WBasis::M);
  for (const auto& u : packed_words(g.n())) r.add_term(u, param.pow(stats(g, u).wasc));
  return r;
}

inline std::vector<DyckGraph> all_dyck_graphs(int n) {
  std::vector<DyckGraph> out;
  std::vector<int> h(n);
  std::function<void(int, int)> rec = [&](int i, int lo) {
    if (i > n) {
      out.push_back(DyckGraph::from_hessenberg(h));
      return;
    }
    for (int v = std::max(lo, i); v <= n; ++v) {
      h[i - 1] = v;
      rec(i + 1, v);
    }
  };
  rec(1, 1);
  return out;
}

}  // namespace ncmac

#endif
