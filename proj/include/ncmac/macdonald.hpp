#pragma once

// Noncommutative Macdonald polynomials: HHL statistics, the direct
// Phi-expansion, the Haglund-Wilson assembly from tilde-LLT terms, and
// checkers for the conjectured coefficient properties.

#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncmac/chromatic.hpp"
#include "ncmac/golden.hpp"
#include "ncmac/parse.hpp"
#include "ncmac/qsym.hpp"
#include "ncmac/wqsym.hpp"

namespace ncmac {

struct ConventionBootstrapFailure : std::logic_error {
  using std::logic_error::logic_error;
};

// Reading order and attack rule for the cells of a French diagram.
struct Convention {
  bool top_down = true;     // rows read from the top row down
  bool upper_right = true;  // consecutive-row attack needs the upper cell strictly right
  friend bool operator==(const Convention&, const Convention&) = default;
  std::string str() const {
    return std::string(top_down ? "top-down" : "bottom-up") + "/" + (upper_right ? "upper-right" : "upper-left");
  }
};

inline std::vector<Convention> all_conventions() { return {{true, true}, {true, false}, {false, true}, {false, false}}; }

struct Cell {
  int row, col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class CellDiagram {
 public:
  CellDiagram(const Partition& mu, const Convention& conv) : mu_(mu), conv_(conv) {
    if (mu.empty() || !is_partition(mu)) throw std::invalid_argument("not a nonempty partition: " + seq_str(mu));
    int r = static_cast<int>(mu.size());
    for (int k = 0; k < r; ++k) {
      int row = conv.top_down ? r - k : k + 1;
      for (int c = 1; c <= mu[row - 1]; ++c) cells_.push_back({row, c});
    }
  }
  const Partition& shape() const { return mu_; }
  int n() const { return static_cast<int>(cells_.size()); }
  int rows() const { return static_cast<int>(mu_.size()); }
  // Cells in reading order; position p (1-based) is cells()[p-1].
  const std::vector<Cell>& cells() const { return cells_; }
  int pos(const Cell& u) const {
    for (int p = 0; p < n(); ++p)
      if (cells_[p] == u) return p + 1;
    throw std::out_of_range("cell not in diagram");
  }
  int arm(const Cell& u) const { return mu_[u.row - 1] - u.col; }
  int leg(const Cell& u) const {
    int l = 0;
    for (int rr = u.row + 1; rr <= rows(); ++rr)
      if (mu_[rr - 1] >= u.col) ++l;
    return l;
  }
  bool bottom(const Cell& u) const { return u.row == 1; }
  Cell south(const Cell& u) const { return {u.row - 1, u.col}; }
  bool attacks(const Cell& a, const Cell& b) const {
    if (a.row == b.row) return true;
    const Cell& up = a.row > b.row ? a : b;
    const Cell& lo = a.row > b.row ? b : a;
    if (up.row != lo.row + 1) return false;
    return conv_.upper_right ? up.col > lo.col : up.col < lo.col;
  }

 private:
  Partition mu_;
  Convention conv_;
  std::vector<Cell> cells_;
};

// t_{k} in the multi-t family, t^k in the single-t one.
inline LaurentPoly t_param(int k, bool multi_t) {
  if (k == 0) return LaurentPoly(1);
  return multi_t ? LaurentPoly::ti(k) : LaurentPoly::t(k);
}

inline LaurentPoly specialize_t(const LaurentPoly& f) {
  return f.subs([](int s) {
    for (int i = 1; i <= kMaxT; ++i)
      if (s == slot_t(i)) return LaurentPoly::t(i);
    return LaurentPoly::var(slot_name(s));
  });
}

struct HHLStats {
  std::vector<Cell> des;  // non-bottom cells with sigma(u) > sigma(South u)
  std::vector<Cell> asc;  // non-bottom cells with sigma(u) < sigma(South u)
  int inv = 0;            // inverted attacking pairs
};

// sigma lists the values written into the cells in reading order.
inline HHLStats hhl_stats(const Perm& sigma, const CellDiagram& d) {
  if (static_cast<int>(sigma.size()) != d.n() || !is_perm(sigma)) throw std::invalid_argument("filling is not a permutation of the cells");
  HHLStats st;
  const auto& cs = d.cells();
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (d.attacks(cs[i], cs[j]) && sigma[i] > sigma[j]) ++st.inv;
  for (int i = 0; i < d.n(); ++i) {
    if (d.bottom(cs[i])) continue;
    int below = sigma[d.pos(d.south(cs[i])) - 1];
    (sigma[i] > below ? st.des : st.asc).push_back(cs[i]);
  }
  return st;
}

inline LaurentPoly ncH_weight(const Perm& sigma, const CellDiagram& d, bool multi_t) {
  HHLStats st = hhl_stats(sigma, d);
  int qe = st.inv;
  for (const auto& u : st.des) qe -= d.arm(u);
  LaurentPoly w = LaurentPoly::q(qe);
  for (const auto& u : st.asc) w = w * t_param(1 + d.leg(u), multi_t);
  return w;
}

// The direct Phi-expansion of H_mu.
inline WQSymElem ncH_direct_with(const Partition& mu, bool multi_t, const Convention& conv) {
  CellDiagram d(mu, conv);
  check_size(d.n());
  WQSymElem r(WBasis::Phi);
  for (const auto& s : all_perms(d.n())) r.add_term(min_destd(s), ncH_weight(s, d, multi_t));
  return r;
}

struct OptionalEdge {
  Cell cell;
  std::pair<int, int> edge;
  int arm, leg;
};

struct HWPair {
  DyckGraph G, Gplus;
  std::vector<std::pair<int, int>> base_edges;
  std::vector<OptionalEdge> optional;
};

inline HWPair hw_pair_with(const Partition& mu, const Convention& conv) {
  CellDiagram d(mu, conv);
  HWPair hp;
  const auto& cs = d.cells();
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (d.attacks(cs[i], cs[j])) hp.base_edges.push_back({i + 1, j + 1});
  std::vector<std::pair<int, int>> plus = hp.base_edges;
  for (const auto& u : cs) {
    if (d.bottom(u)) continue;
    int a = d.pos(u), b = d.pos(d.south(u));
    std::pair<int, int> e{std::min(a, b), std::max(a, b)};
    int leg = d.leg(u);
    if (leg > d.rows() - 2) throw std::logic_error("leg out of range for the multi-t family");
    hp.optional.push_back({u, e, d.arm(u), leg});
    plus.push_back(e);
  }
  hp.G = DyckGraph::from_edges(d.n(), hp.base_edges);
  hp.Gplus = DyckGraph::from_edges(d.n(), plus);
  return hp;
}

// sum_sigma q^{des_H(sigma)} Phi_{min sigma} for an edge set H.
inline WQSymElem llt_tilde_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  WQSymElem r(WBasis::Phi);
  for (const auto& s : all_perms(n)) {
    int des = 0;
    for (auto [i, j] : edges)
      if (s[i - 1] > s[j - 1]) ++des;
    r.add_term(min_destd(s), LaurentPoly::q(des));
  }
  return r;
}

enum class Variant { H, Tilde };

inline LaurentPoly hw_prefactor_qexp(const Partition& mu) {
  Partition mc = conjugate(mu);
  int nmc = 0;
  for (std::size_t i = 0; i < mc.size(); ++i) nmc += static_cast<int>(i) * mc[i];
  return LaurentPoly::q(-nmc + mu[0] * (mu[0] - 1) / 2);
}

inline WQSymElem hw_assemble_with(const Partition& mu, Variant v, bool multi_t, const Convention& conv) {
  HWPair hp = hw_pair_with(mu, conv);
  int n = size_of(mu);
  check_size(n);
  const LaurentPoly q = LaurentPoly::q(), one(1);
  std::size_t k = hp.optional.size();
  WQSymElem acc(WBasis::Phi);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    auto edges = hp.base_edges;
    LaurentPoly w(1);
    for (std::size_t b = 0; b < k; ++b) {
      const auto& o = hp.optional[b];
      LaurentPoly T = t_param(1 + o.leg, multi_t);
      if (mask >> b & 1u) {
        edges.push_back(o.edge);
        w = w * (v == Variant::H ? one - T * q.pow(o.arm) : T - q.pow(o.arm));
      } else {
        w = w * (v == Variant::H ? T * q.pow(o.arm + 1) - one : q.pow(o.arm + 1) - T);
      }
    }
    acc += w * llt_tilde_edges(n, edges);
  }
  LaurentPoly den = (q - one).pow(n - mu[0]), pre = hw_prefactor_qexp(mu);
  return acc.map_coeffs([&](const LaurentPoly& c) { return pre * exact_div(c, den); });
}

// Convention bootstrap: exactly one reading/attack convention must reproduce
// the printed data.
struct BootstrapResult {
  std::vector<Convention> survivors;
  std::vector<std::string> log;
};

inline BootstrapResult run_convention_bootstrap() {
  BootstrapResult br;
  const WQSymElem h211 = parse_phi(golden::kH211Phi);
  const WQSymElem edge = parse_phi(golden::kH21EdgeLLT), path = parse_phi(golden::kH21PathLLT);
  for (const auto& conv : all_conventions()) {
    std::string why;
    try {
      if (!(ncH_direct_with({2, 1, 1}, false, conv) == h211)) why = "direct H211 differs";
      HWPair p21 = hw_pair_with({2, 1}, conv);
      if (why.empty() && !(llt_tilde_edges(3, p21.G.edges()) == edge && llt_tilde_edges(3, p21.Gplus.edges()) == path))
        why = "H21 graphs differ";
      for (int n = 3; n <= 4 && why.empty(); ++n)
        for (const auto& mu : partitions(n))
          if (!(ncH_direct_with(mu, false, conv) == hw_assemble_with(mu, Variant::H, false, conv)))
            why = "assembly identity fails at " + seq_str(mu);
    } catch (const std::exception& e) {
      why = e.what();
    }
    br.log.push_back(conv.str() + ": " + (why.empty() ? "survives" : why));
    if (why.empty()) br.survivors.push_back(conv);
  }
  return br;
}

inline const Convention& frozen_convention() {
  static const Convention conv = [] {
    BootstrapResult br = run_convention_bootstrap();
    if (br.survivors.size() != 1) {
      std::string msg = std::to_string(br.survivors.size()) + " conventions survive:";
      for (const auto& l : br.log) msg += " [" + l + "]";
      throw ConventionBootstrapFailure(msg);
    }
    return br.survivors[0];
  }();
  return conv;
}

inline CellDiagram cell_diagram(const Partition& mu) { return CellDiagram(mu, frozen_convention()); }
inline WQSymElem ncH_direct(const Partition& mu, bool multi_t = false) { return ncH_direct_with(mu, multi_t, frozen_convention()); }
inline HWPair hw_pair(const Partition& mu) { return hw_pair_with(mu, frozen_convention()); }
inline WQSymElem hw_assemble(const Partition& mu, Variant v, bool multi_t = false) {
  return hw_assemble_with(mu, v, multi_t, frozen_convention());
}

inline Sym commutative_sym(const WQSymElem& x) { return convert(qsym_to_sym(commutative_image(x)), Basis::s); }

inline Sym tildeH_sym(const Partition& mu, bool multi_t = false) { return commutative_sym(hw_assemble(mu, Variant::Tilde, multi_t)); }

inline WQSymElem H_one_n(int n, bool multi_t = false) {
  check_size(n);
  WQSymElem r(WBasis::Phi);
  for (const auto& s : all_perms(n)) {
    LaurentPoly w(1);
    for (int d : descents(s)) w = w * t_param(d, multi_t);
    r.add_term(min_destd(s), w);
  }
  return r;
}

inline bool all_monomial_coeffs(const WQSymElem& x) {
  for (const auto& [u, c] : x.terms())
    if (!c.is_monomial()) return false;
  return true;
}

inline bool schur_positive(const Sym& f) {
  for (const auto& [lam, c] : f.terms())
    if (!c.is_polynomial() || !c.nonnegative_integer_coeffs()) return false;
  return true;
}

// Exponent bookkeeping for the conjectured product property of coefficients.
struct WheelLine {
  Partition lambda;
  long long d = 0;
  std::vector<Rational> lhs, rhs;  // per variable slot
  bool pass = false;
};

inline std::vector<WheelLine> check_wheel(const Sym& f, const Partition& mu, bool multi_t) {
  std::vector<Rational> cell_exp(kSlots, Rational(0));
  for (int r = 1; r <= static_cast<int>(mu.size()); ++r)
    for (int c = 1; c <= mu[r - 1]; ++c) {
      LaurentPoly m = LaurentPoly::q(c - 1) * t_param(r - 1, multi_t);
      const Monomial& e = m.terms()[0].m;
      for (int s = 0; s < kSlots; ++s) cell_exp[s] = cell_exp[s] + Rational(e.e[s]);
    }
  std::vector<WheelLine> out;
  Sym fs = convert(f, Basis::s);
  for (const auto& [lam, K] : fs.terms()) {
    WheelLine line;
    line.lambda = lam;
    line.d = size_of(lam) < 2 ? 0 : d_two_above_one(lam);
    line.lhs.assign(kSlots, Rational(0));
    line.rhs.assign(kSlots, Rational(0));
    for (const auto& term : K.terms())
      for (int s = 0; s < kSlots; ++s) line.lhs[s] = line.lhs[s] + term.c * Rational(term.m.e[s]);
    for (int s = 0; s < kSlots; ++s) line.rhs[s] = cell_exp[s] * Rational(line.d);
    line.pass = line.lhs == line.rhs;
    out.push_back(std::move(line));
  }
  return out;
}

// Cell parameters q^{col-1} t^{row-1}, in filling order.
inline std::vector<LaurentPoly> cell_parameters(const Partition& mu) {
  std::vector<LaurentPoly> v;
  for (int r = 1; r <= static_cast<int>(mu.size()); ++r)
    for (int c = 1; c <= mu[r - 1]; ++c) v.push_back(LaurentPoly::q(c - 1) * LaurentPoly::t(r - 1));
  return v;
}

inline LaurentPoly elementary(const std::vector<LaurentPoly>& xs, int k) {
  std::vector<LaurentPoly> e(k + 1, LaurentPoly());
  e[0] = LaurentPoly(1);
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[j] = e[j] + x * e[j - 1];
  return e[k];
}

struct HookLine {
  int k;
  LaurentPoly got, want;
  bool pass;
};

// Coefficient of s_{n-k,1^k} against e_k of the cell parameters minus one entry 1.
inline std::vector<HookLine> check_hooks(const Sym& f, const Partition& mu) {
  auto v = cell_parameters(mu);
  v.erase(v.begin());
  int n = size_of(mu);
  Sym fs = convert(f, Basis::s);
  std::vector<HookLine> out;
  for (int k = 0; k < n; ++k) {
    Partition hook{n - k};
    for (int i = 0; i < k; ++i) hook.push_back(1);
    LaurentPoly got = fs.coeff(hook), want = elementary(v, k);
    out.push_back({k, got, want, got == want});
  }
  return out;
}

}  // namespace ncmac
