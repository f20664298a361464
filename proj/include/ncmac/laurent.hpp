#ifndef NCMAC_LAURENT_HPP
#define NCMAC_LAURENT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace ncmac {

struct NonExactDivision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Variables live in fixed slots so every polynomial shares one canonical order:
// q, t, t_1..t_8, z_1..z_6.
inline constexpr int kSlots = 16;
inline constexpr int kSlotQ = 0;
inline constexpr int kSlotT = 1;
inline constexpr int kMaxT = 8;
inline constexpr int kMaxZ = 6;
inline constexpr int slot_t(int i) { return 1 + i; }
inline constexpr int slot_z(int i) { return 1 + kMaxT + i; }

inline std::string slot_name(int s) {
  if (s == kSlotQ) return "q";
  if (s == kSlotT) return "t";
  if (s <= 1 + kMaxT) return "t_" + std::to_string(s - 1);
  return "z_" + std::to_string(s - 1 - kMaxT);
}

inline int slot_of(const std::string& name) {
  if (name == "q") return kSlotQ;
  if (name == "t") return kSlotT;
  if (name.size() >= 2 && (name[0] == 't' || name[0] == 'z')) {
    std::string d = name.substr(name[1] == '_' ? 2 : 1);
    if (!d.empty() && std::all_of(d.begin(), d.end(), ::isdigit)) {
      int i = std::stoi(d);
      if (name[0] == 't' && i >= 1 && i <= kMaxT) return slot_t(i);
      if (name[0] == 'z' && i >= 1 && i <= kMaxZ) return slot_z(i);
    }
  }
  throw std::invalid_argument("unknown variable: " + name);
}

struct Monomial {
  std::array<std::int16_t, kSlots> e{};

  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  int operator[](int s) const { return e[s]; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) {
      int v = a.e[i] + b.e[i];
      if (v > 30000 || v < -30000) throw std::overflow_error("exponent overflow");
      r.e[i] = static_cast<std::int16_t>(v);
    }
    return r;
  }
  Monomial inverse() const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(-e[i]);
    return r;
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
  Monomial pow(int k) const {
    Monomial r;
    for (int i = 0; i < kSlots; ++i) r.e[i] = static_cast<std::int16_t>(e[i] * k);
    return r;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.e <=> b.e; }

  static Monomial var(int slot, int k = 1) {
    Monomial m;
    m.e[slot] = static_cast<std::int16_t>(k);
    return m;
  }
  std::string str() const {
    std::string s;
    for (int i = 0; i < kSlots; ++i) {
      if (!e[i]) continue;
      if (!s.empty()) s += "*";
      s += slot_name(i);
      if (e[i] != 1) s += "^" + (e[i] < 0 ? "(" + std::to_string(e[i]) + ")" : std::to_string(e[i]));
    }
    return s.empty() ? "1" : s;
  }
};

struct Term {
  Monomial m;
  Rational c;
};

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c) : LaurentPoly(Rational(c)) {}  // NOLINT(implicit)
  LaurentPoly(const Rational& c) {                          // NOLINT(implicit)
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
  }
  LaurentPoly(const Monomial& m, const Rational& c = 1) {
    if (!c.is_zero()) terms_.push_back({m, c});
  }

  static LaurentPoly var(const std::string& name, int k = 1) { return LaurentPoly(Monomial::var(slot_of(name), k)); }
  static LaurentPoly q(int k = 1) { return LaurentPoly(Monomial::var(kSlotQ, k)); }
  static LaurentPoly t(int k = 1) { return LaurentPoly(Monomial::var(kSlotT, k)); }
  static LaurentPoly ti(int i, int k = 1) { return LaurentPoly(Monomial::var(slot_t(i), k)); }
  static LaurentPoly z(int i, int k = 1) { return LaurentPoly(Monomial::var(slot_z(i), k)); }
  static LaurentPoly from_terms(std::vector<Term> ts) {
    LaurentPoly p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  Rational constant_value() const {
    for (const auto& t : terms_)
      if (t.m.is_one()) return t.c;
    return Rational(0);
  }
  Rational coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& a, const Monomial& b) { return a.m < b; });
    return it != terms_.end() && it->m == m ? it->c : Rational(0);
  }
  const Term& leading() const { return terms_.back(); }

  bool uses(int slot) const {
    for (const auto& t : terms_)
      if (t.m.e[slot]) return true;
    return false;
  }
  std::vector<int> used_slots() const {
    std::vector<int> r;
    for (int s = 0; s < kSlots; ++s)
      if (uses(s)) r.push_back(s);
    return r;
  }
  int min_exp(int s) const {
    int v = 0;
    bool first = true;
    for (const auto& t : terms_) v = first ? t.m.e[s] : std::min<int>(v, t.m.e[s]), first = false;
    return v;
  }
  int max_exp(int s) const {
    int v = 0;
    bool first = true;
    for (const auto& t : terms_) v = first ? t.m.e[s] : std::max<int>(v, t.m.e[s]), first = false;
    return v;
  }
  Monomial min_monomial() const {
    Monomial m;
    for (int s = 0; s < kSlots; ++s) m.e[s] = static_cast<std::int16_t>(min_exp(s));
    return m;
  }
  bool is_polynomial() const {
    for (const auto& t : terms_)
      for (auto x : t.m.e)
        if (x < 0) return false;
    return true;
  }
  bool nonnegative_integer_coeffs() const {
    for (const auto& t : terms_)
      if (!t.c.is_integer() || t.c.sign() < 0) return false;
    return true;
  }

  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
  }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.terms_.size() == 1) return b.shift(a.terms_[0].m, a.terms_[0].c);
    if (b.terms_.size() == 1) return a.shift(b.terms_[0].m, b.terms_[0].c);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_) out.push_back({x.m * y.m, x.c * y.c});
    return from_terms(std::move(out));
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  LaurentPoly shift(const Monomial& m, const Rational& c = 1) const {
    if (c.is_zero()) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.m = t.m * m, t.c *= c;
    return r;
  }
  LaurentPoly pow(int k) const {
    if (k < 0) {
      if (!is_monomial()) throw NonExactDivision("negative power of a non-monomial");
      return LaurentPoly(terms_[0].m.pow(k), Rational(1) / pow_rat(terms_[0].c, -k));
    }
    LaurentPoly r(1), b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }

  // Substitute each used variable by an image polynomial; images of variables
  // appearing with negative exponent must be monomials.
  template <class F>
  LaurentPoly subs(F&& image) const {
    LaurentPoly r;
    std::vector<std::pair<int, LaurentPoly>> imgs;
    for (int s : used_slots()) imgs.emplace_back(s, image(s));
    std::vector<Term> acc;
    for (const auto& t : terms_) {
      LaurentPoly x(t.c);
      for (const auto& [s, im] : imgs)
        if (t.m.e[s]) x *= im.pow(t.m.e[s]);
      for (auto& tt : x.terms_) acc.push_back(std::move(tt));
    }
    return from_terms(std::move(acc));
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      Rational c = it->c;
      bool neg = c.sign() < 0;
      if (neg) c = -c;
      if (s.empty())
        s += neg ? "-" : "";
      else
        s += neg ? " - " : " + ";
      if (it->m.is_one())
        s += c.str();
      else if (c.is_one())
        s += it->m.str();
      else
        s += c.str() + "*" + it->m.str();
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

 private:
  static Rational pow_rat(Rational c, int k) {
    Rational r(1);
    while (k--) r *= c;
    return r;
  }
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < terms_.size();) {
      std::size_t j = i + 1;
      Rational c = std::move(terms_[i].c);
      while (j < terms_.size() && terms_[j].m == terms_[i].m) c += terms_[j++].c;
      if (!c.is_zero()) {
        terms_[w].m = terms_[i].m;
        terms_[w].c = std::move(c);
        ++w;
      }
      i = j;
    }
    terms_.resize(w);
  }
  static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool sub) {
    LaurentPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].m < b.terms_[j].m)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].m < a.terms_[i].m) {
        r.terms_.push_back({b.terms_[j].m, sub ? -b.terms_[j].c : b.terms_[j].c});
        ++j;
      } else {
        Rational c = sub ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!c.is_zero()) r.terms_.push_back({a.terms_[i].m, std::move(c)});
        ++i, ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

inline const LaurentPoly& poly_zero() {
  static const LaurentPoly z;
  return z;
}

// Quotient p/d in the Laurent ring; throws NonExactDivision on a nonzero remainder.
inline LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw NonExactDivision("division by zero polynomial");
  if (p.is_zero()) return {};
  if (d.is_monomial()) return p.shift(d.leading().m.inverse(), Rational(1) / d.leading().c);
  Monomial md = d.min_monomial(), mp = p.min_monomial();
  LaurentPoly dd = d.shift(md.inverse()), r = p.shift(mp.inverse());
  std::array<int, kSlots> bound{};
  for (int s = 0; s < kSlots; ++s) bound[s] = r.max_exp(s) - dd.max_exp(s);
  const Term& ld = dd.leading();
  std::vector<Term> quot;
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Monomial qm = lr.m / ld.m;
    for (int s = 0; s < kSlots; ++s)
      if (qm.e[s] < 0 || qm.e[s] > bound[s]) throw NonExactDivision("non-exact division: " + p.str() + " / " + d.str());
    Rational qc = lr.c / ld.c;
    r -= dd.shift(qm, qc);
    quot.push_back({qm, qc});
  }
  return LaurentPoly::from_terms(std::move(quot)).shift(mp / md);
}

inline bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  try {
    exact_div(p, d);
    return true;
  } catch (const NonExactDivision&) {
    return false;
  }
}

// [m]_q = 1 + q + ... + q^{m-1}
inline LaurentPoly q_integer(int m) {
  std::vector<Term> ts;
  for (int i = 0; i < m; ++i) ts.push_back({Monomial::var(kSlotQ, i), Rational(1)});
  return LaurentPoly::from_terms(std::move(ts));
}

inline LaurentPoly q_factorial(int m) {
  LaurentPoly r(1);
  for (int i = 2; i <= m; ++i) r *= q_integer(i);
  return r;
}

}  // namespace ncmac

#endif
