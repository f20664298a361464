#ifndef NCMAC_WQSYM_HPP
#define NCMAC_WQSYM_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "qsym.hpp"

namespace ncmac {

enum class WBasis { M, Phi };

struct BasisMismatch : std::logic_error {
  using std::logic_error::logic_error;
};
struct NotMinWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const char* wbasis_name(WBasis b) { return b == WBasis::M ? "M" : "Phi"; }

class WQSymElem {
 public:
  explicit WQSymElem(WBasis b = WBasis::M) : basis_(b) {}
  WBasis basis() const { return basis_; }
  const std::map<Word, LaurentPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Word& u, const LaurentPoly& c) {
    if (!is_packed(u)) throw std::invalid_argument("word is not packed: " + seq_str(u));
    if (c.is_zero()) return;
    auto it = terms_.find(u);
    if (it == terms_.end()) {
      terms_.emplace(u, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  LaurentPoly coeff(const Word& u) const {
    if (!is_packed(u)) throw std::invalid_argument("word is not packed: " + seq_str(u));
    auto it = terms_.find(u);
    return it == terms_.end() ? LaurentPoly() : it->second;
  }

  WQSymElem& operator+=(const WQSymElem& o) {
    check(o);
    for (const auto& [u, c] : o.terms_) add_term(u, c);
    return *this;
  }
  WQSymElem& operator-=(const WQSymElem& o) {
    check(o);
    for (const auto& [u, c] : o.terms_) add_term(u, -c);
    return *this;
  }
  friend WQSymElem operator+(WQSymElem a, const WQSymElem& b) { return a += b; }
  friend WQSymElem operator-(WQSymElem a, const WQSymElem& b) { return a -= b; }
  friend WQSymElem operator*(const LaurentPoly& k, const WQSymElem& x) {
    WQSymElem r(x.basis_);
    for (const auto& [u, c] : x.terms_) r.add_term(u, k * c);
    return r;
  }
  template <class F>
  WQSymElem map_coeffs(F&& fn) const {
    WQSymElem r(basis_);
    for (const auto& [u, c] : terms_) r.add_term(u, fn(c));
    return r;
  }

  friend bool operator==(const WQSymElem& a, const WQSymElem& b) {
    if (a.basis_ != b.basis_) throw BasisMismatch("WQSym elements compared across bases");
    return a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const WQSymElem& x) { return os << x.str(); }
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [u, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.str() + ")" + wbasis_name(basis_) + "_" + seq_str(u);
    }
    return s;
  }

 private:
  void check(const WQSymElem& o) const {
    if (o.basis_ != basis_) throw BasisMismatch("WQSym basis mismatch");
  }
  WBasis basis_;
  std::map<Word, LaurentPoly> terms_;
};

inline WQSymElem omega_M(const WQSymElem& x) {
  if (x.basis() != WBasis::M) throw BasisMismatch("omega_M needs the M basis");
  WQSymElem r(WBasis::M);
  for (const auto& [u, c] : x.terms()) {
    bool neg = (u.size() - max_letter(u)) % 2;
    for (const auto& v : refinement_below(u)) r.add_term(v, neg ? -c : c);
  }
  return r;
}

inline QSym commutative_image(const WQSymElem& x) {
  if (x.basis() == WBasis::M) {
    QSym r(QBasis::M);
    for (const auto& [u, c] : x.terms()) r.add_term(evaluation(u), c);
    return r;
  }
  QSym r(QBasis::F);
  for (const auto& [u, c] : x.terms()) {
    if (!is_min_word(u)) throw NotMinWord("Phi word is not a minimal destandardization: " + seq_str(u));
    r.add_term(descent_composition(static_cast<int>(u.size()), descents(inverse(standardize(u)))), c);
  }
  return r;
}

inline LaurentPoly coeff(const WQSymElem& x, const Word& u) { return x.coeff(u); }

}  // namespace ncmac

#endif
