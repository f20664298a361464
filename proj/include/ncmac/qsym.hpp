#ifndef NCMAC_QSYM_HPP
#define NCMAC_QSYM_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "sym.hpp"

namespace ncmac {

enum class QBasis { M, F };

struct NotSymmetric : std::runtime_error {
  Composition a, b;
  NotSymmetric(Composition x, Composition y)
      : std::runtime_error("not symmetric: M_" + seq_str(x) + " and M_" + seq_str(y) + " differ"), a(std::move(x)), b(std::move(y)) {}
};

template <class C>
class QSymFunc {
 public:
  explicit QSymFunc(QBasis b = QBasis::M) : basis_(b) {}
  QBasis basis() const { return basis_; }
  const std::map<Composition, C>& terms() const { return terms_; }
  C coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? C{} : it->second;
  }
  void add_term(const Composition& a, const C& c) {
    if (Coeff<C>::is_zero(c)) return;
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_.emplace(a, c);
    } else {
      it->second = it->second + c;
      if (Coeff<C>::is_zero(it->second)) terms_.erase(it);
    }
  }
  QSymFunc& operator+=(const QSymFunc& o) {
    if (o.basis_ != basis_) throw std::logic_error("QSym basis mismatch");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  friend bool operator==(const QSymFunc& x, const QSymFunc& y) {
    if (x.basis_ != y.basis_) throw std::logic_error("comparing QSym in different bases");
    if (x.terms_.size() != y.terms_.size()) return false;
    for (auto i = x.terms_.begin(), j = y.terms_.begin(); i != x.terms_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

 private:
  QBasis basis_;
  std::map<Composition, C> terms_;
};

using QSym = QSymFunc<LaurentPoly>;

// Compositions beta refining alpha (alpha is a coarsening of beta).
inline std::vector<Composition> refinements(const Composition& a) {
  std::vector<Composition> out{{}};
  for (int part : a) {
    std::vector<Composition> next;
    for (const auto& pre : out)
      for (const auto& c : compositions(part)) {
        Composition x = pre;
        x.insert(x.end(), c.begin(), c.end());
        next.push_back(x);
      }
    out = std::move(next);
  }
  return out;
}

template <class C>
QSymFunc<C> to_M(const QSymFunc<C>& f) {
  if (f.basis() == QBasis::M) return f;
  QSymFunc<C> r(QBasis::M);
  for (const auto& [a, c] : f.terms())
    for (const auto& b : refinements(a)) r.add_term(b, c);
  return r;
}

template <class C>
QSymFunc<C> to_F(const QSymFunc<C>& f) {
  if (f.basis() == QBasis::F) return f;
  QSymFunc<C> r(QBasis::F);
  for (const auto& [a, c] : f.terms())
    for (const auto& b : refinements(a)) {
      bool neg = (b.size() - a.size()) % 2;
      r.add_term(b, neg ? -c : c);
    }
  return r;
}

template <class C>
SymFunc<C> qsym_to_sym(const QSymFunc<C>& f) {
  QSymFunc<C> M = to_M(f);
  SymFunc<C> r(Basis::m);
  std::map<Partition, Composition> witness;
  for (const auto& [a, c] : M.terms()) {
    Partition l = sorted_partition(a);
    if (!witness.count(l)) {
      witness[l] = a;
      r.add_term(l, c);
    }
  }
  for (const auto& [l, a0] : witness) {
    Composition a = l;
    std::sort(a.begin(), a.end());
    C c0 = M.coeff(a0);
    do {
      if (!(M.coeff(a) == c0)) throw NotSymmetric(a0, a);
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return r;
}

template <class C>
QSymFunc<C> sym_to_qsym(const SymFunc<C>& f) {
  SymFunc<C> m = convert(f, Basis::m);
  QSymFunc<C> r(QBasis::M);
  for (const auto& [l, c] : m.terms()) {
    Composition a = l;
    std::sort(a.begin(), a.end());
    do r.add_term(a, c);
    while (std::next_permutation(a.begin(), a.end()));
  }
  return r;
}

// omega(M_a) = (-1)^{n - l(a)} sum over coarsenings b of a of M_b; restricts to omega on Sym.
template <class C>
QSymFunc<C> qsym_omega(const QSymFunc<C>& f) {
  QSymFunc<C> M = to_M(f), r(QBasis::M);
  for (const auto& [a, c] : M.terms()) {
    bool neg = (size_of(a) - a.size()) % 2;
    for (const auto& b : coarsenings(a)) r.add_term(b, neg ? -c : c);
  }
  return f.basis() == QBasis::M ? r : to_F(r);
}

}  // namespace ncmac

#endif
