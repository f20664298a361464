#ifndef NCMAC_COEFF_HPP
#define NCMAC_COEFF_HPP

#include "laurent.hpp"
#include "modp.hpp"
#include "ratfunc.hpp"

namespace ncmac {

template <class C>
struct Coeff;

template <>
struct Coeff<LaurentPoly> {
  static LaurentPoly from(const Rational& r) { return LaurentPoly(r); }
  static LaurentPoly from(const LaurentPoly& p) { return p; }
  static bool is_zero(const LaurentPoly& c) { return c.is_zero(); }
};

template <>
struct Coeff<RatFunc> {
  static RatFunc from(const Rational& r) { return RatFunc(LaurentPoly(r)); }
  static RatFunc from(const LaurentPoly& p) { return RatFunc(p); }
  static bool is_zero(const RatFunc& c) { return c.is_zero(); }
};

template <>
struct Coeff<Fp> {
  static Fp from(const Rational& r) { return Fp::of(r); }
  static bool is_zero(const Fp& c) { return c.v == 0; }
};

}  // namespace ncmac

#endif
