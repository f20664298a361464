#ifndef NCMAC_RATFUNC_HPP
#define NCMAC_RATFUNC_HPP

#include <stdexcept>

#include "laurent.hpp"

namespace ncmac {

struct NonPolynomialResult : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quotient of Laurent polynomials. No general gcd: reduction removes the
// monomial factor and rational content, then cancels exactly when possible.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const LaurentPoly& n) : num_(n), den_(1) {}  // NOLINT(implicit)
  RatFunc(long long c) : num_(c), den_(1) {}             // NOLINT(implicit)
  RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("zero denominator");
    normalize();
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  LaurentPoly demote() const {
    if (den_ == LaurentPoly(1)) return num_;
    try {
      return exact_div(num_, den_);
    } catch (const NonExactDivision&) {
      throw NonPolynomialResult("result is not a Laurent polynomial: (" + num_.str() + ")/(" + den_.str() + ")");
    }
  }

  // Divide numerator and denominator by f while it divides both.
  RatFunc& cancel(const LaurentPoly& f) {
    while (!num_.is_zero() && divides(f, num_) && divides(f, den_)) {
      num_ = exact_div(num_, f);
      den_ = exact_div(den_, f);
    }
    normalize();
    return *this;
  }

  RatFunc operator-() const { return RatFunc(-num_, den_, raw{}); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

  std::string str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  struct raw {};
  RatFunc(LaurentPoly n, LaurentPoly d, raw) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = LaurentPoly(1);
      return;
    }
    if (den_.is_monomial()) {
      num_ = exact_div(num_, den_);
      den_ = LaurentPoly(1);
      return;
    }
    Monomial m = den_.min_monomial();
    den_ = den_.shift(m.inverse());
    num_ = num_.shift(m.inverse());
    mpz_class g = 0, l = 1;
    for (const auto& t : den_.terms()) {
      mpq_class c = t.c.to_mpq();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    mpq_class cq(g, l);
    cq.canonicalize();
    Rational content(cq);
    if (den_.leading().c.sign() < 0) content = -content;
    Rational inv = Rational(1) / content;
    den_ = den_.shift(Monomial{}, inv);
    num_ = num_.shift(Monomial{}, inv);
    if (divides(den_, num_)) {
      num_ = exact_div(num_, den_);
      den_ = LaurentPoly(1);
    }
  }

  LaurentPoly num_, den_;
};

}  // namespace ncmac

#endif
