#ifndef NCMAC_RATIONAL_HPP
#define NCMAC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace ncmac {

// Exact rational with an int64 fast path; spills to GMP on overflow.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT(implicit)
  Rational(long long n, long long d) { set_small(n, d); }
  explicit Rational(const mpq_class& q) { set_big(q); }
  explicit Rational(const std::string& num, const std::string& den = "1") {
    mpq_class q{mpz_class(num), mpz_class(den)};
    if (q.get_den() == 0) throw std::domain_error("zero denominator");
    q.canonicalize();
    set_big(q);
  }

  Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
    if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
  }
  Rational(Rational&&) noexcept = default;
  Rational& operator=(const Rational& o) {
    if (this != &o) {
      num_ = o.num_;
      den_ = o.den_;
      big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Rational& operator=(Rational&&) noexcept = default;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }
  int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
  bool is_small() const { return !big_; }
  long long small_num() const { return num_; }
  long long small_den() const { return den_; }

  mpq_class to_mpq() const {
    if (big_) return *big_;
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num_);
    mpz_set_si(q.get_den_mpz_t(), den_);
    return q;
  }
  std::string num_str() const { return big_ ? big_->get_num().get_str() : std::to_string(num_); }
  std::string den_str() const { return big_ ? big_->get_den().get_str() : std::to_string(den_); }
  std::string str() const { return is_integer() ? num_str() : num_str() + "/" + den_str(); }

  Rational operator-() const {
    if (!big_ && num_ != INT64_MIN) return Rational(-num_, den_, raw_tag{});
    return Rational(mpq_class(-to_mpq()));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_add_overflow(a.num_, b.num_, &r)) return Rational(r, 1, raw_tag{});
      } else {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
      }
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) {
        long long r;
        if (!__builtin_mul_overflow(a.num_, b.num_, &r)) return Rational(r, 1, raw_tag{});
      } else {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
      }
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    if (!a.big_ && !b.big_) {
      __int128 n = static_cast<__int128>(a.num_) * b.den_;
      __int128 d = static_cast<__int128>(a.den_) * b.num_;
      if (d < 0) n = -n, d = -d;
      return from128(n, d);
    }
    return Rational(mpq_class(a.to_mpq() / b.to_mpq()));
  }
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return a.to_mpq() == b.to_mpq();
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
      return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct raw_tag {};
  Rational(long long n, long long d, raw_tag) : num_(n), den_(d) {}

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    while (b != 0) {
      __int128 r = a % b;
      a = b;
      b = r;
    }
    return a < 0 ? -a : a;
  }
  static Rational from128(__int128 n, __int128 d) {
    __int128 g = gcd128(n, d);
    if (g > 1) n /= g, d /= g;
    if (n >= INT64_MIN && n <= INT64_MAX && d <= INT64_MAX) return Rational(static_cast<long long>(n), static_cast<long long>(d), raw_tag{});
    auto to_mpz = [](__int128 v) {
      bool neg = v < 0;
      unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
      mpz_class hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0UL));
      mpz_class r = (hi << 64) + lo;
      return neg ? mpz_class(-r) : r;
    };
    mpq_class q(to_mpz(n), to_mpz(d));
    return Rational(q);
  }
  void set_small(long long n, long long d) {
    if (d == 0) throw std::domain_error("zero denominator");
    *this = from128(d < 0 ? -static_cast<__int128>(n) : n, d < 0 ? -static_cast<__int128>(d) : d);
  }
  void set_big(const mpq_class& q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
      num_ = q.get_num().get_si();
      den_ = q.get_den().get_si();
      big_.reset();
    } else {
      num_ = 0;
      den_ = 1;
      big_ = std::make_unique<mpq_class>(q);
    }
  }

  long long num_ = 0;
  long long den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace ncmac

#endif
