#ifndef NCMAC_MODP_HPP
#define NCMAC_MODP_HPP

#include <array>
#include <cstdint>
#include <random>

#include "laurent.hpp"

namespace ncmac {

// Prime field F_p, p = 2^61 - 1. Used only as a filter: unequal images prove
// unequal exact values, equal images are confirmed exactly by the caller.
struct Fp {
  static constexpr std::uint64_t P = (1ULL << 61) - 1;
  std::uint64_t v = 0;

  Fp() = default;
  Fp(long long x) {  // NOLINT(implicit)
    long long r = x % static_cast<long long>(P);
    v = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(P) : r);
  }
  static Fp raw(std::uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }
  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v + b.v;
    return raw(s >= P ? s - P : s);
  }
  friend Fp operator-(Fp a, Fp b) { return raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v); }
  Fp operator-() const { return raw(v ? P - v : 0); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 m = static_cast<unsigned __int128>(a.v) * b.v;
    std::uint64_t lo = static_cast<std::uint64_t>(m & P), hi = static_cast<std::uint64_t>(m >> 61);
    std::uint64_t s = lo + hi;
    return raw(s >= P ? s - P : s);
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp pow(long long e) const {
    if (e < 0) return inv().pow(-e);
    Fp r(1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const { return pow(static_cast<long long>(P - 2)); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }

  static Fp of(const Rational& r) {
    if (r.is_small()) return Fp(r.small_num()) / Fp(r.small_den());
    mpq_class q = r.to_mpq();
    mpz_class n = q.get_num() % mpz_class(std::to_string(P)), d = q.get_den() % mpz_class(std::to_string(P));
    if (n < 0) n += mpz_class(std::to_string(P));
    return raw(std::stoull(n.get_str())) / raw(std::stoull(d.get_str()));
  }
};

using FpPoint = std::array<Fp, kSlots>;

inline FpPoint random_point(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  FpPoint pt;
  for (auto& x : pt) x = Fp::raw(2 + rng() % (Fp::P - 3));
  return pt;
}

inline Fp eval(const LaurentPoly& p, const FpPoint& pt) {
  Fp r;
  for (const auto& t : p.terms()) {
    Fp x = Fp::of(t.c);
    for (int s = 0; s < kSlots; ++s)
      if (t.m.e[s]) x *= pt[s].pow(t.m.e[s]);
    r += x;
  }
  return r;
}

}  // namespace ncmac

#endif
