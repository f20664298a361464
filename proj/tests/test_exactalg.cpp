#include <gtest/gtest.h>

#include <random>

#include "ncmac/io.hpp"
#include "ncmac/laurent.hpp"
#include "ncmac/modp.hpp"
#include "ncmac/ratfunc.hpp"

using namespace ncmac;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly one(1);

LaurentPoly random_poly(std::mt19937& rng, int terms) {
  std::vector<Term> ts;
  std::uniform_int_distribution<int> ex(-2, 3), co(-5, 5), sl(0, 3);
  int slots[4] = {kSlotQ, kSlotT, slot_t(1), slot_z(1)};
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    m.e[slots[sl(rng)]] = static_cast<std::int16_t>(ex(rng));
    m.e[slots[sl(rng)]] = static_cast<std::int16_t>(ex(rng));
    ts.push_back({m, Rational(co(rng), 1 + (i % 3))});
  }
  return LaurentPoly::from_terms(ts);
}
}  // namespace

TEST(Rational, Basics) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(-3, -9), Rational(1, 3));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, OverflowSpillsToBig) {
  Rational big(1LL << 62);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.num_str(), "21267647932558653966460912964485513216");
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq / big).is_small());
  Rational r = Rational(1, 3) * Rational(INT64_MAX);
  EXPECT_EQ(r * Rational(3), Rational(INT64_MAX));
}

TEST(Laurent, Arith) {
  EXPECT_EQ((q - one) + one, q);
  EXPECT_EQ((q - one) * (q + one), q.pow(2) - one);
  EXPECT_EQ(LaurentPoly::ti(1) * LaurentPoly::ti(1, -1), one);
  EXPECT_TRUE((q - q).is_zero());
}

TEST(Laurent, ExactDiv) {
  EXPECT_EQ(exact_div(q.pow(2) - one, q - one), q + one);
  EXPECT_THROW(exact_div(q - LaurentPoly::t(), q - one), NonExactDivision);
  EXPECT_EQ(exact_div(q.pow(-3) - q.pow(2), q.pow(-1) - one), q.pow(-2) + q.pow(-1) + one + q + q.pow(2));
}

// theta_2 numerator: ((q-1)^2 p1^2 + (q^2-1) p2)/2 is divisible by (q-1).
TEST(Laurent, ThetaTwoCoefficients) {
  LaurentPoly c11 = (q - one).pow(2) * LaurentPoly(Rational(1, 2));
  LaurentPoly c2 = (q.pow(2) - one) * LaurentPoly(Rational(1, 2));
  EXPECT_EQ(exact_div(c11, q - one), (q - one) * LaurentPoly(Rational(1, 2)));
  EXPECT_EQ(exact_div(c2, q - one), (q + one) * LaurentPoly(Rational(1, 2)));
}

TEST(Laurent, RandomDivisionRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(rng, 1 + i % 6), d = random_poly(rng, 1 + i % 4);
    if (d.is_zero()) continue;
    EXPECT_EQ(exact_div(p * d, d), p);
  }
}

TEST(Laurent, JsonRoundTripAndOrder) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly p = random_poly(rng, 5);
    auto j = to_json(p);
    EXPECT_EQ(poly_from_json(j), p);
    EXPECT_EQ(to_json(poly_from_json(j)).dump(), j.dump());
  }
  auto j = to_json(q * LaurentPoly::ti(2) - LaurentPoly(Rational(1, 2)));
  EXPECT_EQ(j.dump(), R"({"terms":[{"den":"2","exp":[0,0],"num":"-1"},{"den":"1","exp":[1,1],"num":"1"}],"vars":["q","t_2"]})");
}

TEST(RatFunc, Normalization) {
  RatFunc r(q.pow(2) - one, q - one);
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.demote(), q + one);
  RatFunc s(q, LaurentPoly(2) * q * (q - one));
  EXPECT_EQ(s.den(), q - one);
  EXPECT_EQ(s.num(), LaurentPoly(Rational(1, 2)));
  EXPECT_THROW(s.demote(), NonPolynomialResult);
  RatFunc u = RatFunc(one, q - one) + RatFunc(one, one - q);
  EXPECT_TRUE(u.is_zero());
}

TEST(ModP, FilterAgreesWithExact) {
  std::mt19937 rng(3);
  FpPoint pt = random_point(42);
  for (int i = 0; i < 50; ++i) {
    LaurentPoly a = random_poly(rng, 4), b = random_poly(rng, 4);
    EXPECT_EQ(eval(a * b, pt), eval(a, pt) * eval(b, pt));
    EXPECT_EQ(eval(a - b, pt), eval(a, pt) - eval(b, pt));
  }
}
