#include <gtest/gtest.h>

#include "ncmac/io.hpp"
#include "ncmac/qsym.hpp"
#include "ncmac/sym.hpp"

using namespace ncmac;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);
Sym term(Basis b, Partition l, LaurentPoly c = LaurentPoly(1)) { return Sym(b, l, c); }
}  // namespace

TEST(Sym, ConvertExamples) {
  Sym h2p = convert(term(Basis::h, {2}), Basis::p);
  EXPECT_EQ(h2p, term(Basis::p, {2}, LaurentPoly(Rational(1, 2))) + term(Basis::p, {1, 1}, LaurentPoly(Rational(1, 2))));
  EXPECT_EQ(convert(term(Basis::s, {2, 1}), Basis::h), term(Basis::h, {2, 1}) - term(Basis::h, {3}));
  EXPECT_EQ(convert(term(Basis::m, {1, 1}), Basis::s), term(Basis::s, {1, 1}));
}

TEST(Sym, Omega) {
  EXPECT_EQ(omega(term(Basis::h, {4})), convert(term(Basis::e, {4}), Basis::h));
  EXPECT_EQ(omega(term(Basis::s, {2, 1})), term(Basis::s, {2, 1}));
  EXPECT_EQ(omega(term(Basis::p, {2})), term(Basis::p, {2}, LaurentPoly(-1)));
}

TEST(Sym, OmegaInvolutionAllBases) {
  for (int n = 1; n <= 8; ++n)
    for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      for (const auto& l : partitions(n)) {
        if (n == 8 && b != Basis::s && l.size() > 3) continue;
        Sym f = term(b, l, q + LaurentPoly(size_of(l)));
        EXPECT_EQ(omega(omega(f)), f);
      }
}

TEST(Sym, RoundTrips) {
  for (int n = 1; n <= 7; ++n)
    for (Basis a : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s})
      for (Basis b : {Basis::m, Basis::h, Basis::e, Basis::p, Basis::s}) {
        Sym f(a);
        int k = 0;
        for (const auto& l : partitions(n)) f.add_term(l, LaurentPoly(++k) + q.pow(k % 3));
        EXPECT_EQ(convert(convert(f, b), a), f);
      }
}

// p_rho -> m via direct variable substitution in n variables, oracle for the m-expansion.
TEST(Sym, PowerSumToMonomialOracle) {
  for (const auto& rho : partitions(5)) {
    Sym m = convert(term(Basis::p, rho), Basis::m);
    for (const auto& mu : partitions(5)) {
      // coefficient of x^mu in prod_i (x_1^{r_i} + ... + x_5^{r_i})
      std::vector<int> e(5, 0);
      long long cnt = 0;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rho.size()) {
          std::vector<int> want(mu);
          want.resize(5, 0);
          cnt += e == want;
          return;
        }
        for (int v = 0; v < 5; ++v) e[v] += rho[i], rec(i + 1), e[v] -= rho[i];
      };
      rec(0);
      EXPECT_EQ(m.coeff(mu), LaurentPoly(cnt)) << seq_str(rho) << " " << seq_str(mu);
    }
  }
}

TEST(Sym, ScalarEval) {
  EXPECT_EQ(scalar_eval(term(Basis::h, {2}), Alphabet::one()).demote(), one);
  EXPECT_EQ(scalar_eval(term(Basis::e, {3}), Alphabet::one()).demote(), LaurentPoly(0));
  EXPECT_EQ(scalar_eval(term(Basis::e, {3}), Alphabet::minus_one()).demote(), LaurentPoly(-1));
  EXPECT_EQ(scalar_eval(term(Basis::h, {3}), Alphabet::minus_one()).demote(), LaurentPoly(0));
  // h_1(q/(t-1)) = q/(t-1)
  RatFunc r = scalar_eval(term(Basis::h, {1}), Alphabet::ratio(q, 0, t, 1));
  EXPECT_EQ(r, RatFunc(q, t - one));
  EXPECT_THROW(scalar_eval(term(Basis::h, {1}), Alphabet::ratio(q, 0, one, one)), SpecializationPole);
}

TEST(Sym, PlethysmScale) {
  auto f = plethysm_scale(term(Basis::h, {1}), Pleth::QMinus1);
  EXPECT_EQ(demote(f), term(Basis::h, {1}, q - one));
  auto g = plethysm_scale(term(Basis::h, {1}, q - one), Pleth::InvQMinus1);
  EXPECT_EQ(demote(g), term(Basis::h, {1}));
  // (q-1)^{-1}[z2 s2 + z1 s11]((q-1)X) = (q z2 - z1) s2 + (q z1 - z2) s11
  LaurentPoly z1 = LaurentPoly::z(1), z2 = LaurentPoly::z(2);
  Sym y = term(Basis::s, {2}, z2) + term(Basis::s, {1, 1}, z1);
  Sym fwd = plethysm_forward(y, Pleth::QMinus1).map_coeffs([&](const LaurentPoly& c) { return exact_div(c, q - one); });
  EXPECT_EQ(fwd, term(Basis::s, {2}, q * z2 - z1) + term(Basis::s, {1, 1}, q * z1 - z2));
  for (const auto& l : partitions(4)) {
    Sym s = term(Basis::s, l, q + t);
    EXPECT_EQ(demote(plethysm_scale(plethysm_forward(s, Pleth::OneMinusQ), Pleth::InvOneMinusQ)), s);
  }
}

TEST(Sym, Theta) {
  ThetaExpr<LaurentPoly> th2{{{2}, one}};
  EXPECT_EQ(theta_to_sym(th2, Basis::h), term(Basis::h, {2}, q + one) - term(Basis::h, {1, 1}));
  EXPECT_EQ(theta_to_sym({{{1}, one}}, Basis::h), term(Basis::h, {1}));
  ThetaExpr<LaurentPoly> e{{{1, 1, 1, 1}, one}, {{2, 1, 1}, q + LaurentPoly(3)}, {{2, 2}, one}, {{3, 1}, LaurentPoly(2) * q + LaurentPoly(2)}, {{4}, q + one}};
  Sym want = term(Basis::h, {3, 1}, q.pow(3) + LaurentPoly(2) * q.pow(2) + q) +
             term(Basis::h, {4}, q.pow(4) + LaurentPoly(2) * q.pow(3) + LaurentPoly(2) * q.pow(2) + LaurentPoly(2) * q + one);
  EXPECT_EQ(theta_to_sym(e, Basis::h), want);
}

TEST(Sym, Ribbon) {
  EXPECT_EQ(ribbon_image({3}), term(Basis::h, {3}));
  EXPECT_EQ(convert(ribbon_image({1, 1}), Basis::e), term(Basis::e, {2}));
  EXPECT_EQ(convert(ribbon_image({2, 1}), Basis::s), term(Basis::s, {2, 1}));
}

TEST(QSym, ToSym) {
  QSym f(QBasis::M);
  f.add_term({1, 2}, one);
  f.add_term({2, 1}, one);
  EXPECT_EQ(qsym_to_sym(f), term(Basis::m, {2, 1}));
  QSym g(QBasis::M);
  g.add_term({1, 2}, one);
  EXPECT_THROW(qsym_to_sym(g), NotSymmetric);
}

// Sum of F over descent compositions of all permutations of S_n is h_1^n.
TEST(QSym, FundamentalSum) {
  for (int n = 1; n <= 5; ++n) {
    QSym f(QBasis::F);
    for (const auto& s : all_perms(n)) f.add_term(descent_composition(n, descents(inverse(s))), one);
    EXPECT_EQ(convert(qsym_to_sym(f), Basis::h), term(Basis::h, Partition(n, 1)));
  }
}

TEST(QSym, OmegaAgreesWithSym) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions(n)) {
      Sym s = term(Basis::s, l, q + one);
      QSym M = sym_to_qsym(s);
      EXPECT_EQ(qsym_to_sym(qsym_omega(M)), convert(omega(s), Basis::m));
    }
}

TEST(Sym, JsonRoundTrip) {
  Sym f = term(Basis::s, {3, 2, 1}, q * t - one) + term(Basis::s, {2}, q);
  EXPECT_EQ(sym_from_json(to_json(f)), f);
}
