#include <gtest/gtest.h>

#include "ncmac/macdonald.hpp"

using namespace ncmac;

namespace {
const LaurentPoly q = LaurentPoly::q();
const LaurentPoly t = LaurentPoly::t();
const LaurentPoly t1 = LaurentPoly::ti(1);
const LaurentPoly t2 = LaurentPoly::ti(2);
const LaurentPoly one(1);

// Classical HHL sum for the modified Macdonald polynomial, written against the
// fundamental basis: q^{inv} t^{maj} F_{iDes(reading word)}.
Sym hhl_oracle(const Partition& mu) {
  struct C {
    int r, c;
  };
  std::vector<C> cells;
  for (int r = static_cast<int>(mu.size()); r >= 1; --r)
    for (int c = 1; c <= mu[r - 1]; ++c) cells.push_back({r, c});
  int n = static_cast<int>(cells.size());
  auto at = [&](int r, int c) {
    for (int i = 0; i < n; ++i)
      if (cells[i].r == r && cells[i].c == c) return i;
    return -1;
  };
  QSym f(QBasis::F);
  for (const auto& w : all_perms(n)) {
    int inv = 0, maj = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool att = cells[i].r == cells[j].r || (cells[i].r == cells[j].r + 1 && cells[i].c > cells[j].c);
        if (att && w[i] > w[j]) ++inv;
      }
    for (int i = 0; i < n; ++i) {
      if (cells[i].r == 1) continue;
      if (w[i] > w[at(cells[i].r - 1, cells[i].c)]) {
        int arm = mu[cells[i].r - 1] - cells[i].c, leg = 0;
        for (int rr = cells[i].r + 1; rr <= static_cast<int>(mu.size()); ++rr) leg += mu[rr - 1] >= cells[i].c;
        inv -= arm;
        maj += leg + 1;
      }
    }
    std::vector<int> ides;
    Perm wi = inverse(w);
    for (int i = 1; i < n; ++i)
      if (wi[i] < wi[i - 1]) ides.push_back(i);
    f.add_term(descent_composition(n, ides), q.pow(inv) * t.pow(maj));
  }
  return convert(qsym_to_sym(f), Basis::s);
}
}  // namespace

TEST(Convention, BootstrapHasUniqueSurvivor) {
  BootstrapResult br = run_convention_bootstrap();
  ASSERT_EQ(br.survivors.size(), 1u);
  EXPECT_EQ(frozen_convention(), (Convention{true, true}));
}

TEST(Cells, ArmLegSouth) {
  CellDiagram d = cell_diagram({4, 3, 1, 1});
  EXPECT_EQ(d.arm({1, 1}), 3);
  EXPECT_EQ(d.leg({1, 1}), 3);
  EXPECT_EQ(d.leg({2, 2}), 0);
  EXPECT_EQ(d.cells().front(), (Cell{4, 1}));
  EXPECT_EQ(d.pos(d.south({2, 3})), d.pos({1, 3}));
}

TEST(HHL, Stats) {
  CellDiagram d = cell_diagram({2, 1, 1});
  EXPECT_EQ(ncH_weight({4, 3, 2, 1}, d, false), q);
  CellDiagram col = cell_diagram({1, 1, 1});
  EXPECT_TRUE(hhl_stats({1, 2, 3}, col).des.empty());
}

TEST(HHL, H21Census) {
  std::multiset<std::string> got, want = {"t", "1", "q*t", "q*t", "1", "q"};
  CellDiagram d = cell_diagram({2, 1});
  for (const auto& s : all_perms(3)) got.insert(ncH_weight(s, d, false).str());
  std::multiset<std::string> w2;
  for (auto x : {t, one, q * t, q * t, one, q}) w2.insert(x.str());
  EXPECT_EQ(got, w2);
}

// The printed two-term decomposition of H_21 and its LLT expansions.
TEST(Direct, H21MatchesDecomposition) {
  WQSymElem edge = parse_phi(golden::kH21EdgeLLT), path = parse_phi(golden::kH21PathLLT);
  HWPair hp = hw_pair({2, 1});
  EXPECT_EQ(omega_llt_tilde(hp.G, WBasis::Phi), edge);
  EXPECT_EQ(omega_llt_tilde(hp.Gplus, WBasis::Phi), path);
  // The printed sum omits the 1/(q-1) prefactor.
  EXPECT_EQ((q - one) * ncH_direct({2, 1}), (q * t - one) * edge + (one - t) * path);
  EXPECT_EQ(hw_assemble({2, 1}, Variant::H), ncH_direct({2, 1}));
  // The six-term display has the same commutative image.
  EXPECT_EQ(commutative_sym(parse_phi(golden::kH21Display)), commutative_sym(ncH_direct({2, 1})));
}

TEST(Direct, H211Phi) {
  WQSymElem want = parse_phi(golden::kH211Phi);
  EXPECT_EQ(want.size(), 24u);
  EXPECT_EQ(ncH_direct({2, 1, 1}), want);
}

TEST(Direct, H211MultiT) {
  WQSymElem want = parse_phi(golden::kH211MultiT);
  EXPECT_EQ(want.size(), 24u);
  EXPECT_EQ(ncH_direct({2, 1, 1}, true), want);
}

TEST(HW, FourPicturedGraphs) {
  HWPair hp = hw_pair({2, 1, 1});
  std::vector<std::pair<int, int>> g = {{3, 4}};
  EXPECT_EQ(hp.base_edges, g);
  ASSERT_EQ(hp.optional.size(), 2u);
  auto with = [&](std::vector<std::pair<int, int>> extra) {
    auto e = hp.base_edges;
    e.insert(e.end(), extra.begin(), extra.end());
    return llt_tilde_edges(4, e);
  };
  WQSymElem base = parse_phi(golden::kLLT211Base), e2 = parse_phi(golden::kLLT211T2), e1 = parse_phi(golden::kLLT211T1),
            both = parse_phi(golden::kLLT211Both);
  EXPECT_EQ(with({}), base);
  EXPECT_EQ(with({{1, 2}}), e1);
  EXPECT_EQ(with({{2, 3}}), e2);
  EXPECT_EQ(with({{1, 2}, {2, 3}}), both);
  WQSymElem combo = (q * t2 - one) * (q * t1 - one) * base + (one - t2) * (q * t1 - one) * e2 + (q * t2 - one) * (one - t1) * e1 +
                    (one - t2) * (one - t1) * both;
  LaurentPoly d = (q - one).pow(2);
  EXPECT_EQ(combo.map_coeffs([&](const LaurentPoly& c) { return exact_div(c, d); }), parse_phi(golden::kH211MultiT));
}

TEST(HW, TheoremSingleAndMultiT) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions(n))
      for (bool multi : {false, true}) EXPECT_EQ(ncH_direct(mu, multi), hw_assemble(mu, Variant::H, multi)) << seq_str(mu) << multi;
}

TEST(HW, MonomialCoefficients) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) {
      EXPECT_TRUE(all_monomial_coeffs(hw_assemble(mu, Variant::H, true))) << seq_str(mu);
      EXPECT_TRUE(all_monomial_coeffs(hw_assemble(mu, Variant::Tilde, true))) << seq_str(mu);
    }
}

TEST(HW, GraphsAreDyck) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) {
      HWPair hp = hw_pair(mu);
      EXPECT_EQ(hp.optional.size(), static_cast<std::size_t>(n - mu[0]));
      for (unsigned mask = 0; mask < (1u << hp.optional.size()); ++mask) {
        auto e = hp.base_edges;
        for (std::size_t b = 0; b < hp.optional.size(); ++b)
          if (mask >> b & 1u) e.push_back(hp.optional[b].edge);
        EXPECT_NO_THROW(DyckGraph::from_edges(n, e)) << seq_str(mu) << " mask " << mask;
      }
    }
}

TEST(TildeH, Annex) {
  for (const auto& a : golden::annex()) EXPECT_EQ(tildeH_sym(a.mu, true), parse_schur(a.schur)) << seq_str(a.mu);
}

TEST(TildeH, Displays211And222) {
  EXPECT_EQ(tildeH_sym({2, 1, 1}, true), parse_schur(golden::kTildeH211Schur));
  EXPECT_EQ(tildeH_sym({2, 2, 2}, true), parse_schur(golden::kTildeH222Rect));
  WQSymElem x = hw_assemble({2, 1, 1}, Variant::Tilde, true);
  EXPECT_EQ(commutative_sym(x), parse_schur(golden::kTildeH211Schur));
}

TEST(TildeH, ClassicalOracle) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions(n)) EXPECT_EQ(tildeH_sym(mu), hhl_oracle(mu)) << seq_str(mu);
}

TEST(TildeH, MultiTSpecializes) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) {
      Sym m = tildeH_sym(mu, true).map_coeffs(specialize_t);
      EXPECT_EQ(m, tildeH_sym(mu)) << seq_str(mu);
    }
}

TEST(TildeH, HOneN) {
  WQSymElem two(WBasis::Phi);
  two.add_term({1, 1}, one);
  two.add_term({2, 1}, t1);
  EXPECT_EQ(H_one_n(2, true), two);
  for (int n = 1; n <= 5; ++n) {
    Partition col(n, 1);
    EXPECT_EQ(H_one_n(n, true), hw_assemble(col, Variant::Tilde, true)) << n;
  }
  for (int n = 1; n <= 6; ++n) {
    Sym k(Basis::h);
    for (const auto& I : compositions(n)) {
      LaurentPoly w(1);
      for (int d : composition_descents(I)) w = w * t_param(d, true);
      k += w * ribbon_image(I);
    }
    EXPECT_EQ(convert(k, Basis::s), commutative_sym(H_one_n(n, true))) << n;
  }
}

TEST(Conjectures, Wheel222) {
  auto lines = check_wheel(tildeH_sym({2, 2, 2}, true), {2, 2, 2}, true);
  bool seen = false;
  for (const auto& l : lines) {
    EXPECT_TRUE(l.pass) << seq_str(l.lambda);
    if (l.lambda == Partition{3, 2, 1}) {
      seen = true;
      EXPECT_EQ(l.d, 8);
      EXPECT_EQ(l.lhs[kSlotQ], Rational(24));
      EXPECT_EQ(l.lhs[slot_t(1)], Rational(16));
      EXPECT_EQ(l.lhs[slot_t(2)], Rational(16));
    }
  }
  EXPECT_TRUE(seen);
  for (const auto& l : check_wheel(tildeH_sym({4}), {4}, false)) EXPECT_TRUE(l.pass);
}

TEST(Conjectures, Hooks) {
  auto lines = check_hooks(tildeH_sym({2, 2, 2}), {2, 2, 2});
  EXPECT_EQ(lines[0].got, one);
  EXPECT_EQ(lines[1].want, q + t + q * t + t * t + q * t * t);
  for (const auto& l : lines) EXPECT_TRUE(l.pass) << l.k;
  auto two = check_hooks(tildeH_sym({1, 1}), {1, 1});
  EXPECT_EQ(two[1].got, t);
}

TEST(Conjectures, SchurPositivityThroughSix) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions(n)) EXPECT_TRUE(schur_positive(tildeH_sym(mu, true))) << seq_str(mu);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_phi("q s_{21}"), ParseError);
  EXPECT_THROW(parse_phi("\\Phi_{12} s_{1}"), ParseError);
  EXPECT_EQ(parse_poly("(q\\!-\\!1)^2"), (q - one).pow(2));
  EXPECT_EQ(parse_poly("t_{1}^{2} q^{-1}"), t1 * t1 * q.pow(-1));
}
