#pragma once

// Reader for printed expansions: sums of polynomial coefficients times
// Phi-words or Schur functions, e.g. "q t_1 \Phi_{121} + (q+t_2) s_{21}".

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ncmac/sym.hpp"
#include "ncmac/wqsym.hpp"

namespace ncmac {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Linear combination keyed by basis index; the empty key is the scalar part.
struct ParsedExpr {
  char basis = 0;  // 'P' for Phi, 's' for Schur, 0 if purely scalar
  std::map<std::vector<int>, LaurentPoly> terms;
};

namespace detail {

class TexReader {
 public:
  explicit TexReader(std::string_view src) : s_(clean(src)) {}

  ParsedExpr run() {
    ParsedExpr e = expr();
    if (pos_ != s_.size()) fail("trailing input");
    e.basis = basis_;
    return e;
  }

 private:
  using Value = std::map<std::vector<int>, LaurentPoly>;

  static std::string clean(std::string_view src) {
    std::string out;
    for (std::size_t i = 0; i < src.size(); ++i) {
      char c = src[i];
      if (c == '\\' && i + 1 < src.size()) {
        char d = src[i + 1];
        if (d == '\\' || d == '!' || d == ',' || d == ' ' || d == ';') {
          ++i;
          continue;
        }
        static const std::string_view drop[] = {"\\left", "\\right", "\\cdot", "\\times"};
        bool dropped = false;
        for (auto w : drop)
          if (src.substr(i, w.size()) == w) {
            i += w.size() - 1;
            dropped = true;
            break;
          }
        if (dropped) continue;
      }
      if (std::isspace(static_cast<unsigned char>(c)) || c == '&') continue;
      out.push_back(c);
    }
    return out;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return eof() ? '\0' : s_[pos_]; }
  bool eat(std::string_view w) {
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  static void add_into(Value& a, const Value& b, bool neg) {
    for (const auto& [k, c] : b) {
      LaurentPoly v = a[k] + (neg ? -c : c);
      if (v.is_zero())
        a.erase(k);
      else
        a[k] = v;
    }
  }
  Value mul(const Value& a, const Value& b) const {
    Value r;
    for (const auto& [ka, ca] : a)
      for (const auto& [kb, cb] : b) {
        if (!ka.empty() && !kb.empty()) fail("product of two basis elements");
        const auto& k = ka.empty() ? kb : ka;
        add_into(r, Value{{k, ca * cb}}, false);
      }
    return r;
  }

  ParsedExpr expr() {
    ParsedExpr e;
    Value acc;
    bool first = true;
    while (!eof() && peek() != ')') {
      bool neg = false;
      if (eat("+")) {
      } else if (eat("-")) {
        neg = true;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      add_into(acc, term(), neg);
    }
    e.terms = acc;
    return e;
  }

  Value term() {
    Value v{{{}, LaurentPoly(1)}};
    bool any = false;
    while (!eof() && peek() != '+' && peek() != '-' && peek() != ')') {
      v = mul(v, factor());
      any = true;
    }
    if (!any) fail("empty term");
    return v;
  }

  int integer() {
    bool neg = eat("-");
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    int k = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) k = 10 * k + (s_[pos_++] - '0');
    return neg ? -k : k;
  }
  // Subscript or exponent argument: a single digit or a braced integer.
  int small_arg() {
    if (eat("{")) {
      int k = integer();
      if (!eat("}")) fail("expected }");
      return k;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
    return s_[pos_++] - '0';
  }
  std::vector<int> digit_list() {
    std::vector<int> r;
    if (eat("{")) {
      while (std::isdigit(static_cast<unsigned char>(peek()))) r.push_back(s_[pos_++] - '0');
      if (!eat("}")) fail("expected }");
    } else {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected index");
      r.push_back(s_[pos_++] - '0');
    }
    return r;
  }
  void set_basis(char b) {
    if (basis_ && basis_ != b) fail("mixed bases");
    basis_ = b;
  }

  Value factor() {
    Value v;
    if (eat("(")) {
      v = expr().terms;
      if (!eat(")")) fail("expected )");
    } else if (eat("\\Phi_")) {
      set_basis('P');
      v = {{digit_list(), LaurentPoly(1)}};
    } else if (eat("s_")) {
      set_basis('s');
      v = {{digit_list(), LaurentPoly(1)}};
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = {{{}, LaurentPoly(integer())}};
    } else if (eat("q")) {
      v = {{{}, LaurentPoly::q()}};
    } else if (eat("t")) {
      v = {{{}, eat("_") ? LaurentPoly::ti(small_arg()) : LaurentPoly::t()}};
    } else if (eat("z_")) {
      v = {{{}, LaurentPoly::z(small_arg())}};
    } else {
      fail("unexpected character");
    }
    if (eat("^")) {
      int k = small_arg();
      if (v.size() != 1 || !v.begin()->first.empty()) fail("power of a non-scalar");
      LaurentPoly base = v.begin()->second, r(1);
      if (k < 0) {
        if (!base.is_monomial()) fail("negative power of a non-monomial");
        r = base.pow(k);
      } else {
        for (int i = 0; i < k; ++i) r = r * base;
      }
      v = {{{}, r}};
    }
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
  char basis_ = 0;
};

}  // namespace detail

inline ParsedExpr parse_tex(std::string_view src) { return detail::TexReader(src).run(); }

inline LaurentPoly parse_poly(std::string_view src) {
  ParsedExpr e = parse_tex(src);
  if (e.basis) throw ParseError("expected a scalar expression");
  auto it = e.terms.find({});
  return it == e.terms.end() ? LaurentPoly() : it->second;
}

inline WQSymElem parse_phi(std::string_view src) {
  ParsedExpr e = parse_tex(src);
  if (e.basis != 'P') throw ParseError("expected a Phi expansion");
  WQSymElem r(WBasis::Phi);
  for (const auto& [k, c] : e.terms) {
    if (k.empty()) throw ParseError("scalar term in a Phi expansion");
    r.add_term(k, c);
  }
  return r;
}

inline Sym parse_schur(std::string_view src) {
  ParsedExpr e = parse_tex(src);
  if (e.basis != 's') throw ParseError("expected a Schur expansion");
  Sym r(Basis::s);
  for (const auto& [k, c] : e.terms) {
    if (k.empty()) throw ParseError("scalar term in a Schur expansion");
    r.add_term(k, c);
  }
  return r;
}

}  // namespace ncmac
