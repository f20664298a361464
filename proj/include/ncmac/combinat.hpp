#ifndef NCMAC_COMBINAT_HPP
#define NCMAC_COMBINAT_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncmac {

// Permutations are one-line notation with values 1..n; words, partitions and
// compositions are plain integer sequences.
using Perm = std::vector<int>;
using Word = std::vector<int>;
using Partition = std::vector<int>;
using Composition = std::vector<int>;

struct CodeOutOfRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::string seq_str(const std::vector<int>& v) {
  bool wide = std::any_of(v.begin(), v.end(), [](int x) { return x > 9; });
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (wide && i) s += ",";
    s += std::to_string(v[i]);
  }
  return s;
}

inline std::vector<int> parse_seq(const std::string& s) {
  std::vector<int> v;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) v.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad sequence: " + s);
      v.push_back(c - '0');
    }
  }
  return v;
}

inline bool is_perm(const Perm& w) {
  std::vector<bool> seen(w.size() + 1, false);
  for (int x : w) {
    if (x < 1 || x > static_cast<int>(w.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline Perm parse_perm(const std::string& s) {
  Perm w = parse_seq(s);
  if (!is_perm(w)) throw std::invalid_argument("not a permutation: " + s);
  return w;
}

inline Perm identity_perm(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline Perm inverse(const Perm& w) {
  Perm r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

// (a*b)(i) = a(b(i))
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

// w*s_i swaps positions i, i+1; s_i*w swaps values i, i+1 (1-based i).
inline Perm rmul_s(Perm w, int i) {
  std::swap(w[i - 1], w[i]);
  return w;
}
inline Perm lmul_s(Perm w, int i) {
  for (int& x : w) x = x == i ? i + 1 : x == i + 1 ? i : x;
  return w;
}

inline int length(const Perm& w) {
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) l += w[i] > w[j];
  return l;
}

// Positions d (1-based) with w(d) > w(d+1).
inline std::vector<int> descents(const Word& w) {
  std::vector<int> d;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
  return d;
}

inline Partition cycle_type(const Perm& w) {
  std::vector<bool> seen(w.size(), false);
  Partition p;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = w[j] - 1) seen[j] = true, ++len;
    p.push_back(len);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

inline std::vector<int> lehmer_code(const Perm& w) {
  std::vector<int> c(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c[i] += w[j] < w[i];
  return c;
}

inline Perm code_to_perm(const std::vector<int>& c) {
  int n = static_cast<int>(c.size());
  std::vector<int> avail = identity_perm(n);
  Perm w;
  for (int i = 0; i < n; ++i) {
    if (c[i] < 0 || c[i] >= n - i) throw CodeOutOfRange("Lehmer code entry out of range at position " + std::to_string(i + 1));
    w.push_back(avail[c[i]]);
    avail.erase(avail.begin() + c[i]);
  }
  return w;
}

inline bool is_packed(const Word& u) {
  if (u.empty()) return true;
  int m = *std::max_element(u.begin(), u.end());
  std::vector<bool> seen(m + 1, false);
  for (int x : u) {
    if (x < 1) return false;
    seen[x] = true;
  }
  for (int i = 1; i <= m; ++i)
    if (!seen[i]) return false;
  return true;
}

inline int max_letter(const Word& u) { return u.empty() ? 0 : *std::max_element(u.begin(), u.end()); }

// Composition (|u^{-1}(1)|, |u^{-1}(2)|, ...).
inline Composition evaluation(const Word& u) {
  Composition c(max_letter(u), 0);
  for (int x : u) ++c[x - 1];
  return c;
}

inline Word min_destd(const Perm& s) {
  std::vector<int> d = descents(inverse(s));
  Word u(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    u[i] = 1 + static_cast<int>(std::count_if(d.begin(), d.end(), [&](int x) { return x < s[i]; }));
  return u;
}

inline Perm standardize(const Word& u) {
  std::vector<int> idx(u.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return u[a] < u[b]; });
  Perm s(u.size());
  for (std::size_t k = 0; k < idx.size(); ++k) s[idx[k]] = static_cast<int>(k) + 1;
  return s;
}

inline bool is_min_word(const Word& u) { return is_packed(u) && min_destd(standardize(u)) == u; }

// All v <= u: merge adjacent blocks of the set composition of u.
inline std::vector<Word> refinement_below(const Word& u) {
  int r = max_letter(u);
  std::vector<Word> out;
  for (int mask = 0; mask < (1 << std::max(r - 1, 0)); ++mask) {
    std::vector<int> relabel(r + 1);
    int cur = 1;
    for (int k = 1; k <= r; ++k) {
      relabel[k] = cur;
      if (k < r && !(mask >> (k - 1) & 1)) ++cur;
    }
    Word v(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) v[i] = relabel[u[i]];
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool refines(const Word& v, const Word& u) {
  auto below = refinement_below(u);
  return std::find(below.begin(), below.end(), v) != below.end();
}

inline bool avoids(const Perm& w, const Perm& pat) {
  int n = static_cast<int>(w.size()), k = static_cast<int>(pat.size());
  if (k > n) return true;
  std::vector<int> pick;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<int> vals;
      for (int p : pick) vals.push_back(w[p]);
      return standardize(vals) == pat;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      bool hit = rec(i + 1);
      pick.pop_back();
      if (hit) return true;
    }
    return false;
  };
  return !rec(0);
}

// Leftmost-descent recursion: word(w) = word(w s_i) + [i].
inline std::vector<int> reduced_word(Perm w) {
  std::vector<int> word;
  while (true) {
    auto d = descents(w);
    if (d.empty()) break;
    word.push_back(d.front());
    w = rmul_s(w, d.front());
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Perm perm_of_word(int n, const std::vector<int>& word) {
  Perm w = identity_perm(n);
  for (int i : word) w = rmul_s(w, i);
  return w;
}

// Subword-property oracle for the Bruhat interval [id, w].
inline std::set<Perm> bruhat_interval_subwords(const Perm& w) {
  auto word = reduced_word(w);
  std::set<Perm> out;
  std::set<std::pair<std::size_t, Perm>> seen;
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t k, const Perm& cur) {
    if (!seen.insert({k, cur}).second) return;
    if (k == word.size()) {
      out.insert(cur);
      return;
    }
    rec(k + 1, cur);
    rec(k + 1, rmul_s(cur, word[k]));
  };
  rec(0, identity_perm(static_cast<int>(w.size())));
  return out;
}

// Tableau criterion: v <= w iff sorted prefixes of v are dominated entrywise.
inline bool bruhat_leq(const Perm& v, const Perm& w) {
  std::size_t n = v.size();
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<int> a(v.begin(), v.begin() + i), b(w.begin(), w.begin() + i);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t j = 0; j < i; ++j)
      if (a[j] > b[j]) return false;
  }
  return true;
}

inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm w = identity_perm(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::vector<Perm> bruhat_interval(const Perm& w) {
  std::vector<Perm> out;
  for (const auto& v : all_perms(static_cast<int>(w.size())))
    if (bruhat_leq(v, w)) out.push_back(v);
  return out;
}

// Packed words of length n in lexicographic order.
inline std::vector<Word> packed_words(int n) {
  std::vector<Word> out;
  Word u(n);
  std::vector<int> cnt(n + 2, 0);
  std::function<void(int, int)> rec = [&](int pos, int distinct) {
    if (pos == n) {
      if (distinct == 0 || cnt[distinct] > 0) {
        for (int k = 1; k <= distinct; ++k)
          if (!cnt[k]) return;
        out.push_back(u);
      }
      return;
    }
    for (int x = 1; x <= n; ++x) {
      int nd = std::max(distinct, x);
      int missing = 0;
      for (int k = 1; k <= nd; ++k) missing += (cnt[k] == 0 && k != x);
      if (missing > n - pos - 1) continue;
      u[pos] = x;
      ++cnt[x];
      rec(pos + 1, nd);
      --cnt[x];
    }
  };
  rec(0, 0);
  return out;
}

inline long long fubini(int n) {
  std::vector<long long> a(n + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long binom = 1;
    for (int k = 1; k <= m; ++k) {
      binom = binom * (m - k + 1) / k;
      a[m] += binom * a[m - k];
    }
  }
  return a[n];
}

// ---- partitions and compositions ----

inline int size_of(const std::vector<int>& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] <= 0 || (i && p[i] > p[i - 1])) return false;
  return true;
}

// Reverse lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions(int n, int max_part = -1) {
  if (max_part < 0) max_part = n;
  std::vector<Partition> out;
  if (n == 0) return {Partition{}};
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

inline std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  if (n == 0) return {Composition{}};
  for (int k = 1; k <= n; ++k)
    for (auto rest : compositions(n - k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

inline Partition conjugate(const Partition& p) {
  Partition c;
  for (int j = 1; !p.empty() && j <= p[0]; ++j) c.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [&](int x) { return x >= j; })));
  return c;
}

inline Partition sorted_partition(std::vector<int> c) {
  std::sort(c.rbegin(), c.rend());
  return c;
}

inline int n_of(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

inline long long factorial(int n) {
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// z_lambda = prod_i i^{m_i} m_i!
inline long long z_lambda(const Partition& p) {
  std::map<int, int> m;
  for (int x : p) ++m[x];
  long long z = 1;
  for (auto [i, k] : m) {
    for (int j = 0; j < k; ++j) z *= i;
    z *= factorial(k);
  }
  return z;
}

inline Composition descent_composition(int n, const std::vector<int>& des) {
  Composition c;
  int prev = 0;
  for (int d : des) c.push_back(d - prev), prev = d;
  c.push_back(n - prev);
  return c;
}

inline std::vector<int> composition_descents(const Composition& c) {
  std::vector<int> d;
  int s = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) d.push_back(s += c[i]);
  return d;
}

// Coarsenings J of I (merge adjacent parts).
inline std::vector<Composition> coarsenings(const Composition& I) {
  std::vector<Composition> out;
  int k = static_cast<int>(I.size());
  for (int mask = 0; mask < (1 << std::max(k - 1, 0)); ++mask) {
    Composition J{I.empty() ? 0 : I[0]};
    for (int i = 1; i < k; ++i) {
      if (mask >> (i - 1) & 1)
        J.back() += I[i];
      else
        J.push_back(I[i]);
    }
    out.push_back(J);
  }
  return out;
}

// Number of semistandard tableaux of shape lambda and content mu.
inline long long kostka(const Partition& lambda, const Composition& mu) {
  if (size_of(lambda) != size_of(mu)) return 0;
  // Fill letters 1,2,... as horizontal strips: shape grows nu -> nu' with nu'/nu a horizontal strip.
  std::map<std::pair<std::size_t, Partition>, long long> memo;
  std::function<long long(std::size_t, const Partition&)> rec = [&](std::size_t k, const Partition& nu) -> long long {
    if (k == mu.size()) return nu == lambda ? 1 : 0;
    auto key = std::make_pair(k, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    Partition cur = nu;
    cur.resize(lambda.size(), 0);
    std::function<void(std::size_t, int)> strip = [&](std::size_t row, int left) {
      if (row == lambda.size()) {
        if (left == 0) {
          Partition next;
          for (int x : cur)
            if (x > 0) next.push_back(x);
          total += rec(k + 1, next);
        }
        return;
      }
      int base = row < nu.size() ? nu[row] : 0;
      int cap = lambda[row] - base;
      if (row > 0) cap = std::min(cap, (row - 1 < nu.size() ? nu[row - 1] : 0) - base);
      for (int a = 0; a <= std::min(cap, left); ++a) {
        cur[row] = base + a;
        strip(row + 1, left - a);
      }
      cur[row] = base;
    };
    strip(0, mu[k]);
    return memo[key] = total;
  };
  return rec(0, Partition{});
}

// Standard fillings of lambda/inner (count of saturated chains inner -> lambda).
inline long long count_skew_syt(const Partition& lambda, const Partition& inner) {
  std::map<Partition, long long> memo;
  std::function<long long(const Partition&)> rec = [&](const Partition& nu) -> long long {
    if (nu == lambda) return 1;
    if (auto it = memo.find(nu); it != memo.end()) return it->second;
    long long total = 0;
    for (std::size_t r = 0; r <= nu.size() && r < lambda.size(); ++r) {
      int cur = r < nu.size() ? nu[r] : 0;
      if (cur >= lambda[r]) continue;
      if (r > 0 && nu[r - 1] <= cur) continue;
      Partition nx = nu;
      if (r == nu.size())
        nx.push_back(1);
      else
        ++nx[r];
      total += rec(nx);
    }
    return memo[nu] = total;
  };
  return rec(inner);
}

inline long long count_syt(const Partition& lambda) { return count_skew_syt(lambda, {}); }

// SYT of shape lambda whose entry 2 sits in a higher row than entry 1.
inline long long d_two_above_one(const Partition& lambda) {
  if (size_of(lambda) < 2) throw std::invalid_argument("d_two_above_one needs |lambda| >= 2");
  if (lambda.size() < 2) return 0;
  return count_skew_syt(lambda, {1, 1});
}

inline std::vector<int> parse_partition(const std::string& s) {
  auto v = parse_seq(s);
  if (!is_partition(v)) throw std::invalid_argument("not a partition: " + s);
  return v;
}

}  // namespace ncmac

#endif
