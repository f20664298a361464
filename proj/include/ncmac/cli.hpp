#pragma once

// Verification suites, Yang-Baxter sweeps and table emission behind the
// ncmac command-line driver. Reports are merged in canonical order so that
// their content does not depend on the number of jobs.

#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ncmac/golden.hpp"
#include "ncmac/hecke.hpp"
#include "ncmac/io.hpp"
#include "ncmac/macdonald.hpp"
#include "ncmac/parse.hpp"

namespace ncmac {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Status { Pass, Fail, ExpectedAbsent, NotFound };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::ExpectedAbsent:
      return "expected-absent";
    case Status::NotFound:
      return "not-found";
  }
  return "?";
}

struct CaseResult {
  std::string id;
  Status status = Status::Pass;
  json witness;  // payload: counts, matches, or the offending values
  long long ms = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<CaseResult> cases;

  bool ok() const {
    return std::none_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status == Status::Fail; });
  }
  std::size_t count(Status s) const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [&](const CaseResult& c) { return c.status == s; }));
  }
  const CaseResult* find(const std::string& id) const {
    for (const auto& c : cases)
      if (c.id == id) return &c;
    return nullptr;
  }
  json to_json(bool timing = true) const {
    json cs = json::array();
    for (const auto& c : cases) {
      json j = {{"id", c.id}, {"status", status_name(c.status)}};
      if (!c.witness.is_null()) j["witness"] = c.witness;
      if (timing) j["ms"] = c.ms;
      cs.push_back(j);
    }
    return {{"suite", suite}, {"ok", ok()}, {"cases", cs}};
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& c : cases) {
      os << suite << " " << c.id << " " << status_name(c.status);
      if (!c.witness.is_null() && c.status != Status::Pass) os << " " << c.witness.dump();
      os << "\n";
    }
    os << suite << ": " << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail";
    if (auto k = count(Status::ExpectedAbsent)) os << ", " << k << " expected-absent";
    if (auto k = count(Status::NotFound)) os << ", " << k << " not-found";
    os << "\n";
    return os.str();
  }
};

// Runs f(0..count-1) on up to `jobs` threads; rethrows the first failure.
template <class F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(1, jobs)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// One case per work item, timed, in item order.
template <class Item, class F>
std::vector<CaseResult> run_cases(const std::vector<Item>& items, int jobs, F&& f) {
  std::vector<CaseResult> out(items.size());
  parallel_for(items.size(), jobs, [&](std::size_t i) {
    auto t0 = std::chrono::steady_clock::now();
    out[i] = f(items[i]);
    out[i].ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  });
  return out;
}

inline CaseResult verdict(std::string id, bool ok, json witness = nullptr) {
  return {std::move(id), ok ? Status::Pass : Status::Fail, std::move(witness), 0};
}

inline std::vector<Partition> partitions_upto(int max_n, int min_n = 1) {
  std::vector<Partition> out;
  for (int n = min_n; n <= max_n; ++n)
    for (const auto& mu : partitions(n)) out.push_back(mu);
  return out;
}

inline std::string perm_list_str(const std::vector<Perm>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + seq_str(p);
  return s;
}

// ---- Yang-Baxter sweep ----

enum class SweepMode { SingleT, MultiT };

inline CaseResult sweep_case(const Partition& mu, SweepMode mode, std::uint64_t seed) {
  int n = size_of(mu);
  CensusOptions opt;
  opt.seed = seed;
  opt.confirm = n <= 6 ? Confirm::Exact : Confirm::SecondPoint;
  json w;
  w["confirm"] = opt.confirm == Confirm::Exact ? "exact" : "second-point";
  if (mode == SweepMode::SingleT) {
    CensusResult r = yb_census(mu, SpectralMode::SingleT, opt);
    w["count"] = r.matches.size();
    w["matches"] = perm_list_str(r.matches);
    if (!r.rejected.empty()) w["rejected"] = perm_list_str(r.rejected);
    bool has_sigma = std::find(r.matches.begin(), r.matches.end(), sigma_mu(mu)) != r.matches.end();
    w["sigma_mu"] = has_sigma;
    return {seq_str(mu), has_sigma && r.rejected.empty() ? Status::Pass : Status::Fail, w, 0};
  }
  bool found = false, clean = true;
  for (SpectralMode m : {SpectralMode::Ratio, SpectralMode::Direct}) {
    std::string key = m == SpectralMode::Ratio ? "ratio" : "direct";
    if (m == SpectralMode::Direct && v_mu(mu, m) == v_mu(mu, SpectralMode::Ratio)) continue;
    CensusResult r = yb_census(mu, m, opt);
    w[key] = {{"count", r.matches.size()}, {"matches", perm_list_str(r.matches)}};
    found = found || !r.matches.empty();
    clean = clean && r.rejected.empty();
  }
  Status s = Status::Pass;
  if (!clean)
    s = Status::Fail;
  else if (!found)
    s = mu == Partition{2, 2, 2, 1} ? Status::ExpectedAbsent : Status::NotFound;
  return {seq_str(mu), s, w, 0};
}

inline VerifyReport sweep_yb(int n, SweepMode mode, int jobs = 1, std::uint64_t seed = 20240611, bool allow_large = false) {
  if (n < 1) throw ConfigError("sweep needs n >= 1");
  if (n > 7 && !allow_large) throw ConfigError("sweeps beyond n=7 need the explicit large flag");
  check_size(n);
  VerifyReport rep{mode == SweepMode::SingleT ? "yb-sweep" : "yb-sweep-multi-t", {}};
  rep.cases = run_cases(partitions(n), jobs, [&](const Partition& mu) { return sweep_case(mu, mode, seed); });
  return rep;
}

// ---- suites ----

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"annex", "hw", "trace-triangle", "lee", "yb", "wheel", "hooks", "positivity"};
  return names;
}

inline VerifyReport run_suite(const std::string& name, int max_n, int jobs = 1, std::uint64_t seed = 20240611) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) throw ConfigError("unknown suite '" + name + "'");
  if (max_n < 1) throw ConfigError("max_n must be positive");
  check_size(max_n);
  VerifyReport rep{name, {}};
  auto append = [&](std::vector<CaseResult> cs) { rep.cases.insert(rep.cases.end(), cs.begin(), cs.end()); };

  if (name == "annex") {
    std::vector<golden::AnnexEntry> items;
    for (const auto& a : golden::annex())
      if (size_of(a.mu) <= max_n) items.push_back(a);
    append(run_cases(items, jobs, [](const golden::AnnexEntry& a) {
      Sym got = tildeH_sym(a.mu, true);
      bool ok = got == parse_schur(a.schur);
      return verdict("annex/" + seq_str(a.mu), ok, ok ? json() : ncmac::to_json(got));
    }));
    if (max_n >= 4) rep.cases.push_back(verdict("display/211", tildeH_sym({2, 1, 1}, true) == parse_schur(golden::kTildeH211Schur)));
    if (max_n >= 6) rep.cases.push_back(verdict("display/222", tildeH_sym({2, 2, 2}, true) == parse_schur(golden::kTildeH222Rect)));
  } else if (name == "hw") {
    append(run_cases(partitions_upto(max_n), jobs, [](const Partition& mu) {
      bool single = ncH_direct(mu) == hw_assemble(mu, Variant::H);
      bool multi = ncH_direct(mu, true) == hw_assemble(mu, Variant::H, true);
      return verdict("hw/" + seq_str(mu), single && multi, json{{"single_t", single}, {"multi_t", multi}});
    }));
  } else if (name == "trace-triangle") {
    std::vector<Perm> ws;
    for (int n = 1; n <= max_n; ++n)
      for (const auto& w : avoiders_312(n)) ws.push_back(w);
    append(run_cases(ws, jobs, [](const Perm& w) {
      Sym tr = trace_elem(interval_sum(w));
      bool chrom = tr == omega(convert(X_commutative(graph_of_312_avoider(w), LaurentPoly::q()), Basis::s));
      bool an = theta_to_sym(abreu_nigro(w), Basis::s) == tr;
      return verdict("triangle/" + seq_str(w), chrom && an, json{{"chromatic", chrom}, {"abreu_nigro", an}});
    }));
  } else if (name == "lee") {
    struct Item {
      std::vector<int> code;
      int i, j;
    };
    std::vector<Item> items;
    for (int n = 2; n <= max_n; ++n)
      for (const auto& w : avoiders_312(n)) {
        auto a = lehmer_code(w);
        for (auto [i, j] : admissible_edges(a)) items.push_back({a, i, j});
      }
    append(run_cases(items, jobs, [](const Item& it) {
      LeeTriple L = lee_triple(it.code, it.i, it.j);
      std::string id = "lee/" + seq_str(it.code) + "/" + std::to_string(it.i) + "," + std::to_string(it.j);
      return verdict(id, L.codes_ok && L.avoid_ok && L.identity_ok,
                     json{{"sigma", seq_str(L.sigma)}, {"sigma1", seq_str(L.sigma1)}, {"sigma2", seq_str(L.sigma2)}});
    }));
    if (max_n >= 6) {
      Perm w1 = parse_seq("342651"), w0 = parse_seq("324651"), w2 = parse_seq("432651");
      const LaurentPoly q = LaurentPoly::q();
      bool id = hecke_mul(interval_sum(w1), interval_sum({2, 1, 3, 4, 5, 6})) == interval_sum(w2) + q * interval_sum(w0);
      bool tr = (q + LaurentPoly(1)) * trace_elem(interval_sum(w1)) == trace_elem(interval_sum(w2)) + q * trace_elem(interval_sum(w0));
      rep.cases.push_back(verdict("sextuple/342651", id && tr, json{{"identity", id}, {"trace", tr}}));
    }
    std::vector<std::pair<Partition, int>> lams;
    for (int n = 1; n <= max_n; ++n)
      for (const auto& g : all_dyck_graphs(n)) lams.push_back({partition_of_dyck(g), n});
    append(run_cases(lams, jobs, [](const std::pair<Partition, int>& p) {
      auto lines = modular_law_check(p.first, p.second);
      std::size_t bad = std::count_if(lines.begin(), lines.end(), [](const ModularLine& m) { return !(m.chromatic_ok && m.trace_ok); });
      return verdict("modular/" + std::to_string(p.second) + "/" + seq_str(p.first), bad == 0, json{{"relations", lines.size()}, {"violations", bad}});
    }));
  } else if (name == "yb") {
    append(run_cases(partitions_upto(max_n), jobs, [](const Partition& mu) {
      auto [s, v] = sigma_v_mu(mu);
      return verdict("sigma_mu/" + seq_str(mu), yb_macdonald(s, v) == tildeH_sym(mu), json{{"sigma", seq_str(s)}});
    }));
    VerifyReport census = sweep_yb(max_n, SweepMode::SingleT, jobs, seed);
    for (auto& c : census.cases) {
      c.id = "census/" + c.id;
      rep.cases.push_back(c);
    }
  } else if (name == "wheel") {
    append(run_cases(partitions_upto(max_n), jobs, [](const Partition& mu) {
      auto lines = check_wheel(tildeH_sym(mu, true), mu, true);
      json bad = json::array();
      for (const auto& l : lines)
        if (!l.pass) bad.push_back(seq_str(l.lambda));
      return verdict("wheel/" + seq_str(mu), bad.empty(), bad.empty() ? json() : json{{"lambda", bad}});
    }));
  } else if (name == "hooks") {
    append(run_cases(partitions_upto(max_n), jobs, [](const Partition& mu) {
      auto lines = check_hooks(tildeH_sym(mu), mu);
      json bad = json::array();
      for (const auto& l : lines)
        if (!l.pass) bad.push_back(l.k);
      return verdict("hooks/" + seq_str(mu), bad.empty(), bad.empty() ? json() : json{{"k", bad}});
    }));
  } else if (name == "positivity") {
    append(run_cases(partitions_upto(max_n), jobs, [](const Partition& mu) {
      return verdict("positivity/" + seq_str(mu), schur_positive(tildeH_sym(mu, true)));
    }));
  }
  return rep;
}

// ---- tables ----

enum class Format { Text, Latex, Json };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  throw ConfigError("unknown format '" + s + "'");
}

// Monomials in descending exponent order, variables written as q^{k} t_{i}^{k}.
inline std::string tex_poly(const LaurentPoly& p) {
  std::vector<Term> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return b.m.e < a.m.e; });
  std::string out;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const auto& t = ts[k];
    Rational c = t.c;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    out += k == 0 ? (neg ? "- " : "") : (neg ? " - " : " + ");
    std::string mono;
    for (int s = 0; s < kSlots; ++s) {
      int e = t.m.e[s];
      if (!e) continue;
      std::string v = slot_name(s);
      if (auto u = v.find('_'); u != std::string::npos) v = v.substr(0, u) + "_{" + v.substr(u + 1) + "}";
      mono += (mono.empty() ? "" : " ") + v + (e == 1 ? "" : "^{" + std::to_string(e) + "}");
    }
    std::string coef = c.is_integer() ? c.num_str() : "\\frac{" + c.num_str() + "}{" + c.den_str() + "}";
    if (mono.empty())
      out += coef;
    else
      out += (coef == "1" ? "" : coef + " ") + mono;
  }
  return out;
}

inline std::string tex_sym(const Sym& f) {
  Sym fs = convert(f, Basis::s);
  int n = 0;
  for (const auto& [lam, c] : fs.terms()) n = std::max(n, size_of(lam));
  std::string out;
  for (const auto& lam : partitions(n)) {
    LaurentPoly c = fs.coeff(lam);
    if (c.is_zero()) continue;
    std::string idx;
    for (int x : lam) idx += std::to_string(x);
    std::string body = tex_poly(c);
    if (!out.empty()) out += "+";
    if (body == "1")
      out += "s_{" + idx + "}";
    else if (c.is_monomial() && c.terms().front().c.sign() > 0)
      out += " " + body + "  s_{" + idx + "}";
    else
      out += "( " + body + " ) s_{" + idx + "}";
  }
  return out;
}

struct TableOptions {
  Format format = Format::Latex;
  bool multi_t = true;
  Variant variant = Variant::Tilde;
};

inline std::string emit_table(const Partition& mu, const TableOptions& o = {}) {
  if (mu.empty()) throw ConfigError("empty partition");
  check_size(size_of(mu));
  Sym f = o.variant == Variant::Tilde ? tildeH_sym(mu, o.multi_t) : commutative_sym(ncH_direct(mu, o.multi_t));
  std::string name = std::string(o.variant == Variant::Tilde ? "\\widetilde{H}" : "H") + "_{" + [&] {
    std::string s;
    for (int x : mu) s += std::to_string(x);
    return s;
  }() + "}";
  switch (o.format) {
    case Format::Json:
      return json{{"mu", mu}, {"variant", o.variant == Variant::Tilde ? "tilde" : "H"}, {"multi_t", o.multi_t}, {"sym", ncmac::to_json(f)}}.dump(2) + "\n";
    case Format::Latex:
      return "\\begin{equation}\n" + name + "=\n" + tex_sym(f) + "\n\\end{equation}\n";
    case Format::Text:
      return f.str() + "\n";
  }
  return {};
}

}  // namespace ncmac
