// ncmac: tables of noncommutative and multi-t Macdonald polynomials, Hecke
// traces, Yang-Baxter traces and verification suites.
//
//   ncmac macdonald --mu 2,1,1 --multi-t --format latex
//   ncmac trace --perm 3241 --interval
//   ncmac yb --mu 3,2,1 --single-t
//   ncmac yb --sweep --n 6 --jobs 8 --out report.json
//   ncmac verify --suite all --n 6
//
// Exit codes: 0 pass, 1 assertion failure, 2 configuration error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "ncmac/cli.hpp"

using namespace ncmac;

namespace {

Partition cli_partition(const std::string& s) {
  Partition mu;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, ',');) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) throw ConfigError("bad partition '" + s + "'");
    mu.push_back(std::stoi(part));
  }
  if (mu.empty() || !std::is_sorted(mu.rbegin(), mu.rend()) || mu.back() <= 0) throw ConfigError("bad partition '" + s + "'");
  return mu;
}

Perm cli_perm(const std::string& s) {
  Perm w = s.find(',') == std::string::npos ? parse_seq(s) : [&] {
    Perm r;
    std::stringstream ss(s);
    for (std::string x; std::getline(ss, x, ',');) r.push_back(std::stoi(x));
    return r;
  }();
  Perm sorted = w;
  std::sort(sorted.begin(), sorted.end());
  if (w.empty() || sorted != identity_perm(static_cast<int>(w.size()))) throw ConfigError("not a permutation: '" + s + "'");
  return w;
}

void write_out(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write " + path);
  f << body;
}

std::string render(const VerifyReport& r, Format fmt) { return fmt == Format::Json ? r.to_json().dump(2) + "\n" : r.text(); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncommutative Macdonald polynomials and Hecke traces"};
  app.require_subcommand(1);

  std::string mu_s, perm_s, variant_s = "tilde", format_s = "text", out, suite = "all", basis_s = "s";
  bool multi_t = false, single_t = false, interval = false, sweep = false, large = false;
  int n = 6, jobs = 1;
  std::uint64_t seed = 20240611;

  auto* mac = app.add_subcommand("macdonald", "Print H_mu or tilde H_mu");
  mac->add_option("--mu", mu_s, "Partition, e.g. 3,2,1")->required();
  mac->add_flag("--multi-t", multi_t, "Use t_1, t_2, ... instead of powers of t");
  mac->add_option("--variant", variant_s, "H or tilde")->check(CLI::IsMember({"H", "tilde"}));
  mac->add_option("--format", format_s, "json, latex or text")->check(CLI::IsMember({"json", "latex", "text"}));
  mac->add_option("--out", out, "Output file");

  auto* tr = app.add_subcommand("trace", "Equivariant trace of T_w or of the interval sum c_w");
  tr->add_option("--perm", perm_s, "Permutation, e.g. 3241")->required();
  tr->add_flag("--interval", interval, "Trace c_w = sum of T_v over v <= w");
  tr->add_option("--basis", basis_s, "Output basis: s, h, e, m, p or theta")->check(CLI::IsMember({"s", "h", "e", "m", "p", "theta"}));
  tr->add_option("--format", format_s, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* yb = app.add_subcommand("yb", "Normalized traces of Yang-Baxter elements");
  yb->add_option("--mu", mu_s, "Partition for the (sigma_mu, v_mu) trace");
  yb->add_flag("--single-t", single_t, "Single-t spectral vector (default)");
  yb->add_flag("--multi-t", multi_t, "Multi-t spectral vector (ratio rule)");
  yb->add_flag("--sweep", sweep, "Scan S_n for every partition of n");
  yb->add_option("--n", n, "Size for --sweep");
  yb->add_flag("--large", large, "Allow n = 8 sweeps");
  yb->add_option("--jobs", jobs, "Worker threads");
  yb->add_option("--seed", seed, "Seed of the modular filter point");
  yb->add_option("--format", format_s, "json or text")->check(CLI::IsMember({"json", "text"}));
  yb->add_option("--out", out, "Output file");

  auto* ver = app.add_subcommand("verify", "Run verification suites");
  ver->add_option("--suite", suite, "Suite name or all");
  ver->add_option("--n", n, "Largest size");
  ver->add_option("--jobs", jobs, "Worker threads");
  ver->add_option("--seed", seed, "Seed for randomized checks");
  ver->add_option("--format", format_s, "json or text")->check(CLI::IsMember({"json", "text"}));
  ver->add_option("--out", out, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Format fmt = parse_format(format_s);
    if (*mac) {
      TableOptions o;
      o.format = fmt;
      o.multi_t = multi_t;
      o.variant = variant_s == "H" ? Variant::H : Variant::Tilde;
      write_out(out, emit_table(cli_partition(mu_s), o));
      return 0;
    }
    if (*tr) {
      Perm w = cli_perm(perm_s);
      check_size(static_cast<int>(w.size()));
      HeckeElem x = interval ? interval_sum(w) : T_elem(w);
      if (basis_s == "theta") {
        std::string s;
        for (const auto& [lam, c] : trace_theta(x)) s += (s.empty() ? "" : " + ") + ("(" + c.str() + ")*theta" + seq_str(lam));
        std::cout << s << "\n";
      } else {
        Sym f = trace_elem(x, parse_basis(basis_s));
        std::cout << (fmt == Format::Json ? ncmac::to_json(f).dump(2) : f.str()) << "\n";
      }
      return 0;
    }
    if (*yb) {
      if (single_t && multi_t) throw ConfigError("--single-t and --multi-t are exclusive");
      if (sweep) {
        VerifyReport r = sweep_yb(n, multi_t ? SweepMode::MultiT : SweepMode::SingleT, jobs, seed, large);
        write_out(out, render(r, fmt));
        return r.ok() ? 0 : 1;
      }
      if (mu_s.empty()) throw ConfigError("yb needs --mu or --sweep");
      Partition mu = cli_partition(mu_s);
      check_size(size_of(mu));
      SpectralVector v = v_mu(mu, multi_t ? SpectralMode::Ratio : SpectralMode::SingleT);
      Perm s = sigma_mu(mu);
      Sym got = yb_macdonald(s, v);
      bool match = got == tildeH_sym(mu, multi_t);
      if (fmt == Format::Json) {
        write_out(out, json{{"mu", mu}, {"sigma", seq_str(s)}, {"sym", ncmac::to_json(got)}, {"matches_tilde_H", match}}.dump(2) + "\n");
      } else {
        write_out(out, "sigma_mu = " + seq_str(s) + "\n" + got.str() + "\nmatches tilde H: " + (match ? "yes" : "no") + "\n");
      }
      return match || multi_t ? 0 : 1;
    }
    if (*ver) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      json all = json::array();
      std::string text;
      for (const auto& s : names) {
        VerifyReport r = run_suite(s, n, jobs, seed);
        ok = ok && r.ok();
        all.push_back(r.to_json());
        text += r.text();
      }
      write_out(out, fmt == Format::Json ? all.dump(2) + "\n" : text);
      return ok ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const SizeBound& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
