#ifndef NCMAC_IO_HPP
#define NCMAC_IO_HPP

#include <json.hpp>

#include "laurent.hpp"
#include "sym.hpp"

namespace ncmac {

using json = nlohmann::json;

inline json to_json(const LaurentPoly& p) {
  auto slots = p.used_slots();
  json vars = json::array(), terms = json::array();
  for (int s : slots) vars.push_back(slot_name(s));
  for (const auto& t : p.terms()) {
    json e = json::array();
    for (int s : slots) e.push_back(t.m.e[s]);
    terms.push_back({{"exp", e}, {"num", t.c.num_str()}, {"den", t.c.den_str()}});
  }
  return {{"vars", vars}, {"terms", terms}};
}

inline LaurentPoly poly_from_json(const json& j) {
  std::vector<int> slots;
  for (const auto& v : j.at("vars")) slots.push_back(slot_of(v.get<std::string>()));
  std::vector<Term> ts;
  for (const auto& t : j.at("terms")) {
    Monomial m;
    const auto& e = t.at("exp");
    if (e.size() != slots.size()) throw std::invalid_argument("exponent vector length mismatch");
    for (std::size_t i = 0; i < slots.size(); ++i) m.e[slots[i]] = static_cast<std::int16_t>(e[i].get<int>());
    ts.push_back({m, Rational(t.at("num").get<std::string>(), t.at("den").get<std::string>())});
  }
  return LaurentPoly::from_terms(ts);
}

inline json to_json(const Sym& f) {
  json terms = json::array();
  std::vector<std::pair<Partition, const LaurentPoly*>> ordered;
  for (const auto& [lam, c] : f.terms()) ordered.emplace_back(lam, &c);
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int na = size_of(a.first), nb = size_of(b.first);
    return na != nb ? na < nb : a.first > b.first;
  });
  for (const auto& [lam, c] : ordered) terms.push_back({{"lambda", lam}, {"coeff", to_json(*c)}});
  return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

inline Sym sym_from_json(const json& j) {
  Sym f(parse_basis(j.at("basis").get<std::string>()));
  for (const auto& t : j.at("terms")) f.add_term(t.at("lambda").get<Partition>(), poly_from_json(t.at("coeff")));
  return f;
}

}  // namespace ncmac

#endif
