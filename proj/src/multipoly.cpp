#include "hfk/multipoly.hpp"

namespace hfk {

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    const bool unit_mono = t.mono.is_one();
    if (t.coeff.is_one()) {
      out += t.mono.to_string();
      continue;
    }
    std::string c = t.coeff.to_string();
    const bool compound = c.find(' ') != std::string::npos && c.front() != '(';
    if (compound) c = "(" + c + ")";
    out += unit_mono ? c : c + "*" + t.mono.to_string();
  }
  return out;
}

MultiPoly var(std::size_t nvars, int i) {
  return MultiPoly::variable(nvars, i, FieldElem::one());
}

MultiPoly t_times(int k, const MultiPoly& p) {
  return FieldElem::t_pow(k) * p;
}

RingPoly to_primitive_ring(const MultiPoly& p) {
  RingPoly r(p.nvars());
  if (p.is_zero()) return r;
  F2Poly den_lcm = F2Poly::one();
  for (const auto& t : p.terms()) {
    const F2Poly& d = t.coeff.den();
    if (d.is_one()) continue;
    den_lcm = den_lcm * (d / gcd(den_lcm, d));
  }
  F2Poly content;
  auto& terms = r.mutable_terms();
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    F2Poly c = t.coeff.num() * (den_lcm / t.coeff.den());
    content = gcd(content, c);
    terms.push_back({t.mono, std::move(c)});
  }
  if (!content.is_one())
    for (auto& t : terms) t.coeff = t.coeff / content;
  return r;
}

MultiPoly to_monic_field(const RingPoly& p) {
  MultiPoly r(p.nvars());
  if (p.is_zero()) return r;
  const F2Poly& lc = p.lead_coeff();
  auto& terms = r.mutable_terms();
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, FieldElem(t.coeff, lc)});
  return r;
}

}  // namespace hfk
