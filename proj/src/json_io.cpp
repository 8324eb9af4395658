#include "msuper/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace msuper {

namespace {

using nlohmann::ordered_json;

ordered_json theta_list(uint64_t mask, int N) {
  ordered_json out = ordered_json::array();
  for (int i = 1; i <= N; ++i)
    if (mask & (uint64_t(1) << (i - 1))) out.push_back(i);
  return out;
}

uint64_t mask_from_list(const ordered_json& arr, int N) {
  uint64_t mask = 0;
  for (const auto& v : arr) {
    const int i = v.get<int>();
    if (i < 1 || i > N) throw std::invalid_argument("theta index out of range");
    mask |= uint64_t(1) << (i - 1);
  }
  return mask;
}

}  // namespace

std::string to_json(const FermionPoly& p) {
  ordered_json j;
  j["N"] = p.N;
  j["terms"] = ordered_json::array();
  for (const auto& [m, c] : p.terms)
    j["terms"].push_back({{"theta", theta_list(m, p.N)}, {"coeff", render(c)}});
  return j.dump();
}

std::string to_json(const SuperPoly& p) {
  ordered_json j;
  j["N"] = p.N;
  j["terms"] = ordered_json::array();
  for (const auto& [k, c] : p.terms)
    j["terms"].push_back(
        {{"x", k.alpha}, {"theta", theta_list(k.theta, p.N)}, {"coeff", render(c)}});
  return j.dump();
}

FermionPoly fermion_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  FermionPoly p(j.at("N").get<int>());
  for (const auto& term : j.at("terms"))
    p.add_term(mask_from_list(term.at("theta"), p.N), parse_rat(term.at("coeff").get<std::string>()));
  return p;
}

SuperPoly super_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  SuperPoly p(j.at("N").get<int>());
  for (const auto& term : j.at("terms")) {
    SKey k;
    k.alpha = term.at("x").get<Composition>();
    if (static_cast<int>(k.alpha.size()) != p.N)
      throw std::invalid_argument("x exponent vector length mismatch");
    k.theta = mask_from_list(term.at("theta"), p.N);
    p.add_term(k, parse_rat(term.at("coeff").get<std::string>()));
  }
  return p;
}

// ---------------------------------------------------------------------------
// LaTeX
// ---------------------------------------------------------------------------

namespace {

std::string latex_poly(const PolyQT& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Int ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? "-" : "+");
    }
    first = false;
    const bool has_var = m.a != 0 || m.b != 0;
    if (ac != 1 || !has_var) os << ac.get_str();
    if (m.a != 0) os << (m.a == 1 ? "q" : "q^{" + std::to_string(m.a) + "}");
    if (m.b != 0) os << (m.b == 1 ? "t" : "t^{" + std::to_string(m.b) + "}");
  }
  return os.str();
}

}  // namespace

std::string to_latex(const RatQT& c) {
  if (c.den().is_one()) return latex_poly(c.num());
  return "\\frac{" + latex_poly(c.num()) + "}{" + latex_poly(c.den()) + "}";
}

std::string to_latex(const FermionPoly& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms) {
    std::string coeff = to_latex(c);
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << coeff << "\\right)";
    for (int i = 1; i <= p.N; ++i)
      if (m & (uint64_t(1) << (i - 1))) os << "\\theta_{" << i << "}";
  }
  return os.str();
}

std::string to_latex(const SuperPoly& p) {
  if (p.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : p.terms) {
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << to_latex(c) << "\\right)";
    for (int i = 1; i <= p.N; ++i) {
      if (k.alpha[i - 1] == 0) continue;
      os << "x_{" << i << "}";
      if (k.alpha[i - 1] != 1) os << "^{" << k.alpha[i - 1] << "}";
    }
    for (int i = 1; i <= p.N; ++i)
      if (k.theta & (uint64_t(1) << (i - 1))) os << "\\theta_{" << i << "}";
  }
  return os.str();
}

}  // namespace msuper
