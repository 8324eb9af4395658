#include <doctest.h>

#include "msuper/json_io.hpp"
#include "msuper/yang_baxter.hpp"

using namespace msuper;

TEST_CASE("JSON round trip is a fixed point") {
  MCache cache;
  const ModuleLabel e = ModuleLabel::type0_special(4, 1);
  const SuperPoly m = build_M({1, 0, 1, 0}, e, &cache);
  const std::string once = to_json(m);
  const SuperPoly back = super_from_json(once);
  CHECK(back == m);
  CHECK(to_json(back) == once);

  const FermionPoly tau = tau_general(ModuleLabel::type0_label(6, (1u << 3) | (1u << 5)));
  const std::string ftxt = to_json(tau);
  CHECK(fermion_from_json(ftxt) == tau);
  CHECK(to_json(fermion_from_json(ftxt)) == ftxt);
}

TEST_CASE("JSON schema shape") {
  FermionPoly p(7);
  p.add_term((1u << 4) | (1u << 5) | (1u << 6), RatQT::t_pow(3));
  CHECK(to_json(p) == R"({"N":7,"terms":[{"theta":[5,6,7],"coeff":"t^3"}]})");
  SuperPoly s(6);
  s.add_term(SKey{{1, 1, 0, 0, 0, 0}, (1u << 4) | (1u << 5)}, RatQT::t_pow(16));
  CHECK(to_json(s) ==
        R"({"N":6,"terms":[{"x":[1,1,0,0,0,0],"theta":[5,6],"coeff":"t^16"}]})");
  CHECK_THROWS(super_from_json(R"({"N":2,"terms":[{"x":[1],"theta":[],"coeff":"1"}]})"));
}

TEST_CASE("LaTeX rendering") {
  FermionPoly tau(6);
  tau.add_term(1u << 5, RatQT::t_pow(4));
  tau.add_term(1u << 4, -RatQT::t_pow(5));
  const std::string tex = to_latex(tau);
  CHECK(tex.find("\\theta_{5}") != std::string::npos);
  CHECK(tex.find("t^{4}") != std::string::npos);
  SuperPoly s(3);
  s.add_term(SKey{{2, 0, 0}, 1}, RatQT::one() / (RatQT::one() + RatQT::t()));
  const std::string stex = to_latex(s);
  CHECK(stex.find("x_{1}^{2}") != std::string::npos);
  CHECK(stex.find("\\frac{1}{1+t}") != std::string::npos);
}
