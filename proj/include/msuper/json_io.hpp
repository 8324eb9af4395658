#pragma once

#include <string>

#include "msuper/super.hpp"

namespace msuper {

// JSON schemas (coefficients use the canonical text grammar):
//   FermionPoly: {"N":7,"terms":[{"theta":[5,6,7],"coeff":"t^3"},...]}
//   SuperPoly:   {"N":6,"terms":[{"x":[1,1,0,0,0,0],"theta":[5,6],"coeff":"t^16"},...]}
// Term order follows the internal key order, so serialization is a fixed
// point of build -> dump -> parse -> dump.

std::string to_json(const FermionPoly& p);
std::string to_json(const SuperPoly& p);

FermionPoly fermion_from_json(const std::string& text);
SuperPoly super_from_json(const std::string& text);

/// LaTeX rendering with theta subscripts and explicit q,t powers, for
/// eyeball checks of the printed fixtures.
std::string to_latex(const RatQT& c);
std::string to_latex(const FermionPoly& p);
std::string to_latex(const SuperPoly& p);

}  // namespace msuper
