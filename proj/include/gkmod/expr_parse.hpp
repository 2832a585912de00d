#pragma once

#include "gkmod/polynomial.hpp"

#include <string>

namespace gkmod {

// Parses an exact polynomial expression in variables m1..mn and the
// imaginary unit i. Grammar: + - * / ^ ( ), integer literals; '/' only by
// nonzero constants, '^' by nonnegative integer constants. No floats ever.
//
//   "m1^2+m2^2"   "(m1+i*m2)^3"   "-1/2*i*m3"
Polynomial parse_polynomial(const std::string& src, int ambient_dim);

}  // namespace gkmod
