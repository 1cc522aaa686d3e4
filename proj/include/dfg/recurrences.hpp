#ifndef DFG_RECURRENCES_HPP
#define DFG_RECURRENCES_HPP

#include "dfg/poly.hpp"

namespace dfg {

// Dumont-Foata polynomial F_n(x,y,z), from its own recurrence
// F_1 = 1, F_n = (x+y)(x+z) F_(n-1)(x+1,y,z) - x^2 F_(n-1).
MultiPoly dumont_foata(int n);

// Generalized polynomial Gamma_n, from
// Gamma_1 = 1,
// Gamma_n = (x+zb)(y+xb) Gamma+ + (x(yb-y) + xb(z-zb) - x*xb) Gamma_(n-1),
// where Gamma+ shifts x and xb by one. Memoized per n; the reference oracle
// for every other route.
const MultiPoly& gamma(int n);

// G_(2n+2) = F_n(1,1,1).
mpz_class genocchi(int n);

}  // namespace dfg

#endif
