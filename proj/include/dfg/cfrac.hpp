#ifndef DFG_CFRAC_HPP
#define DFG_CFRAC_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dfg/poly.hpp"

namespace dfg {

// J-fraction coefficients:
// b_n = (x+n)(yb+n) + (y+n)(zb+n) + (z+n)(xb+n) - n(n+1)
// lambda_n = n (xb+y+n-1)(yb+z+n-1)(zb+x+n-1)
MultiPoly b_coeff(int n);
MultiPoly lambda_coeff(int n);  // n >= 1

enum class MotzkinStep : char { Up = 'U', Level = 'L', Down = 'D' };

// All Motzkin paths of the given length (nonnegative heights, ending at 0),
// in lexicographic step order Up < Level < Down at each position.
void enumerate_motzkin_paths(int length,
                             const std::function<void(const std::vector<MotzkinStep>&)>& yield);
std::uint64_t count_motzkin_paths(int length);

// Gamma_n as the weighted Motzkin-path sum over paths of n-1 steps: a level
// step at height i weighs b_i, an up step reaching height i weighs
// lambda_i, down steps weigh 1. Computed by dynamic programming over
// (step, height).
MultiPoly gamma_by_motzkin(int n);

// Coefficients of t^1..t^nmax of the truncated J-fraction
// t / (1 - b_0 t - lambda_1 t^2 / (1 - b_1 t - ...)), evaluated bottom-up
// with series reciprocals. Returned vector has size nmax+1 with entry n
// equal to Gamma_n (entry 0 unused, zero). depth < 0 selects the default
// nmax/2 + 1 nesting levels.
std::vector<MultiPoly> gamma_by_cfrac(int nmax, int depth = -1);

}  // namespace dfg

#endif
