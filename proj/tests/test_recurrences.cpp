#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfg/recurrences.hpp"

using dfg::MultiPoly;
using dfg::Var;

TEST_CASE("classical polynomial base cases") {
    const MultiPoly x = MultiPoly::var(Var::VX), y = MultiPoly::var(Var::VY),
                    z = MultiPoly::var(Var::VZ);
    CHECK(dfg::dumont_foata(1) == MultiPoly::constant(1));
    CHECK(dfg::dumont_foata(2) == x * y + x * z + y * z);
    // recompute F_3 directly from the recurrence
    MultiPoly f2 = dfg::dumont_foata(2);
    MultiPoly f3 = (x + y) * (x + z) * f2.shift_plus_one(true, false) - x * x * f2;
    CHECK(dfg::dumont_foata(3) == f3);
}

TEST_CASE("Genocchi numbers") {
    const mpz_class expected[] = {1, 3, 17, 155, 2073, 38227, 929569};
    for (int n = 1; n <= 7; ++n) CHECK(dfg::genocchi(n) == expected[n - 1]);
}

TEST_CASE("generalized polynomial base cases") {
    const MultiPoly x = MultiPoly::var(Var::VX), y = MultiPoly::var(Var::VY),
                    z = MultiPoly::var(Var::VZ), xb = MultiPoly::var(Var::VXB),
                    yb = MultiPoly::var(Var::VYB), zb = MultiPoly::var(Var::VZB);
    CHECK(dfg::gamma(1) == MultiPoly::constant(1));
    CHECK(dfg::gamma(2) == x * yb + y * zb + z * xb);
    CHECK(dfg::gamma(2).text() == "x*yb + y*zb + z*xb");
    // one unrolled recurrence step
    MultiPoly g2 = dfg::gamma(2);
    MultiPoly g3 = (x + zb) * (y + xb) * g2.shift_plus_one(true, true) +
                   (x * (yb - y) + xb * (z - zb) - x * xb) * g2;
    CHECK(dfg::gamma(3) == g3);
}

TEST_CASE("memoization is order-independent") {
    // access out of order; results must match a fresh unrolled computation
    MultiPoly g6 = dfg::gamma(6);
    MultiPoly g4 = dfg::gamma(4);
    MultiPoly check = MultiPoly::constant(1);
    const MultiPoly x = MultiPoly::var(Var::VX), y = MultiPoly::var(Var::VY),
                    z = MultiPoly::var(Var::VZ), xb = MultiPoly::var(Var::VXB),
                    yb = MultiPoly::var(Var::VYB), zb = MultiPoly::var(Var::VZB);
    for (int k = 2; k <= 6; ++k) {
        check = (x + zb) * (y + xb) * check.shift_plus_one(true, true) +
                (x * (yb - y) + xb * (z - zb) - x * xb) * check;
        if (k == 4) CHECK(check == g4);
    }
    CHECK(check == g6);
}

TEST_CASE("collapsing the bars recovers the classical polynomial") {
    std::array<Var, dfg::kNumVars> collapse{Var::VX, Var::VY, Var::VZ,
                                            Var::VX, Var::VY, Var::VZ};
    for (int n = 1; n <= 7; ++n)
        CHECK(dfg::gamma(n).rename_vars(collapse) == dfg::dumont_foata(n));
}

TEST_CASE("positivity and degree") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(dfg::gamma(n).all_coeffs_nonnegative());
        CHECK(dfg::gamma(n).degree() == 2 * (n - 1));
        CHECK(dfg::dumont_foata(n).all_coeffs_nonnegative());
    }
}
