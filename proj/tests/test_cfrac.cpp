#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfg/cfrac.hpp"
#include "dfg/recurrences.hpp"

using dfg::MotzkinStep;
using dfg::MultiPoly;
using dfg::Var;

TEST_CASE("continued fraction coefficients") {
    const MultiPoly x = MultiPoly::var(Var::VX), y = MultiPoly::var(Var::VY),
                    z = MultiPoly::var(Var::VZ), xb = MultiPoly::var(Var::VXB),
                    yb = MultiPoly::var(Var::VYB), zb = MultiPoly::var(Var::VZB);
    CHECK(dfg::b_coeff(0) == x * yb + y * zb + z * xb);
    CHECK(dfg::b_coeff(0) == dfg::gamma(2));
    CHECK(dfg::b_coeff(1) ==
          (x + 1) * (yb + 1) + (y + 1) * (zb + 1) + (z + 1) * (xb + 1) - 2);
    CHECK(dfg::lambda_coeff(1) == (xb + y) * (yb + z) * (zb + x));
    CHECK(dfg::lambda_coeff(2) == 2 * (xb + y + 1) * (yb + z + 1) * (zb + x + 1));
}

TEST_CASE("Motzkin path counts") {
    const std::uint64_t expected[] = {1, 1, 2, 4, 9, 21, 51};
    for (int len = 0; len <= 6; ++len) CHECK(dfg::count_motzkin_paths(len) == expected[len]);
}

TEST_CASE("enumerated paths stay nonnegative and close") {
    for (int len = 0; len <= 7; ++len) {
        std::uint64_t seen = 0;
        dfg::enumerate_motzkin_paths(len, [&](const std::vector<MotzkinStep>& path) {
            CHECK(path.size() == static_cast<std::size_t>(len));
            int h = 0;
            for (MotzkinStep s : path) {
                if (s == MotzkinStep::Up) ++h;
                if (s == MotzkinStep::Down) --h;
                CHECK(h >= 0);
            }
            CHECK(h == 0);
            ++seen;
        });
        CHECK(seen == dfg::count_motzkin_paths(len));
    }
}

TEST_CASE("weighted path sum matches the recurrence") {
    for (int n = 1; n <= 7; ++n) CHECK(dfg::gamma_by_motzkin(n) == dfg::gamma(n));
}

TEST_CASE("weighted path sum by explicit listing") {
    // independent of the DP: walk every path of 3 steps
    MultiPoly total;
    dfg::enumerate_motzkin_paths(3, [&](const std::vector<MotzkinStep>& path) {
        MultiPoly w = MultiPoly::constant(1);
        int h = 0;
        for (MotzkinStep s : path) {
            if (s == MotzkinStep::Up) {
                ++h;
                w *= dfg::lambda_coeff(h);
            } else if (s == MotzkinStep::Level) {
                w *= dfg::b_coeff(h);
            } else {
                --h;
            }
        }
        total += w;
    });
    CHECK(total == dfg::gamma(4));
}

TEST_CASE("truncated continued fraction expansion") {
    auto g = dfg::gamma_by_cfrac(7);
    REQUIRE(g.size() == 8);
    CHECK(g[0] == MultiPoly());
    for (int n = 1; n <= 7; ++n) CHECK(g[n] == dfg::gamma(n));
}

TEST_CASE("nesting depth beyond the default changes nothing") {
    auto shallow = dfg::gamma_by_cfrac(5);        // default depth 3
    auto deep = dfg::gamma_by_cfrac(5, 8);
    for (int n = 1; n <= 5; ++n) CHECK(shallow[n] == deep[n]);
    // a too-shallow truncation must disagree at the top order
    auto cut = dfg::gamma_by_cfrac(5, 1);
    CHECK(cut[2] == dfg::gamma(2));
    CHECK_FALSE(cut[5] == dfg::gamma(5));
}
