#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dfg/json_io.hpp"
#include "dfg/poly.hpp"

using dfg::Exponents;
using dfg::MultiPoly;
using dfg::TruncSeries;
using dfg::Var;

namespace {

MultiPoly random_poly(std::mt19937& rng, int max_terms = 6, int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-9, 9);
    MultiPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Exponents e;
        for (int i = 0; i < dfg::kNumVars; ++i) e[i] = exp(rng);
        p += MultiPoly::monomial(coeff(rng), e);
    }
    return p;
}

std::array<mpz_class, dfg::kNumVars> random_point(std::mt19937& rng) {
    std::uniform_int_distribution<int> v(-5, 5);
    std::array<mpz_class, dfg::kNumVars> pt;
    for (auto& c : pt) c = v(rng);
    return pt;
}

const MultiPoly X = MultiPoly::var(Var::VX);
const MultiPoly Y = MultiPoly::var(Var::VY);
const MultiPoly YB = MultiPoly::var(Var::VYB);

}  // namespace

TEST_CASE("constants and variables") {
    CHECK(MultiPoly().is_zero());
    CHECK(MultiPoly::constant(0).is_zero());
    CHECK(MultiPoly().degree() == -1);
    CHECK(MultiPoly::constant(7).degree() == 0);
    CHECK(MultiPoly::var(Var::VZB, 3).degree() == 3);
    CHECK(X + (-X) == MultiPoly());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * MultiPoly::constant(1) == a);
        CHECK(a * MultiPoly() == MultiPoly());
        CHECK(a - a == MultiPoly());
    }
}

TEST_CASE("pow") {
    CHECK(X.pow(0) == MultiPoly::constant(1));
    CHECK((X + Y).pow(2) == X * X + 2 * X * Y + Y * Y);
    std::mt19937 rng(7);
    MultiPoly p = random_poly(rng, 3, 2);
    CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        auto pt = random_point(rng);
        CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
        CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
    CHECK(MultiPoly::constant(5).eval({0, 0, 0, 0, 0, 0}) == 5);
}

TEST_CASE("shift_plus_one") {
    // (x)^2 -> (x+1)^2
    MultiPoly sq = X * X;
    CHECK(sq.shift_plus_one(true, false) == X * X + 2 * X + MultiPoly::constant(1));
    // untouched variables pass through
    CHECK(Y.shift_plus_one(true, true) == Y);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        // homomorphism
        CHECK((a * b).shift_plus_one(true, true) ==
              a.shift_plus_one(true, true) * b.shift_plus_one(true, true));
        CHECK((a + b).shift_plus_one(true, false) ==
              a.shift_plus_one(true, false) + b.shift_plus_one(true, false));
        // agreement with evaluation at a shifted point
        auto pt = random_point(rng);
        auto shifted = pt;
        shifted[Var::VX] += 1;
        shifted[Var::VXB] += 1;
        CHECK(a.shift_plus_one(true, true).eval(pt) == a.eval(shifted));
    }
}

TEST_CASE("rename_vars") {
    std::array<Var, dfg::kNumVars> swap_xy{Var::VY, Var::VX, Var::VZ,
                                           Var::VXB, Var::VYB, Var::VZB};
    CHECK(X.rename_vars(swap_xy) == Y);
    CHECK((X * Y).rename_vars(swap_xy) == X * Y);
    // non-injective image merges exponents
    std::array<Var, dfg::kNumVars> collapse{Var::VX, Var::VX, Var::VX,
                                            Var::VX, Var::VX, Var::VX};
    CHECK((X * YB + Y).rename_vars(collapse) == X * X + X);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng);
        CHECK(a.rename_vars(swap_xy).rename_vars(swap_xy) == a);
    }
}

TEST_CASE("canonical text") {
    CHECK(MultiPoly().text() == "0");
    CHECK(MultiPoly::constant(-3).text() == "-3");
    CHECK((X * YB + Y * MultiPoly::var(Var::VZB) +
           MultiPoly::var(Var::VZ) * MultiPoly::var(Var::VXB))
              .text() == "x*yb + y*zb + z*xb");
    CHECK((X - 2 * Y).text() == "x - 2*y");
    CHECK((-X.pow(2) + MultiPoly::constant(4)).text() == "-x^2 + 4");
}

TEST_CASE("all_coeffs_nonnegative") {
    CHECK((X + 2 * Y).all_coeffs_nonnegative());
    CHECK_FALSE((X - Y).all_coeffs_nonnegative());
    CHECK(MultiPoly().all_coeffs_nonnegative());
}

TEST_CASE("json round trip") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng);
        CHECK(dfg::poly_from_json(dfg::poly_to_json(a)) == a);
    }
    auto j = dfg::poly_to_json(X * YB + 3 * Y);
    CHECK(j["terms"][0]["coeff"] == "1");  // descending order: degree 2 first
    CHECK(j["terms"][1]["coeff"] == "3");
}

TEST_CASE("truncated series arithmetic and reciprocal") {
    const int ord = 6;
    std::mt19937 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        TruncSeries s(ord);
        s.set_coeff(0, MultiPoly::constant(1));
        for (int k = 1; k <= ord; ++k) s.set_coeff(k, random_poly(rng, 3, 2));
        CHECK(s * s.reciprocal() == TruncSeries::one(ord));
        CHECK(s.reciprocal().reciprocal() == s);
    }

    TruncSeries bad(3);
    bad.set_coeff(0, MultiPoly::constant(2));
    CHECK_THROWS_AS(bad.reciprocal(), std::domain_error);

    TruncSeries a(3), b(4);
    CHECK_THROWS_AS(a * b, std::invalid_argument);

    // 1/(1 - t) = 1 + t + t^2 + ...
    TruncSeries geo(4);
    geo.set_coeff(0, MultiPoly::constant(1));
    geo.set_coeff(1, MultiPoly::constant(-1));
    TruncSeries inv = geo.reciprocal();
    for (int k = 0; k <= 4; ++k) CHECK(inv.coeff(k) == MultiPoly::constant(1));
}
