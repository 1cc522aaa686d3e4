#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dfg/json_io.hpp"
#include "dfg/recurrences.hpp"
#include "dfg/shapes.hpp"

using dfg::AltTableau;
using dfg::Cell;
using dfg::ExtTableau;
using dfg::MultiPoly;
using dfg::ShapeWord;
using dfg::StatVector;
using dfg::Var;

namespace {

ShapeWord random_word(std::mt19937& rng, int max_len = 8) {
    std::uniform_int_distribution<int> len(1, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    std::string w;
    int k = len(rng);
    for (int i = 0; i < k; ++i) w += bit(rng) ? 'D' : 'E';
    return ShapeWord::parse(w);
}

}  // namespace

TEST_CASE("shape word geometry") {
    ShapeWord w = ShapeWord::parse("DDEDE");
    CHECK(w.str() == "DDEDE");
    CHECK(w.str_ba() == "BBABA");
    CHECK(w.num_rows() == 2);
    CHECK(w.num_cols() == 3);
    CHECK(w.row_length(1) == 2);
    CHECK(w.row_length(2) == 3);
    CHECK(w.col_height(1) == 2);
    CHECK(w.col_height(2) == 2);
    CHECK(w.col_height(3) == 1);
    CHECK(w.num_cells() == 5);
    CHECK(w.cell_exists(1, 2));
    CHECK_FALSE(w.cell_exists(1, 3));
    CHECK(w.cell_exists(2, 3));

    CHECK(ShapeWord::parse("BA") == ShapeWord::parse("DE"));
    CHECK_THROWS_AS(ShapeWord::parse("DXE"), std::invalid_argument);

    CHECK(ShapeWord::staircase(3).str() == "DEDEDE");
    CHECK(ShapeWord::bba_power(2).str_ba() == "BBABBA");
    CHECK(ShapeWord::staircase(3).is_staircase());
    CHECK_FALSE(w.is_staircase());

    // zero-length rows and zero-height columns are allowed
    ShapeWord e = ShapeWord::parse("ED");
    CHECK(e.num_rows() == 1);
    CHECK(e.row_length(1) == 0);
    CHECK(e.col_height(1) == 0);
    CHECK(e.num_cells() == 0);
}

TEST_CASE("corners") {
    auto c3 = ShapeWord::staircase(3).corners();
    REQUIRE(c3.size() == 3);
    CHECK(c3[0] == std::pair<int, int>{1, 1});
    CHECK(c3[1] == std::pair<int, int>{2, 2});
    CHECK(c3[2] == std::pair<int, int>{3, 3});
    auto cw = ShapeWord::parse("DDEDE").corners();
    REQUIRE(cw.size() == 2);
    CHECK(cw[0] == std::pair<int, int>{1, 2});
    CHECK(cw[1] == std::pair<int, int>{2, 3});
}

TEST_CASE("transpose is an involution") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        ShapeWord w = random_word(rng);
        CHECK(w.transposed().transposed() == w);
        CHECK(w.transposed().num_rows() == w.num_cols());
    }
    CHECK(ShapeWord::parse("DDEDE").transposed().str() == "DEDEE");
}

TEST_CASE("tableau enumeration is valid, duplicate-free, complete") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        ShapeWord w = random_word(rng, 6);
        std::vector<AltTableau> seen;
        dfg::enumerate_tableaux(w, [&](const AltTableau& t) {
            CHECK(dfg::clear_view_ok(t));
            seen.push_back(t);
        });
        CHECK(seen.size() == dfg::count_tableaux(w));
        for (std::size_t i = 0; i + 1 < seen.size(); ++i)
            CHECK_FALSE(seen[i] == seen[i + 1]);
    }

    // a Down arrow shadowing a Left arrow's row is invalid
    AltTableau bad(ShapeWord::staircase(2));
    bad.set_cell(1, 1, Cell::Down);
    bad.set_cell(2, 1, Cell::Left);
    CHECK_FALSE(dfg::clear_view_ok(bad));
}

TEST_CASE("staircase tableau counts are Genocchi numbers") {
    const std::uint64_t expected[] = {1, 3, 17, 155, 2073, 38227};
    for (int n = 0; n <= 5; ++n)
        CHECK(dfg::count_tableaux(ShapeWord::staircase(n)) == expected[n]);
}

TEST_CASE("worked staircase filling of size 5") {
    AltTableau t(ShapeWord::staircase(5));
    t.set_cell(2, 1, Cell::Left);
    t.set_cell(3, 2, Cell::Left);
    t.set_cell(4, 1, Cell::Left);
    t.set_cell(3, 3, Cell::Down);
    t.set_cell(4, 4, Cell::Down);
    REQUIRE(dfg::clear_view_ok(t));
    StatVector s = dfg::stats(t);
    CHECK(s.emr == 2);
    CHECK(s.fnc == 2);
    CHECK(s.dco == 2);
    CHECK(s.fnr == 0);
    CHECK(s.emc == 1);
    CHECK(s.lco == 0);
    CHECK(s.fr == s.emr + s.fnr);
    CHECK(s.fc == s.emc + s.fnc);
}

TEST_CASE("conjugation involution and statistic swap") {
    for (int n = 1; n <= 4; ++n) {
        dfg::enumerate_tableaux(ShapeWord::staircase(n), [&](const AltTableau& t) {
            AltTableau c = dfg::conjugate(t);
            CHECK(dfg::clear_view_ok(c));
            CHECK(dfg::conjugate(c) == t);
            StatVector a = dfg::stats(t), b = dfg::stats(c);
            CHECK(b.emr == a.emc);
            CHECK(b.fnc == a.fnr);
            CHECK(b.dco == a.lco);
            CHECK(b.fnr == a.fnc);
            CHECK(b.emc == a.emr);
            CHECK(b.lco == a.dco);
        });
    }
}

TEST_CASE("tableau route matches the recurrence") {
    for (int n = 1; n <= 5; ++n) CHECK(dfg::gamma_by_tableaux(n) == dfg::gamma(n));
}

TEST_CASE("extended tableaux") {
    // decorations only use empty rows and columns, and weights telescope
    for (int n = 1; n <= 3; ++n) {
        MultiPoly total;
        dfg::enumerate_extended(n, [&](const ExtTableau& u) {
            StatVector s = dfg::stats(u.base);
            CHECK(u.dashed_rows.size() <= static_cast<std::size_t>(s.emr));
            CHECK(u.dashed_cols.size() <= static_cast<std::size_t>(s.emc));
            CHECK(dfg::ext_profile(u).size() == static_cast<std::size_t>(n));
            total += dfg::ext_weight(u);
        });
        CHECK(total == dfg::gamma(n + 1));
    }

    ExtTableau flat{AltTableau(ShapeWord::parse("DDEDE")), {}, {}};
    CHECK_THROWS_AS(dfg::ext_profile(flat), std::invalid_argument);
}

TEST_CASE("worked extended fillings of size 5") {
    AltTableau base1(ShapeWord::staircase(5));
    base1.set_cell(2, 1, Cell::Left);
    base1.set_cell(4, 1, Cell::Left);
    base1.set_cell(4, 3, Cell::Down);
    base1.set_cell(4, 4, Cell::Down);
    REQUIRE(dfg::clear_view_ok(base1));
    ExtTableau u1{base1, {5}, {2, 5}};
    CHECK(dfg::ext_profile(u1) == std::vector<int>{1, 5, 1, 4, 6});

    AltTableau base2(ShapeWord::staircase(5));
    base2.set_cell(2, 2, Cell::Left);
    base2.set_cell(4, 3, Cell::Left);
    base2.set_cell(5, 2, Cell::Down);
    base2.set_cell(5, 5, Cell::Down);
    REQUIRE(dfg::clear_view_ok(base2));
    ExtTableau u2{base2, {3}, {1}};
    CHECK(dfg::ext_profile(u2) == std::vector<int>{5, 2, 3, 1, 4});
}

TEST_CASE("tableau json round trip") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 5; ++trial) {
        ShapeWord w = random_word(rng, 5);
        dfg::enumerate_tableaux(w, [&](const AltTableau& t) {
            CHECK(dfg::tableau_from_json(dfg::tableau_to_json(t)) == t);
        });
    }
}
