#include "dfg/shapes.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfg {

ShapeWord::ShapeWord(std::vector<Step> steps) : steps_(std::move(steps)) {
    int rights = 0;
    for (Step s : steps_) {
        if (s == Step::Right) {
            ++rights;
        } else {
            row_lengths_.push_back(rights);
        }
    }
    num_cols_ = rights;
    col_heights_.assign(num_cols_, 0);
    for (int c = 1; c <= num_cols_; ++c) {
        int h = 0;
        for (int len : row_lengths_)
            if (len >= c) ++h;
        col_heights_[c - 1] = h;
    }
}

ShapeWord ShapeWord::parse(std::string_view word) {
    std::vector<Step> steps;
    steps.reserve(word.size());
    for (char ch : word) {
        switch (ch) {
            case 'D': case 'B': steps.push_back(Step::Right); break;
            case 'E': case 'A': steps.push_back(Step::Down); break;
            default:
                throw std::invalid_argument(
                    std::string("invalid shape letter '") + ch + "' (expected D/E or B/A)");
        }
    }
    return ShapeWord(std::move(steps));
}

ShapeWord ShapeWord::staircase(int n) {
    std::vector<Step> steps;
    for (int i = 0; i < n; ++i) {
        steps.push_back(Step::Right);
        steps.push_back(Step::Down);
    }
    return ShapeWord(std::move(steps));
}

ShapeWord ShapeWord::bba_power(int n) {
    std::vector<Step> steps;
    for (int i = 0; i < n; ++i) {
        steps.push_back(Step::Right);
        steps.push_back(Step::Right);
        steps.push_back(Step::Down);
    }
    return ShapeWord(std::move(steps));
}

std::string ShapeWord::str() const {
    std::string s;
    for (Step st : steps_) s += (st == Step::Right) ? 'D' : 'E';
    return s;
}

std::string ShapeWord::str_ba() const {
    std::string s;
    for (Step st : steps_) s += (st == Step::Right) ? 'B' : 'A';
    return s;
}

int ShapeWord::num_cells() const {
    int total = 0;
    for (int len : row_lengths_) total += len;
    return total;
}

bool ShapeWord::cell_exists(int r, int c) const {
    return r >= 1 && r <= num_rows() && c >= 1 && c <= row_length(r);
}

std::vector<std::pair<int, int>> ShapeWord::corners() const {
    std::vector<std::pair<int, int>> result;
    for (int r = 1; r <= num_rows(); ++r) {
        int c = row_length(r);
        if (c == 0) continue;
        if (r == 1 || row_length(r - 1) < c) result.emplace_back(r, c);
    }
    return result;
}

bool ShapeWord::is_staircase() const {
    return steps_ == staircase(num_rows()).steps_;
}

ShapeWord ShapeWord::transposed() const {
    std::vector<Step> steps(steps_.rbegin(), steps_.rend());
    for (Step& s : steps)
        s = (s == Step::Right) ? Step::Down : Step::Right;
    return ShapeWord(std::move(steps));
}

AltTableau::AltTableau(ShapeWord shape) : shape_(std::move(shape)) {
    rows_.resize(shape_.num_rows());
    for (int r = 1; r <= shape_.num_rows(); ++r)
        rows_[r - 1].assign(shape_.row_length(r), Cell::Empty);
}

bool clear_view_ok(const AltTableau& t) {
    const ShapeWord& sh = t.shape();
    for (int r = 1; r <= sh.num_rows(); ++r) {
        for (int c = 1; c <= sh.row_length(r); ++c) {
            Cell v = t.cell(r, c);
            if (v == Cell::Left) {
                for (int c2 = 1; c2 < c; ++c2)
                    if (t.cell(r, c2) != Cell::Empty) return false;
            } else if (v == Cell::Down) {
                for (int r2 = r + 1; r2 <= sh.num_rows(); ++r2)
                    if (sh.cell_exists(r2, c) && t.cell(r2, c) != Cell::Empty) return false;
            }
        }
    }
    return true;
}

void enumerate_tableaux(const ShapeWord& shape,
                        const std::function<void(const AltTableau&)>& yield) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= shape.num_rows(); ++r)
        for (int c = 1; c <= shape.row_length(r); ++c)
            cells.emplace_back(r, c);

    AltTableau t(shape);
    std::vector<bool> col_shadow(shape.num_cols() + 1, false);
    std::vector<bool> row_clean(shape.num_rows() + 1, true);

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            yield(t);
            return;
        }
        auto [r, c] = cells[idx];

        // Empty
        rec(idx + 1);

        // Left: everything to its left must be empty, and the cell must not
        // lie in the shadow of a Down arrow above.
        if (row_clean[r] && !col_shadow[c]) {
            t.set_cell(r, c, Cell::Left);
            row_clean[r] = false;
            rec(idx + 1);
            row_clean[r] = true;
            t.set_cell(r, c, Cell::Empty);
        }

        // Down: shadows the rest of the column.
        if (!col_shadow[c]) {
            t.set_cell(r, c, Cell::Down);
            bool was_clean = row_clean[r];
            row_clean[r] = false;
            col_shadow[c] = true;
            rec(idx + 1);
            col_shadow[c] = false;
            row_clean[r] = was_clean;
            t.set_cell(r, c, Cell::Empty);
        }
    };
    rec(0);
}

std::uint64_t count_tableaux(const ShapeWord& shape) {
    std::uint64_t n = 0;
    enumerate_tableaux(shape, [&](const AltTableau&) { ++n; });
    return n;
}

StatVector stats(const AltTableau& t) {
    const ShapeWord& sh = t.shape();
    int nr = sh.num_rows(), nc = sh.num_cols();
    std::vector<bool> row_left(nr + 1, false), row_any(nr + 1, false);
    std::vector<bool> col_down(nc + 1, false), col_any(nc + 1, false);
    for (int r = 1; r <= nr; ++r) {
        for (int c = 1; c <= sh.row_length(r); ++c) {
            Cell v = t.cell(r, c);
            if (v == Cell::Empty) continue;
            row_any[r] = true;
            col_any[c] = true;
            if (v == Cell::Left) row_left[r] = true;
            if (v == Cell::Down) col_down[c] = true;
        }
    }
    StatVector s;
    for (int r = 1; r <= nr; ++r) {
        if (!row_any[r]) ++s.emr;
        if (!row_left[r]) {
            ++s.fr;
            if (row_any[r]) ++s.fnr;
        }
    }
    for (int c = 1; c <= nc; ++c) {
        if (!col_any[c]) ++s.emc;
        if (!col_down[c]) {
            ++s.fc;
            if (col_any[c]) ++s.fnc;
        }
    }
    for (auto [r, c] : sh.corners()) {
        if (t.cell(r, c) == Cell::Down) ++s.dco;
        if (t.cell(r, c) == Cell::Left) ++s.lco;
    }
    return s;
}

AltTableau conjugate(const AltTableau& t) {
    const ShapeWord& sh = t.shape();
    int nr = sh.num_rows(), nc = sh.num_cols();
    AltTableau out(sh.transposed());
    for (int r = 1; r <= nr; ++r) {
        for (int c = 1; c <= sh.row_length(r); ++c) {
            Cell v = t.cell(r, c);
            if (v == Cell::Empty) continue;
            out.set_cell(nc - c + 1, nr - r + 1,
                         v == Cell::Left ? Cell::Down : Cell::Left);
        }
    }
    return out;
}

MultiPoly gamma_by_tableaux(int n) {
    if (n < 1) throw std::invalid_argument("gamma_by_tableaux requires n >= 1");
    MultiPoly total;
    enumerate_tableaux(ShapeWord::staircase(n - 1), [&](const AltTableau& t) {
        StatVector s = stats(t);
        Exponents e{};
        e[VX] = s.emr;
        e[VY] = s.fnc;
        e[VZ] = s.dco;
        e[VXB] = s.fnr;
        e[VYB] = s.emc;
        e[VZB] = s.lco;
        total += MultiPoly::monomial(1, e);
    });
    return total;
}

void enumerate_extended(int n, const std::function<void(const ExtTableau&)>& yield) {
    enumerate_tableaux(ShapeWord::staircase(n), [&](const AltTableau& t) {
        const ShapeWord& sh = t.shape();
        std::vector<int> empty_rows, empty_cols;
        std::vector<bool> row_any(sh.num_rows() + 1, false), col_any(sh.num_cols() + 1, false);
        for (int r = 1; r <= sh.num_rows(); ++r)
            for (int c = 1; c <= sh.row_length(r); ++c)
                if (t.cell(r, c) != Cell::Empty) {
                    row_any[r] = true;
                    col_any[c] = true;
                }
        for (int r = 1; r <= sh.num_rows(); ++r)
            if (!row_any[r]) empty_rows.push_back(r);
        for (int c = 1; c <= sh.num_cols(); ++c)
            if (!col_any[c]) empty_cols.push_back(c);

        ExtTableau u{t, {}, {}};
        for (std::uint32_t rm = 0; rm < (1u << empty_rows.size()); ++rm) {
            u.dashed_rows.clear();
            for (std::size_t i = 0; i < empty_rows.size(); ++i)
                if (rm & (1u << i)) u.dashed_rows.push_back(empty_rows[i]);
            for (std::uint32_t cm = 0; cm < (1u << empty_cols.size()); ++cm) {
                u.dashed_cols.clear();
                for (std::size_t i = 0; i < empty_cols.size(); ++i)
                    if (cm & (1u << i)) u.dashed_cols.push_back(empty_cols[i]);
                yield(u);
            }
        }
    });
}

MultiPoly ext_weight(const ExtTableau& u) {
    StatVector s = stats(u.base);
    int hr = static_cast<int>(u.dashed_rows.size());
    int hc = static_cast<int>(u.dashed_cols.size());
    Exponents e{};
    e[VY] = s.fc - hc;
    e[VZ] = s.dco;
    e[VXB] = s.fr - hr;
    e[VZB] = s.lco;
    MultiPoly w = MultiPoly::monomial(1, e);
    if (hr > 0)
        w *= (MultiPoly::var(VX) - MultiPoly::var(VXB)).pow(hr);
    if (hc > 0)
        w *= (MultiPoly::var(VYB) - MultiPoly::var(VY)).pow(hc);
    return w;
}

std::vector<int> ext_profile(const ExtTableau& u) {
    const ShapeWord& sh = u.base.shape();
    if (!sh.is_staircase())
        throw std::invalid_argument("ext_profile requires a staircase shape");
    int n = sh.num_rows();
    std::vector<int> profile;
    profile.reserve(n);
    auto dashed = [](const std::vector<int>& v, int k) {
        return std::find(v.begin(), v.end(), k) != v.end();
    };
    for (int k = 1; k <= n; ++k) {
        Cell v = u.base.cell(k, k);
        if (v == Cell::Left) {
            profile.push_back(2);
        } else if (v == Cell::Down) {
            profile.push_back(4);
        } else {
            bool dr = dashed(u.dashed_rows, k), dc = dashed(u.dashed_cols, k);
            profile.push_back(dr && dc ? 6 : dr ? 3 : dc ? 5 : 1);
        }
    }
    return profile;
}

}  // namespace dfg
