#include "dfg/escaliers.hpp"

#include <stdexcept>

namespace dfg {

bool validate_pretableau(const SurjPretableau& t) {
    int n = t.n;
    std::vector<int> row_count(n + 1, 0);
    std::vector<int> col_count(2 * n + 1, 0);
    for (auto [r, c] : t.crosses) {
        if (r < 1 || c < 1 || c > 2 * n || r > esc_col_height(n, c)) return false;
        ++row_count[r];
        ++col_count[c];
    }
    for (int c = 1; c <= 2 * n; ++c)
        if (col_count[c] > 1) return false;
    for (int r = 1; r <= n; ++r)
        if (row_count[r] == 0) return false;
    return true;
}

void enumerate_pretableaux(int n, const std::function<void(const SurjPretableau&)>& yield) {
    if (n < 0) throw std::invalid_argument("enumerate_pretableaux requires n >= 0");
    SurjPretableau t;
    t.n = n;
    std::vector<int> row_count(n + 1, 0);

    std::function<void(int)> rec = [&](int c) {
        if (c > 2 * n) {
            yield(t);
            return;
        }
        int h = esc_col_height(n, c);
        // The row ending at column c (even c only) must be covered by now.
        auto closes_uncovered_row = [&]() {
            return c % 2 == 0 && row_count[n - c / 2 + 1] == 0;
        };
        if (!closes_uncovered_row()) rec(c + 1);
        for (int r = 1; r <= h; ++r) {
            ++row_count[r];
            t.crosses.emplace_back(r, c);
            if (!closes_uncovered_row()) rec(c + 1);
            t.crosses.pop_back();
            --row_count[r];
        }
    };
    rec(1);
}

std::uint64_t count_pretableaux(int n) {
    std::uint64_t total = 0;
    enumerate_pretableaux(n, [&](const SurjPretableau&) { ++total; });
    return total;
}

EscStatVector esc_stats(const SurjPretableau& t) {
    int n = t.n;
    std::vector<int> row_count(n + 1, 0);
    std::vector<bool> has_cross(2 * n + 1, false);
    // cross_row[c] = row of the cross in column c, or 0
    std::vector<int> cross_row(2 * n + 1, 0);
    for (auto [r, c] : t.crosses) {
        ++row_count[r];
        has_cross[c] = true;
        cross_row[c] = r;
    }
    EscStatVector s;
    for (int c = 1; c <= 2 * n; ++c) {
        if (!has_cross[c]) {
            if (c % 2 == 1) ++s.mi;
            else ++s.mp;
        }
    }
    for (int k = 1; k <= n; ++k) {
        int top = n - k + 1;  // row of the top cell of columns 2k-1 and 2k
        int corner = 2 * k, cocorner = 2 * k - 1;
        if (has_cross[corner] && cross_row[corner] == top) {
            if (row_count[top] >= 2) ++s.fd;
            else ++s.fnd;
        }
        if (has_cross[cocorner] && cross_row[cocorner] == top) {
            if (row_count[top] >= 2) ++s.sd;
            else ++s.snd;
        }
    }
    return s;
}

std::vector<int> esc_profile(const SurjPretableau& t) {
    int n = t.n;
    std::vector<int> row_count(n + 1, 0);
    std::vector<int> cross_row(2 * n + 1, 0);
    for (auto [r, c] : t.crosses) {
        ++row_count[r];
        cross_row[c] = r;
    }
    std::vector<int> profile;
    profile.reserve(n);
    for (int k = 1; k <= n; ++k) {
        int top = n - k + 1;
        bool corner = cross_row[2 * k] == top;
        bool cocorner = cross_row[2 * k - 1] == top;
        bool doubled = row_count[top] >= 2;
        if (corner && cocorner) profile.push_back(2);
        else if (cocorner) profile.push_back(doubled ? 4 : 3);
        else if (corner) profile.push_back(doubled ? 6 : 5);
        else profile.push_back(1);
    }
    return profile;
}

MultiPoly gamma_by_escaliers(int n) {
    if (n < 1) throw std::invalid_argument("gamma_by_escaliers requires n >= 1");
    MultiPoly total;
    enumerate_pretableaux(n - 1, [&](const SurjPretableau& t) {
        EscStatVector s = esc_stats(t);
        Exponents e{};
        e[VX] = s.mi;
        e[VY] = s.fd;
        e[VZ] = s.snd;
        e[VXB] = s.mp;
        e[VYB] = s.fnd;
        e[VZB] = s.sd;
        total += MultiPoly::monomial(1, e);
    });
    return total;
}

std::uint64_t count_surjective(const ShapeWord& shape) {
    int nr = shape.num_rows(), nc = shape.num_cols();
    for (int r = 1; r <= nr; ++r)
        if (shape.row_length(r) == 0) return 0;
    for (int c = 1; c <= nc; ++c)
        if (shape.col_height(c) == 0) return 0;

    std::vector<int> row_count(nr + 1, 0);
    std::uint64_t total = 0;

    std::function<void(int)> rec = [&](int c) {
        if (c > nc) {
            ++total;
            return;
        }
        // Column c sits in the rows whose length reaches it, a bottom block.
        for (int r = 1; r <= nr; ++r) {
            if (shape.row_length(r) < c) continue;
            ++row_count[r];
            bool dead = false;
            for (int r2 = 1; r2 <= nr && !dead; ++r2)
                if (shape.row_length(r2) == c && row_count[r2] == 0) dead = true;
            if (!dead) rec(c + 1);
            --row_count[r];
        }
    };
    rec(1);
    return total;
}

}  // namespace dfg
