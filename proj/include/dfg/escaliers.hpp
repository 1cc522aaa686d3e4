#ifndef DFG_ESCALIERS_HPP
#define DFG_ESCALIERS_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dfg/poly.hpp"
#include "dfg/shapes.hpp"

namespace dfg {

// Cross filling of the (BBA)^n diagram with at least one cross per row and
// at most one per column. Rows are numbered 1 from the bottom (row 1 is the
// longest, of length 2n); columns 1-based from the left, so column c has
// height n - ceil(c/2) + 1.
struct SurjPretableau {
    int n = 0;
    std::vector<std::pair<int, int>> crosses;  // (row from bottom, column)
};

// The six escalier statistics. Corner k is the top cell of column 2k, its
// co-corner the top cell of column 2k-1 (same row); pairs are numbered from
// the upper-left one (k = 1) to the lower-right one (k = n).
struct EscStatVector {
    int mi = 0, fd = 0, snd = 0, mp = 0, fnd = 0, sd = 0;

    bool operator==(const EscStatVector& o) const = default;
};

inline int esc_row_length(int n, int r) { return 2 * (n - r + 1); }
inline int esc_col_height(int n, int c) { return n - (c + 1) / 2 + 1; }

// Row-surjectivity and column-injectivity, checked from scratch.
bool validate_pretableau(const SurjPretableau& t);

// Column-by-column backtracking, left to right; per column the choices are
// "no cross" then a cross in rows 1, 2, ... ascending. A row whose last
// intersecting column passes while the row is still empty prunes the branch.
void enumerate_pretableaux(int n, const std::function<void(const SurjPretableau&)>& yield);
std::uint64_t count_pretableaux(int n);

EscStatVector esc_stats(const SurjPretableau& t);

// Per-pair case labels (Cases 1..6 of the escalier profile).
std::vector<int> esc_profile(const SurjPretableau& t);

// Escalier route: Gamma_n as the statistic-weighted sum over S_(n-1).
MultiPoly gamma_by_escaliers(int n);

// Number of fillings of an arbitrary {B,A} shape with exactly one cross per
// column and at least one per row.
std::uint64_t count_surjective(const ShapeWord& shape);

}  // namespace dfg

#endif
