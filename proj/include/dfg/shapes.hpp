#ifndef DFG_SHAPES_HPP
#define DFG_SHAPES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfg/poly.hpp"

namespace dfg {

// Boundary word of a Young diagram, read NW to SE. Right = letter D (a unit
// step right), Down = letter E (a unit step down). With this reading, row r
// (numbered 1 from the top) has length equal to the number of Right steps
// before the r-th Down step, so row lengths weakly increase top to bottom
// (DDEDE has rows of lengths 2 and 3). Rows and columns of size 0 are
// allowed. The escalier alphabet B/A maps onto the same geometry (B = Right,
// A = Down).
class ShapeWord {
public:
    enum class Step : char { Right, Down };

    ShapeWord() = default;
    explicit ShapeWord(std::vector<Step> steps);

    // Accepts D/E or B/A letters; anything else throws std::invalid_argument.
    static ShapeWord parse(std::string_view word);
    static ShapeWord staircase(int n);    // (DE)^n
    static ShapeWord bba_power(int n);    // (BBA)^n

    std::string str() const;      // letters D/E
    std::string str_ba() const;   // letters B/A

    const std::vector<Step>& steps() const { return steps_; }
    int num_rows() const { return static_cast<int>(row_lengths_.size()); }
    int num_cols() const { return num_cols_; }
    // Length of row r, 1-based from the top.
    int row_length(int r) const { return row_lengths_.at(r - 1); }
    // Number of rows containing column c, 1-based from the left; the rows
    // containing c are the bottom col_height(c) ones.
    int col_height(int c) const { return col_heights_.at(c - 1); }
    int num_cells() const;
    bool cell_exists(int r, int c) const;

    // Cells with no right neighbor and no neighbor above (boundary factor
    // Right*Down), ordered from the upper-left corner to the lower-right one.
    std::vector<std::pair<int, int>> corners() const;

    bool is_staircase() const;

    // Reversed word with Right and Down exchanged (the SW-NE flip).
    ShapeWord transposed() const;

    bool operator==(const ShapeWord& o) const { return steps_ == o.steps_; }

private:
    std::vector<Step> steps_;
    std::vector<int> row_lengths_;
    std::vector<int> col_heights_;
    int num_cols_ = 0;
};

enum class Cell : char { Empty = '.', Left = 'L', Down = 'D' };

// The six staircase statistics plus the free-row/column totals they refine.
struct StatVector {
    int emr = 0, fnc = 0, dco = 0, fnr = 0, emc = 0, lco = 0;
    int fr = 0, fc = 0;  // fr = emr + fnr, fc = emc + fnc

    bool operator==(const StatVector& o) const {
        return emr == o.emr && fnc == o.fnc && dco == o.dco && fnr == o.fnr &&
               emc == o.emc && lco == o.lco;
    }
};

// Arrow filling of a Young diagram. Validity (each arrow sees the boundary)
// is maintained by the enumerator and checked by clear_view_ok.
class AltTableau {
public:
    explicit AltTableau(ShapeWord shape);

    const ShapeWord& shape() const { return shape_; }
    Cell cell(int r, int c) const { return rows_.at(r - 1).at(c - 1); }
    void set_cell(int r, int c, Cell v) { rows_.at(r - 1).at(c - 1) = v; }

    bool operator==(const AltTableau& o) const {
        return shape_ == o.shape_ && rows_ == o.rows_;
    }

private:
    ShapeWord shape_;
    std::vector<std::vector<Cell>> rows_;
};

// Independent validity check: scans every row left of each Left arrow and
// every column below each Down arrow.
bool clear_view_ok(const AltTableau& t);

// Backtracking over cells in row-major order; choice order per cell is
// Empty, Left, Down. Yields every valid filling exactly once.
void enumerate_tableaux(const ShapeWord& shape,
                        const std::function<void(const AltTableau&)>& yield);
std::uint64_t count_tableaux(const ShapeWord& shape);

StatVector stats(const AltTableau& t);

AltTableau conjugate(const AltTableau& t);

// Tableau route: Gamma_n as the statistic-weighted sum over the staircase
// (DE)^(n-1).
MultiPoly gamma_by_tableaux(int n);

// Staircase tableau with a chosen subset of its empty rows and columns
// dashed.
struct ExtTableau {
    AltTableau base;
    std::vector<int> dashed_rows;  // row indices, ascending
    std::vector<int> dashed_cols;  // column indices, ascending
};

// All decorations of all tableaux of the staircase (DE)^n; for each base the
// dashed subsets run through bitmasks over the empty-row list then the
// empty-column list, in index order.
void enumerate_extended(int n, const std::function<void(const ExtTableau&)>& yield);

MultiPoly ext_weight(const ExtTableau& u);

// Per-corner case labels (Cases 1..6); requires a staircase base, otherwise
// std::invalid_argument.
std::vector<int> ext_profile(const ExtTableau& u);

}  // namespace dfg

#endif
