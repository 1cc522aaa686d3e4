#ifndef DFG_ANSATZ_HPP
#define DFG_ANSATZ_HPP

#include <span>
#include <vector>

#include "dfg/poly.hpp"
#include "dfg/shapes.hpp"

namespace dfg {

// Square matrix with exact polynomial entries.
class PolyMatrix {
public:
    explicit PolyMatrix(int dim);
    static PolyMatrix identity(int dim);

    int dim() const { return dim_; }
    MultiPoly& at(int i, int j) { return entries_[i * dim_ + j]; }
    const MultiPoly& at(int i, int j) const { return entries_[i * dim_ + j]; }

    bool operator==(const PolyMatrix& o) const = default;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& m);

private:
    int dim_;
    std::vector<MultiPoly> entries_;
};

// Truncations of the PASEP operators: D upper-bidiagonal with
// D[i][i] = y+i, D[i][i+1] = i+1; E lower-bidiagonal with E[i][i] = xb+i,
// E[i+1][i] = y+xb+i.
PolyMatrix make_D(int dim);
PolyMatrix make_E(int dim);

// M = ED + (zb+x-xb)D + (z+yb-y)E + (yb-y)(x-xb)I.
PolyMatrix make_M(int dim);

// Escalier operators: B[i][i] = i, B[i][i+1] = i+1; A[i+1][i] = 1.
PolyMatrix make_B(int dim);
PolyMatrix make_A(int dim);

// N = A(B+xI)(B+xbI) + y*zb(A+I) + (zI+zbA)(B+xbI) + (ybI+yA)(B+xI).
PolyMatrix make_N(int dim);

// The six-term decompositions M = sum M_i and N = sum N_i; i in 1..6, else
// std::out_of_range.
PolyMatrix make_Mi(int i, int dim);
PolyMatrix make_Ni(int i, int dim);

// Top-left entry of the product of the letters, in word order (first letter
// is the leftmost factor). All matrices must share one dim, and dim must be
// at least length+1; violations throw std::invalid_argument.
MultiPoly braket_word(std::span<const PolyMatrix> letters);

// Word built from a shape word: Right -> D, Down -> E (or B/A respectively).
MultiPoly braket_shape_de(const ShapeWord& shape);
MultiPoly braket_shape_ba(const ShapeWord& shape);

// Gamma_(n+1) = <W|M^n|V> and <W|N^n|V>, at truncation dim n+1.
MultiPoly gamma_by_M(int n);
MultiPoly gamma_by_N(int n);

}  // namespace dfg

#endif
