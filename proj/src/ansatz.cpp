#include "dfg/ansatz.hpp"

#include <stdexcept>

namespace dfg {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("matrix dim must be positive");
    entries_.resize(static_cast<std::size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) {
    PolyMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = MultiPoly::constant(1);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dim mismatch");
    PolyMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int k = 0; k < a.dim_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim_; ++j)
                if (!b.at(k, j).is_zero()) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dim mismatch");
    PolyMatrix r(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
        for (int j = 0; j < a.dim_; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

PolyMatrix operator*(const MultiPoly& s, const PolyMatrix& m) {
    PolyMatrix r(m.dim_);
    for (int i = 0; i < m.dim_; ++i)
        for (int j = 0; j < m.dim_; ++j) r.at(i, j) = s * m.at(i, j);
    return r;
}

PolyMatrix make_D(int dim) {
    PolyMatrix d(dim);
    for (int i = 0; i < dim; ++i) {
        d.at(i, i) = MultiPoly::var(VY) + i;
        if (i + 1 < dim) d.at(i, i + 1) = MultiPoly::constant(i + 1);
    }
    return d;
}

PolyMatrix make_E(int dim) {
    PolyMatrix e(dim);
    for (int i = 0; i < dim; ++i) {
        e.at(i, i) = MultiPoly::var(VXB) + i;
        if (i + 1 < dim) e.at(i + 1, i) = MultiPoly::var(VY) + MultiPoly::var(VXB) + i;
    }
    return e;
}

PolyMatrix make_M(int dim) {
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    PolyMatrix D = make_D(dim), E = make_E(dim);
    return E * D + (zb + x - xb) * D + (z + yb - y) * E +
           ((yb - y) * (x - xb)) * PolyMatrix::identity(dim);
}

PolyMatrix make_B(int dim) {
    PolyMatrix b(dim);
    for (int i = 0; i < dim; ++i) {
        b.at(i, i) = MultiPoly::constant(i);
        if (i + 1 < dim) b.at(i, i + 1) = MultiPoly::constant(i + 1);
    }
    return b;
}

PolyMatrix make_A(int dim) {
    PolyMatrix a(dim);
    for (int i = 0; i + 1 < dim; ++i) a.at(i + 1, i) = MultiPoly::constant(1);
    return a;
}

PolyMatrix make_N(int dim) {
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    PolyMatrix B = make_B(dim), A = make_A(dim);
    PolyMatrix I = PolyMatrix::identity(dim);
    PolyMatrix Bx = B + x * I, Bxb = B + xb * I;
    return A * Bx * Bxb + (y * zb) * (A + I) + (z * I + zb * A) * Bxb + (yb * I + y * A) * Bx;
}

PolyMatrix make_Mi(int i, int dim) {
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    switch (i) {
        case 1: return make_E(dim) * make_D(dim);
        case 2: return zb * make_D(dim);
        case 3: return (x - xb) * make_D(dim);
        case 4: return z * make_E(dim);
        case 5: return (yb - y) * make_E(dim);
        case 6: return ((yb - y) * (x - xb)) * PolyMatrix::identity(dim);
        default: throw std::out_of_range("M_i index must be in 1..6");
    }
}

PolyMatrix make_Ni(int i, int dim) {
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    PolyMatrix B = make_B(dim), A = make_A(dim);
    PolyMatrix I = PolyMatrix::identity(dim);
    PolyMatrix Bx = B + x * I, Bxb = B + xb * I;
    switch (i) {
        case 1: return A * Bx * Bxb;
        case 2: return (y * zb) * (A + I);
        case 3: return z * Bxb;
        case 4: return zb * (A * Bxb);
        case 5: return yb * Bx;
        case 6: return y * (A * Bx);
        default: throw std::out_of_range("N_i index must be in 1..6");
    }
}

MultiPoly braket_word(std::span<const PolyMatrix> letters) {
    if (letters.empty()) return MultiPoly::constant(1);
    int dim = letters[0].dim();
    for (const PolyMatrix& m : letters)
        if (m.dim() != dim) throw std::invalid_argument("braket_word: mixed matrix dims");
    if (dim < static_cast<int>(letters.size()) + 1)
        throw std::invalid_argument("braket_word: truncation dim too small for word length");
    // Row-vector times matrices, keeping only what feeds entry (0,0).
    std::vector<MultiPoly> row(dim);
    row[0] = MultiPoly::constant(1);
    for (const PolyMatrix& m : letters) {
        std::vector<MultiPoly> next(dim);
        for (int i = 0; i < dim; ++i) {
            if (row[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                if (!m.at(i, j).is_zero()) next[j] += row[i] * m.at(i, j);
        }
        row = std::move(next);
    }
    return row[0];
}

static MultiPoly braket_shape(const ShapeWord& shape, const PolyMatrix& right,
                              const PolyMatrix& down) {
    std::vector<PolyMatrix> letters;
    letters.reserve(shape.steps().size());
    for (ShapeWord::Step s : shape.steps())
        letters.push_back(s == ShapeWord::Step::Right ? right : down);
    return braket_word(letters);
}

MultiPoly braket_shape_de(const ShapeWord& shape) {
    int dim = static_cast<int>(shape.steps().size()) + 1;
    return braket_shape(shape, make_D(dim), make_E(dim));
}

MultiPoly braket_shape_ba(const ShapeWord& shape) {
    int dim = static_cast<int>(shape.steps().size()) + 1;
    return braket_shape(shape, make_B(dim), make_A(dim));
}

MultiPoly gamma_by_M(int n) {
    if (n < 0) throw std::invalid_argument("gamma_by_M requires n >= 0");
    std::vector<PolyMatrix> letters(static_cast<std::size_t>(n), make_M(n + 1));
    return braket_word(letters);
}

MultiPoly gamma_by_N(int n) {
    if (n < 0) throw std::invalid_argument("gamma_by_N requires n >= 0");
    std::vector<PolyMatrix> letters(static_cast<std::size_t>(n), make_N(n + 1));
    return braket_word(letters);
}

}  // namespace dfg
