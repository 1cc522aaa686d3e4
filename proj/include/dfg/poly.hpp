#ifndef DFG_POLY_HPP
#define DFG_POLY_HPP

#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dfg {

// Variable order is fixed: x, y, z, xb, yb, zb. All canonical orderings
// (term maps, printing, JSON) derive from this order.
enum Var : int { VX = 0, VY = 1, VZ = 2, VXB = 3, VYB = 4, VZB = 5 };

inline constexpr int kNumVars = 6;

extern const std::array<const char*, kNumVars> kVarNames;

using Exponents = std::array<int, kNumVars>;

inline int total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Graded lexicographic, ascending. std::map with this comparator keeps terms
// canonically sorted; printing iterates in reverse (highest term first).
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;
    }
};

// Exact sparse polynomial in the six variables with mpz coefficients.
// Invariant: no stored coefficient is zero; the zero polynomial is the
// empty term map.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, mpz_class, GradedLexLess>;

    MultiPoly() = default;

    static MultiPoly constant(const mpz_class& c);
    static MultiPoly constant(long c) { return constant(mpz_class(c)); }
    static MultiPoly var(Var v, int exp = 1);
    static MultiPoly monomial(const mpz_class& coeff, const Exponents& exps);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    int degree() const;  // -1 for the zero polynomial

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly pow(unsigned k) const;

    // Exact substitution v -> v+1 for the selected variables (x and/or xb),
    // by binomial expansion per term.
    MultiPoly shift_plus_one(bool in_x, bool in_xb) const;

    // Renames variable i to image[i]; the map need not be injective
    // (coinciding images have their exponents added), which covers both the
    // symmetry substitutions and the bar-collapse Gamma(x,y,z,x,y,z).
    MultiPoly rename_vars(const std::array<Var, kNumVars>& image) const;

    mpz_class eval(const std::array<mpz_class, kNumVars>& point) const;

    bool all_coeffs_nonnegative() const;

    // Canonical text form, terms in descending graded-lex order.
    std::string text() const;

private:
    void add_term(const Exponents& e, const mpz_class& c);
    TermMap terms_;
};

// Convenience arithmetic against integers, for spelling out coefficient
// formulas such as (x+n)(yb+n).
inline MultiPoly operator+(MultiPoly a, long b) { return a += MultiPoly::constant(b); }
inline MultiPoly operator+(long a, const MultiPoly& b) { return b + a; }
inline MultiPoly operator-(MultiPoly a, long b) { return a -= MultiPoly::constant(b); }
inline MultiPoly operator*(const MultiPoly& a, long b) { return a * MultiPoly::constant(b); }
inline MultiPoly operator*(long a, const MultiPoly& b) { return b * a; }

// Truncated power series in t with MultiPoly coefficients; all arithmetic
// discards terms of degree above the fixed order.
class TruncSeries {
public:
    explicit TruncSeries(int order);
    static TruncSeries one(int order);

    int order() const { return order_; }
    const MultiPoly& coeff(int k) const { return coeffs_.at(k); }
    void set_coeff(int k, MultiPoly p) { coeffs_.at(k) = std::move(p); }

    bool operator==(const TruncSeries& o) const = default;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    // Truncated Cauchy product; throws std::invalid_argument on order mismatch.
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // Multiplicative inverse up to the truncation order. The constant
    // coefficient must be the polynomial 1; otherwise std::domain_error.
    TruncSeries reciprocal() const;

private:
    int order_;
    std::vector<MultiPoly> coeffs_;
};

}  // namespace dfg

#endif
