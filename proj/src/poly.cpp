#include "dfg/poly.hpp"

#include <sstream>

namespace dfg {

const std::array<const char*, kNumVars> kVarNames = {"x", "y", "z", "xb", "yb", "zb"};

MultiPoly MultiPoly::constant(const mpz_class& c) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace(Exponents{}, c);
    return p;
}

MultiPoly MultiPoly::var(Var v, int exp) {
    Exponents e{};
    e[v] = exp;
    MultiPoly p;
    p.terms_.emplace(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const mpz_class& coeff, const Exponents& exps) {
    MultiPoly p;
    if (coeff != 0) p.terms_.emplace(exps, coeff);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r = constant(1);
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1u) r *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return r;
}

MultiPoly MultiPoly::shift_plus_one(bool in_x, bool in_xb) const {
    // (v+1)^e expanded with binomial coefficients, per term.
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        MultiPoly term = monomial(c, [&] {
            Exponents rest = e;
            if (in_x) rest[VX] = 0;
            if (in_xb) rest[VXB] = 0;
            return rest;
        }());
        auto expand = [](Var v, int exp) {
            MultiPoly f;
            mpz_class binom = 1;
            for (int k = 0; k <= exp; ++k) {
                Exponents m{};
                m[v] = k;
                f += monomial(binom, m);
                binom = binom * (exp - k) / (k + 1);
            }
            return f;
        };
        if (in_x && e[VX] > 0) term *= expand(VX, e[VX]);
        if (in_xb && e[VXB] > 0) term *= expand(VXB, e[VXB]);
        r += term;
    }
    return r;
}

MultiPoly MultiPoly::rename_vars(const std::array<Var, kNumVars>& image) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents ne{};
        for (int i = 0; i < kNumVars; ++i) ne[image[i]] += e[i];
        r.add_term(ne, c);
    }
    return r;
}

mpz_class MultiPoly::eval(const std::array<mpz_class, kNumVars>& point) const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class v = c;
        for (int i = 0; i < kNumVars; ++i) {
            mpz_class p;
            mpz_pow_ui(p.get_mpz_t(), point[i].get_mpz_t(), e[i]);
            v *= p;
        }
        total += v;
    }
    return total;
}

bool MultiPoly::all_coeffs_nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

std::string MultiPoly::text() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e0, c0] = *it;
        const Exponents& e = e0;
        mpz_class c = c0;
        if (first) {
            first = false;
        } else if (c < 0) {
            out << " - ";
            c = -c;
        } else {
            out << " + ";
        }
        std::string vars;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += kVarNames[i];
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << c.get_str();
        } else if (c == 1) {
            out << vars;
        } else if (c == -1) {
            out << "-" << vars;
        } else {
            out << c.get_str() << "*" << vars;
        }
    }
    return out.str();
}

TruncSeries::TruncSeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    coeffs_.resize(order + 1);
}

TruncSeries TruncSeries::one(int order) {
    TruncSeries s(order);
    s.coeffs_[0] = MultiPoly::constant(1);
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (order_ != o.order_) throw std::invalid_argument("series order mismatch");
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("series order mismatch");
    TruncSeries r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
}

TruncSeries TruncSeries::reciprocal() const {
    if (coeffs_[0] != MultiPoly::constant(1))
        throw std::domain_error("series reciprocal requires constant term 1");
    TruncSeries r(order_);
    r.coeffs_[0] = MultiPoly::constant(1);
    for (int k = 1; k <= order_; ++k) {
        MultiPoly acc;
        for (int j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
        r.coeffs_[k] = -acc;
    }
    return r;
}

}  // namespace dfg
