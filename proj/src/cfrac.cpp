#include "dfg/cfrac.hpp"

#include <stdexcept>

namespace dfg {

MultiPoly b_coeff(int n) {
    if (n < 0) throw std::invalid_argument("b_coeff requires n >= 0");
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    return (x + n) * (yb + n) + (y + n) * (zb + n) + (z + n) * (xb + n) -
           MultiPoly::constant(static_cast<long>(n) * (n + 1));
}

MultiPoly lambda_coeff(int n) {
    if (n < 1) throw std::invalid_argument("lambda_coeff requires n >= 1");
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    return n * ((xb + y + (n - 1)) * (yb + z + (n - 1)) * (zb + x + (n - 1)));
}

void enumerate_motzkin_paths(
    int length, const std::function<void(const std::vector<MotzkinStep>&)>& yield) {
    std::vector<MotzkinStep> path;
    std::function<void(int, int)> rec = [&](int pos, int height) {
        if (pos == length) {
            if (height == 0) yield(path);
            return;
        }
        if (length - pos - 1 >= height + 1) {  // room to come back down
            path.push_back(MotzkinStep::Up);
            rec(pos + 1, height + 1);
            path.pop_back();
        }
        path.push_back(MotzkinStep::Level);
        rec(pos + 1, height);
        path.pop_back();
        if (height > 0) {
            path.push_back(MotzkinStep::Down);
            rec(pos + 1, height - 1);
            path.pop_back();
        }
    };
    rec(0, 0);
}

std::uint64_t count_motzkin_paths(int length) {
    std::uint64_t n = 0;
    enumerate_motzkin_paths(length, [&](const std::vector<MotzkinStep>&) { ++n; });
    return n;
}

MultiPoly gamma_by_motzkin(int n) {
    if (n < 1) throw std::invalid_argument("gamma_by_motzkin requires n >= 1");
    int steps = n - 1;
    int maxh = steps / 2;
    std::vector<MultiPoly> b(maxh + 1), lam(maxh + 1);
    for (int h = 0; h <= maxh; ++h) b[h] = b_coeff(h);
    for (int h = 1; h <= maxh; ++h) lam[h] = lambda_coeff(h);

    // dp[h] = weight sum over path prefixes ending at height h
    std::vector<MultiPoly> dp(maxh + 2);
    dp[0] = MultiPoly::constant(1);
    for (int s = 0; s < steps; ++s) {
        std::vector<MultiPoly> next(maxh + 2);
        for (int h = 0; h <= maxh; ++h) {
            if (dp[h].is_zero()) continue;
            next[h] += dp[h] * b[h];
            if (h + 1 <= maxh) next[h + 1] += dp[h] * lam[h + 1];
            if (h > 0) next[h - 1] += dp[h];
        }
        dp = std::move(next);
    }
    return dp[0];
}

std::vector<MultiPoly> gamma_by_cfrac(int nmax, int depth) {
    if (nmax < 1) throw std::invalid_argument("gamma_by_cfrac requires nmax >= 1");
    if (depth < 0) depth = nmax / 2 + 1;

    const MultiPoly minus_one = MultiPoly::constant(-1);
    TruncSeries level = TruncSeries::one(nmax);  // innermost tail
    for (int d = depth - 1; d >= 0; --d) {
        TruncSeries denom = TruncSeries::one(nmax);
        TruncSeries bt(nmax);
        if (nmax >= 1) bt.set_coeff(1, minus_one * b_coeff(d));
        TruncSeries lt(nmax);
        if (nmax >= 2) lt.set_coeff(2, minus_one * lambda_coeff(d + 1));
        denom += bt;
        denom += lt * level;
        level = denom.reciprocal();
    }
    // Result is t * level: shift coefficients up by one.
    std::vector<MultiPoly> out(nmax + 1);
    for (int k = 1; k <= nmax; ++k) out[k] = level.coeff(k - 1);
    return out;
}

}  // namespace dfg
