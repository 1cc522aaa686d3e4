#include "dfg/recurrences.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dfg {

MultiPoly dumont_foata(int n) {
    if (n < 1) throw std::invalid_argument("dumont_foata requires n >= 1");
    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    MultiPoly f = MultiPoly::constant(1);
    for (int k = 2; k <= n; ++k)
        f = (x + y) * (x + z) * f.shift_plus_one(true, false) - x * x * f;
    return f;
}

const MultiPoly& gamma(int n) {
    if (n < 1) throw std::invalid_argument("gamma requires n >= 1");
    static std::map<int, MultiPoly> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    const MultiPoly x = MultiPoly::var(VX), y = MultiPoly::var(VY), z = MultiPoly::var(VZ);
    const MultiPoly xb = MultiPoly::var(VXB), yb = MultiPoly::var(VYB), zb = MultiPoly::var(VZB);
    int start = 2;
    MultiPoly g;
    auto below = memo.upper_bound(n);
    if (below != memo.begin()) {
        --below;
        g = below->second;
        start = below->first + 1;
    } else {
        g = MultiPoly::constant(1);
        memo.emplace(1, g);
    }
    for (int k = start; k <= n; ++k) {
        g = (x + zb) * (y + xb) * g.shift_plus_one(true, true) +
            (x * (yb - y) + xb * (z - zb) - x * xb) * g;
        memo.emplace(k, g);
    }
    return memo.at(n);
}

mpz_class genocchi(int n) {
    std::array<mpz_class, kNumVars> ones;
    ones.fill(1);
    return dumont_foata(n).eval(ones);
}

}  // namespace dfg
