#include "dfg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "dfg/ansatz.hpp"
#include "dfg/cfrac.hpp"
#include "dfg/escaliers.hpp"
#include "dfg/json_io.hpp"
#include "dfg/recurrences.hpp"
#include "dfg/shapes.hpp"

namespace dfg {

namespace {

using nlohmann::json;

// A check evaluates to two canonical strings; it passes iff they are equal.
struct Check {
    std::string name;
    json params;
    std::function<std::pair<std::string, std::string>()> eval;
};

constexpr int kEnumNMax = 6;    // largest n for full enumeration routes
constexpr int kCountNMax = 7;   // largest n for count-only cross checks
constexpr unsigned kWordSeed = 12345;
constexpr unsigned kProfileSeed = 54321;

std::string poly_digest_input(const MultiPoly& p) { return p.text(); }

std::pair<std::string, std::string> poly_pair(const MultiPoly& a, const MultiPoly& b) {
    return {poly_digest_input(a), poly_digest_input(b)};
}

// All D/E words of length <= 5 plus 50 seeded random words of length <= 8.
std::vector<std::string> word_sample() {
    std::vector<std::string> words;
    for (int len = 0; len <= 5; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w += (mask >> i) & 1u ? 'E' : 'D';
            words.push_back(w);
        }
    }
    std::mt19937 rng(kWordSeed);
    std::uniform_int_distribution<int> len_dist(1, 8);
    std::uniform_int_distribution<int> bit(0, 1);
    for (int k = 0; k < 50; ++k) {
        std::string w;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) w += bit(rng) ? 'E' : 'D';
        words.push_back(w);
    }
    return words;
}

MultiPoly brute_free_weight(const ShapeWord& shape) {
    MultiPoly total;
    enumerate_tableaux(shape, [&](const AltTableau& t) {
        StatVector s = stats(t);
        Exponents e{};
        e[VXB] = s.fr;
        e[VY] = s.fc;
        total += MultiPoly::monomial(1, e);
    });
    return total;
}

std::string profile_key(const std::vector<int>& p) {
    std::string s;
    for (int v : p) s += static_cast<char>('0' + v);
    return s;
}

void add_routes_checks(std::vector<Check>& checks, int nmax) {
    auto cf = std::make_shared<std::vector<MultiPoly>>(gamma_by_cfrac(nmax));
    for (int n = 1; n <= nmax; ++n) {
        checks.push_back({"routes-M-vs-rec-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] { return poly_pair(gamma_by_M(n - 1), gamma(n)); }});
        checks.push_back({"routes-N-vs-rec-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] { return poly_pair(gamma_by_N(n - 1), gamma(n)); }});
        checks.push_back({"routes-motzkin-vs-rec-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] { return poly_pair(gamma_by_motzkin(n), gamma(n)); }});
        checks.push_back({"routes-cfrac-vs-rec-n" + std::to_string(n),
                          json{{"n", n}},
                          [n, cf] { return poly_pair((*cf)[n], gamma(n)); }});
        if (n <= kEnumNMax) {
            checks.push_back({"routes-tableaux-vs-rec-n" + std::to_string(n),
                              json{{"n", n}},
                              [n] { return poly_pair(gamma_by_tableaux(n), gamma(n)); }});
            checks.push_back({"routes-escaliers-vs-rec-n" + std::to_string(n),
                              json{{"n", n}},
                              [n] { return poly_pair(gamma_by_escaliers(n), gamma(n)); }});
        }
    }
    for (int n = 1; n <= std::min(nmax, kCountNMax); ++n) {
        checks.push_back({"counts-tableaux-vs-gamma-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              std::array<mpz_class, kNumVars> ones;
                              ones.fill(1);
                              return std::pair<std::string, std::string>{
                                  std::to_string(count_tableaux(ShapeWord::staircase(n - 1))),
                                  gamma(n).eval(ones).get_str()};
                          }});
        checks.push_back({"counts-escaliers-vs-gamma-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              std::array<mpz_class, kNumVars> ones;
                              ones.fill(1);
                              return std::pair<std::string, std::string>{
                                  std::to_string(count_pretableaux(n - 1)),
                                  gamma(n).eval(ones).get_str()};
                          }});
        checks.push_back({"counts-F111-vs-gamma-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              std::array<mpz_class, kNumVars> ones;
                              ones.fill(1);
                              return std::pair<std::string, std::string>{
                                  genocchi(n).get_str(), gamma(n).eval(ones).get_str()};
                          }});
    }
}

void add_symmetry_checks(std::vector<Check>& checks, int nmax) {
    using VarMap = std::array<Var, kNumVars>;
    const VarMap bar_swap{VXB, VYB, VZB, VX, VY, VZ};
    struct Perm {
        const char* name;
        VarMap map;
        bool even;
    };
    const std::vector<Perm> perms = {
        {"cycle-yzx", {VY, VZ, VX, VYB, VZB, VXB}, true},
        {"cycle-zxy", {VZ, VX, VY, VZB, VXB, VYB}, true},
        {"swap-xy", {VY, VX, VZ, VYB, VXB, VZB}, false},
        {"swap-xz", {VZ, VY, VX, VZB, VYB, VXB}, false},
        {"swap-yz", {VX, VZ, VY, VXB, VZB, VYB}, false},
    };
    for (int n = 1; n <= nmax; ++n) {
        for (const Perm& p : perms) {
            VarMap m = p.map;
            bool even = p.even;
            checks.push_back({"symmetry-" + std::string(p.name) + "-n" + std::to_string(n),
                              json{{"n", n}, {"perm", p.name}},
                              [n, m, even, bar_swap] {
                                  const MultiPoly& g = gamma(n);
                                  MultiPoly rhs = even ? g : g.rename_vars(bar_swap);
                                  return poly_pair(g.rename_vars(m), rhs);
                              }});
        }
        checks.push_back({"symmetry-bar-cycle-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              // Gamma(x,y,z,xb,yb,zb) = Gamma(xb,zb,yb,x,z,y)
                              const MultiPoly& g = gamma(n);
                              std::array<Var, kNumVars> m{VXB, VZB, VYB, VX, VZ, VY};
                              return poly_pair(g, g.rename_vars(m));
                          }});
        checks.push_back({"symmetry-conjugation-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              // Gamma(x,y,z,xb,yb,zb) = Gamma(yb,xb,zb,y,x,z)
                              const MultiPoly& g = gamma(n);
                              std::array<Var, kNumVars> m{VYB, VXB, VZB, VY, VX, VZ};
                              return poly_pair(g, g.rename_vars(m));
                          }});
        checks.push_back({"symmetry-F-vs-gamma-collapse-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              std::array<Var, kNumVars> collapse{VX, VY, VZ, VX, VY, VZ};
                              return poly_pair(gamma(n).rename_vars(collapse), dumont_foata(n));
                          }});
        checks.push_back({"symmetry-F-xyz-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              MultiPoly f = dumont_foata(n);
                              std::array<Var, kNumVars> cyc{VY, VZ, VX, VXB, VYB, VZB};
                              std::array<Var, kNumVars> swp{VY, VX, VZ, VXB, VYB, VZB};
                              bool ok = f.rename_vars(cyc) == f && f.rename_vars(swp) == f;
                              return std::pair<std::string, std::string>{
                                  ok ? "symmetric" : "asymmetric", "symmetric"};
                          }});
        checks.push_back({"symmetry-gamma-nonnegative-n" + std::to_string(n),
                          json{{"n", n}},
                          [n] {
                              return std::pair<std::string, std::string>{
                                  gamma(n).all_coeffs_nonnegative() ? "nonnegative" : "negative",
                                  "nonnegative"};
                          }});
    }
}

void add_ansatz_checks(std::vector<Check>& checks, int nmax) {
    auto interior_equal = [](const PolyMatrix& a, const PolyMatrix& b) {
        std::ostringstream l, r;
        for (int i = 0; i + 1 < a.dim(); ++i)
            for (int j = 0; j + 1 < a.dim(); ++j) {
                l << a.at(i, j).text() << ";";
                r << b.at(i, j).text() << ";";
            }
        return std::pair<std::string, std::string>{l.str(), r.str()};
    };
    checks.push_back({"ansatz-de-commutation-dim12", json{{"dim", 12}},
                      [interior_equal] {
                          PolyMatrix D = make_D(12), E = make_E(12);
                          PolyMatrix lhs = D * E + MultiPoly::constant(-1) * (E * D);
                          return interior_equal(lhs, D + E);
                      }});
    checks.push_back({"ansatz-ba-commutation-dim12", json{{"dim", 12}},
                      [interior_equal] {
                          PolyMatrix B = make_B(12), A = make_A(12);
                          PolyMatrix lhs = B * A + MultiPoly::constant(-1) * (A * B);
                          return interior_equal(lhs, A + PolyMatrix::identity(12));
                      }});
    for (const std::string& w : word_sample()) {
        std::string label = w.empty() ? "(empty)" : w;
        checks.push_back({"ansatz-de-word-" + label, json{{"word", w}},
                          [w] {
                              ShapeWord shape = ShapeWord::parse(w);
                              return poly_pair(braket_shape_de(shape), brute_free_weight(shape));
                          }});
        std::string ba = w;
        for (char& ch : ba) ch = (ch == 'D') ? 'B' : 'A';
        checks.push_back({"ansatz-ba-word-" + (ba.empty() ? std::string("(empty)") : ba),
                          json{{"word", ba}},
                          [w] {
                              ShapeWord shape = ShapeWord::parse(w);
                              return std::pair<std::string, std::string>{
                                  braket_shape_ba(shape).text(),
                                  MultiPoly::constant(
                                      mpz_class(std::to_string(count_surjective(shape))))
                                      .text()};
                          }});
    }
    for (int n = 1; n <= nmax; ++n) {
        checks.push_back({"ansatz-trunc-M-n" + std::to_string(n), json{{"n", n}},
                          [n] {
                              std::vector<PolyMatrix> tight(n, make_M(n + 1));
                              std::vector<PolyMatrix> wide(n, make_M(n + 3));
                              return poly_pair(braket_word(tight), braket_word(wide));
                          }});
        checks.push_back({"ansatz-trunc-N-n" + std::to_string(n), json{{"n", n}},
                          [n] {
                              std::vector<PolyMatrix> tight(n, make_N(n + 1));
                              std::vector<PolyMatrix> wide(n, make_N(n + 3));
                              return poly_pair(braket_word(tight), braket_word(wide));
                          }});
    }
}

void add_profiles_checks(std::vector<Check>& checks, int /*nmax*/) {
    // Per-profile weighted sums, grouped in one pass per size.
    auto ext_sums = [](int n) {
        auto sums = std::make_shared<std::map<std::string, MultiPoly>>();
        enumerate_extended(n, [&](const ExtTableau& u) {
            (*sums)[profile_key(ext_profile(u))] += ext_weight(u);
        });
        return sums;
    };
    auto esc_sums = [](int n) {
        auto sums = std::make_shared<std::map<std::string, MultiPoly>>();
        enumerate_pretableaux(n, [&](const SurjPretableau& t) {
            EscStatVector s = esc_stats(t);
            Exponents e{};
            e[VX] = s.mi;
            e[VY] = s.fd;
            e[VZ] = s.snd;
            e[VXB] = s.mp;
            e[VYB] = s.fnd;
            e[VZB] = s.sd;
            (*sums)[profile_key(esc_profile(t))] += MultiPoly::monomial(1, e);
        });
        return sums;
    };

    auto profiles_of_length = [](int n) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur(n, 1);
        while (true) {
            all.push_back(cur);
            int k = n - 1;
            while (k >= 0 && cur[k] == 6) cur[k--] = 1;
            if (k < 0) break;
            ++cur[k];
        }
        return all;
    };

    auto add_for_size = [&](int n, const std::vector<std::vector<int>>& profiles) {
        auto ext = ext_sums(n);
        auto esc = esc_sums(n);
        for (const auto& p : profiles) {
            std::string key = profile_key(p);
            checks.push_back(
                {"profiles-ext-n" + std::to_string(n) + "-" + key,
                 json{{"n", n}, {"profile", p}},
                 [n, p, key, ext] {
                     std::vector<PolyMatrix> letters;
                     for (int i : p) letters.push_back(make_Mi(i, n + 1));
                     auto it = ext->find(key);
                     MultiPoly lhs = (it == ext->end()) ? MultiPoly() : it->second;
                     return poly_pair(lhs, braket_word(letters));
                 }});
            checks.push_back(
                {"profiles-esc-n" + std::to_string(n) + "-" + key,
                 json{{"n", n}, {"profile", p}},
                 [n, p, key, esc] {
                     std::vector<PolyMatrix> letters;
                     for (int i : p) letters.push_back(make_Ni(i, n + 1));
                     auto it = esc->find(key);
                     MultiPoly lhs = (it == esc->end()) ? MultiPoly() : it->second;
                     return poly_pair(lhs, braket_word(letters));
                 }});
        }
        checks.push_back({"profiles-ext-total-n" + std::to_string(n), json{{"n", n}},
                          [n, ext] {
                              MultiPoly total;
                              for (const auto& [k, v] : *ext) total += v;
                              return poly_pair(total, gamma(n + 1));
                          }});
        checks.push_back({"profiles-esc-total-n" + std::to_string(n), json{{"n", n}},
                          [n, esc] {
                              MultiPoly total;
                              for (const auto& [k, v] : *esc) total += v;
                              return poly_pair(total, gamma(n + 1));
                          }});
    };

    add_for_size(2, profiles_of_length(2));

    std::vector<std::vector<int>> sample3;
    std::mt19937 rng(kProfileSeed);
    std::uniform_int_distribution<int> d(1, 6);
    for (int k = 0; k < 30; ++k) sample3.push_back({d(rng), d(rng), d(rng)});
    add_for_size(3, sample3);
}

void add_tridiag_checks(std::vector<Check>& checks, int nmax) {
    const int dim = 12;
    const int imax = std::min(nmax, 9);
    auto offdiag_zero = [](const PolyMatrix& m) {
        bool ok = true;
        for (int i = 0; i + 1 < m.dim() && ok; ++i)
            for (int j = 0; j + 1 < m.dim() && ok; ++j)
                if (std::abs(i - j) > 1 && !m.at(i, j).is_zero()) ok = false;
        return std::pair<std::string, std::string>{ok ? "tridiagonal" : "dense", "tridiagonal"};
    };
    checks.push_back({"tridiag-M-structure-dim12", json{{"dim", dim}},
                      [offdiag_zero, dim] { return offdiag_zero(make_M(dim)); }});
    checks.push_back({"tridiag-N-structure-dim12", json{{"dim", dim}},
                      [offdiag_zero, dim] { return offdiag_zero(make_N(dim)); }});
    for (int i = 0; i <= imax; ++i) {
        checks.push_back({"tridiag-M-diag-b" + std::to_string(i), json{{"i", i}},
                          [i, dim] { return poly_pair(make_M(dim).at(i, i), b_coeff(i)); }});
        checks.push_back({"tridiag-N-diag-b" + std::to_string(i), json{{"i", i}},
                          [i, dim] { return poly_pair(make_N(dim).at(i, i), b_coeff(i)); }});
        checks.push_back({"tridiag-M-offprod-lambda" + std::to_string(i + 1), json{{"i", i}},
                          [i, dim] {
                              PolyMatrix m = make_M(dim);
                              return poly_pair(m.at(i, i + 1) * m.at(i + 1, i),
                                               lambda_coeff(i + 1));
                          }});
        checks.push_back({"tridiag-N-offprod-lambda" + std::to_string(i + 1), json{{"i", i}},
                          [i, dim] {
                              PolyMatrix m = make_N(dim);
                              return poly_pair(m.at(i, i + 1) * m.at(i + 1, i),
                                               lambda_coeff(i + 1));
                          }});
    }
}

}  // namespace

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::vector<CheckResult> run_suite(const std::string& suite, int nmax, int jobs) {
    if (nmax < 1) throw std::invalid_argument("nmax must be >= 1");
    std::vector<Check> checks;
    bool known = false;
    if (suite == "routes" || suite == "all") known = true, add_routes_checks(checks, nmax);
    if (suite == "symmetry" || suite == "all") known = true, add_symmetry_checks(checks, nmax);
    if (suite == "ansatz" || suite == "all") known = true, add_ansatz_checks(checks, nmax);
    if (suite == "profiles" || suite == "all") known = true, add_profiles_checks(checks, nmax);
    if (suite == "tridiag" || suite == "all") known = true, add_tridiag_checks(checks, nmax);
    if (!known) throw std::invalid_argument("unknown suite: " + suite);

    gamma(nmax);  // warm the shared memo before any concurrent access

    auto run_one = [](const Check& c) {
        auto t0 = std::chrono::steady_clock::now();
        auto [left, right] = c.eval();
        auto t1 = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = c.name;
        r.params = c.params;
        r.pass = left == right;
        r.left_digest = sha256_hex(left);
        r.right_digest = sha256_hex(right);
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        return r;
    };

    std::vector<CheckResult> results(checks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_one(checks[i]);
    } else {
        std::vector<std::future<void>> workers;
        std::size_t stride = static_cast<std::size_t>(jobs);
        for (std::size_t w = 0; w < stride; ++w) {
            workers.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < checks.size(); i += stride)
                    results[i] = run_one(checks[i]);
            }));
        }
        for (auto& f : workers) f.get();
    }
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

nlohmann::json report_to_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    for (const CheckResult& c : checks) {
        arr.push_back(json{{"name", c.name},
                           {"params", c.params},
                           {"status", c.pass ? "pass" : "fail"},
                           {"left", c.left_digest},
                           {"right", c.right_digest},
                           {"ms", c.ms}});
    }
    return json{{"checks", std::move(arr)}};
}

bool all_pass(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

}  // namespace dfg
