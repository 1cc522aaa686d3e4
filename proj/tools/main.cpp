#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dfg/ansatz.hpp"
#include "dfg/cfrac.hpp"
#include "dfg/escaliers.hpp"
#include "dfg/json_io.hpp"
#include "dfg/recurrences.hpp"
#include "dfg/shapes.hpp"
#include "dfg/verify.hpp"

namespace {

using dfg::MultiPoly;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

constexpr int kEnumRouteGuard = 8;    // staircase/escalier enumeration ceiling
constexpr int kSymbolicGuard = 40;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<mpz_class, dfg::kNumVars> parse_eval_point(const std::string& spec) {
    std::array<mpz_class, dfg::kNumVars> point;
    std::stringstream ss(spec);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= dfg::kNumVars) throw UsageError("--eval expects exactly 6 integers");
        try {
            point[i++] = mpz_class(item);
        } catch (const std::invalid_argument&) {
            throw UsageError("--eval: '" + item + "' is not an integer");
        }
    }
    if (i != dfg::kNumVars) throw UsageError("--eval expects exactly 6 integers");
    return point;
}

MultiPoly gamma_route(const std::string& route, int n, bool force) {
    const bool enumerative = route == "tableaux" || route == "escaliers";
    if (enumerative && n > kEnumRouteGuard && !force)
        throw UsageError("route '" + route + "' enumerates all objects and refuses n > " +
                         std::to_string(kEnumRouteGuard) + " by default; pass --force to override");
    if (n > kSymbolicGuard && !force)
        throw UsageError("n > " + std::to_string(kSymbolicGuard) +
                         " refused by default; pass --force to override");
    if (route == "rec") return dfg::gamma(n);
    if (route == "tableaux") return dfg::gamma_by_tableaux(n);
    if (route == "escaliers") return dfg::gamma_by_escaliers(n);
    if (route == "M") return dfg::gamma_by_M(n - 1);
    if (route == "N") return dfg::gamma_by_N(n - 1);
    if (route == "motzkin") return dfg::gamma_by_motzkin(n);
    if (route == "cfrac") return dfg::gamma_by_cfrac(n)[n];
    throw UsageError("unknown route: " + route);
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot open output file: " + out_path);
        f << text << "\n";
    }
}

int cmd_gamma(int n, const std::string& route, const std::string& eval_spec,
              const std::string& format, const std::string& out, bool force) {
    if (n < 1) throw UsageError("n must be >= 1");
    MultiPoly g = gamma_route(route, n, force);
    json j{{"n", n}, {"route", route}};
    std::string text;
    if (!eval_spec.empty()) {
        mpz_class value = g.eval(parse_eval_point(eval_spec));
        j["value"] = value.get_str();
        text = value.get_str();
    } else {
        j["poly"] = dfg::poly_to_json(g);
        text = g.text();
    }
    write_output(format == "json" ? j.dump() : text, out);
    return 0;
}

int cmd_verify(const std::string& suite, int nmax, int jobs, const std::string& out) {
    auto results = dfg::run_suite(suite, nmax, jobs);
    write_output(dfg::report_to_json(results).dump(2), out);
    return dfg::all_pass(results) ? 0 : kExitFail;
}

std::string tableau_text(const dfg::AltTableau& t) {
    std::string s = t.shape().str() + " ";
    for (int r = 1; r <= t.shape().num_rows(); ++r) {
        if (r > 1) s += "/";
        for (int c = 1; c <= t.shape().row_length(r); ++c)
            s += static_cast<char>(t.cell(r, c));
    }
    return s;
}

std::string pretableau_text(const dfg::SurjPretableau& t) {
    auto sorted = t.crosses;
    std::sort(sorted.begin(), sorted.end());
    std::string s = "n=" + std::to_string(t.n) + " crosses=";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i > 0) s += ",";
        s += "(" + std::to_string(sorted[i].first) + "," + std::to_string(sorted[i].second) + ")";
    }
    return s;
}

template <typename T>
std::string join_ints(const std::vector<T>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

int cmd_enumerate(const std::string& kind, const std::string& shape_str, int n, bool with_stats,
                  const std::string& format, const std::string& out, bool force) {
    std::ostringstream lines;
    const bool as_json = format == "json";

    if (kind == "tableaux") {
        if (shape_str.empty()) throw UsageError("enumerate tableaux requires --shape");
        dfg::ShapeWord shape = dfg::ShapeWord::parse(shape_str);
        if (shape.num_cells() > 20 && !force)
            throw UsageError("shape has more than 20 cells; pass --force to enumerate anyway");
        dfg::enumerate_tableaux(shape, [&](const dfg::AltTableau& t) {
            if (as_json) {
                json j = dfg::tableau_to_json(t);
                if (with_stats) {
                    dfg::StatVector s = dfg::stats(t);
                    j["stats"] = {{"emr", s.emr}, {"fnc", s.fnc}, {"dco", s.dco},
                                  {"fnr", s.fnr}, {"emc", s.emc}, {"lco", s.lco}};
                }
                lines << j.dump() << "\n";
            } else {
                lines << tableau_text(t);
                if (with_stats) {
                    dfg::StatVector s = dfg::stats(t);
                    lines << " stats=(" << s.emr << "," << s.fnc << "," << s.dco << "," << s.fnr
                          << "," << s.emc << "," << s.lco << ")";
                }
                lines << "\n";
            }
        });
    } else if (kind == "extended") {
        if (n < 0) throw UsageError("enumerate extended requires --n");
        if (n > kEnumRouteGuard - 1 && !force)
            throw UsageError("extended enumeration refuses n > " +
                             std::to_string(kEnumRouteGuard - 1) + "; pass --force to override");
        dfg::enumerate_extended(n, [&](const dfg::ExtTableau& u) {
            if (as_json) {
                json j{{"base", dfg::tableau_to_json(u.base)},
                       {"dashedRows", u.dashed_rows},
                       {"dashedCols", u.dashed_cols}};
                if (with_stats) {
                    j["profile"] = dfg::ext_profile(u);
                    j["weight"] = dfg::ext_weight(u).text();
                }
                lines << j.dump() << "\n";
            } else {
                lines << tableau_text(u.base) << " dashedRows=[" << join_ints(u.dashed_rows)
                      << "] dashedCols=[" << join_ints(u.dashed_cols) << "]";
                if (with_stats)
                    lines << " profile=(" << join_ints(dfg::ext_profile(u)) << ") weight="
                          << dfg::ext_weight(u).text();
                lines << "\n";
            }
        });
    } else if (kind == "escaliers") {
        if (n < 0) throw UsageError("enumerate escaliers requires --n");
        if (n > kEnumRouteGuard - 1 && !force)
            throw UsageError("escalier enumeration refuses n > " +
                             std::to_string(kEnumRouteGuard - 1) + "; pass --force to override");
        dfg::enumerate_pretableaux(n, [&](const dfg::SurjPretableau& t) {
            if (as_json) {
                json j = dfg::pretableau_to_json(t);
                if (with_stats) {
                    dfg::EscStatVector s = dfg::esc_stats(t);
                    j["stats"] = {{"mi", s.mi}, {"fd", s.fd}, {"snd", s.snd},
                                  {"mp", s.mp}, {"fnd", s.fnd}, {"sd", s.sd}};
                    j["profile"] = dfg::esc_profile(t);
                }
                lines << j.dump() << "\n";
            } else {
                lines << pretableau_text(t);
                if (with_stats) {
                    dfg::EscStatVector s = dfg::esc_stats(t);
                    lines << " stats=(" << s.mi << "," << s.fd << "," << s.snd << "," << s.mp
                          << "," << s.fnd << "," << s.sd << ") profile=("
                          << join_ints(dfg::esc_profile(t)) << ")";
                }
                lines << "\n";
            }
        });
    } else {
        throw UsageError("unknown enumeration kind: " + kind);
    }

    std::string text = lines.str();
    if (!text.empty() && text.back() == '\n') text.pop_back();
    write_output(text, out);
    return 0;
}

int cmd_cf(int nmax, const std::string& format, const std::string& out) {
    if (nmax < 0) throw UsageError("--nmax must be >= 0");
    if (format == "json") {
        json b = json::array(), lambda = json::array();
        for (int k = 0; k <= nmax; ++k) b.push_back(dfg::poly_to_json(dfg::b_coeff(k)));
        for (int k = 1; k <= nmax; ++k) lambda.push_back(dfg::poly_to_json(dfg::lambda_coeff(k)));
        write_output(json{{"b", std::move(b)}, {"lambda", std::move(lambda)}}.dump(), out);
    } else {
        std::ostringstream t;
        for (int k = 0; k <= nmax; ++k) t << "b" << k << " = " << dfg::b_coeff(k).text() << "\n";
        for (int k = 1; k <= nmax; ++k)
            t << "lambda" << k << " = " << dfg::lambda_coeff(k).text() << "\n";
        std::string text = t.str();
        if (!text.empty()) text.pop_back();
        write_output(text, out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact multi-route computation and verification of the generalized "
                 "Dumont-Foata polynomials"};
    app.require_subcommand(1);

    // gamma
    int g_n = 1;
    std::string g_route = "rec", g_eval, g_format = "text", g_out;
    bool g_force = false;
    auto* gamma_cmd = app.add_subcommand("gamma", "Compute Gamma_n by a chosen route");
    gamma_cmd->add_option("n", g_n, "Index n (>= 1)")->required();
    gamma_cmd->add_option("--route", g_route, "One of rec, tableaux, escaliers, M, N, motzkin, cfrac")
        ->check(CLI::IsMember({"rec", "tableaux", "escaliers", "M", "N", "motzkin", "cfrac"}));
    gamma_cmd->add_option("--eval", g_eval, "Evaluate at 6 comma-separated integers");
    gamma_cmd->add_option("--format", g_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    gamma_cmd->add_option("--out", g_out, "Write output to a file instead of stdout");
    gamma_cmd->add_flag("--force", g_force, "Override feasibility guards");

    // verify
    std::string v_suite = "all", v_out;
    int v_nmax = 5, v_jobs = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a cross-route verification suite");
    verify_cmd->add_option("suite", v_suite, "One of all, routes, symmetry, ansatz, profiles, tridiag")
        ->check(CLI::IsMember({"all", "routes", "symmetry", "ansatz", "profiles", "tridiag"}));
    verify_cmd->add_option("--nmax", v_nmax, "Largest size to check");
    verify_cmd->add_option("--jobs", v_jobs, "Run checks on this many threads");
    verify_cmd->add_option("--out", v_out, "Write the JSON report to a file");

    // enumerate
    std::string e_kind, e_shape, e_format = "text", e_out;
    int e_n = -1;
    bool e_stats = false, e_force = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "Stream combinatorial objects");
    enum_cmd->add_option("kind", e_kind, "One of tableaux, extended, escaliers")->required();
    enum_cmd->add_option("--shape", e_shape, "Shape word over D/E (tableaux only)");
    enum_cmd->add_option("--n", e_n, "Staircase size (extended, escaliers)");
    enum_cmd->add_flag("--stats", e_stats, "Include statistic vectors / profiles");
    enum_cmd->add_option("--format", e_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    enum_cmd->add_option("--out", e_out, "Write output to a file instead of stdout");
    enum_cmd->add_flag("--force", e_force, "Override feasibility guards");

    // cf
    int c_nmax = 0;
    std::string c_format = "text", c_out;
    auto* cf_cmd = app.add_subcommand("cf", "Print the J-fraction coefficients b_n and lambda_n");
    cf_cmd->add_option("--nmax", c_nmax, "Largest index")->required();
    cf_cmd->add_option("--format", c_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cf_cmd->add_option("--out", c_out, "Write output to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (gamma_cmd->parsed())
            return cmd_gamma(g_n, g_route, g_eval, g_format, g_out, g_force);
        if (verify_cmd->parsed()) return cmd_verify(v_suite, v_nmax, v_jobs, v_out);
        if (enum_cmd->parsed())
            return cmd_enumerate(e_kind, e_shape, e_n, e_stats, e_format, e_out, e_force);
        if (cf_cmd->parsed()) return cmd_cf(c_nmax, c_format, c_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return 0;
}
