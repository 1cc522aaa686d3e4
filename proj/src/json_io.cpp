#include "dfg/json_io.hpp"

#include <algorithm>

namespace dfg {

using nlohmann::json;

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    const auto& m = p.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        json t;
        t["coeff"] = it->second.get_str();
        t["exps"] = it->first;
        terms.push_back(std::move(t));
    }
    return json{{"terms", std::move(terms)}};
}

MultiPoly poly_from_json(const json& j) {
    MultiPoly p;
    for (const auto& t : j.at("terms")) {
        mpz_class coeff(t.at("coeff").get<std::string>());
        Exponents e{};
        const auto& exps = t.at("exps");
        for (int i = 0; i < kNumVars; ++i) e[i] = exps.at(i).get<int>();
        p += MultiPoly::monomial(coeff, e);
    }
    return p;
}

json tableau_to_json(const AltTableau& t) {
    json cells = json::array();
    const ShapeWord& sh = t.shape();
    for (int r = 1; r <= sh.num_rows(); ++r)
        for (int c = 1; c <= sh.row_length(r); ++c)
            cells.push_back(json{{"r", r},
                                 {"c", c},
                                 {"v", std::string(1, static_cast<char>(t.cell(r, c)))}});
    return json{{"shape", sh.str()}, {"cells", std::move(cells)}};
}

AltTableau tableau_from_json(const json& j) {
    AltTableau t(ShapeWord::parse(j.at("shape").get<std::string>()));
    for (const auto& cell : j.at("cells")) {
        std::string v = cell.at("v").get<std::string>();
        if (v.size() != 1 || (v[0] != '.' && v[0] != 'L' && v[0] != 'D'))
            throw std::invalid_argument("tableau cell value must be '.', 'L' or 'D'");
        t.set_cell(cell.at("r").get<int>(), cell.at("c").get<int>(), static_cast<Cell>(v[0]));
    }
    return t;
}

json pretableau_to_json(const SurjPretableau& t) {
    json crosses = json::array();
    auto sorted = t.crosses;
    std::sort(sorted.begin(), sorted.end());
    for (auto [r, c] : sorted) crosses.push_back(json{{"r", r}, {"c", c}});
    return json{{"n", t.n}, {"crosses", std::move(crosses)}};
}

SurjPretableau pretableau_from_json(const json& j) {
    SurjPretableau t;
    t.n = j.at("n").get<int>();
    for (const auto& cr : j.at("crosses"))
        t.crosses.emplace_back(cr.at("r").get<int>(), cr.at("c").get<int>());
    return t;
}

}  // namespace dfg
