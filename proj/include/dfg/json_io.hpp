#ifndef DFG_JSON_IO_HPP
#define DFG_JSON_IO_HPP

#include <json.hpp>

#include "dfg/escaliers.hpp"
#include "dfg/poly.hpp"
#include "dfg/shapes.hpp"

namespace dfg {

// { "terms": [ { "coeff": "<decimal>", "exps": [ex,ey,ez,exb,eyb,ezb] }, ... ] }
// with terms in descending graded-lex order, matching text().
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

// { "shape": "DDEDE", "cells": [ {"r":1,"c":1,"v":"."}, ... ] }
nlohmann::json tableau_to_json(const AltTableau& t);
AltTableau tableau_from_json(const nlohmann::json& j);

// { "n": 4, "crosses": [ {"r":3,"c":1}, ... ] }
nlohmann::json pretableau_to_json(const SurjPretableau& t);
SurjPretableau pretableau_from_json(const nlohmann::json& j);

}  // namespace dfg

#endif
