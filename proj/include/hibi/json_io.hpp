#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hibi/grading.hpp"
#include "hibi/polynomial.hpp"

namespace hibi {

/// Parsed job file: a poset plus optional chain / f / degree-map sections.
struct Job {
    Poset poset;
    std::vector<std::string> labels;          // optional, size n when present
    std::optional<std::vector<int>> chain;    // raw elements, not yet validated
    std::optional<std::vector<int>> f;        // component per chain prefix
    std::optional<int> m;                     // degree components [0,m]
    std::optional<Multigrading> degree_map;   // for grading recovery
};

/// Parses {"n":…, "covers":[[a,b],…], "labels":[…]?}. Throws parse_error,
/// cycle_detected or index_out_of_range.
Poset parse_poset(const nlohmann::json& j);

Job parse_job(const nlohmann::json& j);

/// "{1,2}" notation for a variable index, "{}" for the empty ideal.
std::string brace_form(Mask m);

nlohmann::json elements_json(Mask m);

/// {"text": …, "terms": [{"exponents": […], "coeff": "decimal"}…]}
nlohmann::json poly_json(const IntPolynomial& p);

nlohmann::json series_json(const SeriesRational& s);

} // namespace hibi
