#include "hibi/json_io.hpp"

namespace hibi {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw error(errc::parse_error, what);
}

int require_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

Poset parse_poset(const nlohmann::json& j) {
    if (!j.is_object()) bad("poset must be an object");
    if (!j.contains("n")) bad("poset requires field n");
    int n = require_int(j.at("n"), "n");
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers")) {
        if (!j.at("covers").is_array()) bad("covers must be an array of pairs");
        for (const auto& pair : j.at("covers")) {
            if (!pair.is_array() || pair.size() != 2) bad("cover must be a pair [a,b]");
            covers.emplace_back(require_int(pair[0], "cover entry"),
                                require_int(pair[1], "cover entry"));
        }
    }
    return poset_from_covers(n, covers);
}

Job parse_job(const nlohmann::json& j) {
    if (!j.is_object()) bad("job must be an object");
    if (!j.contains("poset")) bad("job requires field poset");
    Job job;
    job.poset = parse_poset(j.at("poset"));
    const auto& pj = j.at("poset");
    if (pj.contains("labels")) {
        if (!pj.at("labels").is_array() ||
            pj.at("labels").size() != static_cast<std::size_t>(job.poset.size()))
            bad("labels must list one string per element");
        for (const auto& s : pj.at("labels")) {
            if (!s.is_string()) bad("labels must be strings");
            job.labels.push_back(s.get<std::string>());
        }
    }
    if (j.contains("chain")) {
        if (!j.at("chain").is_array()) bad("chain must be an array of elements");
        std::vector<int> elems;
        for (const auto& e : j.at("chain")) elems.push_back(require_int(e, "chain element"));
        job.chain = std::move(elems);
    }
    if (j.contains("f")) {
        if (!j.at("f").is_array()) bad("f must be an array of component indices");
        std::vector<int> f;
        for (const auto& e : j.at("f")) f.push_back(require_int(e, "f entry"));
        job.f = std::move(f);
    }
    if (j.contains("m")) job.m = require_int(j.at("m"), "m");
    if (j.contains("degree_map")) {
        const auto& dm = j.at("degree_map");
        if (!dm.is_object() || !dm.contains("m") || !dm.contains("components"))
            bad("degree_map requires fields m and components");
        Multigrading g;
        g.m = require_int(dm.at("m"), "degree_map.m");
        if (!dm.at("components").is_array()) bad("components must be an array");
        for (const auto& c : dm.at("components")) {
            int comp = require_int(c, "component");
            if (comp < 0 || comp > g.m) bad("component outside [0,m]");
            g.component.push_back(comp);
        }
        job.degree_map = std::move(g);
    }
    return job;
}

std::string brace_form(Mask m) {
    std::string out = "{";
    bool first = true;
    for (int v : mask_elements(m)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

nlohmann::json elements_json(Mask m) {
    return nlohmann::json(mask_elements(m));
}

nlohmann::json poly_json(const IntPolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"exponents", m.e}, {"coeff", c.get_str()}});
    return {{"text", text_form(p)}, {"terms", terms}};
}

nlohmann::json series_json(const SeriesRational& s) {
    return {{"numerator", poly_json(s.numerator)},
            {"denominator_exponents", s.denom_exps},
            {"text", text_form(s)}};
}

} // namespace hibi
