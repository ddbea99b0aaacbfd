#include "hibi/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hibi/cartwright_sturmfels.hpp"
#include "hibi/hilbert.hpp"
#include "hibi/ideal.hpp"
#include "hibi/json_io.hpp"
#include "hibi/multidegree.hpp"

namespace hibi {

namespace {

int exit_code_for(errc c) {
    switch (c) {
        case errc::lattice_too_large:
            return 3;
        case errc::not_a_chain:
            return 4;
        case errc::not_homogeneous:
            return 5;
        case errc::lower_degree_residue:
        case errc::cap_exceeded:
        case errc::internal_error:
        case errc::variable_count_mismatch:
        case errc::target_too_small:
        case errc::is_actually_chain:
            return 6;
        default:
            return 2;
    }
}

std::size_t lattice_cap() {
    const char* s = std::getenv("HIBI_LATTICE_CAP");
    if (!s) return default_lattice_cap;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0' || v == 0)
        throw error(errc::parse_error, "HIBI_LATTICE_CAP must be a positive integer");
    return static_cast<std::size_t>(v);
}

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::parse_error, "cannot open input file: " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

ChainGradingSpec spec_from_job(const Poset& P, const Job& job) {
    Chain C = make_chain(P, job.chain.value_or(std::vector<int>{}));
    if (!job.f) return identity_spec(C);
    const auto& f = *job.f;
    if (f.size() != C.length() + 1)
        throw error(errc::parse_error, "f must list one component per chain prefix");
    int max_f = 0;
    for (int v : f) {
        if (v < 0) throw error(errc::parse_error, "f entries must be >= 0");
        max_f = std::max(max_f, v);
    }
    ChainGradingSpec spec;
    spec.chain = std::move(C);
    spec.m = job.m.value_or(max_f);
    if (spec.m < max_f)
        throw error(errc::parse_error, "m is smaller than the largest f entry");
    spec.f = f;
    return spec;
}

bool is_identity_spec(const ChainGradingSpec& spec) {
    if (spec.m != static_cast<int>(spec.chain.length())) return false;
    for (std::size_t i = 0; i < spec.f.size(); ++i)
        if (spec.f[i] != static_cast<int>(i)) return false;
    return true;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

// --- subcommand bodies -----------------------------------------------------

int cmd_lattice(const Job& job, std::ostream& out) {
    DistLattice L = build_lattice(job.poset, lattice_cap());
    nlohmann::json ideals = nlohmann::json::array();
    std::vector<int> level_counts(job.poset.size() + 1, 0);
    for (Mask m : L.ideals()) {
        ideals.push_back(elements_json(m));
        ++level_counts[mask_size(m)];
    }
    auto ji = join_irreducibles(L);
    nlohmann::json irr = nlohmann::json::array();
    for (Mask m : ji.ideals) irr.push_back(elements_json(m));
    Int chain_count = count_maximal_chains(L);

    std::ostringstream pretty;
    pretty << "L(P): " << L.size() << " ideals, " << chain_count.get_str()
           << " maximal chains\njoin-irreducibles:";
    for (Mask m : ji.ideals) pretty << " " << brace_form(m);
    emit(out, {{"command", "lattice"},
               {"n", job.poset.size()},
               {"ideal_count", L.size()},
               {"level_counts", level_counts},
               {"ideals", ideals},
               {"join_irreducibles", irr},
               {"maximal_chain_count", chain_count.get_str()},
               {"pretty", pretty.str()}});
    return 0;
}

std::vector<std::vector<int>> degrees_up_to(int comps, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(comps, 0);
    // lexicographic enumeration of all vectors with sum <= bound
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == comps) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound);
    return out;
}

int cmd_hilbert(const Job& job, bool want_k, bool want_specialized,
                int oracle_bound, std::ostream& out) {
    ChainGradingSpec spec = spec_from_job(job.poset, job);
    SeriesRational series = hilbert_series_fc(job.poset, spec);
    nlohmann::json result{{"command", "hilbert"},
                          {"chain", spec.chain.elems},
                          {"f", spec.f},
                          {"m", spec.m},
                          {"series", series_json(series)}};
    std::ostringstream pretty;
    pretty << "HS = " << text_form(series);
    if (want_k) {
        IntPolynomial k = k_polynomial(job.poset, spec);
        result["k_polynomial"] = poly_json(k);
        pretty << "\nK = " << text_form(k);
    }
    if (want_specialized) {
        SeriesRational z =
            series_substitute(series, std::vector<int>(spec.m + 1, 0), 1);
        result["specialized"] = series_json(z);
        pretty << "\nHS(t,...,t) = " << text_form(z);
    }
    int code = 0;
    if (oracle_bound >= 0) {
        DistLattice L = build_lattice(job.poset, lattice_cap());
        Multigrading g = grading_from_chain(L, spec);
        bool agree = true;
        std::size_t checked = 0;
        auto fc_taylor = taylor_coefficients(series, oracle_bound);
        for (const auto& a : degrees_up_to(spec.m + 1, oracle_bound)) {
            Int expected = 0;
            if (auto it = fc_taylor.find(Monomial{a}); it != fc_taylor.end())
                expected = it->second;
            agree = agree && hilbert_function_oracle_multichain(L, g, a) == expected;
            ++checked;
        }
        SeriesRational plain = hilbert_series(job.poset, spec.chain);
        auto plain_taylor = taylor_coefficients(plain, oracle_bound);
        for (const auto& a :
             degrees_up_to(static_cast<int>(spec.chain.length()) + 1, oracle_bound)) {
            Int expected = 0;
            if (auto it = plain_taylor.find(Monomial{a}); it != plain_taylor.end())
                expected = it->second;
            agree = agree &&
                    hilbert_function_oracle_sigma(job.poset, spec.chain, a) == expected;
            ++checked;
        }
        result["oracle_check"] = {{"bound", oracle_bound},
                                  {"degrees_checked", checked},
                                  {"agree", agree}};
        pretty << "\noracle check (bound " << oracle_bound << "): "
               << (agree ? "agree" : "MISMATCH");
        if (!agree) code = 6;
    }
    result["pretty"] = pretty.str();
    emit(out, result);
    return code;
}

int cmd_multidegree(const Job& job, const std::string& route, std::ostream& out) {
    ChainGradingSpec spec = spec_from_job(job.poset, job);
    nlohmann::json result{{"command", "multidegree"},
                          {"chain", spec.chain.elems},
                          {"f", spec.f},
                          {"m", spec.m},
                          {"route", route}};
    std::optional<MultidegreeResult> via_k, via_chains;
    if (route == "k" || route == "both") via_k = multidegree_via_k(job.poset, spec);
    if (route == "chains" || route == "both") {
        DistLattice L = build_lattice(job.poset, lattice_cap());
        via_chains = multidegree_via_chains(L, grading_from_chain(L, spec));
    }
    const MultidegreeResult& primary = via_k ? *via_k : *via_chains;
    result["codim"] = primary.codim;
    std::ostringstream pretty;
    if (via_k) {
        result["via_k"] = poly_json(via_k->poly);
        pretty << "C (via K) = " << text_form(via_k->poly);
    }
    if (via_chains) {
        result["via_chains"] = poly_json(via_chains->poly);
        if (via_k) pretty << "\n";
        pretty << "C (via chains) = " << text_form(via_chains->poly);
    }
    int code = 0;
    if (via_k && via_chains) {
        bool agree = via_k->poly == via_chains->poly;
        result["agree"] = agree;
        if (!agree) code = 6;
    }
    auto [coeff, expo] = degree_specialize(primary);
    result["specialized"] = {{"coefficient", coeff.get_str()}, {"exponent", expo}};
    pretty << "\nC(t,...,t) = " << coeff.get_str() << "*t^" << expo;
    result["pretty"] = pretty.str();
    emit(out, result);
    return code;
}

int cmd_cs(const Job& job, std::ostream& out) {
    ChainGradingSpec spec = spec_from_job(job.poset, job);
    if (!is_identity_spec(spec))
        throw error(errc::unsupported,
                    "cs supports only the plain chain grading (identity f)");
    CsVerdict verdict = cs_check(job.poset, spec.chain);
    nlohmann::json result{{"command", "cs"}, {"cs", verdict.is_cs}};
    std::ostringstream pretty;
    if (!verdict.is_cs) {
        const auto& w = std::get<NonCsWitness>(verdict.witness);
        result["witness"] = {
            {"pair", std::vector<int>{std::min(w.a, w.b), std::max(w.a, w.b)}},
            {"monomial",
             std::vector<std::string>{brace_form(w.alpha_prime), brace_form(w.beta)}},
            {"degree", "2*e" + std::to_string(w.j)}};
        pretty << "not Cartwright-Sturmfels: x_" << brace_form(w.alpha_prime) << "*x_"
               << brace_form(w.beta) << " is a minimal initial-ideal generator of degree 2*e"
               << w.j;
    } else if (std::holds_alternative<MatrixRealization>(verdict.witness)) {
        const auto& w = std::get<MatrixRealization>(verdict.witness);
        nlohmann::json entries = nlohmann::json::array();
        for (const auto& row : w.entries) {
            nlohmann::json r = nlohmann::json::array();
            for (Mask m : row) r.push_back(brace_form(m));
            entries.push_back(r);
        }
        result["witness"] = {{"kind", "matrix"},
                             {"rows", w.rows()},
                             {"cols", w.cols()},
                             {"entries", entries}};
        pretty << "Cartwright-Sturmfels: I is the 2-minor ideal of a column-graded "
               << w.rows() << "x" << w.cols() << " variable matrix";
    } else {
        const auto& w = std::get<EliminationRealization>(verdict.witness);
        nlohmann::json missing = nlohmann::json::array();
        std::vector<bool> hit(w.ambient.size(), false);
        for (int idx : w.embedding) hit[idx] = true;
        for (std::size_t i = 0; i < w.ambient.size(); ++i)
            if (!hit[i]) missing.push_back(brace_form(w.ambient.ideal(static_cast<int>(i))));
        result["witness"] = {{"kind", "elimination"},
                             {"ambient_ideal_count", w.ambient.size()},
                             {"embedded_count", w.embedding.size()},
                             {"missing_ideals", missing}};
        pretty << "Cartwright-Sturmfels: L(P) embeds into the " << w.ambient.size()
               << "-element grid lattice, eliminating " << missing.size() << " variable(s)";
    }
    result["pretty"] = pretty.str();
    emit(out, result);
    return 0;
}

int cmd_grading_recover(const Job& job, std::ostream& out) {
    if (!job.degree_map)
        throw error(errc::parse_error, "grading-recover requires a degree_map section");
    DistLattice L = build_lattice(job.poset, lattice_cap());
    if (job.degree_map->component.size() != L.size())
        throw error(errc::parse_error,
                    "degree_map.components must list one entry per lattice ideal "
                    "(canonical order; see the lattice command)");
    RecoverOutcome rec = recover_chain_grading(L, *job.degree_map);
    if (!rec.ok()) {
        auto [i, j] = *rec.violating_pair;
        emit(out, {{"command", "grading-recover"},
                   {"homogeneous", false},
                   {"violating_pair",
                    {elements_json(L.ideal(i)), elements_json(L.ideal(j))}},
                   {"pretty", "not homogeneous: binomial of " + brace_form(L.ideal(i)) +
                                  ", " + brace_form(L.ideal(j)) + " is not homogeneous"}});
        return 5;
    }
    std::ostringstream pretty;
    pretty << "deg = deg_{f_C} with C = {";
    for (std::size_t k = 0; k < rec.spec->chain.elems.size(); ++k)
        pretty << (k ? "," : "") << rec.spec->chain.elems[k];
    pretty << "}, f = (";
    for (std::size_t k = 0; k < rec.spec->f.size(); ++k)
        pretty << (k ? "," : "") << rec.spec->f[k];
    pretty << ")";
    emit(out, {{"command", "grading-recover"},
               {"homogeneous", true},
               {"chain", rec.spec->chain.elems},
               {"f", rec.spec->f},
               {"m", rec.spec->m},
               {"pretty", pretty.str()}});
    return 0;
}

int cmd_ideal(const Job& job, std::ostream& out) {
    DistLattice L = build_lattice(job.poset, lattice_cap());
    auto gens = hibi_generators(L);
    nlohmann::json gens_json = nlohmann::json::array();
    for (const auto& g : gens)
        gens_json.push_back(
            {{"lead", {brace_form(L.ideal(g.alpha)), brace_form(L.ideal(g.beta))}},
             {"trail", {brace_form(L.ideal(g.meet)), brace_form(L.ideal(g.join))}}});
    nlohmann::json init_json = nlohmann::json::array();
    for (auto [i, j] : initial_ideal(L))
        init_json.push_back({brace_form(L.ideal(i)), brace_form(L.ideal(j))});
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& comp : primary_decomposition(L)) {
        nlohmann::json vars = nlohmann::json::array();
        for (int idx : comp.variables) vars.push_back(brace_form(L.ideal(idx)));
        comps.push_back(vars);
    }
    bool groebner = verify_groebner_property(L);
    std::ostringstream pretty;
    pretty << gens.size() << " generators, codim " << codim(L) << ", "
           << comps.size() << " primary components, S-pairs "
           << (groebner ? "reduce to zero" : "FAIL to reduce");
    emit(out, {{"command", "ideal"},
               {"generator_count", gens.size()},
               {"generators", gens_json},
               {"initial_ideal", init_json},
               {"primary_components", comps},
               {"codim", codim(L)},
               {"groebner_verified", groebner},
               {"pretty", pretty.str()}});
    return groebner ? 0 : 6;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hibi ring toolkit: distributive lattices, chain multigradings, "
                 "multigraded Hilbert series, multidegrees, Cartwright-Sturmfels checks"};
    app.require_subcommand(1);

    std::string input;
    bool want_k = false, want_specialized = false;
    int oracle_bound = -1;
    std::string route = "k";

    auto add_input = [&input](CLI::App* cmd) {
        cmd->add_option("--input", input, "job file (JSON)")->required();
    };
    CLI::App* lattice_cmd = app.add_subcommand("lattice", "enumerate L(P)");
    add_input(lattice_cmd);
    CLI::App* hilbert_cmd =
        app.add_subcommand("hilbert", "multigraded Hilbert series");
    add_input(hilbert_cmd);
    hilbert_cmd->add_flag("--k-polynomial", want_k, "include the K-polynomial");
    hilbert_cmd->add_flag("--specialize", want_specialized,
                          "include the single-variable specialization");
    hilbert_cmd->add_option("--oracle-check", oracle_bound,
                            "cross-check coefficients up to this total degree");
    CLI::App* md_cmd = app.add_subcommand("multidegree", "multidegree polynomial");
    add_input(md_cmd);
    md_cmd->add_option("--route", route, "computation route")
        ->check(CLI::IsMember({"k", "chains", "both"}));
    CLI::App* cs_cmd = app.add_subcommand("cs", "Cartwright-Sturmfels verdict");
    add_input(cs_cmd);
    CLI::App* gr_cmd =
        app.add_subcommand("grading-recover", "recover a chain grading spec");
    add_input(gr_cmd);
    CLI::App* ideal_cmd = app.add_subcommand("ideal", "Hibi ideal structure");
    add_input(ideal_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Job job = parse_job(load_json(input));
        if (lattice_cmd->parsed()) return cmd_lattice(job, out);
        if (hilbert_cmd->parsed())
            return cmd_hilbert(job, want_k, want_specialized, oracle_bound, out);
        if (md_cmd->parsed()) return cmd_multidegree(job, route, out);
        if (cs_cmd->parsed()) return cmd_cs(job, out);
        if (gr_cmd->parsed()) return cmd_grading_recover(job, out);
        if (ideal_cmd->parsed()) return cmd_ideal(job, out);
        err << "no subcommand selected\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 6;
    }
}

} // namespace hibi
