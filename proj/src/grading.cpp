#include "hibi/grading.hpp"

#include <algorithm>
#include <cassert>

namespace hibi {

ChainGradingSpec identity_spec(const Chain& c) {
    ChainGradingSpec spec;
    spec.chain = c;
    spec.m = static_cast<int>(c.length());
    spec.f.resize(c.length() + 1);
    for (std::size_t i = 0; i <= c.length(); ++i) spec.f[i] = static_cast<int>(i);
    return spec;
}

Multigrading grading_from_chain(const DistLattice& L, const ChainGradingSpec& spec) {
    const Poset& P = L.parent();
    if (!is_chain(P, spec.chain.mask()))
        throw error(errc::not_a_chain, "grading spec does not carry a chain of P");
    if (spec.f.size() != spec.chain.length() + 1)
        throw error(errc::precondition_violated, "f must assign every chain prefix");
    for (int fi : spec.f)
        if (fi < 0 || fi > spec.m)
            throw error(errc::index_out_of_range, "f value outside [0,m]");
    const Mask cmask = spec.chain.mask();
    Multigrading g;
    g.m = spec.m;
    g.component.reserve(L.size());
    for (Mask alpha : L.ideals()) {
        // alpha ∩ C is a prefix of C; its size indexes f.
        g.component.push_back(spec.f[mask_size(alpha & cmask)]);
    }
    return g;
}

std::optional<std::pair<int, int>> homogeneity_violation(const DistLattice& L,
                                                         const Multigrading& g) {
    const auto& ideals = L.ideals();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            if (ideals_comparable(ideals[i], ideals[j])) continue;
            int a = g.component[i], b = g.component[j];
            int u = g.component[L.index_of(ideals[i] & ideals[j])];
            int v = g.component[L.index_of(ideals[i] | ideals[j])];
            if (std::minmax(a, b) != std::minmax(u, v))
                return std::make_pair(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return std::nullopt;
}

bool is_homogeneous(const DistLattice& L, const Multigrading& g) {
    return !homogeneity_violation(L, g).has_value();
}

namespace {

// Runs the constructive recovery; returns nullopt when some step of the
// construction is impossible (which only happens for non-homogeneous input).
std::optional<ChainGradingSpec> try_recover(const DistLattice& L,
                                            const Multigrading& g) {
    const Poset& P = L.parent();
    if (g.component.size() != L.size()) return std::nullopt;
    const auto ji = join_irreducibles(L);

    std::vector<int> components{g.component[0]}; // the empty ideal's component
    std::vector<int> chain_elems;
    Mask floor = 0; // search is restricted to ideals containing this one
    while (true) {
        // Lowest level above the floor whose component differs from the
        // current one. If the grading is induced by a chain, that level
        // holds exactly one such ideal and it is join-irreducible.
        int found = -1;
        int level = -1;
        int hits = 0;
        for (std::size_t idx = 0; idx < L.size(); ++idx) {
            Mask alpha = L.ideal(static_cast<int>(idx));
            if ((alpha & floor) != floor) continue;
            if (g.component[idx] == components.back()) continue;
            int card = mask_size(alpha);
            if (level == -1 || card < level) {
                level = card;
                found = static_cast<int>(idx);
                hits = 1;
            } else if (card == level) {
                ++hits;
            }
        }
        if (found == -1) break; // every remaining ideal keeps the component
        if (hits != 1) return std::nullopt;
        Mask next = L.ideal(found);
        auto it = std::find(ji.ideals.begin(), ji.ideals.end(), next);
        if (it == ji.ideals.end()) return std::nullopt;
        if ((floor & next) != floor || next == floor) return std::nullopt;
        chain_elems.push_back(ji.generators[it - ji.ideals.begin()]);
        components.push_back(g.component[found]);
        floor = next;
    }

    if (!is_chain(P, chain_elems)) return std::nullopt;
    ChainGradingSpec spec;
    spec.chain = make_chain(P, chain_elems);
    if (spec.chain.elems != chain_elems) return std::nullopt; // not increasing
    spec.m = g.m;
    spec.f = std::move(components);
    return spec;
}

} // namespace

RecoverOutcome recover_chain_grading(const DistLattice& L, const Multigrading& g) {
    if (g.component.size() != L.size())
        throw error(errc::precondition_violated,
                    "degree map must assign every lattice ideal");
    for (int comp : g.component)
        if (comp < 0 || comp > g.m)
            throw error(errc::index_out_of_range, "degree component outside [0,m]");
    RecoverOutcome out;
    if (auto spec = try_recover(L, g)) {
        // The construction only proves the degree map is induced by a chain
        // when it regenerates the input exactly.
        if (grading_from_chain(L, *spec) == g) {
            out.spec = std::move(spec);
            return out;
        }
    }
    auto violation = homogeneity_violation(L, g);
    if (!violation)
        throw error(errc::internal_error,
                    "homogeneous grading not recovered by the chain construction");
    out.violating_pair = violation;
    return out;
}

} // namespace hibi
