#include "hibi/ideal.hpp"

#include <algorithm>
#include <map>

namespace hibi {

std::vector<HibiBinomial> hibi_generators(const DistLattice& L) {
    std::vector<HibiBinomial> out;
    for (auto [i, j] : incomparable_pairs(L)) {
        Mask a = L.ideal(i), b = L.ideal(j);
        out.push_back(HibiBinomial{i, j, L.index_of(a & b), L.index_of(a | b)});
    }
    return out;
}

std::vector<std::pair<int, int>> initial_ideal(const DistLattice& L) {
    return incomparable_pairs(L);
}

std::vector<PrimaryComponent> primary_decomposition(const DistLattice& L) {
    std::vector<PrimaryComponent> out;
    const int total = static_cast<int>(L.size());
    for (const auto& chain : maximal_chains(L)) {
        std::vector<bool> in_chain(total, false);
        for (int idx : chain) in_chain[idx] = true;
        PrimaryComponent comp;
        comp.variables.reserve(total - static_cast<int>(chain.size()));
        for (int idx = 0; idx < total; ++idx)
            if (!in_chain[idx]) comp.variables.push_back(idx);
        out.push_back(std::move(comp));
    }
    return out;
}

std::size_t codim(const DistLattice& L) {
    return L.size() - (L.parent().size() + 1);
}

namespace {

// Degree-3 monomials over the lattice variables, kept as sorted index
// triples; reduction never raises the degree.
using Mono = std::vector<int>;

void accumulate(std::map<Mono, long long>& poly, Mono m, long long c) {
    std::sort(m.begin(), m.end());
    auto [it, inserted] = poly.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) poly.erase(it);
    }
}

// Replaces one occurrence of an incomparable product inside a monomial by
// the meet/join product until no term is divisible by a leading term.
bool reduces_to_zero(const DistLattice& L, std::map<Mono, long long> poly,
                     std::size_t step_cap) {
    std::size_t steps = 0;
    while (!poly.empty()) {
        bool rewrote = false;
        for (auto it = poly.begin(); it != poly.end(); ++it) {
            const Mono& m = it->first;
            int u = -1, v = -1;
            for (std::size_t x = 0; x < m.size() && u < 0; ++x)
                for (std::size_t y = x + 1; y < m.size(); ++y) {
                    if (m[x] == m[y]) continue;
                    if (!ideals_comparable(L.ideal(m[x]), L.ideal(m[y]))) {
                        u = static_cast<int>(x);
                        v = static_cast<int>(y);
                        break;
                    }
                }
            if (u < 0) continue;
            if (++steps > step_cap)
                throw error(errc::cap_exceeded, "S-pair reduction exceeded the step cap");
            Mono rewritten = m;
            Mask a = L.ideal(m[u]), b = L.ideal(m[v]);
            rewritten[u] = L.index_of(a & b);
            rewritten[v] = L.index_of(a | b);
            long long c = it->second;
            poly.erase(it);
            accumulate(poly, std::move(rewritten), c);
            rewrote = true;
            break;
        }
        if (!rewrote) break; // fully reduced, nothing divisible remains
    }
    return poly.empty();
}

} // namespace

bool verify_groebner_property(const DistLattice& L, std::size_t step_cap) {
    const auto gens = hibi_generators(L);
    // Group generators by the variables of their leading terms; two
    // distinct generators share at most one lead variable, and coprime
    // leads need no S-pair check.
    std::vector<std::vector<int>> by_var(L.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
        by_var[gens[g].alpha].push_back(static_cast<int>(g));
        by_var[gens[g].beta].push_back(static_cast<int>(g));
    }
    for (const auto& bucket : by_var) {
        for (std::size_t x = 0; x < bucket.size(); ++x) {
            for (std::size_t y = x + 1; y < bucket.size(); ++y) {
                const HibiBinomial& f = gens[bucket[x]];
                const HibiBinomial& g = gens[bucket[y]];
                // lcm of the two quadratic leads has degree 3; the S-pair
                // cancels the leads and leaves the two trail terms with
                // cofactors.
                int shared = (f.alpha == g.alpha || f.alpha == g.beta) ? f.alpha : f.beta;
                int f_other = f.alpha == shared ? f.beta : f.alpha;
                int g_other = g.alpha == shared ? g.beta : g.alpha;
                std::map<Mono, long long> spair;
                accumulate(spair, Mono{g_other, f.meet, f.join}, -1);
                accumulate(spair, Mono{f_other, g.meet, g.join}, 1);
                if (!reduces_to_zero(L, std::move(spair), step_cap)) return false;
            }
        }
    }
    return true;
}

} // namespace hibi
