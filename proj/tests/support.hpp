#pragma once

// Shared fixtures and brute-force helpers for the test suites.

#include <algorithm>
#include <map>
#include <random>
#include <unordered_set>
#include <vector>

#include "hibi/lattice.hpp"
#include "hibi/poset.hpp"

namespace hibi::testing {

inline Poset n_poset() {
    return poset_from_covers(4, {{1, 3}, {2, 3}, {2, 4}});
}

inline Poset chain_poset(int n) {
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i < n; ++i) covers.emplace_back(i, i + 1);
    return poset_from_covers(n, covers);
}

inline Poset antichain_poset(int n) { return poset_from_covers(n, {}); }

// Encodes the full strict relation as one bit per ordered pair.
inline std::uint64_t encode_relation(const Poset& P) {
    const int n = P.size();
    std::uint64_t bits = 0;
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b)
            if (P.less(a, b)) bits |= std::uint64_t(1) << ((a - 1) * n + (b - 1));
    return bits;
}

// Every labeled poset on [1,n]: transitive relations inside the upper
// triangle, pushed through all relabelings and deduplicated. Usable up to
// n = 6 (130023 posets).
inline std::vector<Poset> all_posets(int n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_list;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pair_list.emplace_back(i, j);

    std::vector<std::vector<std::pair<int, int>>> natural;
    for (std::uint32_t bits = 0; bits < (std::uint32_t(1) << pairs); ++bits) {
        bool rel[8][8] = {};
        for (int k = 0; k < pairs; ++k)
            if ((bits >> k) & 1) rel[pair_list[k].first][pair_list[k].second] = true;
        bool transitive = true;
        for (int i = 1; i <= n && transitive; ++i)
            for (int j = i + 1; j <= n && transitive; ++j)
                for (int k = j + 1; k <= n; ++k)
                    if (rel[i][j] && rel[j][k] && !rel[i][k]) {
                        transitive = false;
                        break;
                    }
        if (!transitive) continue;
        std::vector<std::pair<int, int>> rels;
        for (int k = 0; k < pairs; ++k)
            if ((bits >> k) & 1) rels.push_back(pair_list[k]);
        natural.push_back(std::move(rels));
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<Poset> out;
    std::vector<int> perm(n);
    for (const auto& rels : natural) {
        for (int i = 0; i < n; ++i) perm[i] = i + 1;
        do {
            std::uint64_t bits = 0;
            for (auto [a, b] : rels)
                bits |= std::uint64_t(1)
                        << ((perm[a - 1] - 1) * n + (perm[b - 1] - 1));
            if (!seen.insert(bits).second) continue;
            std::vector<std::pair<int, int>> covers;
            for (auto [a, b] : rels) covers.emplace_back(perm[a - 1], perm[b - 1]);
            out.push_back(poset_from_covers(n, covers));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

inline Poset random_poset(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double density = 0.1 + 0.5 * unif(rng);
    std::vector<std::pair<int, int>> covers;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (unif(rng) < density) covers.emplace_back(i, j);
    // random relabeling so the sample is not biased to natural labelings
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& [a, b] : covers) {
        a = perm[a - 1];
        b = perm[b - 1];
    }
    return poset_from_covers(n, covers);
}

// All chains of P (as element sets, each sorted by the poset order),
// including the empty chain.
inline std::vector<std::vector<int>> all_chains(const Poset& P) {
    const int n = P.size();
    std::vector<std::vector<int>> out;
    for (Mask s = 0; s < (Mask(1) << n); ++s) {
        if (!is_chain(P, s)) continue;
        out.push_back(make_chain(P, mask_elements(s)).elems);
    }
    return out;
}

// Reference count: filter all n! permutations by the extension property.
inline std::vector<Permutation> brute_linear_extensions(const Poset& P) {
    const int n = P.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    std::vector<Permutation> out;
    do {
        std::vector<int> position(n + 1);
        for (int i = 0; i < n; ++i) position[perm[i]] = i;
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = 1; b <= n; ++b)
                if (P.less(a, b) && position[a] > position[b]) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Brute-force order isomorphism for small posets.
inline bool isomorphic(const Poset& A, const Poset& B) {
    if (A.size() != B.size()) return false;
    const int n = A.size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
        bool ok = true;
        for (int a = 1; a <= n && ok; ++a)
            for (int b = 1; b <= n; ++b)
                if (A.less(a, b) != B.less(perm[a - 1], perm[b - 1])) {
                    ok = false;
                    break;
                }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace hibi::testing
