#include "hibi/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace hibi {

namespace {

// Minimal elements of the complement of the ideal: v with strict_down(v)
// already inside. Adding any of them keeps the set downward closed.
Mask addable_elements(const Poset& P, Mask ideal) {
    Mask out = 0;
    Mask rest = P.full_mask() & ~ideal;
    while (rest) {
        int v = __builtin_ctzll(rest) + 1;
        rest &= rest - 1;
        if ((P.strict_down(v) & ~ideal) == 0) out = mask_with(out, v);
    }
    return out;
}

} // namespace

DistLattice build_lattice(const Poset& P, std::size_t cap) {
    DistLattice L;
    L.parent_ = P;
    std::unordered_map<Mask, int>& seen = L.index_;
    std::deque<Mask> queue;
    seen.emplace(0, 0);
    queue.push_back(0);
    while (!queue.empty()) {
        Mask cur = queue.front();
        queue.pop_front();
        Mask add = addable_elements(P, cur);
        while (add) {
            int v = __builtin_ctzll(add) + 1;
            add &= add - 1;
            Mask next = mask_with(cur, v);
            if (seen.emplace(next, 0).second) {
                if (seen.size() > cap)
                    throw error(errc::lattice_too_large,
                                "lattice exceeds the configured size cap");
                queue.push_back(next);
            }
        }
    }
    L.ideals_.reserve(seen.size());
    for (auto& [mask, idx] : seen) L.ideals_.push_back(mask);
    std::sort(L.ideals_.begin(), L.ideals_.end(), [](Mask a, Mask b) {
        int ca = mask_size(a), cb = mask_size(b);
        return ca != cb ? ca < cb : a < b;
    });
    for (std::size_t i = 0; i < L.ideals_.size(); ++i)
        seen[L.ideals_[i]] = static_cast<int>(i);
    return L;
}

std::vector<std::pair<int, int>> incomparable_pairs(const DistLattice& L) {
    std::vector<std::pair<int, int>> out;
    const auto& ideals = L.ideals();
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j)
            if (!ideals_comparable(ideals[i], ideals[j]))
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return out;
}

JoinIrreducibles join_irreducibles(const DistLattice& L) {
    const Poset& P = L.parent();
    JoinIrreducibles ji;
    for (Mask m : L.ideals()) {
        if (m == 0) continue;
        // Join-irreducible iff the ideal has exactly one maximal element;
        // it is then the principal ideal of that element.
        int maximal = 0, count = 0;
        Mask rest = m;
        while (rest) {
            int v = __builtin_ctzll(rest) + 1;
            rest &= rest - 1;
            if ((P.strict_up(v) & m) == 0) {
                maximal = v;
                ++count;
            }
        }
        if (count == 1) {
            ji.ideals.push_back(m);
            ji.generators.push_back(maximal);
        }
    }
    assert(ji.ideals.size() == static_cast<std::size_t>(P.size()));
    const int k = static_cast<int>(ji.ideals.size());
    std::vector<std::pair<int, int>> covers;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b)
            if (a != b && ji.ideals[a - 1] != ji.ideals[b - 1] &&
                (ji.ideals[a - 1] & ji.ideals[b - 1]) == ji.ideals[a - 1])
                covers.emplace_back(a, b);
    ji.poset = poset_from_covers(k, covers);
    return ji;
}

namespace {

void chains_dfs(const DistLattice& L, Mask cur, std::vector<int>& path,
                std::vector<std::vector<int>>& out) {
    if (cur == L.parent().full_mask()) {
        out.push_back(path);
        return;
    }
    Mask add = addable_elements(L.parent(), cur);
    while (add) {
        int v = __builtin_ctzll(add) + 1;
        add &= add - 1;
        Mask next = mask_with(cur, v);
        path.push_back(L.index_of(next));
        chains_dfs(L, next, path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> maximal_chains(const DistLattice& L) {
    std::vector<std::vector<int>> out;
    std::vector<int> path{L.index_of(0)};
    chains_dfs(L, 0, path, out);
    return out;
}

Int count_maximal_chains(const DistLattice& L) {
    const Poset& P = L.parent();
    std::vector<Int> ways(L.size());
    ways[0] = 1; // index 0 is the empty ideal
    for (std::size_t i = 1; i < L.size(); ++i) {
        Mask m = L.ideal(static_cast<int>(i));
        Int total = 0;
        // predecessors in the covering DAG: remove one maximal element
        Mask rest = m;
        while (rest) {
            int v = __builtin_ctzll(rest) + 1;
            rest &= rest - 1;
            if ((P.strict_up(v) & m) == 0)
                total += ways[L.index_of(mask_without(m, v))];
        }
        ways[i] = total;
    }
    return ways.back();
}

} // namespace hibi
