#include "hibi/poset.hpp"

#include <algorithm>
#include <cassert>

namespace hibi {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        int b = __builtin_ctzll(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 1 || n > 62)
        throw error(errc::index_out_of_range, "ground set size must be in [1,62]");
    Poset P;
    P.n_ = n;
    P.below_.assign(n + 1, 0);
    P.above_.assign(n + 1, 0);
    for (auto [a, b] : covers) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw error(errc::index_out_of_range, "cover element outside [1,n]");
        if (a == b)
            throw error(errc::cycle_detected, "reflexive cover relation");
        P.above_[a] |= single_mask(b);
    }
    // Transitive closure of the successor masks.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= n; ++v) {
            Mask up = P.above_[v];
            Mask rest = up;
            while (rest) {
                int w = __builtin_ctzll(rest) + 1;
                rest &= rest - 1;
                up |= P.above_[w];
            }
            if (up != P.above_[v]) {
                P.above_[v] = up;
                changed = true;
            }
        }
    }
    for (int v = 1; v <= n; ++v)
        if (mask_contains(P.above_[v], v))
            throw error(errc::cycle_detected, "relations contain a cycle");
    for (int v = 1; v <= n; ++v) {
        Mask up = P.above_[v];
        while (up) {
            int w = __builtin_ctzll(up) + 1;
            up &= up - 1;
            P.below_[w] |= single_mask(v);
        }
    }
    return P;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 1; a <= n_; ++a) {
        Mask up = above_[a];
        while (up) {
            int b = __builtin_ctzll(up) + 1;
            up &= up - 1;
            // a -< b iff nothing lies strictly between.
            if ((above_[a] & below_[b]) == 0)
                covers.emplace_back(a, b);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

Mask Chain::mask() const {
    Mask m = 0;
    for (int c : elems) m = mask_with(m, c);
    return m;
}

Mask Chain::prefix(std::size_t i) const {
    Mask m = 0;
    for (std::size_t k = 0; k < i; ++k) m = mask_with(m, elems[k]);
    return m;
}

Chain make_chain(const Poset& P, std::vector<int> elements) {
    const int n = P.size();
    for (int e : elements)
        if (e < 1 || e > n)
            throw error(errc::index_out_of_range, "chain element outside [1,n]");
    std::sort(elements.begin(), elements.end());
    if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
        throw error(errc::not_a_chain, "chain elements must be distinct");
    // Rank each element by how many chain members lie strictly below it;
    // ranks 0..l-1 exactly once iff the subset is totally ordered by <_P.
    const std::size_t l = elements.size();
    std::vector<int> ordered(l, 0);
    std::vector<bool> seen(l, false);
    for (int e : elements) {
        int rank = 0;
        for (int e2 : elements)
            if (e2 != e && P.less(e2, e)) ++rank;
        if (static_cast<std::size_t>(rank) >= l || seen[rank])
            throw error(errc::not_a_chain, "subset is not totally ordered");
        seen[rank] = true;
        ordered[rank] = e;
    }
    for (std::size_t k = 0; k + 1 < l; ++k)
        if (!P.less(ordered[k], ordered[k + 1]))
            throw error(errc::not_a_chain, "subset is not totally ordered");
    return Chain{std::move(ordered)};
}

bool is_naturally_labeled(const Poset& P) {
    for (int a = 1; a <= P.size(); ++a) {
        // every strict successor must have a larger integer label
        Mask labels_le_a = (single_mask(a) - 1) | single_mask(a);
        if (P.strict_up(a) & labels_le_a) return false;
    }
    return true;
}

Relabeling natural_relabel(const Poset& P) {
    const int n = P.size();
    // Lexicographically least linear extension: repeatedly take the
    // smallest-index minimal element among the remainder.
    std::vector<int> extension;
    extension.reserve(n);
    Mask taken = 0;
    for (int step = 0; step < n; ++step) {
        for (int v = 1; v <= n; ++v) {
            if (mask_contains(taken, v)) continue;
            if ((P.strict_down(v) & ~taken) == 0) {
                extension.push_back(v);
                taken = mask_with(taken, v);
                break;
            }
        }
    }
    assert(static_cast<int>(extension.size()) == n);
    Relabeling r;
    r.to_new.assign(n + 1, 0);
    r.to_old.assign(n + 1, 0);
    for (int pos = 1; pos <= n; ++pos) {
        r.to_new[extension[pos - 1]] = pos;
        r.to_old[pos] = extension[pos - 1];
    }
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : P.cover_relations())
        covers.emplace_back(r.to_new[a], r.to_new[b]);
    r.poset = poset_from_covers(n, covers);
    return r;
}

namespace {

void extend(const Poset& P, Mask used, Permutation& prefix,
            std::vector<Permutation>& out) {
    const int n = P.size();
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    for (int v = 1; v <= n; ++v) {
        if (mask_contains(used, v)) continue;
        if ((P.strict_down(v) & ~used) != 0) continue;
        prefix.push_back(v);
        extend(P, mask_with(used, v), prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Permutation> linear_extensions(const Poset& P) {
    if (!is_naturally_labeled(P))
        throw error(errc::precondition_violated,
                    "linear_extensions requires a naturally labeled poset");
    std::vector<Permutation> out;
    Permutation prefix;
    extend(P, 0, prefix, out);
    return out;
}

int descent_stat(const Permutation& pi, int i) {
    const int n = static_cast<int>(pi.size());
    if (i < 0 || i > n + 1)
        throw error(errc::index_out_of_range, "descent position outside [0,n+1]");
    if (i == n + 1) return 0;
    if (i == 0) i = 1;
    int count = 0;
    for (int j = i; j <= n; ++j) {
        int next = (j == n) ? n + 1 : pi[j]; // p_{n+1} := n+1
        if (pi[j - 1] > next) ++count;
    }
    return count;
}

int chain_index(const Permutation& pi, int c) {
    for (std::size_t k = 0; k < pi.size(); ++k)
        if (pi[k] == c) return static_cast<int>(k) + 1;
    throw error(errc::index_out_of_range, "element not present in permutation");
}

bool is_chain(const Poset& P, Mask subset) {
    auto elems = mask_elements(subset);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!P.comparable(elems[i], elems[j])) return false;
    return true;
}

bool is_chain(const Poset& P, const std::vector<int>& subset) {
    Mask m = 0;
    for (int e : subset) m = mask_with(m, e);
    return is_chain(P, m);
}

} // namespace hibi
