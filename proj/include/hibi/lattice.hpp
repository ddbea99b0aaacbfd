#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "hibi/poset.hpp"

namespace hibi {

using Int = mpz_class;

inline constexpr std::size_t default_lattice_cap = std::size_t(1) << 22;

/// The distributive lattice L(P) of poset ideals, sorted canonically by
/// (cardinality, mask value). Join is union, meet is intersection.
class DistLattice {
public:
    const Poset& parent() const { return parent_; }
    std::size_t size() const { return ideals_.size(); }
    const std::vector<Mask>& ideals() const { return ideals_; }
    Mask ideal(int idx) const { return ideals_[idx]; }

    /// Canonical index of an ideal mask, or -1 if absent.
    int index_of(Mask m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : it->second;
    }

private:
    friend DistLattice build_lattice(const Poset& P, std::size_t cap);

    Poset parent_;
    std::vector<Mask> ideals_;
    std::unordered_map<Mask, int> index_;
};

/// Enumerates all poset ideals by BFS from the empty ideal, adding minimal
/// elements of the complement. Throws lattice_too_large past the cap.
DistLattice build_lattice(const Poset& P, std::size_t cap = default_lattice_cap);

inline Mask join(Mask a, Mask b) { return a | b; }
inline Mask meet(Mask a, Mask b) { return a & b; }

inline bool ideals_comparable(Mask a, Mask b) {
    return (a & b) == a || (a & b) == b;
}

/// All unordered incomparable pairs as canonical index pairs (i < j),
/// ordered lexicographically.
std::vector<std::pair<int, int>> incomparable_pairs(const DistLattice& L);

struct JoinIrreducibles {
    Poset poset;                 // order-isomorphic to the parent poset
    std::vector<Mask> ideals;    // canonical order; ideals[k-1] is element k
    std::vector<int> generators; // generators[k-1]: parent element whose
                                 // principal ideal is ideals[k-1]
};

/// The join-irreducible elements of L(P), i.e. the principal ideals,
/// ordered by inclusion (Birkhoff).
JoinIrreducibles join_irreducibles(const DistLattice& L);

/// All saturated chains empty = m_0 < ... < m_n = P, as canonical index
/// sequences, in lexicographic order of the element-insertion sequence.
std::vector<std::vector<int>> maximal_chains(const DistLattice& L);

/// Number of maximal chains (equals the number of linear extensions of P),
/// computed by DP without enumerating the chains.
Int count_maximal_chains(const DistLattice& L);

} // namespace hibi
