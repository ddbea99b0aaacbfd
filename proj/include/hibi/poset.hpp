#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hibi/errors.hpp"

namespace hibi {

/// Subset of the ground set [1,n], element i stored as bit i-1.
using Mask = std::uint64_t;

inline bool mask_contains(Mask m, int v) { return (m >> (v - 1)) & 1u; }
inline Mask mask_with(Mask m, int v) { return m | (Mask(1) << (v - 1)); }
inline Mask mask_without(Mask m, int v) { return m & ~(Mask(1) << (v - 1)); }
inline Mask single_mask(int v) { return Mask(1) << (v - 1); }
inline int mask_size(Mask m) { return __builtin_popcountll(m); }

std::vector<int> mask_elements(Mask m);

/// Finite poset on the ground set [1,n]; the strict order relation is kept
/// transitively closed so comparability queries are O(1).
class Poset {
public:
    Poset() = default;

    int size() const { return n_; }
    Mask full_mask() const { return n_ == 64 ? ~Mask(0) : (Mask(1) << n_) - 1; }

    /// a <_P b (strict).
    bool less(int a, int b) const { return mask_contains(above_[a], b); }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

    /// {w : w <_P v} as a mask.
    Mask strict_down(int v) const { return below_[v]; }
    Mask strict_up(int v) const { return above_[v]; }
    /// {w : w <=_P v}, the principal ideal of v.
    Mask down_set(int v) const { return below_[v] | single_mask(v); }

    /// Cover relations (transitive reduction), in lexicographic order.
    std::vector<std::pair<int, int>> cover_relations() const;

    bool operator==(const Poset& other) const {
        return n_ == other.n_ && above_ == other.above_;
    }

private:
    friend Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

    int n_ = 0;
    std::vector<Mask> below_; // below_[v] = strict down-set of v, index 0 unused
    std::vector<Mask> above_;
};

/// Smallest transitive strict order containing the given relations.
/// Throws cycle_detected / index_out_of_range.
Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers);

/// Sequence of values (p_1,...,p_n), a bijection of [1,n].
using Permutation = std::vector<int>;

/// Strictly increasing chain c_1 <_P ... <_P c_l of poset elements.
struct Chain {
    std::vector<int> elems;

    std::size_t length() const { return elems.size(); }
    Mask mask() const;
    /// Prefix mask {c_1,...,c_i}.
    Mask prefix(std::size_t i) const;
    bool operator==(const Chain&) const = default;
};

/// Validates comparability, sorts by the poset order. Throws not_a_chain.
Chain make_chain(const Poset& P, std::vector<int> elements);

/// True iff less(i,j) implies i < j as integers.
bool is_naturally_labeled(const Poset& P);

struct Relabeling {
    Poset poset;              // order-isomorphic, naturally labeled
    std::vector<int> to_new;  // to_new[old] = new label, index 0 unused
    std::vector<int> to_old;
};

/// Relabels along the lexicographically least linear extension; identity when
/// the input is already naturally labeled.
Relabeling natural_relabel(const Poset& P);

/// The Jordan-Hoelder set e(P): all permutations refining <=_P, in
/// lexicographic order. Requires a naturally labeled poset.
std::vector<Permutation> linear_extensions(const Poset& P);

/// d_i(pi) = #{j in [i,n] : p_j > p_{j+1}} with p_{n+1} = n+1,
/// and the sentinel conventions d_0 = d_1, d_{n+1} = 0.
int descent_stat(const Permutation& pi, int i);

/// Position of c in pi (1-based).
int chain_index(const Permutation& pi, int c);

/// True iff the subset is pairwise comparable (empty and singletons count).
bool is_chain(const Poset& P, Mask subset);
bool is_chain(const Poset& P, const std::vector<int>& subset);

} // namespace hibi
