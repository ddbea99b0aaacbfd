#pragma once

#include <cstddef>
#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

/// Binomial x_alpha x_beta - x_{alpha∩beta} x_{alpha∪beta} for an
/// incomparable pair, as canonical lattice indices.
struct HibiBinomial {
    int alpha;
    int beta;
    int meet;
    int join;

    bool operator==(const HibiBinomial&) const = default;
};

/// One generating binomial per incomparable pair, in canonical pair order.
std::vector<HibiBinomial> hibi_generators(const DistLattice& L);

/// The compatible-order initial ideal: squarefree quadratic generators
/// x_alpha x_beta over incomparable pairs (the Stanley-Reisner ideal of
/// the order complex of L(P)).
std::vector<std::pair<int, int>> initial_ideal(const DistLattice& L);

/// Variables of one minimal prime of the initial ideal: the complement of
/// a maximal chain of L(P).
struct PrimaryComponent {
    std::vector<int> variables; // canonical indices, ascending
};

/// One component per maximal chain, in maximal-chain enumeration order.
std::vector<PrimaryComponent> primary_decomposition(const DistLattice& L);

/// |L(P)| - (n+1); the common size of the primary components.
std::size_t codim(const DistLattice& L);

/// Reduces every S-pair of generators with non-coprime leading terms to
/// zero using the incomparable-product leading terms. Throws cap_exceeded
/// if a reduction runs past step_cap steps.
bool verify_groebner_property(const DistLattice& L, std::size_t step_cap = 100000);

} // namespace hibi
