#pragma once

#include <variant>
#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

/// Certificate that I_{L(P)} under deg_C is not Cartwright-Sturmfels:
/// x_{alpha'} x_beta is a minimal generator of the initial ideal with
/// degree 2 e_j.
struct NonCsWitness {
    int a = 0;
    int b = 0;           // incomparable pair in P \ C, a < b as integers
    Mask alpha_prime = 0;
    Mask beta = 0;       // incomparable ideals, both of degree e_j
    int j = 0;
};

/// Realization of L(P) as the full (r+1) x (l+1) grid D_i ∪ C_j; the Hibi
/// generators are exactly the 2-minors of the column-graded variable matrix.
struct MatrixRealization {
    std::vector<int> d_elems;               // the chain D = P \ C
    std::vector<int> c_elems;               // the chain C
    std::vector<std::vector<Mask>> entries; // entries[i][j] = D_i ∪ C_j

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
};

/// Embedding of L(P) into the grid lattice of the poset obtained by
/// dropping every D-C relation; the initial ideal is the elimination of
/// the grid's initial ideal.
struct EliminationRealization {
    Poset ambient_poset;        // same elements, D-C relations dropped
    DistLattice ambient;        // its grid lattice
    std::vector<int> embedding; // L(P) index -> ambient index
};

struct CsVerdict {
    bool is_cs = false;
    std::variant<NonCsWitness, MatrixRealization, EliminationRealization> witness;
};

/// Decides the Cartwright-Sturmfels property of I_{L(P)} under deg_C:
/// CS iff P \ C is a chain. Populates the witness for the matching case.
CsVerdict cs_check(const Poset& P, const Chain& C);

/// Requires P \ C not a chain; throws is_actually_chain otherwise.
NonCsWitness build_non_cs_witness(const Poset& P, const Chain& C);

/// Requires P \ C a chain with every (d, c) pair incomparable.
MatrixRealization build_matrix_realization(const Poset& P, const Chain& C);

/// Requires P \ C a chain.
EliminationRealization build_elimination_realization(const Poset& P, const Chain& C);

} // namespace hibi
