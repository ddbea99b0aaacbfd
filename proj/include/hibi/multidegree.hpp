#pragma once

#include "hibi/grading.hpp"
#include "hibi/hilbert.hpp"

namespace hibi {

enum class MultidegreeRoute { via_k, via_chains };

/// The multidegree polynomial: every term has total degree exactly codim
/// and a positive coefficient.
struct MultidegreeResult {
    IntPolynomial poly;
    std::size_t codim = 0;
    MultidegreeRoute route = MultidegreeRoute::via_k;
};

/// Total-degree-codim part of the K-polynomial evaluated at 1 - t.
/// Throws lower_degree_residue if terms below codim survive.
MultidegreeResult multidegree_via_k(const Poset& P, const ChainGradingSpec& spec);

/// One monomial per maximal chain of L(P), with exponent the componentwise
/// degree sum over the chain's complement. Throws not_homogeneous.
MultidegreeResult multidegree_via_chains(const DistLattice& L, const Multigrading& g);

/// Collapses all variables to a single t; the result is a single term
/// whose coefficient is the number of maximal chains of L(P).
std::pair<Int, int> degree_specialize(const MultidegreeResult& md);

} // namespace hibi
