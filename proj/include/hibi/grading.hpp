#pragma once

#include <optional>
#include <vector>

#include "hibi/lattice.hpp"

namespace hibi {

/// A chain C of P together with a map f from prefix index [0,l] to a
/// degree component in [0,m].
struct ChainGradingSpec {
    Chain chain;
    int m = 0;          // degree components are [0,m]
    std::vector<int> f; // f[i] is the component of the prefix C_i; size l+1

    bool operator==(const ChainGradingSpec&) const = default;
};

/// The spec with m = l and f the identity (the plain deg_C grading).
ChainGradingSpec identity_spec(const Chain& c);

/// Degree assignment L(P) -> [0,m], one component per variable x_alpha,
/// aligned with the lattice's canonical ideal order.
struct Multigrading {
    int m = 0;
    std::vector<int> component;

    bool operator==(const Multigrading&) const = default;
};

/// deg(x_alpha) = e_{f(|alpha ∩ C|)}. Throws not_a_chain if the spec's
/// chain is not a chain of the parent poset.
Multigrading grading_from_chain(const DistLattice& L, const ChainGradingSpec& spec);

/// First incomparable pair (canonical order) whose binomial is not
/// homogeneous, if any.
std::optional<std::pair<int, int>> homogeneity_violation(const DistLattice& L,
                                                         const Multigrading& g);

bool is_homogeneous(const DistLattice& L, const Multigrading& g);

/// Result of the constructive chain-grading recovery.
struct RecoverOutcome {
    std::optional<ChainGradingSpec> spec;              // set on success
    std::optional<std::pair<int, int>> violating_pair; // set when not homogeneous

    bool ok() const { return spec.has_value(); }
};

/// Recovers a chain C and map f with grading_from_chain(L, spec) == g.
/// The returned spec is reduced: consecutive prefixes get distinct
/// components. Fails exactly when g is not homogeneous, reporting the
/// first violating incomparable pair.
RecoverOutcome recover_chain_grading(const DistLattice& L, const Multigrading& g);

} // namespace hibi
