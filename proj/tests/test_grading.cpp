#include <doctest.h>

#include <random>

#include "hibi/grading.hpp"
#include "support.hpp"

using namespace hibi;
using namespace hibi::testing;

namespace {

ChainGradingSpec spec_of(const Poset& P, std::vector<int> chain, int m,
                         std::vector<int> f) {
    ChainGradingSpec s;
    s.chain = make_chain(P, std::move(chain));
    s.m = m;
    s.f = std::move(f);
    return s;
}

} // namespace

TEST_CASE("grading_from_chain reproduces the two groupings of the running example") {
    DistLattice L = build_lattice(n_poset());
    // canonical ideal order: {}, {1}, {2}, {1,2}, {2,4}, {1,2,3}, {1,2,4}, all
    Multigrading g23 = grading_from_chain(L, identity_spec(make_chain(L.parent(), {2, 3})));
    CHECK(g23.component == std::vector<int>{0, 0, 1, 1, 1, 2, 1, 2});

    Multigrading g24 = grading_from_chain(L, identity_spec(make_chain(L.parent(), {2, 4})));
    CHECK(g24.component == std::vector<int>{0, 0, 1, 1, 2, 1, 2, 2});

    Multigrading empty = grading_from_chain(L, spec_of(L.parent(), {}, 3, {2}));
    CHECK(empty.component == std::vector<int>(8, 2));
}

TEST_CASE("is_homogeneous") {
    DistLattice L = build_lattice(n_poset());
    for (auto chain : {std::vector<int>{2, 3}, std::vector<int>{2, 4}, std::vector<int>{}})
        CHECK(is_homogeneous(
            L, grading_from_chain(L, identity_spec(make_chain(L.parent(), chain)))));

    // e_1 on {1,2} only: the pair ({1,2},{2,4}) is inhomogeneous
    Multigrading bad{1, {0, 0, 0, 1, 0, 0, 0, 0}};
    CHECK_FALSE(is_homogeneous(L, bad));
    auto violation = homogeneity_violation(L, bad);
    REQUIRE(violation.has_value());
    // ({1},{2}) already fails: join {1,2} has degree e_1 while both factors are e_0
    CHECK(L.ideal(violation->first) == Mask(1));
    CHECK(L.ideal(violation->second) == Mask(2));
    {
        int i = L.index_of(Mask(0b0011)); // {1,2}
        int j = L.index_of(Mask(0b1010)); // {2,4}
        auto lo = std::minmax(bad.component[i], bad.component[j]);
        int u = bad.component[L.index_of(Mask(0b0010))];
        int v = bad.component[L.index_of(Mask(0b1011))];
        CHECK(lo != std::minmax(u, v));
    }

    // a lattice without incomparable pairs accepts any assignment
    DistLattice chainL = build_lattice(chain_poset(3));
    Multigrading arbitrary{3, {3, 0, 2, 1}};
    CHECK(is_homogeneous(chainL, arbitrary));
}

TEST_CASE("recover_chain_grading on the running example") {
    DistLattice L = build_lattice(n_poset());
    Multigrading g{2, {0, 0, 1, 1, 1, 2, 1, 2}};
    RecoverOutcome rec = recover_chain_grading(L, g);
    REQUIRE(rec.ok());
    CHECK(rec.spec->chain.elems == std::vector<int>{2, 3});
    CHECK(rec.spec->f == std::vector<int>{0, 1, 2});
    CHECK(grading_from_chain(L, *rec.spec) == g);
}

TEST_CASE("recover_chain_grading of a constant grading") {
    DistLattice L = build_lattice(n_poset());
    Multigrading g{4, std::vector<int>(8, 3)};
    RecoverOutcome rec = recover_chain_grading(L, g);
    REQUIRE(rec.ok());
    CHECK(rec.spec->chain.elems.empty());
    CHECK(rec.spec->f == std::vector<int>{3});
}

TEST_CASE("recover reports the first violating incomparable pair") {
    DistLattice L = build_lattice(n_poset());
    Multigrading bad{1, {0, 0, 0, 1, 0, 0, 0, 0}};
    RecoverOutcome rec = recover_chain_grading(L, bad);
    CHECK_FALSE(rec.ok());
    REQUIRE(rec.violating_pair.has_value());
    CHECK(rec.violating_pair == homogeneity_violation(L, bad));
}

TEST_CASE("non-injective f is accepted and recovers to the reduced spec") {
    DistLattice L = build_lattice(n_poset());
    // f collapsing both prefixes C_0, C_1 to component 0
    ChainGradingSpec folded = spec_of(L.parent(), {2, 3}, 1, {0, 0, 1});
    Multigrading g = grading_from_chain(L, folded);
    RecoverOutcome rec = recover_chain_grading(L, g);
    REQUIRE(rec.ok());
    CHECK(grading_from_chain(L, *rec.spec) == g);
    // the reduced chain only keeps the prefix where the component changes
    CHECK(rec.spec->chain.elems == std::vector<int>{3});
    CHECK(rec.spec->f == std::vector<int>{0, 1});
}

TEST_CASE("round-trip over random chain gradings") {
    std::mt19937_64 rng(271);
    for (int trial = 0; trial < 60; ++trial) {
        Poset P = random_poset(rng, 1 + static_cast<int>(rng() % 6));
        DistLattice L = build_lattice(P);
        auto chains = all_chains(P);
        const auto& chain = chains[rng() % chains.size()];
        const int l = static_cast<int>(chain.size());
        // consecutive-distinct f over [0, l]
        std::vector<int> f(l + 1);
        f[0] = static_cast<int>(rng() % (l + 1));
        for (int i = 1; i <= l; ++i) {
            int v;
            do {
                v = static_cast<int>(rng() % (l + 1));
            } while (v == f[i - 1]);
            f[i] = v;
        }
        ChainGradingSpec spec = spec_of(P, chain, l, f);
        Multigrading g = grading_from_chain(L, spec);
        CHECK(is_homogeneous(L, g));
        RecoverOutcome rec = recover_chain_grading(L, g);
        REQUIRE(rec.ok());
        CHECK(grading_from_chain(L, *rec.spec) == g);
        // reduced form: consecutive components differ
        for (std::size_t i = 1; i < rec.spec->f.size(); ++i)
            CHECK(rec.spec->f[i] != rec.spec->f[i - 1]);
    }
}

TEST_CASE("completeness: recovery succeeds exactly on homogeneous assignments") {
    // exhaustive over all assignments for small lattices and small m
    std::vector<Poset> posets = {chain_poset(3), antichain_poset(2),
                                 poset_from_covers(3, {{1, 3}, {2, 3}}), n_poset()};
    for (const Poset& P : posets) {
        DistLattice L = build_lattice(P);
        REQUIRE(L.size() <= 12);
        for (int m = 0; m <= 1; ++m) {
            const int base = m + 1;
            std::size_t total = 1;
            for (std::size_t k = 0; k < L.size(); ++k) total *= base;
            for (std::size_t code = 0; code < total; ++code) {
                Multigrading g{m, {}};
                std::size_t rest = code;
                for (std::size_t k = 0; k < L.size(); ++k) {
                    g.component.push_back(static_cast<int>(rest % base));
                    rest /= base;
                }
                RecoverOutcome rec = recover_chain_grading(L, g);
                if (is_homogeneous(L, g)) {
                    REQUIRE(rec.ok());
                    CHECK(grading_from_chain(L, *rec.spec) == g);
                } else {
                    CHECK_FALSE(rec.ok());
                    auto [i, j] = *rec.violating_pair;
                    CHECK_FALSE(ideals_comparable(L.ideal(i), L.ideal(j)));
                }
            }
        }
    }
}

TEST_CASE("grading_from_chain rejects non-chains") {
    DistLattice L = build_lattice(n_poset());
    ChainGradingSpec spec;
    spec.chain = Chain{{1, 4}}; // incomparable pair smuggled in directly
    spec.m = 2;
    spec.f = {0, 1, 2};
    CHECK_THROWS_AS(grading_from_chain(L, spec), error);
}
