#include "hibi/multidegree.hpp"

#include "hibi/ideal.hpp"

namespace hibi {

MultidegreeResult multidegree_via_k(const Poset& P, const ChainGradingSpec& spec) {
    IntPolynomial k = k_polynomial(P, spec);
    const int nv = k.nvars();
    std::vector<VarImage> images(nv);
    for (int i = 0; i < nv; ++i) images[i] = VarImage{i, true};
    IntPolynomial shifted = substitute_variables(k, images, nv);

    DistLattice L = build_lattice(P);
    const std::size_t cd = codim(L);
    MultidegreeResult out{IntPolynomial(nv), cd, MultidegreeRoute::via_k};
    for (const auto& [m, c] : shifted.terms()) {
        const std::size_t total = static_cast<std::size_t>(m.total());
        if (total < cd)
            throw error(errc::lower_degree_residue,
                        "K(1-t) kept a term below the codimension");
        if (total == cd) out.poly.add_term(m, c);
    }
    for (const auto& [m, c] : out.poly.terms())
        if (c <= 0)
            throw error(errc::internal_error, "multidegree coefficient not positive");
    return out;
}

MultidegreeResult multidegree_via_chains(const DistLattice& L, const Multigrading& g) {
    if (auto bad = homogeneity_violation(L, g))
        throw error(errc::not_homogeneous, "grading is not homogeneous");
    const int nv = g.m + 1;
    const std::size_t cd = codim(L);
    MultidegreeResult out{IntPolynomial(nv), cd, MultidegreeRoute::via_chains};
    const int total = static_cast<int>(L.size());
    for (const auto& chain : maximal_chains(L)) {
        std::vector<bool> in_chain(total, false);
        for (int idx : chain) in_chain[idx] = true;
        Monomial m{std::vector<int>(nv, 0)};
        for (int idx = 0; idx < total; ++idx)
            if (!in_chain[idx]) ++m.e[g.component[idx]];
        out.poly.add_term(std::move(m), 1);
    }
    return out;
}

std::pair<Int, int> degree_specialize(const MultidegreeResult& md) {
    std::vector<VarImage> images(md.poly.nvars(), VarImage{0, false});
    IntPolynomial collapsed = substitute_variables(md.poly, images, 1);
    if (collapsed.terms().size() != 1)
        throw error(errc::internal_error, "specialized multidegree is not a single term");
    const auto& [m, c] = *collapsed.terms().begin();
    return {c, m.e[0]};
}

} // namespace hibi
