#include "hibi/cartwright_sturmfels.hpp"

#include <algorithm>

namespace hibi {

namespace {

void require_chain_of(const Poset& P, const Chain& C) {
    for (int c : C.elems)
        if (c < 1 || c > P.size())
            throw error(errc::index_out_of_range, "chain element outside [1,n]");
    if (!is_chain(P, C.mask()))
        throw error(errc::not_a_chain, "C is not a chain of P");
}

bool all_dc_incomparable(const Poset& P, const std::vector<int>& d,
                         const std::vector<int>& c) {
    for (int x : d)
        for (int y : c)
            if (P.comparable(x, y)) return false;
    return true;
}

} // namespace

NonCsWitness build_non_cs_witness(const Poset& P, const Chain& C) {
    require_chain_of(P, C);
    const Mask complement = P.full_mask() & ~C.mask();
    const auto elems = mask_elements(complement);
    int a = 0, b = 0;
    for (std::size_t x = 0; x < elems.size() && a == 0; ++x)
        for (std::size_t y = x + 1; y < elems.size(); ++y)
            if (!P.comparable(elems[x], elems[y])) {
                a = elems[x];
                b = elems[y];
                break;
            }
    if (a == 0)
        throw error(errc::is_actually_chain, "P \\ C is a chain");
    Mask alpha = P.down_set(a);
    Mask beta = P.down_set(b);
    int i = mask_size(alpha & C.mask());
    int j = mask_size(beta & C.mask());
    if (i > j) {
        std::swap(a, b);
        std::swap(alpha, beta);
        std::swap(i, j);
    }
    NonCsWitness w;
    w.a = a;
    w.b = b;
    // The union with the bare prefix C_j need not be downward closed when
    // elements outside C sit below c_j; closing with the principal ideal of
    // c_j keeps alpha' in L(P) and still meets C in exactly C_j.
    w.alpha_prime = j == 0 ? alpha : alpha | P.down_set(C.elems[j - 1]);
    w.beta = beta;
    w.j = j;
    if (ideals_comparable(w.alpha_prime, w.beta) ||
        mask_size(w.alpha_prime & C.mask()) != j)
        throw error(errc::internal_error, "witness construction failed");
    return w;
}

MatrixRealization build_matrix_realization(const Poset& P, const Chain& C) {
    require_chain_of(P, C);
    const Mask complement = P.full_mask() & ~C.mask();
    if (!is_chain(P, complement))
        throw error(errc::precondition_violated, "P \\ C is not a chain");
    Chain D = make_chain(P, mask_elements(complement));
    if (!all_dc_incomparable(P, D.elems, C.elems))
        throw error(errc::precondition_violated,
                    "some element of D is comparable to the chain");
    const int r = static_cast<int>(D.length());
    const int l = static_cast<int>(C.length());
    MatrixRealization rz;
    rz.d_elems = D.elems;
    rz.c_elems = C.elems;
    rz.entries.assign(r + 1, std::vector<Mask>(l + 1, 0));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= l; ++j)
            rz.entries[i][j] = D.prefix(i) | C.prefix(j);

    // The grid must cover L(P) exactly.
    DistLattice L = build_lattice(P);
    if (L.size() != static_cast<std::size_t>((r + 1) * (l + 1)))
        throw error(errc::internal_error, "grid size differs from |L(P)|");
    std::vector<std::pair<int, int>> coord(L.size(), {-1, -1});
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= l; ++j) {
            int idx = L.index_of(rz.entries[i][j]);
            if (idx < 0 || coord[idx].first != -1)
                throw error(errc::internal_error, "grid entries do not cover L(P)");
            coord[idx] = {i, j};
            if (mask_size(rz.entries[i][j] & C.mask()) != j)
                throw error(errc::internal_error, "grid column degree mismatch");
        }

    // Hibi generators must be exactly the 2-minors of the grid.
    const auto& ideals = L.ideals();
    std::size_t pair_count = 0;
    for (std::size_t x = 0; x < ideals.size(); ++x)
        for (std::size_t y = x + 1; y < ideals.size(); ++y) {
            if (ideals_comparable(ideals[x], ideals[y])) continue;
            ++pair_count;
            auto [i1, j1] = coord[x];
            auto [i2, j2] = coord[y];
            if (i1 > i2) {
                std::swap(i1, i2);
                std::swap(j1, j2);
            }
            if (!(i1 < i2 && j2 < j1))
                throw error(errc::internal_error, "incomparable pair is not anti-diagonal");
            if ((ideals[x] & ideals[y]) != rz.entries[i1][j2] ||
                (ideals[x] | ideals[y]) != rz.entries[i2][j1])
                throw error(errc::internal_error, "generator is not a 2-minor of the grid");
        }
    const std::size_t minors = static_cast<std::size_t>(r * (r + 1) / 2) *
                               static_cast<std::size_t>(l * (l + 1) / 2);
    if (pair_count != minors)
        throw error(errc::internal_error, "generator count differs from 2-minor count");
    return rz;
}

EliminationRealization build_elimination_realization(const Poset& P, const Chain& C) {
    require_chain_of(P, C);
    const Mask complement = P.full_mask() & ~C.mask();
    if (!is_chain(P, complement))
        throw error(errc::precondition_violated, "P \\ C is not a chain");
    Chain D = make_chain(P, mask_elements(complement));

    // The ambient poset keeps the two internal chain orders and drops
    // every D-C relation; its ideals form the full grid.
    std::vector<std::pair<int, int>> covers;
    for (std::size_t k = 0; k + 1 < D.length(); ++k)
        covers.emplace_back(D.elems[k], D.elems[k + 1]);
    for (std::size_t k = 0; k + 1 < C.length(); ++k)
        covers.emplace_back(C.elems[k], C.elems[k + 1]);
    EliminationRealization rz;
    rz.ambient_poset = poset_from_covers(P.size(), covers);
    rz.ambient = build_lattice(rz.ambient_poset);

    DistLattice L = build_lattice(P);
    rz.embedding.reserve(L.size());
    for (Mask alpha : L.ideals()) {
        int idx = rz.ambient.index_of(alpha);
        if (idx < 0)
            throw error(errc::internal_error, "P-ideal missing from the ambient lattice");
        rz.embedding.push_back(idx);
    }
    // Inclusion of mask sets preserves union and intersection; check that
    // both land inside the image as lattice members.
    for (std::size_t x = 0; x < L.size(); ++x)
        for (std::size_t y = x + 1; y < L.size(); ++y) {
            Mask u = L.ideal(static_cast<int>(x)) | L.ideal(static_cast<int>(y));
            Mask v = L.ideal(static_cast<int>(x)) & L.ideal(static_cast<int>(y));
            if (rz.ambient.index_of(u) < 0 || rz.ambient.index_of(v) < 0 ||
                L.index_of(u) < 0 || L.index_of(v) < 0)
                throw error(errc::internal_error, "embedding does not preserve join/meet");
        }
    return rz;
}

CsVerdict cs_check(const Poset& P, const Chain& C) {
    require_chain_of(P, C);
    const Mask complement = P.full_mask() & ~C.mask();
    CsVerdict verdict;
    if (!is_chain(P, complement)) {
        verdict.is_cs = false;
        verdict.witness = build_non_cs_witness(P, C);
        return verdict;
    }
    verdict.is_cs = true;
    Chain D = make_chain(P, mask_elements(complement));
    if (all_dc_incomparable(P, D.elems, C.elems))
        verdict.witness = build_matrix_realization(P, C);
    else
        verdict.witness = build_elimination_realization(P, C);
    return verdict;
}

} // namespace hibi
