#include "hibi/hilbert.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace hibi {

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Core of the linear-extension sum: one rational term per extension, with
// the numerator exponent and denominator multiplicity of segment i routed
// into variable slot[i].
SeriesRational extension_sum(const Poset& P, const Chain& C,
                             const std::vector<int>& slot, int nvars) {
    const int n = P.size();
    const int l = static_cast<int>(C.length());
    SeriesRational acc{IntPolynomial(nvars), std::vector<int>(nvars, 0)};
    for (const Permutation& pi : linear_extensions(P)) {
        // positions of c_0..c_{l+1} with the boundary conventions
        std::vector<int> pos(l + 2);
        pos[0] = 0;
        pos[l + 1] = n + 1;
        for (int j = 1; j <= l; ++j) pos[j] = chain_index(pi, C.elems[j - 1]);
        Monomial num{std::vector<int>(nvars, 0)};
        std::vector<int> denom(nvars, 0);
        for (int i = 0; i <= l; ++i) {
            num.e[slot[i]] += descent_stat(pi, pos[i]) - descent_stat(pi, pos[i + 1]);
            denom[slot[i]] += pos[i + 1] - pos[i];
        }
        IntPolynomial numerator(nvars);
        numerator.add_term(std::move(num), 1);
        acc = series_add(acc, SeriesRational{std::move(numerator), std::move(denom)});
    }
    return acc;
}

// Relabels P (and the chain through it) so the Jordan-Hoelder machinery
// applies; the series itself is label-independent.
std::pair<Poset, Chain> naturalized(const Poset& P, const Chain& C) {
    if (!is_chain(P, C.mask()))
        throw error(errc::not_a_chain, "C is not a chain of P");
    if (is_naturally_labeled(P)) return {P, C};
    Relabeling r = natural_relabel(P);
    std::vector<int> elems;
    elems.reserve(C.length());
    for (int c : C.elems) elems.push_back(r.to_new[c]);
    return {r.poset, make_chain(r.poset, std::move(elems))};
}

} // namespace

SeriesRational hilbert_series(const Poset& P, const Chain& C) {
    auto [Q, D] = naturalized(P, C);
    const int l = static_cast<int>(D.length());
    std::vector<int> slot(l + 1);
    std::iota(slot.begin(), slot.end(), 0);
    return extension_sum(Q, D, slot, l + 1);
}

SeriesRational hilbert_series_fc(const Poset& P, const ChainGradingSpec& spec) {
    auto [Q, D] = naturalized(P, spec.chain);
    if (spec.f.size() != D.length() + 1)
        throw error(errc::precondition_violated, "f must assign every chain prefix");
    for (int fi : spec.f)
        if (fi < 0 || fi > spec.m)
            throw error(errc::index_out_of_range, "f value outside [0,m]");
    return extension_sum(Q, D, spec.f, spec.m + 1);
}

namespace {

struct SigmaCounter {
    const Poset& P;
    std::vector<int> order;  // a linear extension of P (element values)
    std::vector<int> forced; // forced[v] = required sigma value, or -1
    std::vector<int> value;  // sigma values as they get assigned
    int bound;               // sigma(i) <= bound for all i

    Int count(std::size_t k) {
        if (k == order.size()) return 1;
        int v = order[k];
        int ub = bound;
        Mask preds = P.strict_down(v);
        while (preds) {
            int w = __builtin_ctzll(preds) + 1;
            preds &= preds - 1;
            ub = std::min(ub, value[w]); // order-reversing: sigma(w) >= sigma(v)
        }
        int lb = 0;
        Mask succs = P.strict_up(v);
        while (succs) {
            int w = __builtin_ctzll(succs) + 1;
            succs &= succs - 1;
            if (forced[w] >= 0) lb = std::max(lb, forced[w]);
        }
        Int total = 0;
        if (forced[v] >= 0) {
            if (forced[v] < lb || forced[v] > ub) return 0;
            value[v] = forced[v];
            total = count(k + 1);
        } else {
            for (int x = lb; x <= ub; ++x) {
                value[v] = x;
                total += count(k + 1);
            }
        }
        return total;
    }
};

} // namespace

Int hilbert_function_oracle_sigma(const Poset& P, const Chain& C,
                                  const std::vector<int>& a) {
    if (!is_chain(P, C.mask()))
        throw error(errc::not_a_chain, "C is not a chain of P");
    const int l = static_cast<int>(C.length());
    if (static_cast<int>(a.size()) != l + 1)
        throw error(errc::precondition_violated, "degree must have l+1 components");
    for (int x : a)
        if (x < 0) throw error(errc::precondition_violated, "degree components must be >= 0");
    const int s = std::accumulate(a.begin(), a.end(), 0);

    SigmaCounter counter{P, {}, std::vector<int>(P.size() + 1, -1),
                         std::vector<int>(P.size() + 1, 0), s};
    // sigma(c_j) = a_l + ... + a_j
    int suffix = 0;
    for (int j = l; j >= 1; --j) {
        suffix += a[j];
        counter.forced[C.elems[j - 1]] = suffix;
    }
    Relabeling r = natural_relabel(P); // any linear extension works here
    counter.order.reserve(P.size());
    for (int pos = 1; pos <= P.size(); ++pos) counter.order.push_back(r.to_old[pos]);
    return counter.count(0);
}

namespace {

Int multichain_count(const DistLattice& L, const Multigrading& g, int last_idx,
                     std::vector<int>& budget, int remaining) {
    if (remaining == 0) return 1;
    Int total = 0;
    const Mask last = last_idx < 0 ? 0 : L.ideal(last_idx);
    const int start = last_idx < 0 ? 0 : last_idx;
    for (int idx = start; idx < static_cast<int>(L.size()); ++idx) {
        Mask m = L.ideal(idx);
        if (last_idx >= 0 && (m & last) != last) continue; // must contain last
        int comp = g.component[idx];
        if (budget[comp] == 0) continue;
        --budget[comp];
        total += multichain_count(L, g, idx, budget, remaining - 1);
        ++budget[comp];
    }
    return total;
}

} // namespace

Int hilbert_function_oracle_multichain(const DistLattice& L, const Multigrading& g,
                                       const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != g.m + 1)
        throw error(errc::precondition_violated, "degree must have m+1 components");
    for (int x : a)
        if (x < 0) throw error(errc::precondition_violated, "degree components must be >= 0");
    std::vector<int> budget = a;
    const int total = std::accumulate(a.begin(), a.end(), 0);
    return multichain_count(L, g, -1, budget, total);
}

IntPolynomial k_polynomial(const Poset& P, const ChainGradingSpec& spec) {
    SeriesRational series = hilbert_series_fc(P, spec);
    DistLattice L = build_lattice(P);
    Multigrading g = grading_from_chain(L, spec);
    std::vector<int> target(spec.m + 1, 0);
    for (int comp : g.component) ++target[comp];
    return rescale_denominator(series, target);
}

IntPolynomial eulerian_polynomial(int r) {
    if (r < 0) throw error(errc::index_out_of_range, "r must be nonnegative");
    std::vector<IntPolynomial> A;
    A.push_back(IntPolynomial::constant(1, 1)); // A_0 = 1
    const IntPolynomial t = IntPolynomial::variable(1, 0);
    for (int n = 1; n <= r; ++n) {
        IntPolynomial next = A[n - 1];
        for (int k = 1; k <= n - 1; ++k) {
            IntPolynomial conv = A[k - 1] * A[n - k] * t;
            next += IntPolynomial::constant(1, binom(n - 1, k - 1)) * conv;
        }
        A.push_back(std::move(next));
    }
    return A[r];
}

namespace {

// Embeds a univariate polynomial into the 2-variable ring at slot var.
IntPolynomial embed2(const IntPolynomial& p, int var) {
    IntPolynomial out(2);
    for (const auto& [m, c] : p.terms()) {
        Monomial mm{std::vector<int>(2, 0)};
        mm.e[var] = m.e[0];
        out.add_term(std::move(mm), c);
    }
    return out;
}

} // namespace

SeriesRational antichain_series_closed_form(int n) {
    if (n < 1) throw error(errc::index_out_of_range, "n must be positive");
    SeriesRational acc = make_series(embed2(eulerian_polynomial(n - 1), 0),
                                     std::vector<int>{n, 1});
    const IntPolynomial t1 = IntPolynomial::variable(2, 1);
    for (int k = 1; k <= n - 1; ++k) {
        IntPolynomial num = IntPolynomial::constant(2, binom(n - 1, k - 1)) *
                            embed2(eulerian_polynomial(k - 1), 0) *
                            embed2(eulerian_polynomial(n - k), 1) * t1;
        acc = series_add(acc, make_series(std::move(num), std::vector<int>{k, n + 1 - k}));
    }
    return acc;
}

} // namespace hibi
