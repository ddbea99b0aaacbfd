#include "hibi/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace hibi {

namespace {

void require_same_vars(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.nvars() != q.nvars())
        throw error(errc::variable_count_mismatch,
                    "polynomials live in different variable counts");
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

IntPolynomial IntPolynomial::constant(int nvars, Int c) {
    IntPolynomial p(nvars);
    p.add_term(Monomial{std::vector<int>(nvars, 0)}, c);
    return p;
}

IntPolynomial IntPolynomial::variable(int nvars, int i) {
    IntPolynomial p(nvars);
    Monomial m{std::vector<int>(nvars, 0)};
    m.e[i] = 1;
    p.add_term(std::move(m), 1);
    return p;
}

IntPolynomial IntPolynomial::one_minus_var(int nvars, int i) {
    IntPolynomial p = constant(nvars, 1);
    Monomial m{std::vector<int>(nvars, 0)};
    m.e[i] = 1;
    p.add_term(std::move(m), -1);
    return p;
}

int IntPolynomial::total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.total();
}

int IntPolynomial::min_total_degree() const {
    return terms_.empty() ? -1 : terms_.begin()->first.total();
}

Int IntPolynomial::coeff(const std::vector<int>& exponents) const {
    auto it = terms_.find(Monomial{exponents});
    return it == terms_.end() ? Int(0) : it->second;
}

void IntPolynomial::add_term(Monomial m, const Int& c) {
    if (c == 0) return;
    assert(static_cast<int>(m.e.size()) == nvars_);
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    require_same_vars(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    require_same_vars(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    require_same_vars(a, b);
    IntPolynomial out(a.nvars());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma;
            for (int v = 0; v < out.nvars(); ++v) m.e[v] += mb.e[v];
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial out(nvars_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) { return p + q; }
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }
IntPolynomial poly_neg(const IntPolynomial& p) { return -p; }

IntPolynomial one_minus_power(int nvars, int i, int k) {
    IntPolynomial out(nvars);
    for (int j = 0; j <= k; ++j) {
        Monomial m{std::vector<int>(nvars, 0)};
        m.e[i] = j;
        Int c = binom(k, j);
        if (j % 2) c = -c;
        out.add_term(std::move(m), c);
    }
    return out;
}

std::optional<IntPolynomial> exact_divide_one_minus(const IntPolynomial& p, int i) {
    if (i < 0 || i >= p.nvars())
        throw error(errc::index_out_of_range, "variable index outside the ring");
    if (p.is_zero()) return IntPolynomial(p.nvars());
    // Group terms by the exponent of t_i; coefficients are polynomials in
    // the remaining variables (kept at full width with e[i] = 0).
    std::map<int, IntPolynomial::TermMap> buckets;
    int top = 0;
    for (const auto& [m, c] : p.terms()) {
        Monomial reduced = m;
        int k = reduced.e[i];
        reduced.e[i] = 0;
        buckets[k].emplace(std::move(reduced), c);
        top = std::max(top, k);
    }
    if (top == 0) return std::nullopt; // nonzero and free of t_i
    // Synthetic division: with p = sum c_k t_i^k and quotient q of degree
    // top-1, the coefficients satisfy q_{top-1} = -c_top,
    // q_{k-1} = q_k - c_k, and the remainder is c_0 - q_0.
    auto sub_into = [](IntPolynomial::TermMap& acc, const IntPolynomial::TermMap& d) {
        for (const auto& [m, c] : d) {
            auto [it, inserted] = acc.emplace(m, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second == 0) acc.erase(it);
            }
        }
    };
    IntPolynomial quotient(p.nvars());
    IntPolynomial::TermMap cur; // starts as -c_top = q_{top-1}
    sub_into(cur, buckets[top]);
    for (int k = top - 1; k >= 0; --k) {
        // cur currently holds q_k
        for (const auto& [m, c] : cur) {
            Monomial mm = m;
            mm.e[i] = k;
            quotient.add_term(std::move(mm), c);
        }
        if (k >= 1) {
            auto it = buckets.find(k);
            if (it != buckets.end()) sub_into(cur, it->second); // q_{k-1} = q_k - c_k
        }
    }
    // cur now holds q_0; the division is exact iff c_0 - q_0 vanishes
    IntPolynomial::TermMap rem = buckets.count(0) ? buckets[0] : IntPolynomial::TermMap{};
    sub_into(rem, cur);
    if (!rem.empty()) return std::nullopt;
    return quotient;
}

SeriesRational make_series(IntPolynomial numerator, std::vector<int> denom_exps) {
    if (static_cast<int>(denom_exps.size()) != numerator.nvars())
        throw error(errc::variable_count_mismatch,
                    "denominator exponent count differs from variable count");
    if (numerator.is_zero())
        return SeriesRational{std::move(numerator),
                              std::vector<int>(denom_exps.size(), 0)};
    for (std::size_t i = 0; i < denom_exps.size(); ++i) {
        while (denom_exps[i] > 0) {
            auto q = exact_divide_one_minus(numerator, static_cast<int>(i));
            if (!q) break;
            numerator = std::move(*q);
            --denom_exps[i];
        }
    }
    return SeriesRational{std::move(numerator), std::move(denom_exps)};
}

SeriesRational series_add(const SeriesRational& a, const SeriesRational& b) {
    if (a.numerator.nvars() != b.numerator.nvars())
        throw error(errc::variable_count_mismatch,
                    "series live in different variable counts");
    const int nv = a.numerator.nvars();
    std::vector<int> target(nv);
    for (int i = 0; i < nv; ++i)
        target[i] = std::max(a.denom_exps[i], b.denom_exps[i]);
    IntPolynomial num = rescale_denominator(a, target);
    num += rescale_denominator(b, target);
    return make_series(std::move(num), std::move(target));
}

IntPolynomial rescale_denominator(const SeriesRational& s,
                                  const std::vector<int>& target) {
    const int nv = s.numerator.nvars();
    if (static_cast<int>(target.size()) != nv)
        throw error(errc::variable_count_mismatch,
                    "target exponent count differs from variable count");
    IntPolynomial num = s.numerator;
    for (int i = 0; i < nv; ++i) {
        if (target[i] < s.denom_exps[i])
            throw error(errc::target_too_small,
                        "target denominator below canonical exponents");
        if (int diff = target[i] - s.denom_exps[i]; diff > 0)
            num = num * one_minus_power(nv, i, diff);
    }
    return num;
}

namespace {

void taylor_rec(const SeriesRational& s, const Monomial& base, const Int& coeff,
                int var, int budget, Monomial& scratch,
                IntPolynomial::TermMap& out) {
    const int nv = s.numerator.nvars();
    if (var == nv) {
        Monomial m = scratch;
        auto [it, inserted] = out.emplace(std::move(m), coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
        }
        return;
    }
    const int d = s.denom_exps[var];
    if (d == 0) {
        scratch.e[var] = base.e[var];
        taylor_rec(s, base, coeff, var + 1, budget, scratch, out);
        return;
    }
    // 1/(1-t)^d = sum_k binom(k+d-1, d-1) t^k
    for (int k = 0; k <= budget; ++k) {
        scratch.e[var] = base.e[var] + k;
        taylor_rec(s, base, coeff * binom(k + d - 1, d - 1), var + 1,
                   budget - k, scratch, out);
    }
}

} // namespace

IntPolynomial::TermMap taylor_coefficients(const SeriesRational& s, int bound) {
    IntPolynomial::TermMap out;
    const int nv = s.numerator.nvars();
    Monomial scratch{std::vector<int>(nv, 0)};
    for (const auto& [m, c] : s.numerator.terms()) {
        int used = m.total();
        if (used > bound) continue;
        taylor_rec(s, m, c, 0, bound - used, scratch, out);
    }
    return out;
}

IntPolynomial substitute_variables(const IntPolynomial& p,
                                   const std::vector<VarImage>& images,
                                   int out_nvars) {
    if (static_cast<int>(images.size()) != p.nvars())
        throw error(errc::variable_count_mismatch,
                    "one image required per variable");
    for (const auto& im : images)
        if (im.target < 0 || im.target >= out_nvars)
            throw error(errc::index_out_of_range, "image variable outside output ring");
    IntPolynomial out(out_nvars);
    for (const auto& [m, c] : p.terms()) {
        IntPolynomial term = IntPolynomial::constant(out_nvars, c);
        Monomial direct{std::vector<int>(out_nvars, 0)};
        for (int v = 0; v < p.nvars(); ++v) {
            if (m.e[v] == 0) continue;
            if (images[v].one_minus)
                term = term * one_minus_power(out_nvars, images[v].target, m.e[v]);
            else
                direct.e[images[v].target] += m.e[v];
        }
        for (const auto& [tm, tc] : term.terms()) {
            Monomial mm = tm;
            for (int v = 0; v < out_nvars; ++v) mm.e[v] += direct.e[v];
            out.add_term(std::move(mm), tc);
        }
    }
    return out;
}

SeriesRational series_substitute(const SeriesRational& s,
                                 const std::vector<int>& g, int out_nvars) {
    const int nv = s.numerator.nvars();
    if (static_cast<int>(g.size()) != nv)
        throw error(errc::variable_count_mismatch, "one target per variable");
    std::vector<VarImage> images(nv);
    std::vector<int> denom(out_nvars, 0);
    for (int i = 0; i < nv; ++i) {
        images[i] = VarImage{g[i], false};
        if (g[i] < 0 || g[i] >= out_nvars)
            throw error(errc::index_out_of_range, "image variable outside output ring");
        denom[g[i]] += s.denom_exps[i];
    }
    return make_series(substitute_variables(s.numerator, images, out_nvars),
                       std::move(denom));
}

std::string text_form(const IntPolynomial& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string factors;
        for (std::size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += var + std::to_string(v);
            if (m.e[v] > 1) factors += "^" + std::to_string(m.e[v]);
        }
        if (factors.empty()) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << factors;
        } else {
            os << mag.get_str() << "*" << factors;
        }
    }
    return os.str();
}

std::string text_form(const SeriesRational& s, const std::string& var) {
    std::ostringstream os;
    os << "(" << text_form(s.numerator, var) << ")";
    std::string denom;
    for (std::size_t i = 0; i < s.denom_exps.size(); ++i) {
        if (s.denom_exps[i] == 0) continue;
        denom += "(1-" + var + std::to_string(i) + ")";
        if (s.denom_exps[i] > 1) denom += "^" + std::to_string(s.denom_exps[i]);
    }
    if (!denom.empty()) os << " / " << denom;
    return os.str();
}

} // namespace hibi
