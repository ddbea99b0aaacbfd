#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hibi/errors.hpp"

namespace hibi {

using Int = mpz_class;

/// Exponent vector over the grading variables t_0..t_m.
struct Monomial {
    std::vector<int> e;

    int total() const {
        int s = 0;
        for (int x : e) s += x;
        return s;
    }
    bool operator==(const Monomial&) const = default;
};

/// Canonical term order: graded first, then lexicographically larger
/// exponent vector first. Map iteration yields the printing order.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int sa = a.total(), sb = b.total();
        if (sa != sb) return sa < sb;
        return std::lexicographical_compare(b.e.begin(), b.e.end(),
                                            a.e.begin(), a.e.end());
    }
};

/// Sparse multivariate polynomial with exact integer coefficients.
class IntPolynomial {
public:
    using TermMap = std::map<Monomial, Int, MonoLess>;

    explicit IntPolynomial(int nvars = 0) : nvars_(nvars) {}

    static IntPolynomial constant(int nvars, Int c);
    static IntPolynomial variable(int nvars, int i);
    static IntPolynomial one_minus_var(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Total degree of the highest term; -1 for the zero polynomial.
    int total_degree() const;
    /// Lowest total degree among terms; -1 for the zero polynomial.
    int min_total_degree() const;

    Int coeff(const std::vector<int>& exponents) const;
    void add_term(Monomial m, const Int& c);

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
        a += b;
        return a;
    }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
        a -= b;
        return a;
    }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }

private:
    int nvars_;
    TermMap terms_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_neg(const IntPolynomial& p);

/// (1 - t_i)^k, expanded.
IntPolynomial one_minus_power(int nvars, int i, int k);

/// Quotient p / (1 - t_i) when the division is exact, nullopt otherwise.
std::optional<IntPolynomial> exact_divide_one_minus(const IntPolynomial& p, int i);

/// numerator / prod_i (1 - t_i)^{denom_exps[i]} in canonical (fully
/// cancelled) form: the numerator is not divisible by any (1 - t_i)
/// with denom_exps[i] > 0.
struct SeriesRational {
    IntPolynomial numerator;
    std::vector<int> denom_exps;

    bool operator==(const SeriesRational&) const = default;
};

/// Builds the canonical form, cancelling (1 - t_i) factors.
SeriesRational make_series(IntPolynomial numerator, std::vector<int> denom_exps);

SeriesRational series_add(const SeriesRational& a, const SeriesRational& b);

/// Numerator rescaled to the given denominator exponents
/// (componentwise >= the canonical ones). Throws target_too_small.
IntPolynomial rescale_denominator(const SeriesRational& s,
                                  const std::vector<int>& target);

/// All power-series coefficients of total degree <= bound.
IntPolynomial::TermMap taylor_coefficients(const SeriesRational& s, int bound);

/// Per-variable image: t_target or 1 - t_target in the output ring.
struct VarImage {
    int target;
    bool one_minus = false;
};

IntPolynomial substitute_variables(const IntPolynomial& p,
                                   const std::vector<VarImage>& images,
                                   int out_nvars);

/// Collapses series variables along g (t_i -> t_{g[i]}), recanonicalized.
SeriesRational series_substitute(const SeriesRational& s,
                                 const std::vector<int>& g, int out_nvars);

/// Text form per the output grammar: graded-lex term order, explicit
/// signs, `^` powers, `*` between factors, variables t0..tm.
std::string text_form(const IntPolynomial& p, const std::string& var = "t");
std::string text_form(const SeriesRational& s, const std::string& var = "t");

} // namespace hibi
