#pragma once

// Terminating hypergeometric series at unit argument and the Andrews
// multi-sum transformation with its m = 1 (Whipple) case.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperharm/exact_arith.hpp"
#include "hyperharm/rational.hpp"
#include "hyperharm/report.hpp"
#include "hyperharm/simplex.hpp"

namespace hyperharm {

/// sum_{k=0}^{terms} prod (a)_k / (k! prod (b)_k) z^k. The k! factor is
/// implicit: denom lists only the b parameters.
template <Scalar S>
struct SeriesSpec {
    std::vector<S> numer;
    std::vector<S> denom;
    S argument{1L};
    long terms = 0;
};

template <Scalar S>
S eval_terminating_series(const SeriesSpec<S>& spec) {
    if (spec.terms < 0)
        throw std::invalid_argument("eval_terminating_series: negative term count");
    bool terminates = false;
    for (const S& a : spec.numer)
        terminates = terminates || value_part(a) == Rational(-spec.terms);
    if (!terminates)
        throw std::invalid_argument("eval_terminating_series: no numerator parameter equals -terms");

    S term(1L);
    S sum(1L);
    for (long k = 0; k < spec.terms; ++k) {
        S num = spec.argument;
        for (const S& a : spec.numer)
            num = num * (a + S(k));
        S den(k + 1);
        for (const S& b : spec.denom) {
            const S factor = b + S(k);
            if (value_part(factor).is_zero()) {
                throw ZeroDenominatorFactor("series denominator parameter " + value_part(b).to_string() +
                                            " vanishes at offset " + std::to_string(k));
            }
            den = den * factor;
        }
        term = term * num / den;
        sum = sum + term;
    }
    return sum;
}

/// One instance of the Andrews transformation: a, P_1..P_{2m+2}, n, m.
template <Scalar S>
struct AndrewsInstance {
    S a;
    std::vector<S> P;
    long n = 0;
    long m = 1;

    void validate() const {
        if (m < 1)
            throw std::invalid_argument("AndrewsInstance: m must be >= 1");
        if (n < 0)
            throw std::invalid_argument("AndrewsInstance: n must be >= 0");
        if (P.size() != static_cast<std::size_t>(2 * m + 2))
            throw std::invalid_argument("AndrewsInstance: need 2m+2 parameters P");
    }

    /// P_s with the 1-based index used in the formulas.
    const S& p(long s) const { return P[static_cast<std::size_t>(s - 1)]; }
};

/// Left side: the very-well-poised _{2m+5}F_{2m+4} series at z = 1.
template <Scalar S>
S andrews_lhs(const AndrewsInstance<S>& inst) {
    inst.validate();
    const S one(1L);
    const S half_a = inst.a / S(2L);
    SeriesSpec<S> spec;
    spec.terms = inst.n;
    spec.numer = {inst.a, one + half_a};
    spec.denom = {half_a};
    for (const S& p : inst.P) {
        spec.numer.push_back(p);
        spec.denom.push_back(one + inst.a - p);
    }
    spec.numer.push_back(S(-inst.n));
    spec.denom.push_back(one + inst.a + S(inst.n));
    return eval_terminating_series(spec);
}

/// Right side: Pochhammer prefactor times the simplex multi-sum over
/// 0 <= i_1 <= ... <= i_m <= n (i_{m+1} = n).
template <Scalar S>
S andrews_rhs(const AndrewsInstance<S>& inst) {
    inst.validate();
    const long m = inst.m;
    const long n = inst.n;
    const S one(1L);
    const S& a = inst.a;
    const S last = inst.p(2 * m + 1);
    const S final = inst.p(2 * m + 2);
    S prefactor;
    try {
        prefactor = pochhammer_ratio<S>({one + a, one + a - last - final}, {one + a - last, one + a - final}, n);
    } catch (const ZeroDenominatorFactor& e) {
        throw e.with_context("andrews prefactor");
    }

    S sum(0L);
    for_each_simplex_point(m, n, [&](std::span<const long> idx) {
        S term(1L);
        for (long r = 1; r <= m; ++r) {
            const long ir = idx[r - 1];
            const long next = idx[r];
            const S& p1 = inst.p(2 * r - 1);
            const S& p2 = inst.p(2 * r);
            const S& p3 = inst.p(2 * r + 1);
            const S& p4 = inst.p(2 * r + 2);
            try {
                term = term * pochhammer_ratio<S>({S(-next), p3, p4, one + a - p1 - p2},
                                                  {one, p3 + p4 - a - S(next), one + a - p1, one + a - p2}, ir);
            } catch (const ZeroDenominatorFactor& e) {
                std::ostringstream where;
                where << "andrews bracket r=" << r << " at simplex point (";
                for (long j = 0; j < m; ++j)
                    where << (j ? "," : "") << idx[j];
                where << ")";
                throw e.with_context(where.str());
            }
        }
        sum = sum + term;
    });
    return prefactor * sum;
}

/// Whipple's 7F6 side (identical to the m = 1 Andrews left side).
template <Scalar S>
S whipple_lhs(const S& a, const std::vector<S>& P, long n) {
    return andrews_lhs(AndrewsInstance<S>{a, P, n, 1});
}

/// Whipple's prefactored 4F3 side, evaluated as an ordinary series.
template <Scalar S>
S whipple_rhs(const S& a, const std::vector<S>& P, long n) {
    if (P.size() != 4)
        throw std::invalid_argument("whipple_rhs: need exactly 4 parameters");
    const S one(1L);
    const S prefactor = pochhammer_ratio<S>({one + a, one + a - P[2] - P[3]}, {one + a - P[2], one + a - P[3]}, n);
    SeriesSpec<S> spec;
    spec.terms = n;
    spec.numer = {S(-n), P[2], P[3], one + a - P[0] - P[1]};
    spec.denom = {P[2] + P[3] - a - S(n), one + a - P[0], one + a - P[1]};
    return prefactor * eval_terminating_series(spec);
}

/// Both Whipple sides evaluated independently; inapplicable on a zero factor.
Report whipple_verify(const Rational& a, const std::vector<Rational>& P, long n);

/// Both Andrews sides; inapplicable on a zero factor.
Report andrews_verify(const AndrewsInstance<Rational>& inst);

} // namespace hyperharm
