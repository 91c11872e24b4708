#pragma once

// Harmonic number identities obtained by differentiating the Andrews
// transformation: the x-dependent identity, the general theorem, its m = 1, 2
// specializations, the Chu-Donno examples a..o and the Paule-Schneider sums
// T_n^(u).

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperharm/dual.hpp"
#include "hyperharm/exact_arith.hpp"
#include "hyperharm/rational.hpp"
#include "hyperharm/report.hpp"
#include "hyperharm/simplex.hpp"

namespace hyperharm {

/// (m, v, n, P_1..P_{2m+2}) with nonnegative integer P_s. The first v
/// parameters enter as T_s = 1 + P_s, the rest as T_s = -n - P_s.
struct IdentityInstance {
    long m = 1;
    long v = 0;
    long n = 0;
    std::vector<long> P;

    void validate() const;
    long p(long s) const { return P[static_cast<std::size_t>(s - 1)]; }
    long T(long s) const { return s <= v ? 1 + p(s) : -n - p(s); }
    std::span<const long> k_type() const { return {P.data(), static_cast<std::size_t>(v)}; }
    std::span<const long> n_type() const {
        return {P.data() + v, P.size() - static_cast<std::size_t>(v)};
    }
};

/// Sum_k C(n,k)^2 prod_{X in k_type} C(k+X,k)/C(n+X,k)
///     prod_{X in n_type} C(n+X,k)/C(k+X,k)
///     {1 + (n-2k)(2H_k - sum_{k_type} H_{k+X} + sum_{n_type} H_{k+X})}.
Rational harmonic_weighted_sum(long n, std::span<const long> k_type, std::span<const long> n_type);

/// Both sides of the x-dependent identity, before differentiation. At
/// x = seed_x() the eps parts are the two sides of the theorem.
template <Scalar S>
std::pair<S, S> pre_identity_eval(const IdentityInstance& inst, const S& x) {
    inst.validate();
    const long n = inst.n;
    const long m = inst.m;
    const S one(1L);
    const S xn = x + S(n);

    S lhs(0L);
    for (long k = 0; k <= n; ++k) {
        S term = S(binomial_general(Rational(n), k)) * (xn - S(2 * k)) * binomial_general(xn, k) /
                 binomial_nonzero(S(k) - x, k);
        for (long s = 1; s <= inst.v; ++s)
            term = term * S(binomial_general(Rational(k + inst.p(s)), k)) / binomial_nonzero(xn + S(inst.p(s)), k);
        for (long s = inst.v + 1; s <= 2 * m + 2; ++s)
            term = term * S(binomial_general(Rational(n + inst.p(s)), k)) /
                   binomial_nonzero(S(k + inst.p(s)) - x, k);
        lhs = lhs + term;
    }

    auto T = [&](long s) { return S(inst.T(s)); };
    const S base = one - xn;  // 1 - x - n
    const S prefactor = pochhammer_ratio<S>({-xn, base - T(2 * m + 1) - T(2 * m + 2)},
                                            {base - T(2 * m + 1), base - T(2 * m + 2)}, n);
    S sum(0L);
    for_each_simplex_point(m, n, [&](std::span<const long> idx) {
        S term(1L);
        for (long r = 1; r <= m; ++r) {
            const long next = idx[r];
            term = term * pochhammer_ratio<S>({S(-next), T(2 * r + 1), T(2 * r + 2), base - T(2 * r - 1) - T(2 * r)},
                                              {one, T(2 * r + 1) + T(2 * r + 2) + xn - S(next), base - T(2 * r - 1),
                                               base - T(2 * r)},
                                              idx[r - 1]);
        }
        sum = sum + term;
    });
    return {lhs, x * prefactor * sum};
}

/// Left side of the general theorem.
Rational theorem_lhs(const IdentityInstance& inst);

/// Right side of the general theorem: prefactor times the simplex multi-sum.
/// Throws ZeroDenominatorFactor on an inapplicable instance.
Rational theorem_rhs(const IdentityInstance& inst);

/// The 4F3 forms of the right side for m = 1 and m = 2.
Rational proposition_rhs(const IdentityInstance& inst);

/// The m = 1 identity with P_s replaced by n P_s; lhs vs the 4F3 right side.
Report corollary_instance(long v, long n, const std::vector<long>& P);

/// Number of free parameters of an example: 2 (a..c), 4 (d..h), 6 (i..o).
std::size_t example_arity(char id);

/// Both printed sides of example a..o. Parameters of a..h are scaled by n.
std::pair<Rational, Rational> example_sides(char id, const std::vector<long>& params, long n);

/// example_sides wrapped in a Report (family "example:<id>").
Report example_eval(char id, const std::vector<long>& params, long n);

/// T_n^(u) for u != 0.
struct TSpec {
    long u = 1;
    long n = 0;
};

/// Sum_k C(n,k)^u {1 + u(n-2k)H_k}.
Rational t_direct(const TSpec& spec);

/// Closed form (har-a .. har-f style) or multi-sum form selected by u.
Rational t_closed(const TSpec& spec);

/// The eight closed forms, u in {-2, -1, 1, 2, 3, 4, 5, 6}.
Rational t_known_form(long u, long n);

/// Multi-sum right sides for u = 2m+3, 2m+4, 1-2m and -2m respectively.
Rational t_odd_positive(long m, long n);
Rational t_even_positive(long m, long n);
Rational t_odd_negative(long m, long n);
Rational t_even_negative(long m, long n);

} // namespace hyperharm
