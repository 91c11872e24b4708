#include "hyperharm/identities.hpp"

#include <string>

#include "hyperharm/hyperg.hpp"

namespace hyperharm {

namespace {

Rational C(long a, long k) { return binomial_general(Rational(a), k); }

/// Binomial that appears as a divisor.
Rational Cd(long a, long k) { return binomial_nonzero(Rational(a), k); }

Rational H(long n) { return harmonic(n); }

Rational sgn(long n) { return sign_power<Rational>(n); }

Rational sum_range(long first, long last, auto&& term) {
    Rational s(0);
    for (long i = first; i <= last; ++i)
        s += term(i);
    return s;
}

Json long_list(const std::vector<long>& xs) {
    Json arr = Json::array();
    for (long x : xs)
        arr.push_back(x);
    return arr;
}

} // namespace

void IdentityInstance::validate() const {
    if (m < 1)
        throw std::invalid_argument("IdentityInstance: m must be >= 1");
    if (v < 0 || v > 2 * m + 2)
        throw std::invalid_argument("IdentityInstance: v must lie in [0, 2m+2]");
    if (n < 0)
        throw std::invalid_argument("IdentityInstance: n must be >= 0");
    if (P.size() != static_cast<std::size_t>(2 * m + 2))
        throw std::invalid_argument("IdentityInstance: need 2m+2 parameters P");
    for (long x : P)
        if (x < 0)
            throw std::invalid_argument("IdentityInstance: P_s must be nonnegative");
}

Rational harmonic_weighted_sum(long n, std::span<const long> k_type, std::span<const long> n_type) {
    Rational total(0);
    for (long k = 0; k <= n; ++k) {
        Rational weight = C(n, k) * C(n, k);
        Rational h = Rational(2) * H(k);
        for (long x : k_type) {
            weight *= C(k + x, k) / C(n + x, k);
            h -= H(k + x);
        }
        for (long x : n_type) {
            weight *= C(n + x, k) / C(k + x, k);
            h += H(k + x);
        }
        total += weight * (Rational(1) + Rational(n - 2 * k) * h);
    }
    return total;
}

Rational theorem_lhs(const IdentityInstance& inst) {
    inst.validate();
    return harmonic_weighted_sum(inst.n, inst.k_type(), inst.n_type());
}

Rational theorem_rhs(const IdentityInstance& inst) {
    inst.validate();
    const long n = inst.n;
    const long m = inst.m;
    auto T = [&](long s) { return Rational(inst.T(s)); };
    const Rational base(1 - n);

    Rational prefactor;
    try {
        prefactor = pochhammer_ratio<Rational>({Rational(-n), base - T(2 * m + 1) - T(2 * m + 2)},
                                               {base - T(2 * m + 1), base - T(2 * m + 2)}, n);
    } catch (const ZeroDenominatorFactor& e) {
        throw e.with_context("theorem prefactor");
    }

    Rational sum(0);
    for_each_simplex_point(m, n, [&](std::span<const long> idx) {
        Rational term(1);
        for (long r = 1; r <= m; ++r) {
            const long next = idx[r];
            try {
                term *= pochhammer_ratio<Rational>(
                    {Rational(-next), T(2 * r + 1), T(2 * r + 2), base - T(2 * r - 1) - T(2 * r)},
                    {Rational(1), T(2 * r + 1) + T(2 * r + 2) + Rational(n - next), base - T(2 * r - 1),
                     base - T(2 * r)},
                    idx[r - 1]);
            } catch (const ZeroDenominatorFactor& e) {
                std::string where = "theorem bracket r=" + std::to_string(r) + " at simplex point (";
                for (long j = 0; j < m; ++j)
                    where += (j ? "," : "") + std::to_string(idx[j]);
                throw e.with_context(where + ")");
            }
        }
        sum += term;
    });
    return prefactor * sum;
}

Rational proposition_rhs(const IdentityInstance& inst) {
    inst.validate();
    if (inst.m != 1 && inst.m != 2)
        throw std::invalid_argument("proposition_rhs: m must be 1 or 2");
    const long n = inst.n;
    auto T = [&](long s) { return Rational(inst.T(s)); };
    const Rational base(1 - n);
    const long hi = 2 * inst.m + 1;

    const Rational prefactor =
        pochhammer_ratio<Rational>({Rational(-n), base - T(hi) - T(hi + 1)}, {base - T(hi), base - T(hi + 1)}, n);

    // 4F3(-i, T3, T4, 1-n-T1-T2; T3+T4+n-i, 1-n-T1, 1-n-T2).
    auto inner = [&](long i) {
        SeriesSpec<Rational> spec;
        spec.terms = i;
        spec.numer = {Rational(-i), T(3), T(4), base - T(1) - T(2)};
        spec.denom = {T(3) + T(4) + Rational(n - i), base - T(1), base - T(2)};
        return eval_terminating_series(spec);
    };

    if (inst.m == 1)
        return prefactor * inner(n);

    return prefactor * sum_range(0, n, [&](long i) {
        return pochhammer_ratio<Rational>({Rational(-n), T(5), T(6), base - T(3) - T(4)},
                                          {Rational(1), T(5) + T(6), base - T(3), base - T(4)}, i) *
               inner(i);
    });
}

Report corollary_instance(long v, long n, const std::vector<long>& P) {
    Json params;
    params["v"] = v;
    params["n"] = n;
    params["P"] = long_list(P);
    if (P.size() != 4)
        throw std::invalid_argument("corollary_instance: need 4 parameters");
    IdentityInstance inst{1, v, n, {}};
    for (long x : P)
        inst.P.push_back(n * x);
    return guarded("corollary", params,
                   [&] { return compared("corollary", params, theorem_lhs(inst), proposition_rhs(inst)); });
}

std::size_t example_arity(char id) {
    if (id >= 'a' && id <= 'c') return 2;
    if (id >= 'd' && id <= 'h') return 4;
    if (id >= 'i' && id <= 'o') return 6;
    throw std::invalid_argument(std::string("unknown example id '") + id + "'");
}

std::pair<Rational, Rational> example_sides(char id, const std::vector<long>& params, long n) {
    if (params.size() != example_arity(id))
        throw std::invalid_argument(std::string("example ") + id + ": wrong number of parameters");
    if (n < 0)
        throw std::invalid_argument("example: n must be >= 0");
    for (long x : params)
        if (x < 0)
            throw std::invalid_argument("example: parameters must be nonnegative");

    // Examples a..h are written in terms of bn, cn, ...
    std::vector<long> q = params;
    if (id <= 'h')
        for (long& x : q)
            x *= n;
    q.resize(6, 0);
    const long b = q[0], c = q[1], d = q[2], e = q[3], f = q[4], g = q[5];

    auto lhs = [&](std::vector<long> k_type, std::vector<long> n_type) {
        return harmonic_weighted_sum(n, k_type, n_type);
    };
    const Rational denom_bc = C(n + b, n) * C(n + c, n);
    auto pre_plain = [&] { return C(1 + b + c + n, n) / denom_bc; };
    auto pre_diff = [&] { return sgn(n) * C(b - c, n) / denom_bc; };
    auto pre_sum = [&] { return sgn(n) * C(2 * n + b + c, n) / denom_bc; };

    // Inner sums of examples i..o.
    auto inner_i = [&](long i) {
        return sum_range(0, i, [&](long j) {
            return C(i, j) * C(j + d, j) * C(j + e, j) * C(1 + f + g + n, j) /
                   (C(n + f, j) * C(n + g, j) * Cd(1 + d + e + n - i + j, j));
        });
    };
    auto inner_j = [&](long i) {
        return sum_range(0, i, [&](long j) {
            return sgn(j) * C(i, j) * C(j + d, j) * C(j + e, j) * C(f - g, j) /
                   (C(n + f, j) * C(j + g, j) * Cd(1 + d + e + n - i + j, j));
        });
    };
    auto inner_k = [&](long i) {
        return sum_range(0, i, [&](long j) {
            return sgn(j) * C(i, j) * C(j + d, j) * C(j + e, j) * C(n + f + g + j, j) /
                   (C(j + f, j) * C(j + g, j) * Cd(1 + d + e + n - i + j, j));
        });
    };
    auto inner_l = [&](long i) {
        return sum_range(0, i, [&](long j) {
            return C(i, j) * C(j + d, j) * C(n + e, j) * C(j + f + g + n, j) /
                   (C(j + f, j) * C(j + g, j) * Cd(j + d - e - i, j));
        });
    };
    auto inner_mno = [&](long i) {
        return sum_range(0, i, [&](long j) {
            return C(i, j) * C(n + d, j) * C(n + e, j) * C(j + f + g + n, j) /
                   (C(j + f, j) * C(j + g, j) * Cd(i + d + e + n, j));
        });
    };
    // Outer sum shared by examples i, j, k.
    auto outer_ijk = [&](auto&& inner) {
        return sum_range(0, n, [&](long i) {
            return C(n, i) * C(i + b, i) * C(i + c, i) * C(1 + d + e + n, i) /
                   (C(n + d, i) * C(n + e, i) * Cd(1 + b + c + i, i)) * inner(i);
        });
    };

    switch (id) {
    case 'a':
        return {lhs({b, c}, {}), pre_plain()};
    case 'b':
        return {lhs({b}, {c}), pre_diff()};
    case 'c':
        return {lhs({}, {b, c}), pre_sum()};
    case 'd':
        return {lhs({b, c, d, e}, {}), pre_plain() * sum_range(0, n, [&](long i) {
                    return C(n, i) * C(i + b, i) * C(i + c, i) * C(1 + d + e + n, i) /
                           (C(n + d, i) * C(n + e, i) * Cd(1 + b + c + i, i));
                })};
    case 'e':
        return {lhs({b, c, d}, {e}), pre_plain() * sum_range(0, n, [&](long i) {
                    return sgn(i) * C(n, i) * C(i + b, i) * C(i + c, i) * C(d - e, i) /
                           (C(n + d, i) * C(i + e, i) * Cd(1 + b + c + i, i));
                })};
    case 'f':
        return {lhs({b, c}, {d, e}), pre_plain() * sum_range(0, n, [&](long i) {
                    return sgn(i) * C(n, i) * C(i + b, i) * C(i + c, i) * C(n + d + e + i, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(1 + b + c + i, i));
                })};
    case 'g':
        return {lhs({b}, {c, d, e}), pre_diff() * sum_range(0, n, [&](long i) {
                    return C(n, i) * C(i + b, i) * C(n + c, i) * C(i + d + e + n, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(i + b - c - n, i));
                })};
    case 'h':
        return {lhs({}, {b, c, d, e}), pre_sum() * sum_range(0, n, [&](long i) {
                    return C(n, i) * C(n + b, i) * C(n + c, i) * C(n + d + e + i, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(2 * n + b + c, i));
                })};
    case 'i':
        return {lhs({b, c, d, e, f, g}, {}), pre_plain() * outer_ijk(inner_i)};
    case 'j':
        return {lhs({b, c, d, e, f}, {g}), pre_plain() * outer_ijk(inner_j)};
    case 'k':
        return {lhs({b, c, d, e}, {f, g}), pre_plain() * outer_ijk(inner_k)};
    case 'l':
        return {lhs({b, c, d}, {e, f, g}), pre_plain() * sum_range(0, n, [&](long i) {
                    return sgn(i) * C(n, i) * C(i + b, i) * C(i + c, i) * C(d - e, i) /
                           (C(n + d, i) * C(i + e, i) * Cd(1 + b + c + i, i)) * inner_l(i);
                })};
    case 'm':
        return {lhs({b, c}, {d, e, f, g}), pre_plain() * sum_range(0, n, [&](long i) {
                    return sgn(i) * C(n, i) * C(i + b, i) * C(i + c, i) * C(i + d + e + n, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(i + b + c + 1, i)) * inner_mno(i);
                })};
    case 'n':
        return {lhs({b}, {c, d, e, f, g}), pre_diff() * sum_range(0, n, [&](long i) {
                    return C(n, i) * C(i + b, i) * C(n + c, i) * C(i + d + e + n, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(i + b - c - n, i)) * inner_mno(i);
                })};
    case 'o':
        return {lhs({}, {b, c, d, e, f, g}), pre_sum() * sum_range(0, n, [&](long i) {
                    return C(n, i) * C(n + b, i) * C(n + c, i) * C(i + d + e + n, i) /
                           (C(i + d, i) * C(i + e, i) * Cd(2 * n + b + c, i)) * inner_mno(i);
                })};
    default:
        throw std::invalid_argument(std::string("unknown example id '") + id + "'");
    }
}

Report example_eval(char id, const std::vector<long>& params, long n) {
    static constexpr const char* names[] = {"b", "c", "d", "e", "f", "g"};
    const std::string family = std::string("example:") + id;
    Json p;
    for (std::size_t i = 0; i < params.size() && i < 6; ++i)
        p[names[i]] = params[i];
    p["n"] = n;
    return guarded(family, p, [&] {
        auto [l, r] = example_sides(id, params, n);
        return compared(family, p, std::move(l), std::move(r));
    });
}

Rational t_direct(const TSpec& spec) {
    if (spec.u == 0)
        throw std::invalid_argument("t_direct: u must be nonzero");
    const long n = spec.n;
    return sum_range(0, n, [&](long k) {
        return pow(C(n, k), spec.u) * (Rational(1) + Rational(spec.u * (n - 2 * k)) * H(k));
    });
}

Rational t_known_form(long u, long n) {
    switch (u) {
    case -2:
        return Rational(2) * Rational((1 + n) * (1 + n), 2 + n) * H(n + 1);
    case -1:
        return Rational(1 + n) * H(n + 1);
    case 1:
        return Rational(1);
    case 2:
        // (-1)^n C(0, n): zero for n >= 1, and 1 at n = 0 where T_0^(2) = 1.
        return sgn(n) * C(0, n);
    case 3:
        return sgn(n);
    case 4:
        return sgn(n) * C(2 * n, n);
    case 5:
        return sgn(n) * sum_range(0, n, [&](long i) { return C(n, i) * C(n, i) * C(n + i, n); });
    case 6:
        return sgn(n) * sum_range(0, n, [&](long i) { return C(n, i) * C(n, i) * C(n + i, n) * C(2 * n - i, n); });
    default:
        throw std::invalid_argument("t_known_form: no closed form for u = " + std::to_string(u));
    }
}

Rational t_odd_positive(long m, long n) {
    Rational sum(0);
    for_each_simplex_point(m, n, [&](std::span<const long> i) {
        // i[r-1] is i_r.
        sum += C(n, i[m - 1]) * C(n, i[m - 1]) * C(n + i[0], n) * product_range<Rational>(1, m - 1, [&](long r) {
                   return C(n, i[r - 1]) * C(n, i[r - 1]) * C(n + i[r] - i[r - 1], n);
               });
    });
    return sgn(n) * sum;
}

Rational t_even_positive(long m, long n) {
    Rational sum(0);
    for_each_simplex_point(m, n, [&](std::span<const long> i) {
        sum += C(n + i[0], n) * product_range<Rational>(1, m, [&](long r) {
                   return C(n, i[r - 1]) * C(n, i[r - 1]) * C(n + i[r] - i[r - 1], n);
               });
    });
    return sgn(n) * sum;
}

Rational t_odd_negative(long m, long n) {
    Rational sum(0);
    for_each_simplex_point(m, n, [&](std::span<const long> i) {
        sum += Rational(1) / Rational(1 + n - i[0]) * product_range<Rational>(1, m - 1, [&](long r) {
                   const long ir = i[r - 1];
                   const long next = i[r];
                   return rising_factorial(Rational(1), ir) * rising_factorial(Rational(-next), ir) /
                          (rising_factorial_nonzero(Rational(-n), ir) *
                           rising_factorial_nonzero(Rational(1 + n - next), ir + 1));
               });
    });
    return pow(Rational(1 + n), m) * sum;
}

Rational t_even_negative(long m, long n) {
    Rational sum(0);
    for_each_simplex_point(m, n, [&](std::span<const long> i) {
        sum += product_range<Rational>(1, m, [&](long r) {
            const long ir = i[r - 1];
            const long next = i[r];
            return Rational(1) / Rational(1 + n - ir) *
                   pochhammer_ratio<Rational>({Rational(1), Rational(-next)}, {Rational(-n), Rational(2 + n - next)},
                                              ir);
        });
    });
    return pow(Rational(1 + n), m + 1) * sum;
}

Rational t_closed(const TSpec& spec) {
    const long u = spec.u;
    const long n = spec.n;
    if (u == 0)
        throw std::invalid_argument("t_closed: u must be nonzero");
    if (n < 0)
        throw std::invalid_argument("t_closed: n must be >= 0");
    if (u >= -2 && u <= 4)
        return t_known_form(u, n);
    if (u >= 5)
        return u % 2 != 0 ? t_odd_positive((u - 3) / 2, n) : t_even_positive((u - 4) / 2, n);
    return -u % 2 != 0 ? t_odd_negative((1 - u) / 2, n) : t_even_negative(-u / 2, n);
}

} // namespace hyperharm
