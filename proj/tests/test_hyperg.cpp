#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "hyperharm/dual.hpp"
#include "hyperharm/families.hpp"
#include "hyperharm/hyperg.hpp"

using namespace hyperharm;

namespace {

/// Recursive enumeration of 0 <= i_1 <= ... <= i_m <= n.
void nested_points(long m, long hi, std::vector<long>& prefix, std::vector<std::vector<long>>& out) {
    if (m == 0) {
        out.push_back(prefix);
        return;
    }
    for (long i = 0; i <= hi; ++i) {
        prefix.insert(prefix.begin(), i);
        nested_points(m - 1, i, prefix, out);
        prefix.erase(prefix.begin());
    }
}

std::vector<Rational> R(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> out;
    for (auto [p, q] : xs)
        out.emplace_back(p, q);
    return out;
}

const std::vector<Rational> P4 = R({{1, 2}, {1, 3}, {1, 5}, {1, 7}});
const std::vector<Rational> P6 = R({{1, 2}, {1, 3}, {1, 5}, {1, 7}, {1, 11}, {1, 13}});

} // namespace

TEST_CASE("simplex enumeration matches nested loops") {
    for (long m = 1; m <= 4; ++m) {
        for (long n = 0; n <= 6; ++n) {
            std::vector<std::vector<long>> expected;
            std::vector<long> prefix;
            nested_points(m, n, prefix, expected);

            std::set<std::vector<long>> seen;
            long count = 0;
            for_each_simplex_point(m, n, [&](std::span<const long> idx) {
                REQUIRE(idx.size() == static_cast<std::size_t>(m + 1));
                REQUIRE(idx[m] == n);
                for (long r = 0; r < m; ++r)
                    REQUIRE(idx[r] <= idx[r + 1]);
                seen.insert(std::vector<long>(idx.begin(), idx.end() - 1));
                ++count;
            });
            CHECK(count == static_cast<long>(expected.size()));
            CHECK(seen == std::set<std::vector<long>>(expected.begin(), expected.end()));
            CHECK(Rational(count) == binomial_general(Rational(n + m), m));
        }
    }
}

TEST_CASE("terminating series") {
    SeriesSpec<Rational> spec{{Rational(-2), Rational(1)}, {Rational(3)}, Rational(1), 2};
    CHECK(eval_terminating_series(spec) == Rational(1, 2));
    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n.
    CHECK(eval_terminating_series(spec) == pochhammer_ratio<Rational>({Rational(2)}, {Rational(3)}, 2));

    SeriesSpec<Rational> zero_terms{{Rational(0), Rational(5, 3)}, {Rational(2, 7)}, Rational(1), 0};
    CHECK(eval_terminating_series(zero_terms) == Rational(1));

    for (long b = 1; b <= 5; ++b) {
        SeriesSpec<Rational> cancel{{Rational(-1), Rational(b)}, {Rational(b)}, Rational(1), 1};
        CHECK(eval_terminating_series(cancel) == Rational(0));
    }

    SeriesSpec<Rational> bad{{Rational(-3), Rational(1)}, {Rational(-1)}, Rational(1), 3};
    CHECK_THROWS_AS(eval_terminating_series(bad), ZeroDenominatorFactor);
    SeriesSpec<Rational> not_terminating{{Rational(1)}, {Rational(2)}, Rational(1), 3};
    CHECK_THROWS_AS(eval_terminating_series(not_terminating), std::invalid_argument);
}

TEST_CASE("Andrews transformation fixed instances") {
    for (long m = 1; m <= 3; ++m) {
        AndrewsInstance<Rational> inst{Rational(3, 7), std::vector<Rational>(2 * m + 2, Rational(2, 5)), 0, m};
        CHECK(andrews_lhs(inst) == Rational(1));
        CHECK(andrews_rhs(inst) == Rational(1));
    }

    const AndrewsInstance<Rational> one{Rational(1), P4, 2, 1};
    CHECK(andrews_lhs(one) == Rational(102289, 102375));
    CHECK(andrews_rhs(one) == Rational(102289, 102375));

    const AndrewsInstance<Rational> two{Rational(1), P6, 2, 2};
    CHECK(andrews_lhs(two) == Rational(2334146209L, 2334150000L));
    CHECK(andrews_rhs(two) == andrews_lhs(two));

    CHECK_THROWS_AS(andrews_lhs(AndrewsInstance<Rational>{Rational(1), P4, 2, 2}), std::invalid_argument);
}

TEST_CASE("Whipple transformation") {
    CHECK(whipple_verify(Rational(1), P4, 0).verdict == Verdict::pass);
    CHECK(*whipple_verify(Rational(1), P4, 0).lhs == Rational(1));

    const Report three = whipple_verify(Rational(1), P4, 3);
    CHECK(three.verdict == Verdict::pass);
    CHECK(*three.lhs == Rational(5829556, 5835375));

    const Report halves = whipple_verify(Rational(2), R({{1, 2}, {1, 2}, {1, 2}, {1, 2}}), 4);
    CHECK(halves.verdict == Verdict::pass);
    CHECK(*halves.rhs == Rational(118219522048L, 118641513375L));

    // a = 0 makes (a/2)_k vanish.
    const Report degenerate = whipple_verify(Rational(0), P4, 2);
    CHECK(degenerate.verdict == Verdict::inapplicable);
    CHECK(degenerate.diagnostic.has_value());
}

TEST_CASE("Andrews at m = 1 equals the Whipple right side") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 6), len(0, 6);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        const Rational a(num(rng), den(rng));
        std::vector<Rational> P;
        for (int s = 0; s < 4; ++s)
            P.emplace_back(num(rng), den(rng));
        const long n = len(rng);
        try {
            const Rational viaSimplex = andrews_rhs(AndrewsInstance<Rational>{a, P, n, 1});
            const Rational viaSeries = whipple_rhs(a, P, n);
            REQUIRE(viaSimplex == viaSeries);
            ++compared;
        } catch (const ZeroDenominatorFactor&) {
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("random applicable Andrews instances") {
    const RandomFamily family = andrews_family({100, {1, 2, 3}, 6, 2024});
    REQUIRE(family.instances.size() == 100);
    for (const auto& inst : family.instances) {
        const Report r = evaluate(inst);
        INFO(to_json(r).dump());
        REQUIRE(r.verdict == Verdict::pass);
    }
}

TEST_CASE("degenerate parameters collapse m to m-1") {
    // P = (1+a)/2 cancels its own numerator and denominator on the left, so
    // two such parameters reduce the series to the one with m - 1.
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-3, 3), den(2, 7), len(0, 5);
    int compared = 0;
    for (int i = 0; i < 200; ++i) {
        const long m = 2 + i % 2;
        const Rational a(num(rng), den(rng));
        std::vector<Rational> P;
        for (long s = 0; s < 2 * m; ++s)
            P.emplace_back(num(rng), den(rng));
        const long n = len(rng);
        std::vector<Rational> extended = P;
        extended.push_back((Rational(1) + a) / Rational(2));
        extended.push_back((Rational(1) + a) / Rational(2));
        try {
            const Rational reduced = andrews_rhs(AndrewsInstance<Rational>{a, P, n, m - 1});
            const Rational full_lhs = andrews_lhs(AndrewsInstance<Rational>{a, extended, n, m});
            const Rational full_rhs = andrews_rhs(AndrewsInstance<Rational>{a, extended, n, m});
            REQUIRE(full_lhs == reduced);
            REQUIRE(full_rhs == reduced);
            ++compared;
        } catch (const ZeroDenominatorFactor&) {
        }
    }
    CHECK(compared > 20);
}

TEST_CASE("dual evaluation agrees with rational evaluation at the value part") {
    const AndrewsInstance<Dual> inst{Dual(Rational(1)) + seed_x(),
                                     {Dual(Rational(1, 2)), Dual(Rational(1, 3)), Dual(Rational(1, 5)),
                                      Dual(Rational(1, 7))},
                                     3,
                                     1};
    const Dual lhs = andrews_lhs(inst);
    const Dual rhs = andrews_rhs(inst);
    CHECK(lhs == rhs);
    CHECK(lhs.value() == Rational(5829556, 5835375));
}
