#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hyperharm/dual.hpp"

using namespace hyperharm;

namespace {

/// Small random polynomial with rational coefficients, evaluated by Horner.
struct Poly {
    std::vector<Rational> coeff;  // coeff[i] multiplies x^i

    template <class S>
    S operator()(const S& x) const {
        S acc(0L);
        for (auto it = coeff.rbegin(); it != coeff.rend(); ++it)
            acc = acc * x + S(*it);
        return acc;
    }
};

Poly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4), deg(0, 4);
    Poly p;
    for (long i = deg(rng); i >= 0; --i)
        p.coeff.emplace_back(num(rng), den(rng));
    return p;
}

Dual random_dual(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
    return Dual(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

} // namespace

TEST_CASE("seed") {
    CHECK(seed_x() == Dual(Rational(0), Rational(1)));
    CHECK(seed_x() * seed_x() == Dual(0L));
    CHECK(Dual(3L) + Dual(2L) * seed_x() == Dual(Rational(3), Rational(2)));
}

TEST_CASE("arithmetic rules") {
    const Dual a(Rational(1, 2), Rational(3)), b(Rational(2), Rational(-1, 3));
    CHECK(a + b == Dual(Rational(5, 2), Rational(8, 3)));
    CHECK(a * b == Dual(Rational(1), Rational(1, 2) * Rational(-1, 3) + Rational(3) * Rational(2)));
    CHECK(a / b == Dual(Rational(1, 4), (Rational(3) * Rational(2) - Rational(1, 2) * Rational(-1, 3)) / Rational(4)));
    CHECK_THROWS_AS(a / Dual(Rational(0), Rational(1)), ZeroValueDivisor);
}

TEST_CASE("derivative operator") {
    CHECK(derivative_of([](const Dual& x) { return binomial_general(Dual(2L) + x, 1); }) == Rational(1));
    CHECK(derivative_of([](const Dual&) { return Dual(Rational(7, 3)); }) == Rational(0));
    CHECK(derivative_of([](const Dual& x) { return binomial_general(Dual(2L) + x, 2); }) == Rational(3, 2));
    CHECK_THROWS_AS(derivative_of([](const Dual& x) { return Dual(1L) / x; }), ZeroValueDivisor);
}

TEST_CASE("binomial derivative formulas") {
    const auto plus = binomial_derivative(2, 2, +1);
    CHECK(plus.via_dual == Rational(3, 2));
    CHECK(plus.closed_form == Rational(3, 2));
    const auto minus = binomial_derivative(3, 1, -1);
    CHECK(minus.via_dual == Rational(-1));
    CHECK(minus.closed_form == Rational(-1));
    CHECK(binomial_derivative(5, 0, +1).via_dual == Rational(0));
    CHECK(binomial_derivative(5, 0, -1).closed_form == Rational(0));
    CHECK_THROWS_AS(binomial_derivative(2, 3, +1), std::invalid_argument);

    for (long n = 0; n <= 30; ++n)
        for (long r = 0; r <= n; ++r)
            REQUIRE(check_binomial_derivatives(n, r));
}

TEST_CASE("Leibniz rule on random polynomials") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const Poly f = random_poly(rng), g = random_poly(rng);
        const Rational f0 = f(Rational(0)), g0 = g(Rational(0));
        const Rational df = derivative_of(f), dg = derivative_of(g);
        const Rational dfg = derivative_of([&](const Dual& x) { return f(x) * g(x); });
        REQUIRE(dfg == f0 * dg + g0 * df);
        // Oracle: the linear coefficient is the derivative at 0.
        REQUIRE(df == (f.coeff.size() > 1 ? f.coeff[1] : Rational(0)));
    }
}

TEST_CASE("dual field laws") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const Dual a = random_dual(rng), b = random_dual(rng), c = random_dual(rng);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        if (!a.value().is_zero())
            REQUIRE(a / a == Dual(1L));
    }
}
