#pragma once

// Harmonic numbers, shifted factorials and generalized binomials, generic over
// the scalar (Rational or Dual).

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperharm/rational.hpp"

namespace hyperharm {

/// A denominator Pochhammer symbol or binomial evaluated to zero: the instance
/// lies outside the domain of the identity being evaluated.
class ZeroDenominatorFactor : public std::domain_error {
public:
    explicit ZeroDenominatorFactor(const std::string& what) : std::domain_error(what) {}

    ZeroDenominatorFactor with_context(const std::string& context) const {
        return ZeroDenominatorFactor(context + ": " + what());
    }
};

inline const Rational& value_part(const Rational& r) { return r; }

template <class S>
concept Scalar = std::copyable<S> && requires(const S a, const S b) {
    S(1L);
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { value_part(a) } -> std::convertible_to<Rational>;
};

/// Append-only table of H_0, H_1, ... Safe to share between threads.
class HarmonicCache {
public:
    HarmonicCache() : values_{Rational(0)} {}

    Rational get(long n);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_;
};

/// Append-only table of 0!, 1!, ... Safe to share between threads.
class FactorialCache {
public:
    FactorialCache() : values_{Rational(1)} {}

    Rational get(long n);

private:
    mutable std::shared_mutex mutex_;
    std::vector<Rational> values_;
};

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0. Backed by a process-wide cache.
Rational harmonic(long n);

/// n! for n >= 0. Backed by a process-wide cache.
Rational factorial(long n);

/// (x)_n = x (x+1) ... (x+n-1); (x)_0 = 1.
template <Scalar S>
S rising_factorial(const S& x, long n) {
    S result(1L);
    for (long k = 0; k < n; ++k)
        result = result * (x + S(k));
    return result;
}

/// Like rising_factorial, but throws ZeroDenominatorFactor if a factor has a
/// zero value part. Used for every Pochhammer symbol that ends up as a divisor.
template <Scalar S>
S rising_factorial_nonzero(const S& x, long n) {
    S result(1L);
    for (long k = 0; k < n; ++k) {
        const S factor = x + S(k);
        if (value_part(factor).is_zero()) {
            throw ZeroDenominatorFactor("(" + value_part(x).to_string() + ")_" + std::to_string(n) +
                                        " has zero factor at offset " + std::to_string(k));
        }
        result = result * factor;
    }
    return result;
}

/// Product of (a)_n over numer divided by product of (b)_n over denom.
template <Scalar S>
S pochhammer_ratio(std::span<const S> numer, std::span<const S> denom, long n) {
    S den(1L);
    for (const S& b : denom)
        den = den * rising_factorial_nonzero(b, n);
    S num(1L);
    for (const S& a : numer)
        num = num * rising_factorial(a, n);
    return num / den;
}

template <Scalar S>
S pochhammer_ratio(std::initializer_list<S> numer, std::initializer_list<S> denom, long n) {
    return pochhammer_ratio(std::span<const S>(numer.begin(), numer.size()),
                            std::span<const S>(denom.begin(), denom.size()), n);
}

/// C(a, k) = a (a-1) ... (a-k+1) / k! for any scalar a and k >= 0.
template <Scalar S>
S binomial_general(const S& a, long k) {
    S result(1L);
    for (long j = 0; j < k; ++j)
        result = result * (a - S(j));
    return result / S(factorial(k));
}

/// C(a, k) used as a divisor: throws ZeroDenominatorFactor when its value part
/// vanishes.
template <Scalar S>
S binomial_nonzero(const S& a, long k) {
    S b = binomial_general(a, k);
    if (value_part(b).is_zero()) {
        throw ZeroDenominatorFactor("binomial C(" + value_part(a).to_string() + ", " + std::to_string(k) +
                                    ") vanishes");
    }
    return b;
}

/// Product of term(r) for r = first..last; 1 when last = first - 1.
template <Scalar S, class F>
S product_range(long first, long last, F&& term) {
    if (last < first - 1)
        throw std::invalid_argument("product_range: last < first - 1");
    S result(1L);
    for (long r = first; r <= last; ++r)
        result = result * term(r);
    return result;
}

/// (-1)^n as a scalar.
template <Scalar S>
S sign_power(long n) {
    return S(n % 2 == 0 ? 1L : -1L);
}

} // namespace hyperharm
