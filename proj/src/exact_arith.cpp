#include "hyperharm/exact_arith.hpp"

namespace hyperharm {

namespace {

HarmonicCache& harmonic_cache() {
    static HarmonicCache cache;
    return cache;
}

FactorialCache& factorial_cache() {
    static FactorialCache cache;
    return cache;
}

} // namespace

Rational HarmonicCache::get(long n) {
    if (n < 0)
        throw std::invalid_argument("harmonic: negative index " + std::to_string(n));
    const auto index = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (index < values_.size())
            return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) {
        const long k = static_cast<long>(values_.size());
        values_.push_back(values_.back() + Rational(1, k));
    }
    return values_[index];
}

std::size_t HarmonicCache::size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
}

Rational FactorialCache::get(long n) {
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument " + std::to_string(n));
    const auto index = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (index < values_.size())
            return values_[index];
    }
    std::unique_lock lock(mutex_);
    while (values_.size() <= index) {
        const long k = static_cast<long>(values_.size());
        values_.push_back(values_.back() * Rational(k));
    }
    return values_[index];
}

Rational harmonic(long n) { return harmonic_cache().get(n); }

Rational factorial(long n) { return factorial_cache().get(n); }

} // namespace hyperharm
