#include "hyperharm/dual.hpp"

#include <ostream>

namespace hyperharm {

std::ostream& operator<<(std::ostream& os, const Dual& d) {
    return os << "(" << d.value() << ", " << d.deriv() << ")";
}

BinomialDerivative binomial_derivative(long n, long r, int sign) {
    if (r < 0 || r > n)
        throw std::invalid_argument("binomial_derivative: need 0 <= r <= n");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("binomial_derivative: sign must be +1 or -1");
    const Rational via_dual = derivative_of([&](const Dual& x) {
        return binomial_general(Dual(n) + (sign > 0 ? x : -x), r);
    });
    const Rational c = binomial_general(Rational(n), r);
    const Rational diff = harmonic(n) - harmonic(n - r);
    return {via_dual, sign > 0 ? c * diff : -(c * diff)};
}

bool check_binomial_derivatives(long n, long r) {
    const auto plus = binomial_derivative(n, r, +1);
    const auto minus = binomial_derivative(n, r, -1);
    return plus.via_dual == plus.closed_form && minus.via_dual == minus.closed_form;
}

} // namespace hyperharm
