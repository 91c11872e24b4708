#pragma once

// First-order dual numbers a + b*eps (eps^2 = 0) over Rational. Evaluating an
// expression at seed_x() = 0 + 1*eps yields (f(0), f'(0)).

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "hyperharm/exact_arith.hpp"
#include "hyperharm/rational.hpp"

namespace hyperharm {

/// Division by a dual whose value part is zero.
class ZeroValueDivisor : public std::domain_error {
public:
    explicit ZeroValueDivisor(const std::string& what) : std::domain_error(what) {}
};

class Dual {
public:
    Dual() = default;
    Dual(long value) : value_(value) {}
    Dual(int value) : value_(value) {}
    Dual(Rational value) : value_(std::move(value)) {}
    Dual(Rational value, Rational deriv) : value_(std::move(value)), deriv_(std::move(deriv)) {}

    const Rational& value() const { return value_; }
    const Rational& deriv() const { return deriv_; }

    Dual& operator+=(const Dual& o) {
        value_ += o.value_;
        deriv_ += o.deriv_;
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        value_ -= o.value_;
        deriv_ -= o.deriv_;
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        deriv_ = value_ * o.deriv_ + deriv_ * o.value_;
        value_ *= o.value_;
        return *this;
    }
    Dual& operator/=(const Dual& o) {
        if (o.value_.is_zero())
            throw ZeroValueDivisor("division by dual with zero value part (deriv " + o.deriv_.to_string() + ")");
        deriv_ = (deriv_ * o.value_ - value_ * o.deriv_) / (o.value_ * o.value_);
        value_ /= o.value_;
        return *this;
    }

    friend Dual operator+(Dual a, const Dual& b) { return a += b; }
    friend Dual operator-(Dual a, const Dual& b) { return a -= b; }
    friend Dual operator*(Dual a, const Dual& b) { return a *= b; }
    friend Dual operator/(Dual a, const Dual& b) { return a /= b; }
    friend Dual operator-(const Dual& a) { return Dual(-a.value_, -a.deriv_); }

    friend bool operator==(const Dual&, const Dual&) = default;

private:
    Rational value_{0};
    Rational deriv_{0};
};

inline const Rational& value_part(const Dual& d) { return d.value(); }

std::ostream& operator<<(std::ostream& os, const Dual& d);

/// The formal variable x at the evaluation point 0.
inline Dual seed_x() { return Dual(Rational(0), Rational(1)); }

/// D f = f'(0), computed by forward-mode evaluation at seed_x().
template <class F>
Rational derivative_of(F&& f) {
    const Dual y = f(seed_x());
    return y.deriv();
}

/// One route pair of the binomial derivative formulas.
struct BinomialDerivative {
    Rational via_dual;
    Rational closed_form;
};

/// sign = +1: D C(n+x, r) against C(n,r)(H_n - H_{n-r});
/// sign = -1: D C(n-x, r) against C(n,r)(H_{n-r} - H_n).
BinomialDerivative binomial_derivative(long n, long r, int sign);

/// True iff both binomial derivative formulas hold for (n, r), 0 <= r <= n.
bool check_binomial_derivatives(long n, long r);

} // namespace hyperharm
