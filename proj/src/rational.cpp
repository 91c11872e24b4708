#include "hyperharm/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace hyperharm {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0)
        throw std::domain_error("Rational: zero denominator");
    q_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    const mpz_class d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(parse_integer(num), d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational pow(const Rational& base, long exponent) {
    Rational result(1);
    Rational b = exponent < 0 ? Rational(1) / base : base;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    while (e != 0) {
        if (e & 1u)
            result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

} // namespace hyperharm
