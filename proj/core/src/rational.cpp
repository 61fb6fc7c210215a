#include "xcartan/rational.hpp"

#include <numeric>

namespace xcartan {

namespace {

using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
    if (v > i128{INT64_MAX} || v < i128{INT64_MIN})
        throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    num_ = n / g;
    den_ = d / g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    i128 n = i128{num_} * o.den_ + i128{o.num_} * den_;
    i128 d = i128{den_} * o.den_;
    i128 a = n < 0 ? -n : n;
    i128 g = d;
    while (a) {
        i128 t = g % a;
        g = a;
        a = t;
    }
    if (g == 0) g = 1;
    num_ = checked_narrow(n / g);
    den_ = checked_narrow(d / g);
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    std::int64_t g1 = std::gcd(num_ < 0 ? -num_ : num_, o.den_);
    std::int64_t g2 = std::gcd(o.num_ < 0 ? -o.num_ : o.num_, den_);
    num_ = checked_narrow(i128{num_ / g1} * (o.num_ / g2));
    den_ = checked_narrow(i128{den_ / g2} * (o.den_ / g1));
    return *this;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace xcartan
