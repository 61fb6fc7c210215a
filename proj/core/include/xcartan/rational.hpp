#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace xcartan {

// Exact rational with 64-bit numerator/denominator, always in lowest terms
// with positive denominator. Intersection exponents are tiny, but the
// arithmetic still guards against overflow via 128-bit intermediates.
class Rational {
  public:
    constexpr Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator*=(const Rational& o);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    bool negative() const { return num_ < 0; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "5", "-3", "3/2"
    std::string to_string() const;

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace xcartan
