#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "xcartan/rational.hpp"

namespace xcartan {

// A positive rational held symbolically as prod q^(e_q) over primes q with
// exact rational exponents. This is the output form of every intersection
// evaluator: exp(<P1,P2>) as a factored number, never a float.
class FactoredNumber {
  public:
    using map_type = std::map<std::int64_t, Rational>;

    FactoredNumber() = default;

    // Adds e to the exponent of `prime`; entries that become zero are
    // removed. Throws std::domain_error if `prime` fails a primality check.
    void add(std::int64_t prime, const Rational& e);

    FactoredNumber& operator+=(const FactoredNumber& o);
    FactoredNumber scaled(const Rational& c) const;

    friend bool operator==(const FactoredNumber& a, const FactoredNumber& b) {
        return a.exp_ == b.exp_;
    }
    friend bool operator!=(const FactoredNumber& a, const FactoredNumber& b) {
        return !(a == b);
    }

    bool empty() const { return exp_.empty(); }
    bool integral() const;      // every exponent has denominator 1
    bool non_negative() const;  // every exponent >= 0
    const map_type& exponents() const { return exp_; }
    Rational exponent(std::int64_t prime) const;

    // sum e_q * log(q), for display only
    double log_value() const;

    // "2^6*3^3*5^3"; rational exponents as "q^num/den"; "1" when empty
    std::string to_string() const;

  private:
    map_type exp_;
};

}  // namespace xcartan
