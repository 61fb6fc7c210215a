#include "xcartan/fibre.hpp"

#include <stdexcept>

#include "xcartan/arith.hpp"
#include "xcartan/rational.hpp"

namespace xcartan {

SupersingularProfile supersingular_profile(std::int64_t p) {
    if (p < 5 || !is_prime(p))
        throw std::domain_error("supersingular_profile: need a prime p >= 5");
    SupersingularProfile out;
    out.p = p;
    switch (p % 12) {
        case 1: out.count = p / 12; break;
        case 5:
        case 7: out.count = p / 12 + 1; break;
        default: out.count = p / 12 + 2; break;  // p = 11 mod 12
    }
    std::int64_t rest = out.count;
    if (p % 3 == 2) {
        out.aut_multiset.emplace_back(6, 1);  // j = 0 supersingular
        --rest;
    }
    if (p % 4 == 3) {
        out.aut_multiset.emplace_back(4, 1);  // j = 1728 supersingular
        --rest;
    }
    if (rest > 0) out.aut_multiset.emplace_back(2, rest);
    // Eichler mass formula pins the profile
    Rational mass;
    for (auto [aut, mult] : out.aut_multiset) mass += Rational(mult, aut);
    if (mass != Rational(p - 1, 24))
        throw std::logic_error("supersingular_profile: mass formula violated");
    return out;
}

std::int64_t component_count(std::int64_t p, int n) {
    if (n < 1) throw std::domain_error("component_count: need n >= 1");
    SupersingularProfile profile = supersingular_profile(p);
    std::int64_t power = 1;  // p^(2n-2)
    for (int i = 0; i < 2 * n - 2; ++i) {
        if (power >= kMaxInput / p) throw std::domain_error("component_count: p^(2n-2) overflows");
        power *= p;
    }
    Rational total;
    for (auto [aut, mult] : profile.aut_multiset)
        total += Rational(mult) * (Rational(1) + Rational(2 * (power - 1), aut));
    if (!total.is_integer()) throw std::logic_error("component_count: non-integral total");
    return total.num();
}

}  // namespace xcartan
