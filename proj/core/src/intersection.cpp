#include "xcartan/intersection.hpp"

#include <algorithm>

#include "xcartan/arith.hpp"

namespace xcartan {

namespace {

void require_applicable(const Discriminant& d1, const Discriminant& d2, const Level& lv) {
    PairClassification c = classify_pair(d1, d2, lv);
    if (c.tag != PairTag::fundamental_exact && c.tag != PairTag::non_fundamental_exact)
        throw applicability_error(
            c, "intersection formula not applicable (" + to_string(c.tag) + "): " + c.detail);
}

std::int64_t checked_product(const Discriminant& d1, const Discriminant& d2) {
    if (-d1.value >= kMaxInput / -d2.value)
        throw std::domain_error("discriminant product out of range");
    return d1.value * d2.value;
}

std::int64_t checked_pow(std::int64_t p, int n) {
    std::int64_t r = 1;
    for (int i = 0; i < n; ++i) {
        if (r >= kMaxInput / p) throw std::domain_error("prime power out of range");
        r *= p;
    }
    return r;
}

}  // namespace

std::vector<std::int64_t> s_set(std::int64_t a, std::int64_t b) {
    if (a < 1 || a >= kMaxInput || b < 1 || b >= kMaxInput)
        throw std::domain_error("s_set: need 1 <= a, b < 2^62");
    std::vector<std::int64_t> out;
    if (b > a / 4) return out;  // 4b > a already forces emptiness
    const std::int64_t denom = 4 * b;
    for (std::int64_t x = 0; x * x <= a - denom; ++x) {
        const std::int64_t r = a - x * x;
        if (r % denom == 0) out.push_back(r / denom);
    }
    std::reverse(out.begin(), out.end());  // x ascending gives m descending
    return out;
}

FactoredNumber contribution_of(const DiscriminantPair& pair, std::int64_t m) {
    return gz_divisor_sum(pair, m);
}

FactoredNumber prime_level_intersection(const Discriminant& d1, const Discriminant& d2,
                                        std::int64_t p, int n) {
    if (!is_prime(p)) throw std::domain_error("level prime expected");
    if (n < 1) throw std::domain_error("level exponent must be >= 1");
    const std::int64_t pn = checked_pow(p, n);
    require_applicable(d1, d2, Level(1, pn));
    const std::int64_t product = checked_product(d1, d2);
    DiscriminantPair pair(d1, d2);
    FactoredNumber total;
    for (std::int64_t m : s_set(product, pn * pn)) total += contribution_of(pair, m);
    return total.scaled(Rational(unit_count(d1) * static_cast<std::int64_t>(unit_count(d2)), 4));
}

FactoredNumber intersection_pairing(const Discriminant& d1, const Discriminant& d2,
                                    const Level& lv) {
    require_applicable(d1, d2, lv);
    const std::int64_t product = checked_product(d1, d2);
    const std::int64_t n = lv.modulus();
    if (n >= kMaxInput / (4 * n)) throw std::domain_error("level out of range");
    const std::int64_t denom = 4 * n * n;
    DiscriminantPair pair(d1, d2);
    FactoredNumber total;
    // divisibility by 4N^2 is the only gate on t; it subsumes the parity
    // condition t = d1 d2 mod 2
    for (std::int64_t t = 0; t * t < product; ++t) {
        const std::int64_t r = product - t * t;
        if (r % denom != 0) continue;
        FactoredNumber term = contribution_of(pair, r / denom);
        total += term;
        if (t != 0) total += term;  // t and -t coincide
    }
    return total.scaled(Rational(unit_count(d1) * static_cast<std::int64_t>(unit_count(d2)), 8));
}

std::vector<std::int64_t> no_intersection_primes(const Discriminant& d1,
                                                 const Discriminant& d2, std::int64_t p) {
    if (!is_prime(p) || p < 11) throw std::domain_error("certificate requires a prime p >= 11");
    {
        PairClassification c = classify_pair(d1, d2, Level(1, p));
        if (c.tag == PairTag::degenerate_reference_only || d1.value == d2.value)
            throw applicability_error(
                c, "certificate undefined for even prime-power discriminant ratios; "
                   "use the degenerate reference data");
    }
    const std::int64_t product = checked_product(d1, d2);
    const std::int64_t p2 = p * p;
    std::vector<std::int64_t> out;
    for (std::int64_t m : s_set(product, 1)) {
        if (m % p2 != 0) continue;
        for (auto [q, e] : factorize(m).factors) {
            // need p^2 q | m, i.e. q = p demands a cube
            if (q == p && e < 3) continue;
            if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace xcartan
