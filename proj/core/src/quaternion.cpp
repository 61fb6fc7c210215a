#include "xcartan/quaternion.hpp"

#include <cstdlib>

#include "xcartan/arith.hpp"
#include "xcartan/intersection.hpp"

namespace xcartan {

CliffordOrderDescriptor clifford_descriptor(const DiscriminantPair& pair, std::int64_t t) {
    const std::int64_t product = pair.product();
    if (t >= kMaxInput / 2 || -t >= kMaxInput / 2 || t * t >= product)
        throw std::domain_error("clifford_descriptor: order is not definite (t^2 >= d1*d2)");
    if ((std::llabs(t) % 2) != (product % 2))
        throw std::domain_error("clifford_descriptor: t must have the parity of d1*d2");
    CliffordOrderDescriptor desc{pair, t, (product - t * t) / 4, {}};
    for (auto [p, e] : factorize(desc.disc_magnitude).factors)
        desc.local_types.emplace(p, pair.epsilon_prime(p) == 1 ? LocalType::split
                                                               : LocalType::inert);
    return desc;
}

std::int64_t mixed_cartan_count(const CliffordOrderDescriptor& desc, const Level& lv) {
    const std::int64_t n = lv.modulus();
    if (n >= kMaxInput / n) throw std::domain_error("level out of range");
    if (desc.disc_magnitude % (n * n) != 0) return 0;
    const std::int64_t reduced = desc.disc_magnitude / (n * n);
    std::int64_t count = 1;
    for (const auto& [p, type] : desc.local_types)
        if (type == LocalType::split) count *= 1 + valuation(reduced, p);
    return count;
}

std::int64_t eichler_superorder_count(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || 2 * k > n)
        throw std::domain_error("eichler_superorder_count: need 0 <= 2k <= n");
    return n + 1 - 2 * k;
}

FactoredNumber intersection_pairing_via_orders(const Discriminant& d1,
                                               const Discriminant& d2, const Level& lv) {
    {
        PairClassification c = classify_pair(d1, d2, lv);
        if (c.tag != PairTag::fundamental_exact && c.tag != PairTag::non_fundamental_exact)
            throw applicability_error(
                c, "intersection formula not applicable (" + to_string(c.tag) + "): " + c.detail);
    }
    DiscriminantPair pair(d1, d2);
    const std::int64_t product = pair.product();
    const std::int64_t n = lv.modulus();
    if (n >= kMaxInput / n) throw std::domain_error("level out of range");
    const std::int64_t n2 = n * n;
    FactoredNumber total;
    for (std::int64_t t = product % 2; t * t < product; t += 2) {
        CliffordOrderDescriptor desc = clifford_descriptor(pair, t);
        const std::int64_t count = mixed_cartan_count(desc, lv);
        if (count == 0) continue;
        const std::int64_t m = desc.disc_magnitude / n2;
        auto diff = pair.diff_set(m);
        // the rational algebra is ramified exactly at diff(m) and infinity;
        // only a single finite ramified prime q contributes
        if (diff.size() != 1) continue;
        const std::int64_t q = diff.front();
        Rational val = Rational(1 + valuation(m, q), 2) * Rational(count);
        if (t != 0) val *= Rational(2);  // t and -t carry equal counts
        total.add(q, val);
    }
    return total.scaled(Rational(unit_count(d1) * static_cast<std::int64_t>(unit_count(d2)), 8));
}

}  // namespace xcartan
