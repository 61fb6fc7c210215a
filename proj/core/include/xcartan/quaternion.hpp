#pragma once

#include <cstdint>
#include <map>

#include "xcartan/factored_number.hpp"
#include "xcartan/genus_char.hpp"
#include "xcartan/heegner.hpp"

namespace xcartan {

// Residual behaviour of a quaternion order at a prime dividing its reduced
// discriminant: split means the completion contains Zp x Zp, inert means it
// contains the unramified quadratic ring.
enum class LocalType { split, inert };

// The order generated by two embedded quadratic orders with crossed trace
// t, described purely by its reduced discriminant magnitude and residual
// types. All downstream counts are functions of these data, so no
// 4-dimensional algebra arithmetic is ever performed.
struct CliffordOrderDescriptor {
    DiscriminantPair pair;
    std::int64_t t;
    std::int64_t disc_magnitude;  // (d1 d2 - t^2) / 4
    std::map<std::int64_t, LocalType> local_types;
};

// Requires t^2 < d1 d2 (definite) and t = d1 d2 mod 2; throws
// std::domain_error otherwise. The ramified primes of the rational algebra
// are exactly diff_set(pair, disc_magnitude).
CliffordOrderDescriptor clifford_descriptor(const DiscriminantPair& pair, std::int64_t t);

// Number of mixed Cartan superorders of the descriptor's order with level
// N = n_spl * n_ns: zero unless N^2 divides the discriminant magnitude, and
// otherwise the product over residually split primes p of
// (1 + ord_p(disc / N^2)). The empty product is 1.
std::int64_t mixed_cartan_count(const CliffordOrderDescriptor& desc, const Level& lv);

// Eichler superorders of level p^(2k) containing a fixed Eichler order of
// level p^n: sub-paths of length 2k+1 inside a path of length n+1 in the
// Bruhat-Tits tree, i.e. n + 1 - 2k placements. Requires 2k <= n.
std::int64_t eichler_superorder_count(std::int64_t n, std::int64_t k);

// Alternate evaluator of the intersection pairing built from superorder
// counts: each admissible t with diff_set(m_t) = {q} contributes
// (w1 w2 / 8) * (1 + ord_q(m_t)) / 2 * |Car_t| to the exponent of q.
// Agrees exactly with intersection_pairing; the equality is enforced by the
// test suite on both the embedded dataset and randomized inputs.
FactoredNumber intersection_pairing_via_orders(const Discriminant& d1,
                                               const Discriminant& d2, const Level& lv);

}  // namespace xcartan
