#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace xcartan {

// Supersingular locus data in characteristic p: the number of supersingular
// j-invariants and their automorphism-order multiset, constrained by the
// Eichler mass formula sum(multiplicity / aut_order) = (p-1)/24.
struct SupersingularProfile {
    std::int64_t p;
    std::int64_t count;
    // (aut_order in {2,4,6}, multiplicity)
    std::vector<std::pair<int, std::int64_t>> aut_multiset;
};

// Closed form for p >= 5: count = floor(p/12) + (0,1,1,2 for p = 1,5,7,11
// mod 12); one curve with 6 automorphisms iff p = 2 mod 3, one with 4 iff
// p = 3 mod 4, the rest with 2. Throws std::domain_error for p < 5 or
// composite p.
SupersingularProfile supersingular_profile(std::int64_t p);

// Number of components of the geometric special fibre at p of the level
// p^n non-split Cartan curve:
//   sum over the profile of multiplicity * (1 + 2 (p^(2n-2) - 1) / aut),
// an integer even though individual terms need not be. Requires p >= 5 and
// p^(2n-2) < 2^62.
std::int64_t component_count(std::int64_t p, int n);

}  // namespace xcartan
