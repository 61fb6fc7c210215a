#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "xcartan/factored_number.hpp"
#include "xcartan/genus_char.hpp"
#include "xcartan/heegner.hpp"

namespace xcartan {

// Thrown when an intersection evaluator is invoked on a pair whose
// classification does not license the formula. Carries the classification
// so callers can report the failed condition.
struct applicability_error : std::domain_error {
    applicability_error(PairClassification c, const std::string& msg)
        : std::domain_error(msg), classification(std::move(c)) {}
    PairClassification classification;
};

// S(a,b): positive integers of the form (a - x^2) / (4b), x in Z.
// Ascending and duplicate-free; may be empty.
std::vector<std::int64_t> s_set(std::int64_t a, std::int64_t b);

// The inner sum of the intersection formula for a single m. Thin audited
// alias of gz_divisor_sum.
FactoredNumber contribution_of(const DiscriminantPair& pair, std::int64_t m);

// exp(<P1,P2>) on the non-split Cartan curve of level p^n:
//   (w1 w2 / 4) * sum over m in S(d1 d2, p^(2n)) of the divisor sum.
// Requires classification fundamental_exact or non_fundamental_exact at
// level (1, p^n); throws applicability_error otherwise.
FactoredNumber prime_level_intersection(const Discriminant& d1, const Discriminant& d2,
                                        std::int64_t p, int n);

// exp(<P1,P2>) on an arbitrary mixed Cartan curve:
//   (w1 w2 / 8) * sum over t in Z with t^2 < d1 d2 and 4N^2 | d1 d2 - t^2
// of the divisor sum at m_t = (d1 d2 - t^2) / (4 N^2); the t = 0 term is
// counted once. Implemented independently of prime_level_intersection (a
// t-scan rather than an S-set scan) so their equality on prime-power
// non-split levels is a real cross-check.
FactoredNumber intersection_pairing(const Discriminant& d1, const Discriminant& d2,
                                    const Level& lv);

// Certificate of the non-intersection lemma on the level-p non-split curve,
// p >= 11: the primes q such that some element of S(d1 d2, 1) is divisible
// by p^2 q. Heegner divisors can only meet at primes in this set. Throws
// applicability_error when d1/d2 is an even prime power (degenerate pairs
// are handled as reference data, not by this certificate).
std::vector<std::int64_t> no_intersection_primes(const Discriminant& d1,
                                                 const Discriminant& d2, std::int64_t p);

}  // namespace xcartan
