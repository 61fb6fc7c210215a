#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "xcartan/factored_number.hpp"
#include "xcartan/heegner.hpp"

namespace xcartan {

// Raised when epsilon is evaluated at a prime p dividing neither
// discriminant where the two Kronecker symbols disagree. Such a p never
// divides an element of any S-set for the pair, so hitting this indicates a
// caller bug rather than a data condition.
struct ill_defined_character : std::logic_error {
    using std::logic_error::logic_error;
};

// A coprime pair of discriminants together with the memoized genus
// character epsilon of Q(sqrt(d1*d2)).
//
// epsilon at a prime p is realized as the Kronecker symbol of whichever
// discriminant p does not divide; the field and the ideal-theoretic
// character behind it are never constructed.
class DiscriminantPair {
  public:
    DiscriminantPair(const Discriminant& d1, const Discriminant& d2);

    DiscriminantPair(const DiscriminantPair& o);
    DiscriminantPair& operator=(const DiscriminantPair& o);

    const Discriminant& first() const { return d1_; }
    const Discriminant& second() const { return d2_; }
    std::int64_t product() const { return d1_.value * d2_.value; }

    // epsilon at a prime: {-1,+1}. Memoized; concurrent calls are safe.
    int epsilon_prime(std::int64_t p) const;

    // Multiplicative extension; epsilon(1) = +1.
    int epsilon(std::int64_t n) const;

    // Primes dividing m to odd order where epsilon = -1.
    std::vector<std::int64_t> diff_set(std::int64_t m) const;

  private:
    Discriminant d1_;
    Discriminant d2_;
    mutable std::map<std::int64_t, int> cache_;
    mutable std::mutex mutex_;
};

// sum over d | m of epsilon(m/d) log(d), as exact exponents on the primes
// dividing m. Zero (empty) unless diff_set(m) is a singleton.
FactoredNumber gz_divisor_sum(const DiscriminantPair& pair, std::int64_t m);

// The Gross-Zagier closed form of the same sum: for diff_set(m) = {q},
//   q -> (ord_q(m)+1)/2 * prod over split p | m of (ord_p(m)+1),
// and the zero map otherwise. Kept as a genuinely independent evaluation
// route; equality with gz_divisor_sum is a tested identity, not a shortcut.
FactoredNumber gz_closed_form(const DiscriminantPair& pair, std::int64_t m);

}  // namespace xcartan
