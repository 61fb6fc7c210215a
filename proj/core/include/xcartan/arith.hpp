#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace xcartan {

// All arithmetic entry points accept values below 2^62 so that products of
// the form 4*b*m and intermediate squares stay inside a signed 64-bit word.
inline constexpr std::int64_t kMaxInput = std::int64_t{1} << 62;

struct Factorization {
    std::int64_t value = 1;
    // (prime, exponent) with primes strictly increasing and exponents >= 1
    std::vector<std::pair<std::int64_t, int>> factors;
};

// Deterministic Miller-Rabin, valid for the whole 64-bit range.
bool is_prime(std::int64_t n) noexcept;

// Trial division up to 10^6, then Miller-Rabin plus Brent's rho for the
// remaining cofactor. Throws std::domain_error unless 1 <= n < 2^62.
Factorization factorize(std::int64_t n);

// Ascending, duplicate-free list of all positive divisors of n.
std::vector<std::int64_t> divisors(std::int64_t n);

// Full Kronecker symbol (a|n) with the standard conventions:
//   (a|2) = 0 for even a, +1 for a = ±1 mod 8, -1 for a = ±3 mod 8,
//   (a|-1) = -1 iff a < 0, (a|0) = 1 iff a = ±1,
// completely multiplicative in n and equal to the Legendre symbol for odd
// prime n.
int kronecker(std::int64_t a, std::int64_t n) noexcept;

// ord_p(n) for n != 0, p >= 2.
int valuation(std::int64_t n, std::int64_t p);

}  // namespace xcartan
