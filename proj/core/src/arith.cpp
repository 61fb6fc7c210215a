#include "xcartan/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace xcartan {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Brent's cycle-finding variant of Pollard rho; n odd composite, not a
// prime power obstacle since callers retry with a different increment.
u64 pollard_brent(u64 n, u64 c) {
    u64 x = 2, y = 2, d = 1, q = 1, ys = 0;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (static_cast<u64>(u128{v} * v % n) + c) % n; };
    while (d == 1) {
        x = y;
        for (u64 i = 0; i < r; ++i) y = f(y);
        for (u64 k = 0; k < r && d == 1; k += m) {
            ys = y;
            for (u64 i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            d = std::gcd(q, n);
        }
        r <<= 1;
    }
    if (d == n) {
        do {
            ys = f(ys);
            d = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (d == 1);
    }
    return d;
}

void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(static_cast<std::int64_t>(n))) {
        out.push_back(n);
        return;
    }
    u64 d = n;
    for (u64 c = 1; d == n; ++c) d = pollard_brent(n, c);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (static_cast<u64>(n) == p) return true;
        if (static_cast<u64>(n) % p == 0) return false;
    }
    // this base set is deterministic for all 64-bit inputs
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (!miller_rabin(static_cast<u64>(n), a)) return false;
    return true;
}

Factorization factorize(std::int64_t n) {
    if (n < 1 || n >= kMaxInput) throw std::domain_error("factorize: need 1 <= n < 2^62");
    Factorization f;
    f.value = n;
    u64 m = static_cast<u64>(n);
    std::vector<u64> primes;
    for (u64 p : {u64{2}, u64{3}, u64{5}}) {
        while (m % p == 0) {
            m /= p;
            primes.push_back(p);
        }
    }
    for (u64 p = 7; p <= 1000000 && p * p <= m; p += 6) {
        for (u64 q : {p, p + 4}) {
            while (m % q == 0) {
                m /= q;
                primes.push_back(q);
            }
        }
    }
    if (m > 1) {
        // no factor below 10^6 survived, so a cofactor below 10^12 is prime
        if (m <= u64{1000000} * 1000000 || is_prime(static_cast<std::int64_t>(m)))
            primes.push_back(m);
        else
            factor_into(m, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == static_cast<std::int64_t>(p))
            ++f.factors.back().second;
        else
            f.factors.emplace_back(static_cast<std::int64_t>(p), 1);
    }
    return f;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    Factorization f = factorize(n);
    std::vector<std::int64_t> ds{1};
    for (auto [p, e] : f.factors) {
        std::size_t base = ds.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

int kronecker(std::int64_t a, std::int64_t n) noexcept {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int res = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) res = -res;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (a % 2 == 0) return 0;
        std::int64_t r = ((a % 8) + 8) % 8;
        if (r == 3 || r == 5) res = -res;
    }
    // n odd and positive: Jacobi with reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) res = -res;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) res = -res;
        a %= n;
    }
    return n == 1 ? res : 0;
}

int valuation(std::int64_t n, std::int64_t p) {
    if (n == 0) throw std::domain_error("valuation: n must be nonzero");
    if (p < 2) throw std::domain_error("valuation: p must be >= 2");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace xcartan
