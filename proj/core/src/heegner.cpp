#include "xcartan/heegner.hpp"

#include <numeric>
#include <stdexcept>

#include "xcartan/arith.hpp"
#include "xcartan/intersection.hpp"

namespace xcartan {

namespace {

std::int64_t mod4(std::int64_t v) { return ((v % 4) + 4) % 4; }

// d1/d2 or d2/d1 equal to q^(2r) for a prime q and r != 0
bool even_prime_power_ratio(std::int64_t d1, std::int64_t d2) {
    std::int64_t a = d1, b = d2;
    if (-a < -b) std::swap(a, b);  // |a| >= |b|
    if (a % b != 0) return false;
    std::int64_t r = a / b;  // positive: both negative
    if (r <= 1) return false;
    Factorization f = factorize(r);
    return f.factors.size() == 1 && f.factors[0].second % 2 == 0;
}

}  // namespace

Discriminant decompose_discriminant(std::int64_t d) {
    if (d >= 0 || mod4(d) == 2 || mod4(d) == 3)
        throw std::domain_error("not a discriminant: need d < 0 and d = 0,1 mod 4");
    if (-d >= kMaxInput) throw std::domain_error("discriminant out of range");
    std::int64_t g = 1;
    for (auto [p, e] : factorize(-d).factors) {
        for (int i = 0; i < e / 2; ++i) g *= p;
    }
    std::int64_t s = d / (g * g);  // squarefree part, negative
    if (mod4(s) == 1) return {d, s, g};
    return {d, 4 * s, g / 2};
}

int unit_count(const Discriminant& d) noexcept {
    if (d.value == -3) return 6;
    if (d.value == -4) return 4;
    return 2;
}

Level::Level(std::int64_t n_spl, std::int64_t n_ns) : spl_(n_spl), ns_(n_ns) {
    if (n_spl < 1 || n_ns < 1) throw std::domain_error("level parts must be positive");
    if (std::gcd(n_spl, n_ns) != 1) throw std::domain_error("level parts must be coprime");
    if (n_spl >= kMaxInput / n_ns) throw std::domain_error("level out of range");
}

bool heegner_condition(const Discriminant& d, const Level& lv) {
    for (auto [p, e] : factorize(lv.n_spl()).factors)
        if (kronecker(d.value, p) != 1) return false;
    for (auto [p, e] : factorize(lv.n_ns()).factors)
        if (kronecker(d.value, p) != -1) return false;
    return true;
}

std::string to_string(PairTag tag) {
    switch (tag) {
        case PairTag::fundamental_exact: return "fundamental-exact";
        case PairTag::non_fundamental_exact: return "non-fundamental-exact";
        case PairTag::degenerate_reference_only: return "degenerate-reference-only";
        case PairTag::non_heegner: return "non-heegner";
        case PairTag::unsupported: return "unsupported";
    }
    return "unsupported";
}

PairClassification classify_pair(const Discriminant& d1, const Discriminant& d2,
                                 const Level& lv) {
    const bool coprime = std::gcd(-d1.value, -d2.value) == 1;
    const bool heegner = heegner_condition(d1, lv) && heegner_condition(d2, lv);

    if (coprime && heegner && d1.conductor == 1 && d2.conductor == 1)
        return {PairTag::fundamental_exact, "coprime fundamental Heegner pair"};

    if (coprime && heegner) {
        const std::int64_t ff = d1.conductor * d2.conductor;
        const std::int64_t n = lv.modulus();
        for (std::int64_t m : s_set(d1.value * d2.value, n * n)) {
            if (std::gcd(m, ff) != 1)
                return {PairTag::unsupported,
                        "conductor guard fails: " + std::to_string(m) + " in S(" +
                            std::to_string(d1.value * d2.value) + "," + std::to_string(n * n) +
                            ") shares a factor with f1*f2 = " + std::to_string(ff)};
        }
        return {PairTag::non_fundamental_exact,
                "coprime Heegner pair; every element of S(d1*d2, N^2) is coprime to f1*f2"};
    }

    if (!coprime && even_prime_power_ratio(d1.value, d2.value))
        return {PairTag::degenerate_reference_only,
                "discriminant ratio is an even prime power; reference data only"};

    if (coprime) {
        std::string side = heegner_condition(d1, lv) ? std::to_string(d2.value)
                                                     : std::to_string(d1.value);
        return {PairTag::non_heegner, "Heegner condition fails for " + side};
    }

    return {PairTag::unsupported,
            "non-coprime pair (gcd = " +
                std::to_string(std::gcd(-d1.value, -d2.value)) +
                ") without an even prime-power ratio"};
}

}  // namespace xcartan
