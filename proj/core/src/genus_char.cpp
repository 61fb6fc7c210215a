#include "xcartan/genus_char.hpp"

#include <numeric>

#include "xcartan/arith.hpp"

namespace xcartan {

DiscriminantPair::DiscriminantPair(const Discriminant& d1, const Discriminant& d2)
    : d1_(d1), d2_(d2) {
    if (std::gcd(-d1.value, -d2.value) != 1)
        throw std::domain_error("DiscriminantPair: discriminants must be coprime");
    if (-d1.value >= kMaxInput / -d2.value)
        throw std::domain_error("DiscriminantPair: product out of range");
}

DiscriminantPair::DiscriminantPair(const DiscriminantPair& o) : d1_(o.d1_), d2_(o.d2_) {
    std::lock_guard<std::mutex> lock(o.mutex_);
    cache_ = o.cache_;
}

DiscriminantPair& DiscriminantPair::operator=(const DiscriminantPair& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    d1_ = o.d1_;
    d2_ = o.d2_;
    cache_ = o.cache_;
    return *this;
}

int DiscriminantPair::epsilon_prime(std::int64_t p) const {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(p);
        if (it != cache_.end()) return it->second;
    }
    if (!is_prime(p)) throw std::domain_error("epsilon_prime: argument is not prime");
    int v;
    if (d1_.value % p != 0) {
        v = kronecker(d1_.value, p);
        if (d2_.value % p != 0 && kronecker(d2_.value, p) != v)
            throw ill_defined_character(
                "genus character undefined at p = " + std::to_string(p) +
                ": the two Kronecker symbols disagree");
    } else {
        // coprimality guarantees p does not also divide d2
        v = kronecker(d2_.value, p);
    }
    std::lock_guard<std::mutex> lock(mutex_);
    cache_.emplace(p, v);
    return v;
}

int DiscriminantPair::epsilon(std::int64_t n) const {
    int r = 1;
    for (auto [p, e] : factorize(n).factors) {
        if (e % 2 == 1) r *= epsilon_prime(p);
        else epsilon_prime(p);  // still validate definedness at p
    }
    return r;
}

std::vector<std::int64_t> DiscriminantPair::diff_set(std::int64_t m) const {
    std::vector<std::int64_t> out;
    for (auto [p, e] : factorize(m).factors)
        if (e % 2 == 1 && epsilon_prime(p) == -1) out.push_back(p);
    return out;
}

FactoredNumber gz_divisor_sum(const DiscriminantPair& pair, std::int64_t m) {
    FactoredNumber out;
    for (std::int64_t d : divisors(m)) {
        if (d == 1) continue;  // log(1) = 0
        const int sign = pair.epsilon(m / d);
        for (auto [p, e] : factorize(d).factors) out.add(p, Rational(sign * e));
    }
    return out;
}

FactoredNumber gz_closed_form(const DiscriminantPair& pair, std::int64_t m) {
    FactoredNumber out;
    auto diff = pair.diff_set(m);
    if (diff.size() != 1) return out;
    const std::int64_t q = diff.front();
    Rational val(valuation(m, q) + 1, 2);
    for (auto [p, e] : factorize(m).factors)
        if (pair.epsilon_prime(p) == 1) val *= Rational(e + 1);
    out.add(q, val);
    return out;
}

}  // namespace xcartan
