#include "xcartan/factored_number.hpp"

#include <cmath>
#include <stdexcept>

#include "xcartan/arith.hpp"

namespace xcartan {

void FactoredNumber::add(std::int64_t prime, const Rational& e) {
    if (e.is_zero()) return;
    if (!is_prime(prime)) throw std::domain_error("FactoredNumber: key is not prime");
    auto it = exp_.find(prime);
    if (it == exp_.end()) {
        exp_.emplace(prime, e);
        return;
    }
    it->second += e;
    if (it->second.is_zero()) exp_.erase(it);
}

FactoredNumber& FactoredNumber::operator+=(const FactoredNumber& o) {
    for (const auto& [p, e] : o.exp_) add(p, e);
    return *this;
}

FactoredNumber FactoredNumber::scaled(const Rational& c) const {
    FactoredNumber out;
    if (c.is_zero()) return out;
    for (const auto& [p, e] : exp_) out.exp_.emplace(p, e * c);
    return out;
}

bool FactoredNumber::integral() const {
    for (const auto& [p, e] : exp_)
        if (!e.is_integer()) return false;
    return true;
}

bool FactoredNumber::non_negative() const {
    for (const auto& [p, e] : exp_)
        if (e.negative()) return false;
    return true;
}

Rational FactoredNumber::exponent(std::int64_t prime) const {
    auto it = exp_.find(prime);
    return it == exp_.end() ? Rational{} : it->second;
}

double FactoredNumber::log_value() const {
    double s = 0.0;
    for (const auto& [p, e] : exp_) s += e.to_double() * std::log(static_cast<double>(p));
    return s;
}

std::string FactoredNumber::to_string() const {
    if (exp_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : exp_) {
        if (!out.empty()) out += '*';
        out += std::to_string(p);
        out += '^';
        out += e.to_string();
    }
    return out;
}

}  // namespace xcartan
