#pragma once

#include <cstdint>
#include <string>

namespace xcartan {

// A negative discriminant value = conductor^2 * fundamental, where
// `fundamental` is a fundamental discriminant.
struct Discriminant {
    std::int64_t value;
    std::int64_t fundamental;
    std::int64_t conductor;
};

// Splits d < 0, d = 0,1 mod 4 into conductor^2 times a fundamental
// discriminant. Throws std::domain_error otherwise.
Discriminant decompose_discriminant(std::int64_t d);

// |O_Delta^x|: 6 for -3, 4 for -4, 2 otherwise.
int unit_count(const Discriminant& d) noexcept;

// Mixed Cartan level: split part and non-split part, coprime.
class Level {
  public:
    Level(std::int64_t n_spl, std::int64_t n_ns);

    std::int64_t n_spl() const { return spl_; }
    std::int64_t n_ns() const { return ns_; }
    std::int64_t modulus() const { return spl_ * ns_; }  // N

  private:
    std::int64_t spl_;
    std::int64_t ns_;
};

// (d|q) = +1 at every prime q | n_spl and (d|q) = -1 at every prime
// q | n_ns. Trivially true for level (1,1).
bool heegner_condition(const Discriminant& d, const Level& lv);

// Applicability of the intersection formula to a pair of discriminants, in
// priority order.
enum class PairTag {
    fundamental_exact,      // coprime fundamental Heegner pair
    non_fundamental_exact,  // coprime Heegner pair, conductor guard verified
    degenerate_reference_only,  // ratio q^(2r): reference data only
    non_heegner,                // coprime but the symbol condition fails
    unsupported,
};

std::string to_string(PairTag tag);

struct PairClassification {
    PairTag tag;
    std::string detail;
};

// First matching tag in the priority order above. The non_fundamental guard
// is evaluated eagerly: every element of S(d1*d2, N^2) must be coprime to
// the conductor product, otherwise the pair is demoted to unsupported.
PairClassification classify_pair(const Discriminant& d1, const Discriminant& d2,
                                 const Level& lv);

}  // namespace xcartan
