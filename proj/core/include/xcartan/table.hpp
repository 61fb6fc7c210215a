#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xcartan/factored_number.hpp"

namespace xcartan::table {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// blue: exact formula, coprime fundamental pair.
// green: exact formula through the conductor guard.
// red: degenerate pair (even prime-power ratio), reference value only.
// black: no formula applies, reference value only.
enum class Color { blue, green, red, black };

std::string to_string(Color c);
Color color_from_string(std::string_view s);

// The level column of a dataset row: either one prime, or a congruence
// family "r1|r2|...modM" standing for every prime p >= 11 with p = r_i
// (mod M) (the degenerate rows hold for all such p at once).
struct PrimeSpec {
    std::int64_t prime = 0;  // 0 when this is a congruence family
    std::vector<std::int64_t> residues;
    std::int64_t modulus = 0;

    bool is_congruence() const { return prime == 0; }
    bool matches(std::int64_t p) const;
    std::string to_string() const;
};

inline constexpr std::string_view kSentinelLabel = "-3_2";

// One cell of the reference dataset of CM intersection numbers on the
// level-p non-split Cartan curve.
struct TableEntry {
    PrimeSpec p;
    std::string d1_label;
    std::string d2_label;
    Color color;
    FactoredNumber factorization;  // integer exponents; empty means 1

    // "-3_2" marks the extra rational CM point with j = 0 at level 5 whose
    // Cartan structure is not the Heegner one; rows touching it are never
    // recomputable.
    bool sentinel() const;
    std::optional<std::int64_t> d1() const;
    std::optional<std::int64_t> d2() const;
};

// "2^6*3^3*5^3" with integer exponents; "" and "1" mean the empty product.
FactoredNumber parse_factorization(std::string_view s);

// CSV with header p,d1_label,d2_label,color,factorization.
std::vector<TableEntry> parse_table_csv(std::string_view csv);

// The dataset compiled into the library (identical to data/figure_table.csv).
std::string_view embedded_table_csv();
const std::vector<TableEntry>& embedded_table();

// Row lookup by discriminant values (either order) and matching level.
std::optional<TableEntry> find_reference(const std::vector<TableEntry>& entries,
                                         std::int64_t d1, std::int64_t d2, std::int64_t p);

enum class CheckStatus {
    matched,
    mismatched,
    skipped_reference_only,  // red: degenerate, stored value only
    skipped_no_formula,      // black (including sentinel rows)
    skipped_filtered,        // excluded by the p/color filters
};

struct EntryReport {
    TableEntry entry;
    CheckStatus status;
    std::string recomputed;  // factorization string when recomputed
    std::string note;
};

struct CheckSummary {
    std::vector<EntryReport> reports;  // sorted by (p, d1, d2), families last
    std::size_t checked = 0;
    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::size_t skipped = 0;
    bool all_match() const { return mismatched == 0; }
};

struct CheckOptions {
    std::optional<std::int64_t> p_filter;  // only rows matching this prime
    std::set<Color> colors = {Color::blue, Color::green, Color::red, Color::black};
    int threads = 1;
};

// Recomputes every blue and green row through both the direct formula and
// the superorder-count evaluator (they must agree with each other and with
// the stored factorization, with integer exponents); red and black rows are
// reported as skipped. Deterministic for any thread count.
CheckSummary check_table(const std::vector<TableEntry>& entries, const CheckOptions& opts);

}  // namespace xcartan::table
