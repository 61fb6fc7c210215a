#pragma once

#include <cstdint>
#include <string>

#include "xcartan/factored_number.hpp"
#include "xcartan/heegner.hpp"
#include "xcartan/table.hpp"

namespace xcartan {

// Result of a single pair evaluation, as printed by the CLI.
struct ResultRecord {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
    std::int64_t n_spl = 1;
    std::int64_t n_ns = 1;
    PairTag tag = PairTag::unsupported;
    FactoredNumber exponents;
    double log_value = 0.0;                // sum e_q log q, display only
    std::string evaluator;                 // "formula" | "orders" | "both"

    friend bool operator==(const ResultRecord& a, const ResultRecord& b) {
        return a.d1 == b.d1 && a.d2 == b.d2 && a.n_spl == b.n_spl && a.n_ns == b.n_ns &&
               a.tag == b.tag && a.exponents == b.exponents && a.log_value == b.log_value &&
               a.evaluator == b.evaluator;
    }
};

std::string render_text(const ResultRecord& r);
std::string render_json(const ResultRecord& r);
std::string render_csv(const ResultRecord& r);
ResultRecord result_record_from_json(const std::string& json);

std::string render_text(const table::CheckSummary& s);
std::string render_json(const table::CheckSummary& s);
std::string render_csv(const table::CheckSummary& s);

}  // namespace xcartan
