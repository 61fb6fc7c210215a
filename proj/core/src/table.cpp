#include "xcartan/table.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <thread>

#include "xcartan/arith.hpp"
#include "xcartan/heegner.hpp"
#include "xcartan/intersection.hpp"
#include "xcartan/quaternion.hpp"

namespace xcartan::table {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

std::int64_t to_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw parse_error(std::string("bad integer in ") + what + ": '" + std::string(s) + "'");
    return v;
}

PrimeSpec parse_prime_spec(std::string_view s) {
    PrimeSpec spec;
    const std::size_t mod = s.find("mod");
    if (mod == std::string_view::npos) {
        spec.prime = to_int(s, "p column");
        if (!is_prime(spec.prime)) throw parse_error("p column is not prime: " + std::string(s));
        return spec;
    }
    for (std::string_view r : split(s.substr(0, mod), '|'))
        spec.residues.push_back(to_int(trim(r), "residue"));
    spec.modulus = to_int(s.substr(mod + 3), "modulus");
    if (spec.modulus < 2 || spec.residues.empty())
        throw parse_error("bad congruence family: " + std::string(s));
    return spec;
}

}  // namespace

std::string to_string(Color c) {
    switch (c) {
        case Color::blue: return "blue";
        case Color::green: return "green";
        case Color::red: return "red";
        case Color::black: return "black";
    }
    return "black";
}

Color color_from_string(std::string_view s) {
    if (s == "blue") return Color::blue;
    if (s == "green") return Color::green;
    if (s == "red") return Color::red;
    if (s == "black") return Color::black;
    throw parse_error("unknown color: " + std::string(s));
}

bool PrimeSpec::matches(std::int64_t p) const {
    if (!is_congruence()) return p == prime;
    if (p < 11) return false;  // the congruence families only cover p >= 11
    for (std::int64_t r : residues)
        if (p % modulus == r) return true;
    return false;
}

std::string PrimeSpec::to_string() const {
    if (!is_congruence()) return std::to_string(prime);
    std::string out;
    for (std::size_t i = 0; i < residues.size(); ++i) {
        if (i) out += '|';
        out += std::to_string(residues[i]);
    }
    return out + "mod" + std::to_string(modulus);
}

bool TableEntry::sentinel() const {
    return d1_label == kSentinelLabel || d2_label == kSentinelLabel;
}

std::optional<std::int64_t> TableEntry::d1() const {
    if (d1_label == kSentinelLabel) return std::nullopt;
    return to_int(d1_label, "d1_label");
}

std::optional<std::int64_t> TableEntry::d2() const {
    if (d2_label == kSentinelLabel) return std::nullopt;
    return to_int(d2_label, "d2_label");
}

FactoredNumber parse_factorization(std::string_view s) {
    FactoredNumber out;
    s = trim(s);
    if (s.empty() || s == "1") return out;
    for (std::string_view tok : split(s, '*')) {
        auto pe = split(tok, '^');
        if (pe.size() != 2) throw parse_error("bad factor token: " + std::string(tok));
        try {
            out.add(to_int(trim(pe[0]), "prime"), Rational(to_int(trim(pe[1]), "exponent")));
        } catch (const std::domain_error& e) {
            throw parse_error(e.what());
        }
    }
    return out;
}

std::vector<TableEntry> parse_table_csv(std::string_view csv) {
    std::vector<TableEntry> out;
    bool saw_header = false;
    for (std::string_view raw : split(csv, '\n')) {
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (!saw_header) {
            if (line != "p,d1_label,d2_label,color,factorization")
                throw parse_error("unexpected header: " + std::string(line));
            saw_header = true;
            continue;
        }
        auto fields = split(line, ',');
        if (fields.size() != 5)
            throw parse_error("expected 5 fields, got " + std::to_string(fields.size()) +
                              " in: " + std::string(line));
        TableEntry e;
        e.p = parse_prime_spec(trim(fields[0]));
        e.d1_label = std::string(trim(fields[1]));
        e.d2_label = std::string(trim(fields[2]));
        e.color = color_from_string(trim(fields[3]));
        e.factorization = parse_factorization(fields[4]);
        if (!e.factorization.integral())
            throw parse_error("stored factorization must have integer exponents");
        // labels must be discriminants (or the sentinel)
        if (!e.sentinel()) {
            try {
                decompose_discriminant(*e.d1());
                decompose_discriminant(*e.d2());
            } catch (const std::domain_error& ex) {
                throw parse_error(std::string("bad discriminant label: ") + ex.what());
            }
        }
        out.push_back(std::move(e));
    }
    if (!saw_header) throw parse_error("empty table");
    return out;
}

const std::vector<TableEntry>& embedded_table() {
    static const std::vector<TableEntry> entries = parse_table_csv(embedded_table_csv());
    return entries;
}

std::optional<TableEntry> find_reference(const std::vector<TableEntry>& entries,
                                         std::int64_t d1, std::int64_t d2, std::int64_t p) {
    for (const TableEntry& e : entries) {
        if (e.sentinel() || !e.p.matches(p)) continue;
        const std::int64_t a = *e.d1(), b = *e.d2();
        if ((a == d1 && b == d2) || (a == d2 && b == d1)) return e;
    }
    return std::nullopt;
}

namespace {

EntryReport check_entry(const TableEntry& e) {
    EntryReport rep{e, CheckStatus::matched, "", ""};
    if (e.sentinel()) {
        rep.status = CheckStatus::skipped_no_formula;
        rep.note = "sentinel label " + std::string(kSentinelLabel) +
                   " (extra rational CM point, not a Heegner structure)";
        return rep;
    }
    if (e.color == Color::red) {
        rep.status = CheckStatus::skipped_reference_only;
        rep.note = "degenerate pair; stored value is reference-only";
        return rep;
    }
    if (e.color == Color::black) {
        rep.status = CheckStatus::skipped_no_formula;
        rep.note = "no formula applies; stored value is reference-only";
        return rep;
    }
    const Discriminant d1 = decompose_discriminant(*e.d1());
    const Discriminant d2 = decompose_discriminant(*e.d2());
    const std::int64_t p = e.p.prime;
    try {
        const FactoredNumber direct = prime_level_intersection(d1, d2, p, 1);
        const FactoredNumber orders = intersection_pairing_via_orders(d1, d2, Level(1, p));
        rep.recomputed = direct.to_string();
        if (!direct.integral()) {
            rep.status = CheckStatus::mismatched;
            rep.note = "recomputed exponents are not integers";
        } else if (direct != orders) {
            rep.status = CheckStatus::mismatched;
            rep.note = "formula and superorder-count evaluators disagree: " +
                       direct.to_string() + " vs " + orders.to_string();
        } else if (direct != e.factorization) {
            rep.status = CheckStatus::mismatched;
            rep.note = "stored " + e.factorization.to_string();
        }
    } catch (const std::exception& ex) {
        rep.status = CheckStatus::mismatched;
        rep.note = std::string("evaluation failed: ") + ex.what();
    }
    return rep;
}

}  // namespace

CheckSummary check_table(const std::vector<TableEntry>& entries, const CheckOptions& opts) {
    std::vector<EntryReport> reports(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= entries.size()) return;
            const TableEntry& e = entries[i];
            if ((opts.p_filter && !e.p.matches(*opts.p_filter)) || !opts.colors.count(e.color))
                reports[i] = EntryReport{e, CheckStatus::skipped_filtered, "", ""};
            else
                reports[i] = check_entry(e);
        }
    };
    const int nthreads = std::max(1, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CheckSummary s;
    for (auto& r : reports) {
        if (r.status == CheckStatus::skipped_filtered) continue;
        s.reports.push_back(std::move(r));
    }
    std::sort(s.reports.begin(), s.reports.end(), [](const EntryReport& x, const EntryReport& y) {
        auto key = [](const EntryReport& r) {
            return std::tuple(r.entry.p.is_congruence() ? 1 : 0,
                              r.entry.p.is_congruence() ? r.entry.p.modulus : r.entry.p.prime,
                              r.entry.d1_label, r.entry.d2_label);
        };
        return key(x) < key(y);
    });
    for (const auto& r : s.reports) {
        switch (r.status) {
            case CheckStatus::matched: ++s.checked, ++s.matched; break;
            case CheckStatus::mismatched: ++s.checked, ++s.mismatched; break;
            default: ++s.skipped; break;
        }
    }
    return s;
}

}  // namespace xcartan::table
