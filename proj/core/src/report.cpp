#include "xcartan/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace xcartan {

namespace {

using nlohmann::json;

json exponents_to_json(const FactoredNumber& fn) {
    json out = json::object();
    for (const auto& [p, e] : fn.exponents()) out[std::to_string(p)] = e.to_string();
    return out;
}

FactoredNumber exponents_from_json(const json& j) {
    FactoredNumber fn;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string v = it.value().get<std::string>();
        const auto slash = v.find('/');
        Rational e = slash == std::string::npos
                         ? Rational(std::stoll(v))
                         : Rational(std::stoll(v.substr(0, slash)), std::stoll(v.substr(slash + 1)));
        fn.add(std::stoll(it.key()), e);
    }
    return fn;
}

PairTag tag_from_string(const std::string& s) {
    for (PairTag t : {PairTag::fundamental_exact, PairTag::non_fundamental_exact,
                      PairTag::degenerate_reference_only, PairTag::non_heegner,
                      PairTag::unsupported})
        if (to_string(t) == s) return t;
    throw std::runtime_error("unknown classification tag: " + s);
}

std::string status_string(table::CheckStatus s) {
    switch (s) {
        case table::CheckStatus::matched: return "ok";
        case table::CheckStatus::mismatched: return "MISMATCH";
        case table::CheckStatus::skipped_reference_only: return "skipped: reference-only";
        case table::CheckStatus::skipped_no_formula: return "skipped: no formula";
        default: return "skipped";
    }
}

}  // namespace

std::string render_text(const ResultRecord& r) {
    std::ostringstream os;
    os << "pair (" << r.d1 << ", " << r.d2 << ")  level (" << r.n_spl << ", " << r.n_ns << ")\n"
       << "classification: " << to_string(r.tag) << "\n"
       << "exp<P1,P2> = " << r.exponents.to_string() << "\n"
       << "<P1,P2> = " << r.log_value << "\n"
       << "evaluator: " << r.evaluator << "\n";
    return os.str();
}

std::string render_json(const ResultRecord& r) {
    json j{{"d1", r.d1},
           {"d2", r.d2},
           {"n_spl", r.n_spl},
           {"n_ns", r.n_ns},
           {"classification", to_string(r.tag)},
           {"exponents", exponents_to_json(r.exponents)},
           {"factorization", r.exponents.to_string()},
           {"log_value", r.log_value},
           {"evaluator", r.evaluator}};
    return j.dump(2) + "\n";
}

std::string render_csv(const ResultRecord& r) {
    std::ostringstream os;
    os << "d1,d2,n_spl,n_ns,classification,factorization,log_value,evaluator\n"
       << r.d1 << ',' << r.d2 << ',' << r.n_spl << ',' << r.n_ns << ',' << to_string(r.tag)
       << ',' << r.exponents.to_string() << ',' << json(r.log_value).dump() << ','
       << r.evaluator << "\n";
    return os.str();
}

ResultRecord result_record_from_json(const std::string& text) {
    const json j = json::parse(text);
    ResultRecord r;
    r.d1 = j.at("d1").get<std::int64_t>();
    r.d2 = j.at("d2").get<std::int64_t>();
    r.n_spl = j.at("n_spl").get<std::int64_t>();
    r.n_ns = j.at("n_ns").get<std::int64_t>();
    r.tag = tag_from_string(j.at("classification").get<std::string>());
    r.exponents = exponents_from_json(j.at("exponents"));
    r.log_value = j.at("log_value").get<double>();
    r.evaluator = j.at("evaluator").get<std::string>();
    return r;
}

std::string render_text(const table::CheckSummary& s) {
    std::ostringstream os;
    for (const auto& rep : s.reports) {
        os << "p=" << rep.entry.p.to_string() << " (" << rep.entry.d1_label << ", "
           << rep.entry.d2_label << ") " << table::to_string(rep.entry.color) << " "
           << rep.entry.factorization.to_string() << ": " << status_string(rep.status);
        if (!rep.note.empty()) os << " (" << rep.note << ")";
        os << "\n";
    }
    os << "checked " << s.checked << ", matched " << s.matched << ", mismatched "
       << s.mismatched << ", skipped " << s.skipped << "\n";
    return os.str();
}

std::string render_json(const table::CheckSummary& s) {
    json rows = json::array();
    for (const auto& rep : s.reports) {
        rows.push_back(json{{"p", rep.entry.p.to_string()},
                            {"d1", rep.entry.d1_label},
                            {"d2", rep.entry.d2_label},
                            {"color", table::to_string(rep.entry.color)},
                            {"stored", rep.entry.factorization.to_string()},
                            {"recomputed", rep.recomputed},
                            {"status", status_string(rep.status)},
                            {"note", rep.note}});
    }
    json j{{"entries", rows},
           {"checked", s.checked},
           {"matched", s.matched},
           {"mismatched", s.mismatched},
           {"skipped", s.skipped}};
    return j.dump(2) + "\n";
}

std::string render_csv(const table::CheckSummary& s) {
    std::ostringstream os;
    os << "p,d1,d2,color,stored,recomputed,status\n";
    for (const auto& rep : s.reports) {
        os << rep.entry.p.to_string() << ',' << rep.entry.d1_label << ',' << rep.entry.d2_label
           << ',' << table::to_string(rep.entry.color) << ','
           << rep.entry.factorization.to_string() << ',' << rep.recomputed << ','
           << status_string(rep.status) << "\n";
    }
    return os.str();
}

}  // namespace xcartan
