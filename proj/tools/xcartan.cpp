// xcartan: arithmetic intersection numbers of Heegner divisors on mixed
// Cartan modular curves.
//
// Exit codes: 0 success; 1 usage or invalid input; 2 applicability
// rejection (the requested pair has no exact formula); 3 input file parse
// failure. table-check additionally exits 1 when a recomputable entry does
// not match its stored value.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "xcartan/arith.hpp"
#include "xcartan/fibre.hpp"
#include "xcartan/intersection.hpp"
#include "xcartan/padic_model.hpp"
#include "xcartan/quaternion.hpp"
#include "xcartan/report.hpp"
#include "xcartan/table.hpp"

namespace {

using namespace xcartan;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormatMap{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

int run_intersect(std::int64_t d1v, std::int64_t d2v, std::int64_t spl, std::int64_t ns,
                  const std::string& via, Format fmt) {
    const Discriminant d1 = decompose_discriminant(d1v);
    const Discriminant d2 = decompose_discriminant(d2v);
    const Level lv(spl, ns);
    const PairClassification cls = classify_pair(d1, d2, lv);

    if (cls.tag != PairTag::fundamental_exact && cls.tag != PairTag::non_fundamental_exact) {
        std::ostringstream msg;
        msg << "no exact formula for this pair (" << to_string(cls.tag) << "): " << cls.detail;
        if (cls.tag == PairTag::degenerate_reference_only) {
            for (auto [p, e] : factorize(lv.n_ns()).factors) {
                if (auto ref = table::find_reference(table::embedded_table(), d1v, d2v, p))
                    msg << "; reference table value at p=" << p << ": "
                        << ref->factorization.to_string();
            }
        }
        std::cerr << msg.str() << "\n";
        return 2;
    }

    ResultRecord rec;
    rec.d1 = d1v;
    rec.d2 = d2v;
    rec.n_spl = spl;
    rec.n_ns = ns;
    rec.tag = cls.tag;
    rec.evaluator = via;
    if (via == "formula") {
        rec.exponents = intersection_pairing(d1, d2, lv);
    } else if (via == "orders") {
        rec.exponents = intersection_pairing_via_orders(d1, d2, lv);
    } else {
        rec.exponents = intersection_pairing(d1, d2, lv);
        const FactoredNumber alt = intersection_pairing_via_orders(d1, d2, lv);
        if (alt != rec.exponents) {
            std::cerr << "internal error: evaluators disagree: " << rec.exponents.to_string()
                      << " vs " << alt.to_string() << "\n";
            return 4;
        }
    }
    rec.log_value = rec.exponents.log_value();

    switch (fmt) {
        case Format::text: std::cout << render_text(rec); break;
        case Format::json: std::cout << render_json(rec); break;
        case Format::csv: std::cout << render_csv(rec); break;
    }
    return 0;
}

int run_table_check(const std::string& p_arg, const std::string& colors_arg,
                    const std::string& table_path, int threads, Format fmt) {
    std::vector<table::TableEntry> entries;
    try {
        if (table_path.empty()) {
            entries = table::embedded_table();
        } else {
            std::ifstream in(table_path);
            if (!in) {
                std::cerr << "cannot open table file: " << table_path << "\n";
                return 3;
            }
            std::stringstream ss;
            ss << in.rdbuf();
            entries = table::parse_table_csv(ss.str());
        }
    } catch (const table::parse_error& e) {
        std::cerr << "table parse failure: " << e.what() << "\n";
        return 3;
    }

    table::CheckOptions opts;
    opts.threads = threads;
    if (p_arg != "all") opts.p_filter = std::stoll(p_arg);
    if (colors_arg != "all") {
        opts.colors.clear();
        std::stringstream ss(colors_arg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            opts.colors.insert(table::color_from_string(tok));
    }

    const table::CheckSummary summary = table::check_table(entries, opts);
    switch (fmt) {
        case Format::text: std::cout << render_text(summary); break;
        case Format::json: std::cout << render_json(summary); break;
        case Format::csv: std::cout << render_csv(summary); break;
    }
    return summary.all_match() ? 0 : 1;
}

int run_classify(std::int64_t d1v, std::int64_t d2v, std::int64_t spl, std::int64_t ns,
                 Format fmt) {
    const Discriminant d1 = decompose_discriminant(d1v);
    const Discriminant d2 = decompose_discriminant(d2v);
    const PairClassification cls = classify_pair(d1, d2, Level(spl, ns));
    if (fmt == Format::json) {
        nlohmann::json j{{"d1", d1v},
                         {"d2", d2v},
                         {"n_spl", spl},
                         {"n_ns", ns},
                         {"classification", to_string(cls.tag)},
                         {"detail", cls.detail}};
        std::cout << j.dump(2) << "\n";
    } else if (fmt == Format::csv) {
        std::cout << "d1,d2,n_spl,n_ns,classification\n"
                  << d1v << ',' << d2v << ',' << spl << ',' << ns << ','
                  << to_string(cls.tag) << "\n";
    } else {
        std::cout << to_string(cls.tag) << ": " << cls.detail << "\n";
    }
    return 0;
}

int run_components(std::int64_t p, int n) {
    if (p < 5 || !is_prime(p) || n < 1) {
        std::cerr << "component count is defined for prime p >= 5 and n >= 1\n";
        return 2;
    }
    std::cout << component_count(p, n) << "\n";
    return 0;
}

int run_s_set(std::int64_t a, std::int64_t b, Format fmt) {
    const std::vector<std::int64_t> s = s_set(a, b);
    if (fmt == Format::json) {
        std::cout << nlohmann::json(s).dump() << "\n";
    } else {
        for (std::size_t i = 0; i < s.size(); ++i)
            std::cout << s[i] << (i + 1 < s.size() ? (fmt == Format::csv ? "," : " ") : "");
        std::cout << "\n";
    }
    return 0;
}

int run_p1_model(const std::string& path, Format fmt) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open points file: " << path << "\n";
        return 3;
    }
    nlohmann::json records;
    try {
        in >> records;
        if (!records.is_array()) throw std::runtime_error("top-level JSON array expected");
    } catch (const std::exception& e) {
        std::cerr << "points file parse failure: " << e.what() << "\n";
        return 3;
    }
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : records) {
        const std::int64_t q = r.at("q").get<std::int64_t>();
        auto pt = [&](const char* key) {
            return p1_normalize(r.at(key).at(0).get<std::int64_t>(),
                                r.at(key).at(1).get<std::int64_t>());
        };
        const P1Point x = pt("x"), y = pt("y"), z = pt("z");
        const int m = r.at("m").get<int>();
        const BTVertex v = find_model_vertex(x, y, z, m, q);
        const auto basis = v.basis();
        out.push_back(nlohmann::json{
            {"q", q},
            {"x", {x.a, x.b}},
            {"y", {y.a, y.b}},
            {"z", {z.a, z.b}},
            {"m", m},
            {"vertex", {{basis[0][0], basis[0][1]}, {basis[1][0], basis[1][1]}}},
            {"multiplicities",
             {{"xz", p1_mult_in_model(x, z, v, q)},
              {"yz", p1_mult_in_model(y, z, v, q)},
              {"xy", p1_mult_in_model(x, y, v, q)}}}});
    }
    if (fmt == Format::csv) {
        std::cout << "q,x,y,z,m,v00,v01,v10,v11\n";
        for (const auto& r : out) {
            std::cout << r["q"] << ",(" << r["x"][0] << ":" << r["x"][1] << "),(" << r["y"][0]
                      << ":" << r["y"][1] << "),(" << r["z"][0] << ":" << r["z"][1] << "),"
                      << r["m"] << ',' << r["vertex"][0][0] << ',' << r["vertex"][0][1] << ','
                      << r["vertex"][1][0] << ',' << r["vertex"][1][1] << "\n";
        }
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arithmetic intersection numbers of Heegner divisors on mixed Cartan curves"};
    app.require_subcommand(1);

    Format fmt = Format::text;

    auto* intersect = app.add_subcommand("intersect", "Evaluate exp(<P1,P2>) for one pair");
    std::int64_t d1 = 0, d2 = 0, spl = 1, ns = 1;
    std::string via = "both";
    intersect->add_option("--d1", d1, "first discriminant (< 0)")->required();
    intersect->add_option("--d2", d2, "second discriminant (< 0)")->required();
    intersect->add_option("--spl", spl, "split part of the level");
    intersect->add_option("--ns", ns, "non-split part of the level");
    intersect->add_option("--via", via)->check(CLI::IsMember({"formula", "orders", "both"}));
    intersect->add_option("--format", fmt)->transform(CLI::CheckedTransformer(kFormatMap));

    auto* table_check =
        app.add_subcommand("table-check", "Recompute the embedded reference dataset");
    std::string p_arg = "all", colors = "all", table_path;
    int threads = 1;
    table_check->add_option("--p", p_arg, "restrict to one level prime, or 'all'");
    table_check->add_option("--colors", colors, "comma-separated subset of blue,green,red,black");
    table_check->add_option("--table", table_path, "check an external CSV instead");
    table_check->add_option("--threads", threads)->check(CLI::Range(1, 256));
    table_check->add_option("--format", fmt)->transform(CLI::CheckedTransformer(kFormatMap));

    auto* classify = app.add_subcommand("classify", "Classify a discriminant pair at a level");
    classify->add_option("--d1", d1)->required();
    classify->add_option("--d2", d2)->required();
    classify->add_option("--spl", spl);
    classify->add_option("--ns", ns);
    classify->add_option("--format", fmt)->transform(CLI::CheckedTransformer(kFormatMap));

    auto* components =
        app.add_subcommand("components", "Special-fibre component count at level p^n");
    std::int64_t comp_p = 0;
    int comp_n = 1;
    components->add_option("--p", comp_p, "prime >= 5")->required();
    components->add_option("--n", comp_n, "level exponent");

    auto* sset = app.add_subcommand("s-set", "List S(a,b) = {(a - x^2)/(4b) > 0}");
    std::int64_t sa = 0, sb = 1;
    sset->add_option("--a", sa)->required();
    sset->add_option("--b", sb)->required();
    sset->add_option("--format", fmt)->transform(CLI::CheckedTransformer(kFormatMap));

    auto* p1model = app.add_subcommand("p1-model", "Batch integral-model finder for P^1 points");
    std::string points_path;
    p1model->add_option("--file", points_path, "JSON list of {q,x,y,z,m} records")->required();
    p1model->add_option("--format", fmt)->transform(CLI::CheckedTransformer(kFormatMap));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help stays 0, every parse error is a usage error
    }

    try {
        if (intersect->parsed()) return run_intersect(d1, d2, spl, ns, via, fmt);
        if (table_check->parsed()) return run_table_check(p_arg, colors, table_path, threads, fmt);
        if (classify->parsed()) return run_classify(d1, d2, spl, ns, fmt);
        if (components->parsed()) return run_components(comp_p, comp_n);
        if (sset->parsed()) return run_s_set(sa, sb, fmt);
        if (p1model->parsed()) return run_p1_model(points_path, fmt);
    } catch (const applicability_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
